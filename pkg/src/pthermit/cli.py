"""Command-line interface: spectrum queries, verification suites, figure CSVs.

Exit codes: 0 success, 1 verification or compute failure, 2 usage error.
Flag values win over the optional key=value config file named by the
``PTHERMIT_CONFIG`` environment variable, which in turn wins over built-in
defaults.  CSV output uses 12 significant digits, '.' decimals and plain
newlines, so repeated runs with identical flags are bit-identical.
"""

import argparse
import json
import math
import os
import sys
from dataclasses import dataclass

import numpy as np

from . import massdomain, verify
from .algebra import EigenvalueConvergenceError, build_gamma_rep
from .dirac import build_hamiltonian, spectrum

DEFAULT_MMAX = 125.0
DEFAULT_POINTS = 500
DEFAULT_SAMPLES = 1000
DEFAULT_SEED = 7

_CONFIG_TYPES = {
    "mmax": float,
    "points": int,
    "samples": int,
    "seed": int,
    "out": str,
    "suite": str,
    "json": str,
    "quiet": lambda s: s.strip().lower() in ("1", "true", "yes", "on"),
}

_VARIANTS = {"++": (1, 1), "+-": (1, -1), "-+": (-1, 1), "--": (-1, -1)}


def load_config(path=None) -> dict:
    """key=value file named by PTHERMIT_CONFIG; unknown keys are ignored."""
    path = path if path is not None else os.environ.get("PTHERMIT_CONFIG")
    if not path or not os.path.exists(path):
        return {}
    out = {}
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            line = line.strip()
            if not line or line.startswith("#") or "=" not in line:
                continue
            key, _, value = line.partition("=")
            key = key.strip().lower()
            if key in _CONFIG_TYPES:
                try:
                    out[key] = _CONFIG_TYPES[key](value.strip())
                except ValueError:
                    pass
    return out


def _fmt(x: float) -> str:
    return f"{x:.12g}"


def _write_csv(path: str, header, rows):
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(",".join(header) + "\n")
        for row in rows:
            fh.write(",".join(_fmt(v) for v in row) + "\n")


@dataclass(frozen=True)
class FigureSeries:
    """Columns of one figure file; the first column is the abscissa."""

    figure_id: str
    columns: tuple  # (name, values) pairs
    m_max: float

    def __post_init__(self):
        lengths = {len(vals) for _, vals in self.columns}
        if len(lengths) != 1:
            raise ValueError(f"{self.figure_id}: column lengths differ: {lengths}")
        xs = self.columns[0][1]
        if any(b <= a for a, b in zip(xs, xs[1:])):
            raise ValueError(f"{self.figure_id}: abscissa is not strictly increasing")

    def write_csv(self, path: str):
        names = [name for name, _ in self.columns]
        series = [vals for _, vals in self.columns]
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(",".join(names) + "\n")
            for row in zip(*series):
                fh.write(",".join(_fmt(v) for v in row) + "\n")


def cmd_spectrum(args) -> int:
    try:
        components = [float(x) for x in str(args.p).split(",") if x != ""]
    except ValueError:
        print(f"error: cannot parse momentum {args.p!r}", file=sys.stderr)
        return 2
    p = components[0] if args.dim == 2 and len(components) == 1 else components
    try:
        rep = build_gamma_rep(args.dim)
        h = build_hamiltonian(rep, p, args.m1, args.m2, _VARIANTS[args.variant])
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    try:
        report = spectrum(h)
    except EigenvalueConvergenceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    payload = {
        "eigenvalues": [[float(e.real), float(e.imag)] for e in report.eigenvalues],
        "phase": report.phase,
        "physical_mass": [
            float(np.real(report.physical_mass)),
            float(np.imag(report.physical_mass)),
        ],
        "input": {
            "m1": args.m1,
            "m2": args.m2,
            "p": list(h.momentum),
            "dim": args.dim,
            "variant": args.variant,
        },
    }
    text = json.dumps(payload, indent=2, sort_keys=True)
    if args.json:
        with open(args.json, "w", encoding="utf-8") as fh:
            fh.write(text)
    if not (args.quiet and args.json):
        print(text)
    return 0


def cmd_verify(args) -> int:
    report = verify.run_suite(args.suite, samples=args.samples, seed=args.seed)
    if args.json:
        with open(args.json, "w", encoding="utf-8") as fh:
            json.dump(report.to_dict(), fh, indent=2, sort_keys=True)
    if not args.quiet:
        for c in report.checks:
            status = "PASS" if c.passed else "FAIL"
            note = c.parameters.get("note") if c.parameters else None
            extra = f"  [{note}]" if note else ""
            print(f"{status} {c.name}: residual={c.residual:.3e} tolerance={c.tolerance:.3e}{extra}")
        print(f"suite={report.suite} samples={args.samples} seed={args.seed} "
              f"passed={report.passed}")
    return 0 if report.passed else 1


def figure_series(mmax: float, points: int) -> list:
    """The three parameter-curve series (the hyperboloid grid is separate)."""
    cols2 = {"alpha": [], "m": [], "m1": [], "m2": []}
    for a in np.linspace(0.0, 3.0, points):
        bp = massdomain.from_alpha(float(a), mmax)
        m1, m2 = (bp.m1, bp.m2) if bp.branch == "lower" else (bp.m3, bp.m4)
        for key, val in zip(cols2, (a, bp.m, m1, m2)):
            cols2[key].append(val)

    cols3 = {"m": [], "m1": [], "m2": [], "m3": [], "m4": []}
    for m in np.linspace(0.0, mmax, points):
        bp = massdomain.branch_masses(float(m), mmax, "lower")
        for key, val in zip(cols3, (m, bp.m1, bp.m2, bp.m3, bp.m4)):
            cols3[key].append(val)

    cols4 = {"theta": [], "m": [], "m1": [], "m2": [], "m3": [], "m4": []}
    for t in np.linspace(0.0, math.pi / 2.0, points):
        bp = massdomain.from_theta(float(t), mmax)
        for key, val in zip(cols4, (t, bp.m, bp.m1, bp.m2, bp.m3, bp.m4)):
            cols4[key].append(val)

    return [
        FigureSeries("fig2", tuple(cols2.items()), mmax),
        FigureSeries("fig3", tuple(cols3.items()), mmax),
        FigureSeries("fig4", tuple(cols4.items()), mmax),
    ]


def hyperboloid_grid(mmax: float, points: int) -> list:
    """(p1, p5, p0) rows solving p0^2 - p1^2 + p5^2 = mmax^2."""
    n = max(2, int(round(math.sqrt(points))))
    rows = []
    for p1 in np.linspace(-2.0 * mmax, 2.0 * mmax, n):
        for p5 in np.linspace(-mmax, mmax, n):
            p0 = math.sqrt(mmax * mmax + p1 * p1 - p5 * p5)
            rows.append((p1, p5, p0))
    return rows


def cmd_figures(args) -> int:
    try:
        os.makedirs(args.out, exist_ok=True)
        files = [os.path.join(args.out, "fig1.csv")]
        _write_csv(files[0], ("p1", "p5", "p0"), hyperboloid_grid(args.mmax, args.points))
        for series in figure_series(args.mmax, args.points):
            path = os.path.join(args.out, f"{series.figure_id}.csv")
            series.write_csv(path)
            files.append(path)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if args.json:
        with open(args.json, "w", encoding="utf-8") as fh:
            json.dump({"files": files, "mmax": args.mmax, "points": args.points},
                      fh, indent=2, sort_keys=True)
    if not args.quiet:
        for path in files:
            print(path)
    return 0


def build_parser(config: dict) -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", default=config.get("json"),
                        help="write machine-readable output to this path")
    common.add_argument("--quiet", action="store_true",
                        default=config.get("quiet", False),
                        help="suppress human-readable output")

    parser = argparse.ArgumentParser(
        prog="pthermit",
        description="gamma5-mass Dirac Hamiltonian toolkit: spectra, operator "
                    "identity verification, figure data",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    ps = sub.add_parser("spectrum", parents=[common],
                        help="eigenvalues and PT phase of one Hamiltonian")
    ps.add_argument("--m1", type=float, required=True)
    ps.add_argument("--m2", type=float, required=True)
    ps.add_argument("--p", default="0", help="momentum: scalar (dim 2) or 'px,py,pz' (dim 4)")
    ps.add_argument("--dim", type=int, choices=(2, 4), default=2)
    ps.add_argument("--variant", choices=sorted(_VARIANTS), default="++",
                    help="signs of the m1 and gamma5 m2 mass terms")
    ps.set_defaults(func=cmd_spectrum)

    pv = sub.add_parser("verify", parents=[common], help="run identity-verification suites")
    pv.add_argument("--suite", choices=("operators", "desitter", "massdomain", "all"),
                    default=config.get("suite", "all"))
    pv.add_argument("--samples", type=int, default=config.get("samples", DEFAULT_SAMPLES))
    pv.add_argument("--seed", type=int, default=config.get("seed", DEFAULT_SEED))
    pv.set_defaults(func=cmd_verify)

    pf = sub.add_parser("figures", parents=[common], help="emit parameter-curve CSV files")
    pf.add_argument("--mmax", type=float, default=config.get("mmax", DEFAULT_MMAX))
    pf.add_argument("--points", type=int, default=config.get("points", DEFAULT_POINTS))
    pf.add_argument("--out", default=config.get("out", "."))
    pf.set_defaults(func=cmd_figures)

    return parser


def main(argv=None) -> int:
    parser = build_parser(load_config())
    args = parser.parse_args(argv)
    if getattr(args, "samples", 1) is not None and getattr(args, "samples", 1) < 1:
        parser.error("--samples must be >= 1")
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
