"""Command-line front end: figure sweeps as CSV, the no-advantage search,
and the discrete-vs-continuous loss comparison.

Output format: UTF-8, LF line endings; ``#``-prefixed comment lines echo
the tool version and the full parameter set, then one header row, then the
data rows with numbers rendered at 12 significant digits.  Identical flags
produce byte-identical output.  Open sweep endpoints are sampled 1e-6
inside the excluded boundary.

Exit codes: 0 success / claim holds, 1 usage error, 2 numerical failure,
3 claim violated (the search found a positive advantage).
"""

import argparse
import sys
from dataclasses import dataclass, field

import numpy as np

from . import __version__, gaussian_core, measures, qkd
from .errors import (
    InternalConsistencyError,
    InvalidParameterError,
    NumericalFailureError,
)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_NUMERICAL = 2
EXIT_CLAIM_VIOLATED = 3

ENDPOINT_SHRINK = 1e-6


def _fmt(x):
    return format(float(x), ".12g")


@dataclass
class SweepTable:
    """Ordered sweep rows plus the parameter echo for the header comment."""

    header: tuple
    rows: list
    provenance: dict = field(default_factory=dict)

    def __post_init__(self):
        arity = len(self.header)
        for row in self.rows:
            if len(row) != arity:
                raise InternalConsistencyError("row arity differs from header")
            if not all(np.isfinite(v) for v in row):
                raise InternalConsistencyError(f"non-finite value in row {row}")
        abscissa = [row[0] for row in self.rows]
        if any(b <= a for a, b in zip(abscissa, abscissa[1:])):
            raise InternalConsistencyError("abscissa column must be strictly increasing")

    def render(self):
        lines = [f"# cvmix {__version__}"]
        lines += [f"# {key} = {value}" for key, value in self.provenance.items()]
        lines.append(",".join(self.header))
        lines += [",".join(_fmt(v) for v in row) for row in self.rows]
        return "\n".join(lines) + "\n"

    def write(self, out_path):
        text = self.render()
        if out_path == "-":
            sys.stdout.write(text)
        else:
            with open(out_path, "w", encoding="utf-8", newline="\n") as fh:
                fh.write(text)


def _check(condition, message):
    if not condition:
        raise InternalConsistencyError(message)


def cmd_figure_negativity(p, i_steps, out_path):
    """Sweep of mixed/pure negativity against the shared inseparability value."""
    if not 0.0 < p < 1.0:
        raise InvalidParameterError(f"--p must lie in (0, 1), got {p}")
    if i_steps < 2:
        raise InvalidParameterError(f"--steps must be >= 2, got {i_steps}")
    lo = (1.0 - p) + ENDPOINT_SHRINK
    rows = []
    for insep in np.linspace(lo, 1.0, i_steps):
        point = measures.negativity_vs_I(p, float(insep))
        _check(point.gap >= 0.0, f"negative gap at insep={insep}")
        rows.append((point.insep, point.mixed, point.pure, point.gap))
    table = SweepTable(
        header=("I", "mixed_negativity", "pure_negativity", "gap"),
        rows=rows,
        provenance={
            "command": "figure negativity",
            "p": _fmt(p),
            "steps": str(i_steps),
            "I-range": f"[{_fmt(lo)}, 1] (pole at 1-p shifted by {ENDPOINT_SHRINK})",
        })
    table.write(out_path)
    return table


def cmd_figure_fidelity(p, r_steps, r_max, out_path):
    """Sweep of mixed/pure teleportation fidelity against the squeeze strength."""
    if not 0.0 < p < 1.0:
        raise InvalidParameterError(f"--p must lie in (0, 1), got {p}")
    if r_steps < 2:
        raise InvalidParameterError(f"--steps must be >= 2, got {r_steps}")
    if not r_max > 0.0:
        raise InvalidParameterError(f"--r-max must be > 0, got {r_max}")
    rows = []
    for r in np.linspace(0.0, r_max, r_steps):
        insep = measures.inseparability_mixture(p, float(r))
        point = measures.fidelity_vs_I(p, insep)
        mixed = measures.fidelity_mixture(p, float(r))
        _check(abs(mixed - point.mixed) <= 1e-12,
               f"fidelity parameterizations disagree at r={r}")
        _check(point.gap >= 0.0, f"negative gap at r={r}")
        rows.append((float(r), insep, mixed, point.pure, point.gap))
    table = SweepTable(
        header=("r", "I", "mixed_fidelity", "pure_equivalent_fidelity", "gap"),
        rows=rows,
        provenance={
            "command": "figure fidelity",
            "p": _fmt(p),
            "steps": str(r_steps),
            "r-max": _fmt(r_max),
        })
    table.write(out_path)
    return table


def cmd_figure_qkd(a, n, n_p, eta_steps, out_path):
    """Sweep of the rate differences over channel efficiency."""
    if eta_steps < 2:
        raise InvalidParameterError(f"--steps must be >= 2, got {eta_steps}")
    qkd.QkdParams(A=a, eta=0.5, N=n, N_p=n_p)  # validate the fixed parameters
    rows = []
    for eta in np.linspace(ENDPOINT_SHRINK, 1.0 - ENDPOINT_SHRINK, eta_steps):
        b = qkd.delta_I_mix(a, float(eta), n, n_p)
        _check(b.delta_mix >= b.delta_gaussian - 1e-12,
               f"mixed attack beat the Gaussian one at eta={eta}")
        _check(b.delta_vacuum >= b.delta_mix >= b.delta_squeezed,
               f"convex-combination ordering violated at eta={eta}")
        rows.append((float(eta), b.delta_gaussian, b.delta_mix,
                     b.delta_vacuum, b.delta_squeezed))
    table = SweepTable(
        header=("eta", "delta_gaussian", "delta_mix", "delta_vacuum",
                "delta_squeezed"),
        rows=rows,
        provenance={
            "command": "figure qkd",
            "a": _fmt(a),
            "n": _fmt(n),
            "np": _fmt(n_p),
            "steps": str(eta_steps),
            "eta-range": f"[{_fmt(ENDPOINT_SHRINK)}, {_fmt(1.0 - ENDPOINT_SHRINK)}]",
            "note": "parameter defaults are illustrative, chosen by this tool",
        })
    table.write(out_path)
    return table


def cmd_loss_compare(r, eta_steps, out_path):
    """Continuous-loss vs random-blocking comparison over the loss grid."""
    if not r > 0.0:
        raise InvalidParameterError(f"--r must be > 0, got {r}")
    if eta_steps < 2:
        raise InvalidParameterError(f"--steps must be >= 2, got {eta_steps}")
    base = gaussian_core.tmsv_covariance(r)
    rows = []
    for eta in np.linspace(ENDPOINT_SHRINK, 1.0 - ENDPOINT_SHRINK, eta_steps):
        eta = float(eta)
        lossy = gaussian_core.apply_continuous_loss(base, eta)
        blended = gaussian_core.mixture_covariance(
            measures.MixtureSpec.vacuum_mixture(eta, r))
        cm_diff = float(np.max(np.abs(lossy.matrix - blended.matrix)))
        duan = gaussian_core.duan_inseparability(lossy)
        greg = gaussian_core.gaussian_negativity_from_cm(lossy)
        nancy = measures.mixture_negativity(eta, r)
        _check(cm_diff < 1e-12, f"covariance mismatch {cm_diff} at eta={eta}")
        _check(nancy > greg, f"blocking loss not more entangled at eta={eta}")
        rows.append((eta, duan, greg, nancy, cm_diff))
    table = SweepTable(
        header=("eta", "duan_common", "greg_negativity", "nancy_negativity",
                "cm_max_abs_diff"),
        rows=rows,
        provenance={
            "command": "compare loss",
            "r": _fmt(r),
            "steps": str(eta_steps),
            "eta-range": f"[{_fmt(ENDPOINT_SHRINK)}, {_fmt(1.0 - ENDPOINT_SHRINK)}]",
        })
    table.write(out_path)
    return table


def cmd_qkd_search(args):
    """Run the grid search and write a key,value report; returns the exit code."""
    a_values = np.geomspace(args.a_min, args.a_max, args.a_steps)
    eta_values = np.linspace(args.eta_min, args.eta_max, args.eta_steps)
    n_values = np.linspace(args.n_min, args.n_max, args.n_steps)
    if args.np_min is not None:
        np_values = np.linspace(args.np_min, args.np_max, args.np_steps)
        result = qkd.advantage_search(a_values, eta_values, n_values, np_values)
    else:
        result = qkd.advantage_search(a_values, eta_values, n_values,
                                      np_steps=args.np_steps, np_max=args.np_max)
    claim_holds = result.max_advantage <= 1e-12
    lines = [f"# cvmix {__version__}", "# command = search qkd"]
    for key in ("a_min", "a_max", "a_steps", "eta_min", "eta_max", "eta_steps",
                "n_min", "n_max", "n_steps", "np_min", "np_max", "np_steps"):
        value = getattr(args, key)
        if key == "np_min" and value is None:
            value = "auto (per-N grid)"
        lines.append(f"# {key.replace('_', '-')} = {value}")
    lines.append("key,value")
    lines.append(f"feasible_cells,{result.feasible_cells}")
    lines.append(f"max_advantage,{_fmt(result.max_advantage)}")
    lines.append(f"argmax_A,{_fmt(result.argmax.A)}")
    lines.append(f"argmax_eta,{_fmt(result.argmax.eta)}")
    lines.append(f"argmax_N,{_fmt(result.argmax.N)}")
    lines.append(f"argmax_Np,{_fmt(result.argmax.N_p)}")
    lines.append(f"claim_holds,{'true' if claim_holds else 'false'}")
    text = "\n".join(lines) + "\n"
    if args.out == "-":
        sys.stdout.write(text)
    else:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    if not claim_holds:
        print(f"warning: positive advantage {result.max_advantage} at "
              f"{result.argmax}", file=sys.stderr)
        return EXIT_CLAIM_VIOLATED
    return EXIT_OK


class _Parser(argparse.ArgumentParser):
    # usage problems exit 1, not argparse's default 2
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def build_parser():
    parser = _Parser(prog="cvmix", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="group", required=True)

    figure = sub.add_parser("figure", help="emit one figure sweep as CSV")
    figsub = figure.add_subparsers(dest="figure_kind", required=True)

    f_neg = figsub.add_parser("negativity", help="negativity vs inseparability value")
    f_neg.add_argument("--p", type=float, default=0.5)
    f_neg.add_argument("--steps", type=int, default=201)
    f_neg.add_argument("--out", default="-")
    f_neg.set_defaults(func=lambda a: _run_table(
        cmd_figure_negativity, a.p, a.steps, a.out))

    f_fid = figsub.add_parser("fidelity", help="teleportation fidelity vs squeeze")
    f_fid.add_argument("--p", type=float, default=0.5)
    f_fid.add_argument("--steps", type=int, default=201)
    f_fid.add_argument("--r-max", type=float, default=3.0)
    f_fid.add_argument("--out", default="-")
    f_fid.set_defaults(func=lambda a: _run_table(
        cmd_figure_fidelity, a.p, a.steps, a.r_max, a.out))

    f_qkd = figsub.add_parser("qkd", help="rate differences vs channel efficiency")
    f_qkd.add_argument("--a", type=float, default=10.0)
    f_qkd.add_argument("--n", type=float, default=2.0)
    f_qkd.add_argument("--np", type=float, default=5.0)
    f_qkd.add_argument("--steps", type=int, default=201)
    f_qkd.add_argument("--out", default="-")
    f_qkd.set_defaults(func=lambda a: _run_table(
        cmd_figure_qkd, a.a, a.n, a.np, a.steps, a.out))

    search = sub.add_parser("search", help="exhaustive parameter searches")
    searchsub = search.add_subparsers(dest="search_kind", required=True)
    s_qkd = searchsub.add_parser("qkd", help="no-advantage grid search")
    s_qkd.add_argument("--a-min", type=float, default=1.1)
    s_qkd.add_argument("--a-max", type=float, default=100.0)
    s_qkd.add_argument("--a-steps", type=int, default=20)
    s_qkd.add_argument("--eta-min", type=float, default=0.02)
    s_qkd.add_argument("--eta-max", type=float, default=0.98)
    s_qkd.add_argument("--eta-steps", type=int, default=25)
    s_qkd.add_argument("--n-min", type=float, default=1.01)
    s_qkd.add_argument("--n-max", type=float, default=10.0)
    s_qkd.add_argument("--n-steps", type=int, default=20)
    s_qkd.add_argument("--np-min", type=float, default=None,
                       help="fixed N_p axis start; default grids N_p per N")
    s_qkd.add_argument("--np-max", type=float, default=20.0)
    s_qkd.add_argument("--np-steps", type=int, default=20)
    s_qkd.add_argument("--out", default="-")
    s_qkd.set_defaults(func=cmd_qkd_search)

    compare = sub.add_parser("compare", help="cross-model comparisons")
    compsub = compare.add_subparsers(dest="compare_kind", required=True)
    c_loss = compsub.add_parser("loss", help="continuous vs discrete loss")
    c_loss.add_argument("--r", type=float, default=0.5)
    c_loss.add_argument("--steps", type=int, default=201)
    c_loss.add_argument("--out", default="-")
    c_loss.set_defaults(func=lambda a: _run_table(
        cmd_loss_compare, a.r, a.steps, a.out))

    return parser


def _run_table(command, *params):
    command(*params)
    return EXIT_OK


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except InvalidParameterError as exc:  # covers infeasible/truncation/empty-search
        print(f"cvmix: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"cvmix: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (NumericalFailureError, InternalConsistencyError) as exc:
        print(f"cvmix: numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL


if __name__ == "__main__":
    sys.exit(main())
