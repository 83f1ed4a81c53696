"""Command-line front end: single-state analysis, deterministic parameter
sweeps (CSV), the canonical-state summary table, and closed-form self checks.

Exit codes: 0 success, 1 usage error, 2 numeric or validation failure.
All logarithms are natural (base e).
"""

import argparse
import json
import math
import sys

import numpy as np

from .deficit import (
    Cut,
    cut_deficit,
    family_cut_deficit,
    family_decohered_diagonal,
    family_marginal_eigenvalues,
    gen_w_pair_deficits,
    quantum_deficit,
)
from .linalg import hermitian_eig, partial_trace
from .majorana import Spinor, symmetrize
from .monogamy import SUMMARY_NOTES, q_score, summary_table
from .states import (
    density_of,
    gen_ghz,
    gen_w,
    ghz,
    state_from_json,
    two_spinor_family,
    w,
    wbar,
    wwbar,
)

NAMED_STATES = {"ghz": ghz, "w": w, "wbar": wbar, "wwbar": wwbar}

THETA_DEFAULT_POINTS = 200
THETA_DEFAULT_RANGE = (0.01 * math.pi, 0.99 * math.pi)
GENW_DEFAULT_POINTS = 60
GENW_DEFAULT_DELTAS = (0.0, math.pi / 2.0, math.pi)
GENW_ANCHOR = 1.0 / math.sqrt(3.0)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(1)


def _fmt(x):
    v = float(x)
    if v == 0.0:
        v = 0.0  # normalize -0
    return f"{v:.12g}"


def _load_json_arg(text, what):
    if text.startswith("@"):
        try:
            with open(text[1:], "r", encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise ValueError(f"cannot read {what} file: {exc}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"invalid {what} JSON: {exc}") from None


def _resolve_state(args):
    given = [x for x in (args.state, args.amplitudes, args.spinors) if x]
    if len(given) != 1:
        raise ValueError("provide exactly one of --state, --amplitudes, --spinors")
    if args.state:
        name = args.state.lower()
        if name not in NAMED_STATES:
            raise ValueError(
                f"unknown state '{args.state}' (choose from {', '.join(sorted(NAMED_STATES))})"
            )
        return NAMED_STATES[name]()
    if args.amplitudes:
        return state_from_json(_load_json_arg(args.amplitudes, "amplitudes"))
    parsed = _load_json_arg(args.spinors, "spinors")
    if not isinstance(parsed, list) or not parsed:
        raise ValueError("spinors JSON must be a non-empty list of {beta, alpha} objects")
    spinors = []
    for item in parsed:
        if not isinstance(item, dict) or "beta" not in item:
            raise ValueError('each spinor needs at least a "beta" field')
        spinors.append(Spinor(float(item["beta"]), float(item.get("alpha", 0.0))))
    return symmetrize(spinors)


def cmd_analyze(args):
    psi = _resolve_state(args)
    report = q_score(psi)
    payload = {"log_base": "e"}
    payload.update(report.to_dict())
    print(json.dumps(payload, indent=2))
    return 0


def _config_value(args, key, flag_value, default):
    if flag_value is not None:
        return flag_value
    if args.config_data and key in args.config_data:
        return args.config_data[key]
    return default


def _write_csv(path, header, rows):
    try:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(header + "\n")
            for row in rows:
                fh.write(row + "\n")
    except OSError as exc:
        raise ValueError(f"cannot write {path}: {exc}") from None


def cmd_sweep_theta(args):
    points = int(_config_value(args, "points", args.points, THETA_DEFAULT_POINTS))
    lo = float(_config_value(args, "theta_min", args.theta_min, THETA_DEFAULT_RANGE[0]))
    hi = float(_config_value(args, "theta_max", args.theta_max, THETA_DEFAULT_RANGE[1]))
    out = _config_value(args, "out", args.out, "sweep_theta.csv")
    if points < 2:
        raise ValueError(f"points must be >= 2, got {points}")
    if not (0.0 <= lo < hi <= math.pi):
        raise ValueError(f"need 0 <= theta_min < theta_max <= pi, got [{lo}, {hi}]")
    rows = []
    for theta in np.linspace(lo, hi, points):
        rep = q_score(two_spinor_family(float(theta)))
        rows.append(
            ",".join([_fmt(theta), _fmt(rep.d_ab), _fmt(rep.d_abc), _fmt(rep.q), rep.verdict])
        )
    _write_csv(out, "theta,d_ab,d_abc,q,verdict", rows)
    print(f"wrote {len(rows)} rows to {out}")
    return 0


def _genw_grid(points, deltas):
    vals = [i / (points + 1) for i in range(1, points + 1)]
    triples = []
    for a in vals:
        for b in vals:
            if a * a + b * b < 1.0 - 1e-12:
                triples.append((a, b))
    # the equal-amplitude anchor point is always present so the W state
    # appears on every grid
    if not any(abs(a - GENW_ANCHOR) < 1e-15 and abs(b - GENW_ANCHOR) < 1e-15 for a, b in triples):
        triples.append((GENW_ANCHOR, GENW_ANCHOR))
    triples.sort()
    return [(a, b, d) for a, b in triples for d in deltas]


def cmd_sweep_genw(args):
    points = int(_config_value(args, "points", args.points, GENW_DEFAULT_POINTS))
    delta = _config_value(args, "phase_delta", args.phase_delta, None)
    out = _config_value(args, "out", args.out, "sweep_genw.csv")
    if points < 2:
        raise ValueError(f"points must be >= 2, got {points}")
    deltas = GENW_DEFAULT_DELTAS if delta is None else (float(delta),)
    rows = []
    d_abc_by_point = {}
    for a, b, d in _genw_grid(points, deltas):
        c = math.sqrt(max(1.0 - a * a - b * b, 0.0))
        rep = q_score(gen_w(a, b, c, alpha=d, beta=0.0, gamma=0.0))
        d_abc_by_point[(a, b, d)] = rep.d_abc
        rows.append(
            ",".join(
                [
                    _fmt(a),
                    _fmt(b),
                    _fmt(d),
                    _fmt(rep.d_ab),
                    _fmt(rep.d_ac),
                    _fmt(rep.d_abc),
                    _fmt(rep.q),
                    rep.verdict,
                ]
            )
        )
    _write_csv(out, "a_abs,b_abs,phase_delta,d_ab,d_ac,d_abc,q,verdict", rows)
    print(f"wrote {len(rows)} rows to {out}")
    if len(deltas) > 1:
        base = deltas[0]
        probe = max(
            abs(d_abc_by_point[(a, b, d)] - d_abc_by_point[(a, b, base)])
            for (a, b, d) in d_abc_by_point
        )
        print(f"phase-dependence probe: max |d_abc(delta) - d_abc({_fmt(base)})| = {_fmt(probe)}")
    return 0


def cmd_table1(args):
    del args
    rows = summary_table()
    print("canonical-state summary (logarithms are natural, base e)")
    print()
    header = f"{'state':34} {'family':10} {'class':10} {'verdict':20} {'tau':>8} {'C':>8} {'q':>10}"
    print(header)
    print("-" * len(header))
    for row in rows:
        print(
            f"{row.name:34} {row.family_class:10} {row.slocc_label or '-':10} "
            f"{row.verdict:20} {row.tau:8.4f} {row.concurrence:8.4f} {row.q:10.5f}"
        )
        for params, q, verdict in row.samples:
            print(f"{'':14}sample {params}: q = {q:.6f}, {verdict}")
    print()
    print(f"{'entanglement types:':22}" + "; ".join(f"{r.name}: {r.entanglement_type}" for r in rows))
    print()
    for note in SUMMARY_NOTES:
        print(f"note: {note}")
    return 0


def _self_checks(perturb):
    thetas = np.linspace(0.002 * math.pi, 0.998 * math.pi, 100)
    checks = []

    err = 0.0
    for theta in thetas:
        rho = density_of(two_spinor_family(float(theta)))
        numeric = hermitian_eig(partial_trace(rho, [2, 2, 2], keep=[0])).eigenvalues
        closed = np.array(family_marginal_eigenvalues(float(theta))) + perturb
        err = max(err, float(np.abs(numeric - closed).max()))
    checks.append(("family marginal eigenvalues, closed vs numeric", err, 1e-10))

    err = 0.0
    for theta in thetas:
        rho = density_of(two_spinor_family(float(theta)))
        rep = quantum_deficit(partial_trace(rho, [2, 2, 2], keep=[0, 1]), [2, 2])
        closed = np.array(family_decohered_diagonal(float(theta))) + perturb
        err = max(err, float(np.abs(rep.decohered_diagonal - closed).max()))
    checks.append(("family decohered diagonal, closed vs numeric", err, 1e-8))

    err = 0.0
    for theta in thetas:
        numeric = cut_deficit(two_spinor_family(float(theta)), Cut((0,), (1, 2))).deficit
        err = max(err, abs(numeric - (family_cut_deficit(float(theta)) + perturb)))
    checks.append(("family cut deficit, closed vs numeric", err, 1e-8))

    err = 0.0
    for mags in [(0.6, 0.48, 0.64), (0.3, 0.5, math.sqrt(1 - 0.09 - 0.25)), (0.8, 0.36, 0.48)]:
        rho = density_of(gen_w(*mags))
        num_ab = quantum_deficit(partial_trace(rho, [2, 2, 2], keep=[0, 1]), [2, 2]).deficit
        num_ac = quantum_deficit(partial_trace(rho, [2, 2, 2], keep=[0, 2]), [2, 2]).deficit
        closed = gen_w_pair_deficits(*mags)
        err = max(err, abs(num_ab - closed[0] - perturb), abs(num_ac - closed[1] - perturb))
    checks.append(("generalized-W pairwise deficits, closed vs numeric", err, 1e-8))

    err = 0.0
    for a_mag, alpha, beta in [(0.6, 0.0, 0.0), (0.35, 0.3, 1.2), (0.9, 2.0, 0.7)]:
        b_mag = math.sqrt(1.0 - a_mag**2)
        numeric = cut_deficit(gen_ghz(a_mag, b_mag, alpha, beta), Cut((0,), (1, 2))).deficit
        a2 = a_mag**2
        closed = -(a2 * math.log(a2) + (1 - a2) * math.log(1 - a2)) + perturb
        err = max(err, abs(numeric - closed))
    checks.append(("generalized-GHZ cut deficit, closed vs numeric", err, 1e-8))

    err = 0.0
    for a_mag in (0.6, 0.35, 0.9):
        rho = density_of(gen_ghz(a_mag, math.sqrt(1 - a_mag**2), 0.4, 1.1))
        for keep in ([0, 1], [0, 2]):
            rep = quantum_deficit(partial_trace(rho, [2, 2, 2], keep=keep), [2, 2])
            err = max(err, abs(rep.deficit + perturb))
    checks.append(("generalized-GHZ pairwise deficits vanish", err, 1e-10))

    rho = density_of(wwbar())
    rep_ab = quantum_deficit(partial_trace(rho, [2, 2, 2], keep=[0, 1]), [2, 2])
    exact = sum(x * math.log(x) for x in (5 / 6, 1 / 6)) - sum(
        x * math.log(x) for x in (3 / 4, 1 / 12, 1 / 12, 1 / 12)
    )
    rep_cut = cut_deficit(wwbar(), Cut((0,), (1, 2)))
    err = max(
        abs(rep_ab.deficit - exact - perturb),
        abs(rep_cut.deficit - (-(5 / 6) * math.log(5 / 6) - (1 / 6) * math.log(1 / 6)) - perturb),
    )
    checks.append(("WWbar reference deficits", err, 1e-10))

    rho = density_of(ghz())
    rep_ab = quantum_deficit(partial_trace(rho, [2, 2, 2], keep=[0, 1]), [2, 2])
    rep_cut = cut_deficit(ghz(), Cut((0,), (1, 2)))
    err = max(abs(rep_ab.deficit + perturb), abs(rep_cut.deficit - math.log(2.0) - perturb))
    checks.append(("GHZ reference deficits", err, 1e-10))

    return checks


def cmd_self_check(args):
    perturb = float(args.perturb or 0.0)
    checks = _self_checks(perturb)
    failures = 0
    for name, err, tol in checks:
        ok = err <= tol
        failures += 0 if ok else 1
        print(f"{'PASS' if ok else 'FAIL'} {name}: max error {err:.3e} (tolerance {tol:.0e})")
    if failures:
        print(f"{failures} of {len(checks)} checks failed", file=sys.stderr)
        return 2
    return 0


def build_parser():
    parser = _Parser(prog="qdeficit", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="monogamy report for one state (JSON to stdout)")
    p.add_argument("--state", help="named state: ghz, w, wbar, wwbar")
    p.add_argument("--amplitudes", help='state JSON {"n": ..., "amplitudes": [[re, im], ...]} or @file')
    p.add_argument("--spinors", help='spinor-list JSON [{"beta": ..., "alpha": ...}, ...] or @file')
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("sweep-theta", help="CSV sweep of the two-spinor family")
    p.add_argument("--points", type=int)
    p.add_argument("--theta-min", type=float, dest="theta_min")
    p.add_argument("--theta-max", type=float, dest="theta_max")
    p.add_argument("--out")
    p.add_argument("--config", help="JSON config file; explicit flags win")
    p.set_defaults(func=cmd_sweep_theta)

    p = sub.add_parser("sweep-genw", help="CSV sweep of the generalized W family")
    p.add_argument("--points", type=int)
    p.add_argument("--phase-delta", type=float, dest="phase_delta")
    p.add_argument("--out")
    p.add_argument("--config", help="JSON config file; explicit flags win")
    p.set_defaults(func=cmd_sweep_genw)

    p = sub.add_parser("table1", help="summary table over the canonical states")
    p.set_defaults(func=cmd_table1)

    p = sub.add_parser("self-check", help="closed-form versus numeric cross validation")
    p.add_argument("--perturb", type=float, default=0.0, help=argparse.SUPPRESS)
    p.set_defaults(func=cmd_self_check)

    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 1
    if hasattr(args, "config") and args.config:
        try:
            with open(args.config, "r", encoding="utf-8") as fh:
                args.config_data = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            print(f"error: cannot load config: {exc}", file=sys.stderr)
            return 2
    else:
        args.config_data = None
    try:
        return args.func(args)
    except (ValueError, RuntimeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
