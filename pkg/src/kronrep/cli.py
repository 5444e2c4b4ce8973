"""Command line front end.

Exit codes: 0 success, 1 counterexample found, 2 usage error, 3 domain
precondition violated, 4 malformed input file, 5 resource cap exceeded.
JSON output (--format json) is schema-versioned and byte-stable for fixed
inputs and seed; human output is not a compatibility surface.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import cover, kronecker as kr, linrep, orbits, verify
from .linalg import FieldSpec

EXIT_OK = 0
EXIT_COUNTEREXAMPLE = 1
EXIT_USAGE = 2
EXIT_DOMAIN = 3
EXIT_FORMAT = 4
EXIT_CAP = 5


class UsageError(Exception):
    pass


def _emit(payload: dict, args, human_lines) -> None:
    if args.format == "json":
        sys.stdout.write(json.dumps(payload, sort_keys=True) + "\n")
    else:
        for line in human_lines:
            sys.stdout.write(line + "\n")


def _add_format(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=("human", "json"), default="human")


# -- classify ------------------------------------------------------------------


def cmd_classify(args) -> int:
    d = (args.a, args.b)
    cls = kr.classify(args.r, d)
    payload = {
        "schema": "kronrep.classify/1",
        "r": args.r,
        "dim": [args.a, args.b],
        "root_class": cls.value,
        "q": kr.q_r(args.r, d),
        "westwick": kr.westwick_necessary(args.r, d),
        "ekp": kr.ekp_dim(args.r, d) if cls.is_root else None,
        "eip": kr.eip_dim(args.r, d) if cls.is_root else None,
        "ekp_or_eip": kr.ekp_or_eip_dim(args.r, d) if cls.is_root else None,
    }
    lines = [
        f"dim ({args.a},{args.b}) for r={args.r}: {cls.value}",
        f"  q = {payload['q']}",
        f"  westwick necessary condition: {payload['westwick']}",
    ]
    if cls.is_root:
        lines.append(f"  ekp={payload['ekp']} eip={payload['eip']} ekp-or-eip={payload['ekp_or_eip']}")
    _emit(payload, args, lines)
    return EXIT_OK


# -- orbit ---------------------------------------------------------------------


def cmd_orbit(args) -> int:
    report = orbits.orbit_report(args.r, (args.a, args.b), back=args.back, fwd=args.fwd)
    payload = {"schema": "kronrep.orbit/1", **report.to_dict()}
    lines = [
        f"orbit of ({args.a},{args.b}) for r={args.r}: q = {report.q_value}",
        f"  delta_o = {report.delta_o}, m_o = {report.m_o}",
    ]
    for e in report.window:
        flags = ("ekp" if e.ekp else "") + ("eip" if e.eip else "")
        lines.append(f"  Phi^{e.offset:+d}: {e.dim} {flags}")
    if args.ql is not None:
        bound = orbits.w_bound(args.r, (args.a, args.b), args.ql)
        payload["ql"] = args.ql
        payload["w_bound"] = bound
        lines.append(f"  width bound at quasi-length {args.ql}: {bound}")
    _emit(payload, args, lines)
    return EXIT_OK


# -- rep -----------------------------------------------------------------------


def _scan_dict(scan: linrep.DirectionScan) -> dict:
    return {
        "holds": scan.holds,
        "witness": None if scan.witness is None else [str(x) for x in scan.witness],
        "exact": scan.exact,
    }


def cmd_rep_check(args) -> int:
    m = linrep.load_rep(args.file)
    ekp = linrep.is_ekp_rep(m, samples=args.mc_samples, seed=args.seed)
    eip = linrep.is_eip_rep(m, samples=args.mc_samples, seed=args.seed)
    payload = {
        "schema": "kronrep.rep_check/1",
        "r": m.r,
        "field": m.field.label(),
        "d": [m.d[0], m.d[1]],
        "ekp": _scan_dict(ekp),
        "eip": _scan_dict(eip),
        "westwick": kr.westwick_necessary(m.r, m.d),
    }
    lines = [f"representation {args.file}: r={m.r}, d={m.d}, field {m.field.label()}"]
    for name, scan in (("ekp", ekp), ("eip", eip)):
        note = "" if scan.exact else " (Monte Carlo, not exact)"
        witness = "" if scan.witness is None else f", witness {list(scan.witness)}"
        lines.append(f"  {name}: {scan.holds}{note}{witness}")
    _emit(payload, args, lines)
    return EXIT_OK


def cmd_rep_hom(args) -> int:
    x = linrep.load_rep(args.file)
    y = linrep.load_rep(args.other)
    try:
        hom = linrep.hom_dim(x, y)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    ext = linrep.ext_dim(x, y)
    payload = {
        "schema": "kronrep.rep_hom/1",
        "hom": hom,
        "ext": ext,
        "euler": linrep.euler_form_dims(x.r, x.d, y.d),
    }
    _emit(payload, args, [f"hom = {hom}, ext = {ext}, euler = {payload['euler']}"])
    return EXIT_OK


def _parse_field(text: str) -> FieldSpec:
    if text in ("q", "Q", "rational", "rationals"):
        return FieldSpec.rationals()
    try:
        return FieldSpec.prime(int(text))
    except ValueError as exc:
        raise UsageError(f"bad field {text!r}: use a prime or 'rational'") from exc


def _parse_alpha(text: str, field: FieldSpec) -> list:
    out = []
    for piece in text.split(","):
        piece = piece.strip()
        try:
            out.append(Fraction(piece) if not field.is_prime_field else int(piece))
        except (ValueError, ZeroDivisionError) as exc:
            raise UsageError(f"bad direction entry {piece!r}") from exc
    return out


def cmd_rep_xalpha(args) -> int:
    field = _parse_field(args.field)
    alpha = _parse_alpha(args.alpha, field)
    try:
        m = linrep.make_x_alpha(args.r, alpha, field)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    linrep.save_rep(m, args.output)
    payload = {"schema": "kronrep.rep_xalpha/1", "d": [m.d[0], m.d[1]], "output": args.output}
    _emit(payload, args, [f"wrote test representation of dimension {m.d} to {args.output}"])
    return EXIT_OK


# -- cover ---------------------------------------------------------------------


def cmd_cover_tauinv(args) -> int:
    frag = cover.load(args.file)
    shifted = cover.tau_inv_dim(frag)
    data = cover.to_dict(shifted)
    if args.output:
        cover.save(shifted, args.output)
    payload = {"schema": "kronrep.cover_tauinv/1", "fragment": data, "pushdown": list(cover.pushdown_dim(shifted))}
    lines = [f"shifted fragment: {len(shifted.parity)} vertices, pushdown {cover.pushdown_dim(shifted)}"]
    if args.output:
        lines.append(f"wrote fragment to {args.output}")
    else:
        lines.append(json.dumps(data, sort_keys=True))
    _emit(payload, args, lines)
    return EXIT_OK


def cmd_cover_pushdown(args) -> int:
    frag = cover.load(args.file)
    d = cover.pushdown_dim(frag)
    payload = {"schema": "kronrep.cover_pushdown/1", "dim": [d[0], d[1]]}
    lines = [f"pushdown dimension vector: ({d[0]},{d[1]})"]
    if args.field is not None and frag.maps:
        field = _parse_field(args.field)
        rep = cover.pushdown_rep(frag, field)
        if args.output:
            linrep.save_rep(rep, args.output)
            lines.append(f"wrote representation to {args.output}")
        payload["rep_written"] = bool(args.output)
    _emit(payload, args, lines)
    return EXIT_OK


def cmd_cover_thinbranch(args) -> int:
    frag = cover.load(args.file)
    branch = cover.has_thin_sink_branch(frag)
    payload = {
        "schema": "kronrep.cover_thinbranch/1",
        "found": branch is not None,
        "x": None if branch is None else branch.x,
        "y": None if branch is None else branch.y,
    }
    if branch is None:
        lines = ["no thin sink branch"]
    else:
        lines = [f"thin sink branch: source {branch.x} -> sink {branch.y}"]
    _emit(payload, args, lines)
    return EXIT_OK


# -- verify ----------------------------------------------------------------------


def cmd_verify(args) -> int:
    suites = [s.strip() for s in args.suite.split(",") if s.strip()]
    try:
        tasks = verify.default_tasks(
            suites,
            r_values=[args.r] if args.r is not None else None,
            a_max=args.a_max,
            bound=args.bound,
            samples=args.samples,
            l_max=args.l_max,
            seed=args.seed,
        )
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    results = verify.run_tasks(tasks, jobs=args.jobs)
    payload = {
        "schema": "kronrep.verify/1",
        "results": [res.to_dict() for res in results],
        "all_passed": all(res.passed for res in results),
    }
    lines = []
    for res in results:
        status = "PASS" if res.passed else f"FAIL {res.counterexample}"
        lines.append(f"{res.name:<12} {res.scope:<40} {status}  ({res.elapsed:.2f}s)")
    lines.append("all passed" if payload["all_passed"] else "counterexample found")
    _emit(payload, args, lines)
    return EXIT_OK if payload["all_passed"] else EXIT_COUNTEREXAMPLE


# -- seq -------------------------------------------------------------------------


def cmd_seq(args) -> int:
    values = orbits.a_seq(args.r, args.count)
    payload = {"schema": "kronrep.seq/1", "r": args.r, "values": values}
    _emit(payload, args, [" ".join(str(v) for v in values)])
    return EXIT_OK


# -- parser ----------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kronrep",
        description="Exact computations for generalized Kronecker quivers.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="root class and predicates of a dimension vector")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("a", type=int)
    p.add_argument("b", type=int)
    _add_format(p)
    p.set_defaults(handler=cmd_classify)

    p = sub.add_parser("orbit", help="Coxeter orbit window with boundary data")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("a", type=int)
    p.add_argument("b", type=int)
    p.add_argument("--back", type=int, default=3)
    p.add_argument("--fwd", type=int, default=3)
    p.add_argument("--ql", type=int, default=None, help="quasi-length for the width bound")
    _add_format(p)
    p.set_defaults(handler=cmd_orbit)

    p = sub.add_parser("rep", help="matrix representation checks")
    rep_sub = p.add_subparsers(dest="subcommand", required=True)

    pc = rep_sub.add_parser("check", help="equal kernels / equal images scans")
    pc.add_argument("file")
    pc.add_argument("--mc-samples", type=int, default=32)
    pc.add_argument("--seed", type=int, default=0)
    _add_format(pc)
    pc.set_defaults(handler=cmd_rep_check)

    ph = rep_sub.add_parser("hom", help="Hom and Ext dimensions")
    ph.add_argument("file")
    ph.add_argument("other")
    _add_format(ph)
    ph.set_defaults(handler=cmd_rep_hom)

    px = rep_sub.add_parser("xalpha", help="write a thin test representation")
    px.add_argument("--r", type=int, required=True)
    px.add_argument("--alpha", required=True, help="comma separated direction entries")
    px.add_argument("--field", default="rational", help="prime p or 'rational'")
    px.add_argument("-o", "--output", required=True)
    _add_format(px)
    px.set_defaults(handler=cmd_rep_xalpha)

    p = sub.add_parser("cover", help="tree fragment operations")
    cov_sub = p.add_subparsers(dest="subcommand", required=True)

    ct = cov_sub.add_parser("tauinv", help="inverse translate at the dimension level")
    ct.add_argument("file")
    ct.add_argument("-o", "--output", default=None)
    _add_format(ct)
    ct.set_defaults(handler=cmd_cover_tauinv)

    cp = cov_sub.add_parser("pushdown", help="push a fragment down to the two-vertex quiver")
    cp.add_argument("file")
    cp.add_argument("--field", default=None, help="assemble matrices over this field")
    cp.add_argument("-o", "--output", default=None)
    _add_format(cp)
    cp.set_defaults(handler=cmd_cover_pushdown)

    cb = cov_sub.add_parser("thinbranch", help="find a thin sink branch")
    cb.add_argument("file")
    _add_format(cb)
    cb.set_defaults(handler=cmd_cover_thinbranch)

    p = sub.add_parser("verify", help="run exhaustive verification suites")
    p.add_argument("--suite", default="all", help=f"comma separated from: {', '.join(verify.SUITE_NAMES)}")
    p.add_argument("--r", type=int, default=None, help="restrict to one r")
    p.add_argument("--bound", type=int, default=None)
    p.add_argument("--a-max", type=int, default=None)
    p.add_argument("--samples", type=int, default=None)
    p.add_argument("--l-max", type=int, default=None)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--jobs", type=int, default=1)
    _add_format(p)
    p.set_defaults(handler=cmd_verify)

    p = sub.add_parser("seq", help="growth sequence a(1)=1, a(2)=r, a(i+2)=r*a(i+1)-a(i)")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--count", type=int, default=10)
    _add_format(p)
    p.set_defaults(handler=cmd_seq)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code else EXIT_OK
    try:
        return args.handler(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (linrep.RepFormatError, cover.FragmentError, OSError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_FORMAT
    except (linrep.ResourceCapError, orbits.OrbitSearchError) as exc:
        print(f"resource cap: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (ValueError, cover.DimensionShiftError) as exc:
        print(f"domain error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


def main_entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    main_entry()
