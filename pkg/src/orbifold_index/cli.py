"""Batch command-line front end.

Subcommands: index, correction, verify, orbifold-char, surfaces, example.
Output is a human-readable table on a terminal and deterministic JSON when
redirected or with --json; exact rationals are never rendered as decimals.

Exit codes: 0 success, 1 usage error, 2 verification failure, 3 internal
consistency failure.  ORBIFOLD_INDEX_THREADS caps the parallelism of
verification sweeps.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor

from . import applications, bundles, index as index_mod
from .bundles import GroupElement
from .index import (
    Duality,
    TopologicalData,
    correction_sum_closed_form,
    index_closed_form,
    index_kawasaki,
    index_smooth,
)
from .scalars import ConsistencyError, as_rational, parse_rational, trig_sums

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_VERIFY = 2
EXIT_CONSISTENCY = 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse would exit(2); the contract is 1
        raise UsageError(message)


def _emit(args, payload: dict, human: list[str]) -> None:
    if args.json or not sys.stdout.isatty():
        print(json.dumps(payload, sort_keys=True))
    else:
        for line in human:
            print(line)


def _duality(name: str) -> Duality:
    try:
        return Duality(name.lower())
    except ValueError:
        raise UsageError(f"duality must be asd or sd, not {name!r}")


def _topology(args) -> TopologicalData:
    return TopologicalData(chi_M=args.chi, tau_M=args.tau,
                           chi_Sigma=args.sigma_chi, sigma_sq=args.sigma_sq,
                           p=args.p)


# ---------------------------------------------------------------------------
# index
# ---------------------------------------------------------------------------

def _cmd_index(args) -> int:
    data = _topology(args)
    duality = _duality(args.duality)
    route = args.route
    if route == "closed" and data.p == 1:
        raise UsageError(
            "p = 1 is the smooth case: the closed form does not apply there; "
            "use --route kawasaki, which reduces to (1/2)(15 chi +- 29 tau)")
    payload: dict = {"inputs": {
        "chi": data.chi_M, "tau": data.tau_M, "sigma_chi": data.chi_Sigma,
        "sigma_sq": data.sigma_sq, "p": data.p, "duality": duality.value,
    }, "route": route}
    human = []
    agree = True
    if route in ("kawasaki", "both"):
        payload["correction"] = index_mod.correction_sum(data.p).to_json()
    if route == "kawasaki":
        idx = index_kawasaki(data, duality)
        payload["index"] = idx
        if data.p == 1:
            payload["route"] = "smooth"  # the empty-sum route is the smooth formula
    elif route == "closed":
        idx = index_closed_form(data, duality)
        payload["index"] = idx
        payload["route"] = "closed_form"
    else:
        k = index_kawasaki(data, duality)
        if data.p == 1:
            other_name, other = "smooth", index_smooth(data.chi_M, data.tau_M, duality)
            agree = k == other
            other = str(other)
        else:
            other_name, other = "closed_form", index_closed_form(data, duality)
            agree = k == other
        payload["routes"] = {"kawasaki": k, other_name: other}
        payload["agree"] = agree
        payload["index"] = k
        idx = k
        human.append(f"kawasaki route:   {k}")
        human.append(f"{other_name.replace('_', ' ')} route: {other}")
        human.append(f"agree:            {'yes' if agree else 'NO'}")
    human.insert(0, f"index ({duality.value}, p={data.p}): {idx}")
    if "correction" in payload:
        c = payload["correction"]
        human.append(f"correction sum:   e: {c['e']}  h: {c['h']}")
    _emit(args, payload, human)
    if not agree:
        print("route disagreement: fixed-point and closed-form indices differ",
              file=sys.stderr)
        return EXIT_CONSISTENCY
    return EXIT_OK


# ---------------------------------------------------------------------------
# correction
# ---------------------------------------------------------------------------

def _cmd_correction(args) -> int:
    p = args.p
    if p < 1:
        raise UsageError("p must be a positive integer")
    brute = index_mod.correction_sum(p)
    payload: dict = {"p": p, "brute": brute.to_json()}
    human = [f"correction sum at p={p}:",
             f"  brute force:  e: {brute.coeff_e}  h: {brute.coeff_h}"]
    if p >= 2:
        closed = correction_sum_closed_form(p)
        payload["closed"] = closed.to_json()
        payload["agree"] = brute == closed
        human.append(f"  closed form:  e: {closed.coeff_e}  h: {closed.coeff_h}")
        human.append(f"  agree: {'yes' if brute == closed else 'NO'}")
    else:
        payload["closed"] = None
        payload["agree"] = True
        human.append("  closed form:  not defined at p = 1 (empty sum)")
    if args.dump_element is not None:
        j = args.dump_element
        if not (1 <= j < p):
            raise UsageError("--dump-element needs 1 <= j < p")
        gamma = GroupElement(p, j)
        payload["element"] = {"p": p, "j": j}
        payload["characters"] = bundles.character_dump(gamma)
        payload["correction_at"] = index_mod.correction_at(gamma).to_json()
        human.append(f"  (character dump for j={j} included in JSON output)")
    _emit(args, payload, human)
    if not payload["agree"]:
        return EXIT_CONSISTENCY
    return EXIT_OK


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------

def _check_correction(p: int) -> bool:
    return index_mod._correction_sum(p) == correction_sum_closed_form(p)


def _check_trig(p: int) -> bool:
    trig_sums(p)  # raises ConsistencyError if brute and closed disagree
    return True


def _check_conjugation(p: int) -> bool:
    for j in range(1, p):
        a, b = GroupElement(p, j), GroupElement(p, p - j)
        for fn in (bundles.ch_symbol, bundles.ch_thom, bundles.ch_lambda_plus):
            x, y = fn(a), fn(b)
            for slot in ("c0", "ce", "ch", "cee", "ceh", "chh"):
                if getattr(x, slot).conjugate() != getattr(y, slot):
                    return False
    return True


_RANKS = (("ch_cotangent", 4), ("ch_lambda_plus", 3), ("ch_lambda_minus", 3),
          ("ch_s20_cotangent", 9), ("ch_s20_lambda_plus", 5))


def _check_rank(p: int) -> bool:
    identity = GroupElement(p, 0)
    for name, rank in _RANKS:
        c0 = getattr(bundles, name)(identity).c0
        if as_rational(c0) != rank:
            return False
    return True


def _check_divisibility(p: int) -> bool:
    for j in range(1, p):
        c = bundles.ch_symbol(GroupElement(p, j))
        if c.c0 or c.ch or c.chh:
            return False
    return True


_P_INDEPENDENCE_SAMPLES = ((2, 0, 1, -2), (2, 0, 2, 0), (5, 3, 2, 3), (4, -2, -1, 6))


def _check_p_independence(p: int) -> bool:
    for chi, tau, schi, ssq in _P_INDEPENDENCE_SAMPLES:
        data = TopologicalData(chi, tau, schi, ssq, p)
        for duality in Duality:
            if index_kawasaki(data, duality) != index_closed_form(data, duality):
                return False
    return True


_SUITES = (
    ("correction", _check_correction),
    ("trig", _check_trig),
    ("conjugation", _check_conjugation),
    ("rank", _check_rank),
    ("divisibility", _check_divisibility),
    ("p-independence", _check_p_independence),
)


def _thread_count() -> int:
    raw = os.environ.get("ORBIFOLD_INDEX_THREADS", "1")
    try:
        n = int(raw)
    except ValueError:
        raise UsageError(f"ORBIFOLD_INDEX_THREADS must be an integer, not {raw!r}")
    return max(1, n)


def _cmd_verify(args) -> int:
    p_max = args.p_max
    if p_max < 2:
        raise UsageError("--p-max must be at least 2")
    tasks = [(name, fn, p) for name, fn in _SUITES for p in range(2, p_max + 1)]

    def run(task):
        name, fn, p = task
        try:
            ok = fn(p)
        except Exception:
            ok = False
        return name, p, ok

    threads = _thread_count()
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(run, tasks))
    else:
        results = [run(t) for t in tasks]
    results.sort(key=lambda r: (r[0], r[1]))

    suites: dict[str, dict] = {}
    for name, p, ok in results:
        entry = suites.setdefault(name, {"pass": 0, "fail": []})
        if ok:
            entry["pass"] += 1
        else:
            entry["fail"].append(p)
    all_ok = all(not entry["fail"] for entry in suites.values())
    total = p_max - 1
    payload = {"p_max": p_max, "suites": suites, "ok": all_ok}
    human = [f"verification sweep, p = 2..{p_max}:"]
    for name, _ in _SUITES:
        entry = suites[name]
        status = "PASS" if not entry["fail"] else f"FAIL at p={entry['fail']}"
        human.append(f"  {name:<16} {entry['pass']}/{total}  {status}")
    human.append("all suites passed" if all_ok else "FAILURES detected")
    _emit(args, payload, human)
    return EXIT_OK if all_ok else EXIT_VERIFY


# ---------------------------------------------------------------------------
# orbifold-char / surfaces / example
# ---------------------------------------------------------------------------

def _cmd_orbifold_char(args) -> int:
    try:
        beta = parse_rational(args.beta)
    except ValueError as exc:
        raise UsageError(str(exc))
    if beta <= 0:
        raise UsageError("beta must be a positive rational a/b")
    chi = index_mod.chi_orb(args.chi, beta, args.sigma_chi)
    tau = index_mod.tau_orb(args.tau, beta, args.sigma_sq)
    payload = {"inputs": {"chi": args.chi, "tau": args.tau,
                          "sigma_chi": args.sigma_chi, "sigma_sq": args.sigma_sq,
                          "beta": str(beta)},
               "chi_orb": str(chi), "tau_orb": str(tau)}
    _emit(args, payload, [f"chi_orb: {chi}", f"tau_orb: {tau}"])
    return EXIT_OK


def _cmd_surfaces(args) -> int:
    j = args.j
    if j < 1:
        raise UsageError("--j must be at least 1")
    kind = applications.SurfaceKind.non_orientable(j)
    massey = applications.whitney_massey_values(j)
    feasible = applications.feasible_self_intersections(j)
    payload = {"j": j, "euler_char": kind.euler_char,
               "h0_bound": applications.h0_bound(kind),
               "massey": massey, "feasible": feasible}
    human = [f"surface with {j} crosscaps (chi = {kind.euler_char}):",
             f"  realizable self-intersections: {massey}",
             f"  feasible for unobstructed metrics: {feasible}",
             f"  dim H0 bound: {payload['h0_bound']}"]
    _emit(args, payload, human)
    return EXIT_OK


def _report_payload(inputs: dict, report) -> dict:
    return {"inputs": inputs, "report": report.to_json()}


def _report_human(title: str, report) -> list[str]:
    lines = [title,
             f"  index: {report.index}",
             f"  dim H0: {report.dim_h0}  dim H1: {report.dim_h1}  dim H2: {report.dim_h2}",
             f"  verdict: {report.verdict}"]
    if report.assumptions:
        lines.append(f"  assumptions: {', '.join(report.assumptions)}")
    return lines


def _cmd_example(args) -> int:
    if args.which == "hitchin":
        if args.k is None or args.k < 3:
            raise UsageError("hitchin needs --k K with K >= 3")
        report = applications.hitchin_report(args.k)
        payload = _report_payload({"k": args.k}, report)
        human = _report_human(f"conical metric on (S^4, RP^2), k={args.k}:", report)
    elif args.which == "lebrun":
        if args.n is None or args.n < 1:
            raise UsageError("lebrun needs --n N with N >= 1")
        if args.p < 2:
            raise UsageError("lebrun needs --p P with P >= 2")
        report = applications.lebrun_report(args.n, args.p)
        payload = _report_payload({"n": args.n, "p": args.p}, report)
        human = _report_human(
            f"hyperbolic-monopole metric on {args.n}#CP^2, p={args.p}:", report)
    else:  # ricci-flat
        for flag in ("chi", "tau", "sigma_chi", "sigma_sq"):
            if getattr(args, flag) is None:
                raise UsageError("ricci-flat needs --chi --tau --sigma-chi --sigma-sq")
        data = TopologicalData(args.chi, args.tau, args.sigma_chi,
                               args.sigma_sq, args.p)
        dim = applications.ricci_flat_moduli_dim(data)
        payload = {"inputs": {"chi": args.chi, "tau": args.tau,
                              "sigma_chi": args.sigma_chi,
                              "sigma_sq": args.sigma_sq, "p": args.p},
                   "moduli_dim": dim,
                   "assumptions": ["no parallel vector fields",
                                   "no parallel self-dual Weyl tensors"]}
        human = [f"Ricci-flat moduli dimension: {dim}"]
        if dim < 0:
            human.append("  negative dimension: the hypotheses cannot all hold")
    _emit(args, payload, human)
    return EXIT_OK


# ---------------------------------------------------------------------------
# parser wiring
# ---------------------------------------------------------------------------

def _add_topology_flags(sp, required=True):
    sp.add_argument("--chi", type=int, required=required, help="chi(M)")
    sp.add_argument("--tau", type=int, required=required, help="tau(M)")
    sp.add_argument("--sigma-chi", dest="sigma_chi", type=int, required=required,
                    help="chi(Sigma)")
    sp.add_argument("--sigma-sq", dest="sigma_sq", type=int, required=required,
                    help="[Sigma]^2")


def build_parser() -> _Parser:
    parser = _Parser(prog="orbifold-index",
                     description="exact index computations for "
                                 "anti-self-dual orbifold-cone metrics")
    parser.add_argument("--json", action="store_true",
                        help="force JSON output (default when not a tty)")
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("index", help="deformation-complex index")
    _add_topology_flags(sp)
    sp.add_argument("--p", type=int, required=True, help="cone order p >= 1")
    sp.add_argument("--duality", choices=["asd", "sd"], required=True)
    sp.add_argument("--route", choices=["kawasaki", "closed", "both"],
                    default="both")
    sp.set_defaults(fn=_cmd_index)

    sp = sub.add_parser("correction", help="group-averaged correction term")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--dump-element", type=int, default=None, metavar="J",
                    help="also dump all equivariant characters at element J")
    sp.set_defaults(fn=_cmd_correction)

    sp = sub.add_parser("verify", help="run the exactness suites")
    sp.add_argument("--p-max", dest="p_max", type=int, required=True)
    sp.set_defaults(fn=_cmd_verify)

    sp = sub.add_parser("orbifold-char",
                        help="orbifold Euler characteristic and signature")
    _add_topology_flags(sp)
    sp.add_argument("--beta", type=str, required=True,
                    help="cone angle parameter as a rational, e.g. 1/2")
    sp.set_defaults(fn=_cmd_orbifold_char)

    sp = sub.add_parser("surfaces",
                        help="self-intersection feasibility for crosscap surfaces")
    sp.add_argument("--j", type=int, required=True, help="number of crosscaps")
    sp.set_defaults(fn=_cmd_surfaces)

    sp = sub.add_parser("example", help="reproduce a worked example")
    sp.add_argument("which", choices=["hitchin", "lebrun", "ricci-flat"])
    sp.add_argument("--k", type=int, default=None)
    sp.add_argument("--n", type=int, default=None)
    sp.add_argument("--p", type=int, default=2)
    _add_topology_flags(sp, required=False)
    sp.set_defaults(fn=_cmd_example)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.fn(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ConsistencyError as exc:
        print(f"internal consistency failure: {exc}", file=sys.stderr)
        return EXIT_CONSISTENCY


if __name__ == "__main__":
    sys.exit(main())
