"""Command-line front end: verify, enumerate, compute, gen.

Exit codes: 0 all checks pass, 1 some check fails, 2 bad input or
configuration, 3 a supplied family violates its hypotheses (and nothing
failed outright).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from math import factorial

from . import __version__
from .algebra import DimensionError, ParseError, RingMatrix, det, permanent
from .families import ConstraintFamily, HypothesisViolation, MixedConstraintFamily
from .gen import (
    STRATEGIES,
    FamilySpec,
    constrained_family,
    commuting_rows_family,
    gen_commuting,
    gen_mixed_constrained,
    random_integer_matrix,
    random_tuple,
    specialize_CH,
)
from .mixed import mixed_char_poly, mixed_discriminant, tuple_from_json
from .objects import (
    count_A,
    count_A2,
    count_decorated2_maps,
    count_decorated_maps,
    count_decperms,
    count_G,
    count_G2,
    count_H,
    count_H2,
    enumerate_decorated2_maps,
    enumerate_decorated_maps,
    enumerate_dec2paths,
    enumerate_dec2perms,
    enumerate_decpaths,
    enumerate_decperms,
    enumerate_G,
    enumerate_G2,
    enumerate_H,
    enumerate_H2,
    enumerate_pathmutations,
    enumerate_pathmutations2,
)
from .report import VerificationReport, dumps_reports
from .suites import (
    verify_bapat_roy,
    verify_bijection,
    verify_commuting_pair,
    verify_involution,
    verify_laplace,
    verify_lemmas,
    verify_lemmas2,
    verify_mixed_theorem,
    verify_phillips,
    verify_worked_example,
)
from .xpoly import NonCommutingError, multivar_char_poly, substitute_commuting

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_HYPOTHESIS = 0, 1, 2, 3

THEOREMS = ("phillips", "ch", "commuting-pair", "bapat-roy", "mixed", "commuting-rows", "lemmas", "lemmas2",
            "laplace", "involution", "involution2", "bijection", "bijection2")
OBJECTS = ("decperm", "decpath", "pathmutation", "pathmap-H", "pathmap-G", "decmap",
           "dec2perm", "dec2path", "pathmutation2", "pathmap2-H", "pathmap2-G", "dec2map")
QUANTITIES = ("det", "permanent", "mixed-discriminant", "charpoly", "mixed-charpoly", "substitute")
GEN_FAMILIES = ("constraint", "mixed-constraint", "commuting", "ch", "commuting-rows")


class InputError(Exception):
    pass


def parse_range(text: str) -> list:
    """'2', '2,3' or '2-4' into a sorted list of positive integers."""
    out = set()
    try:
        for part in text.split(","):
            part = part.strip()
            if "-" in part:
                lo, hi = (int(x) for x in part.split("-", 1))
                out.update(range(lo, hi + 1))
            else:
                out.add(int(part))
    except ValueError:
        raise InputError(f"bad range {text!r}") from None
    if not out or min(out) < 1:
        raise InputError(f"range {text!r} must list positive integers")
    return sorted(out)


def _index(text, n_max: int | None = None):
    if text is None or text == "all":
        return None
    try:
        v = int(text)
    except ValueError:
        raise InputError(f"index must be a positive integer or 'all', got {text!r}") from None
    if v < 1 or (n_max is not None and v > n_max):
        raise InputError(f"index {v} out of range")
    return v - 1


def _load(path: str):
    try:
        with open(path) as fh:
            return json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise InputError(f"{path} is not valid JSON: {exc}") from None


def _matrix_list(obj) -> list:
    if "mats" not in obj:
        raise InputError("expected an object with a 'mats' list")
    mats = [RingMatrix.from_json(m) for m in obj["mats"]]
    if not mats or any(m.n != mats[0].n for m in mats):
        raise InputError("'mats' must be a non-empty list of matrices of one size")
    return mats


def _jobs(value) -> int:
    raw = value if value is not None else os.environ.get("CHVLAB_JOBS", "1")
    try:
        jobs = int(raw)
    except ValueError:
        raise InputError(f"worker count must be an integer, got {raw!r}") from None
    if jobs < 1:
        raise InputError("worker count must be at least 1")
    return jobs


# -- verify ------------------------------------------------------------------


def _spec_params(spec: FamilySpec) -> dict:
    return {"n": spec.n, "k": spec.k, "seed": spec.seed, "strategy": spec.strategy,
            "symbolic": spec.symbolic, "magnitude": spec.magnitude}


def run_task(task: tuple) -> dict:
    """Execute one verification task; module-level so worker processes can import it."""
    theorem, opts = task
    n, k, seed = opts.get("n"), opts.get("k"), opts.get("seed", 0)
    strategy, symbolic, mag = opts.get("strategy"), opts.get("symbolic", False), opts.get("magnitude", 3)
    b, e = opts.get("b"), opts.get("e")
    spec = FamilySpec(strategy, n, k, seed, symbolic, mag) if strategy else None
    params = _spec_params(spec) if spec else {}
    if theorem == "phillips":
        r = verify_phillips(constrained_family(spec), params)
    elif theorem == "ch":
        params = {"n": n, "seed": seed, "magnitude": mag}
        r = verify_phillips(specialize_CH(random_integer_matrix(n, seed, mag)), params, theorem="ch")
    elif theorem == "commuting-pair":
        A, B = gen_commuting(FamilySpec(strategy, n, 2, seed, symbolic, mag))
        r = verify_commuting_pair(A, B, {**params, "k": 2})
    elif theorem == "bapat-roy":
        r = verify_bapat_roy(random_tuple(n, n, seed, mag), {"magnitude": mag}, seed=seed)
    elif theorem == "mixed":
        r = verify_mixed_theorem(gen_mixed_constrained(spec), params)
    elif theorem == "commuting-rows":
        ms = gen_commuting(FamilySpec(strategy, n, n, seed, symbolic, mag))
        r = verify_mixed_theorem(commuting_rows_family(ms), {**params, "k": 2}, theorem="commuting-rows")
    elif theorem == "lemmas":
        r = verify_lemmas(constrained_family(spec), b, e, params)
    elif theorem == "lemmas2":
        r = verify_lemmas2(gen_mixed_constrained(spec), b, e, params)
    elif theorem == "laplace":
        r = verify_laplace(constrained_family(spec), b, e, params)
    elif theorem == "involution":
        r = verify_involution(constrained_family(spec), b, e, params=params)
    elif theorem == "involution2":
        r = verify_involution(gen_mixed_constrained(spec), b, e, hatted=True, params=params)
    elif theorem == "bijection":
        r = verify_bijection(n, k, False, b, e)
    elif theorem == "bijection2":
        r = verify_bijection(n, k, True, b, e)
    elif theorem == "worked-example":
        r = verify_worked_example()
    else:
        raise InputError(f"unknown theorem {theorem!r}")
    return r.to_json()


_SEEDLESS = {"bijection", "bijection2", "worked-example"}
_NO_K = {"ch", "commuting-pair", "bapat-roy", "commuting-rows"}


def build_tasks(args) -> list:
    theorems = THEOREMS if args.theorem == "all" else (args.theorem,)
    ns, ks = parse_range(args.n), parse_range(args.k)
    seeds = list(range(args.seed, args.seed + args.seeds))
    tasks = []
    for th in theorems:
        for n in ns:
            for k in ([None] if th in _NO_K else ks):
                for seed in ([0] if th in _SEEDLESS else seeds):
                    opts = {"n": n, "k": k, "seed": seed, "symbolic": args.symbolic,
                            "magnitude": args.magnitude, "strategy": args.strategy,
                            "b": _index(args.b, n), "e": _index(args.e, n)}
                    if th in ("ch", "bapat-roy") or th in _SEEDLESS:
                        opts["strategy"] = None
                    tasks.append((th, opts))
        if th == "lemmas" and args.symbolic and 2 in ns and 2 in ks:
            tasks.append(("worked-example", {}))
    return tasks


def _input_reports(args) -> list:
    """Reports for a user-supplied family file."""
    obj = _load(args.input)
    th = args.theorem
    params = {"input": os.path.basename(args.input)}
    b, e = _index(args.b), _index(args.e)
    kind = obj.get("kind") if isinstance(obj, dict) else None
    if th in ("phillips", "lemmas", "laplace", "involution", "ch"):
        if th == "ch" and kind is None and "entries" in obj:
            fam = ConstraintFamily(*_ch_lists(RingMatrix.from_json(obj)))
        elif kind == "constraint":
            fam = ConstraintFamily.from_json(obj)
        else:
            raise InputError(f"theorem {th} needs a constraint family file")
        if th in ("phillips", "ch"):
            return [verify_phillips(fam, params, theorem=th)]
        if th == "lemmas":
            return [verify_lemmas(fam, b, e, params)]
        if th == "laplace":
            return [verify_laplace(fam, b, e, params)]
        return [verify_involution(fam, b, e, params=params)]
    if th in ("mixed", "lemmas2", "involution2"):
        if kind != "mixed-constraint":
            raise InputError(f"theorem {th} needs a mixed-constraint family file")
        fam = MixedConstraintFamily.from_json(obj)
        if th == "mixed":
            return [verify_mixed_theorem(fam, params)]
        if th == "lemmas2":
            return [verify_lemmas2(fam, b, e, params)]
        return [verify_involution(fam, b, e, hatted=True, params=params)]
    if th == "commuting-pair":
        mats = _matrix_list(obj)
        if len(mats) != 2:
            raise InputError("commuting-pair needs exactly two matrices")
        return [verify_commuting_pair(mats[0], mats[1], params)]
    if th == "bapat-roy":
        return [verify_bapat_roy(tuple_from_json(obj), params, seed=args.seed)]
    if th == "commuting-rows":
        mats = _matrix_list(obj)
        try:
            fam = commuting_rows_family(mats)
        except HypothesisViolation as exc:
            return [VerificationReport("commuting-rows", params, "hypothesis_violation", exc.witness)]
        return [verify_mixed_theorem(fam, params, theorem="commuting-rows")]
    raise InputError(f"theorem {th} does not take an input file")


def _ch_lists(M: RingMatrix):
    ident = RingMatrix.identity(M.n)
    return [-ident, M], [M, ident]


def exit_code(reports) -> int:
    statuses = {r["status"] if isinstance(r, dict) else r.status for r in reports}
    if "fail" in statuses:
        return EXIT_FAIL
    if "hypothesis_violation" in statuses:
        return EXIT_HYPOTHESIS
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.input:
        reports = [r.to_json() for r in _input_reports(args)]
    else:
        if args.strategy not in STRATEGIES:
            raise InputError(f"unknown strategy {args.strategy!r}")
        if args.seeds < 1:
            raise InputError("--seeds must be at least 1")
        tasks = build_tasks(args)
        jobs = _jobs(args.jobs)
        if jobs == 1 or len(tasks) == 1:
            reports = [run_task(t) for t in tasks]
        else:
            with ProcessPoolExecutor(max_workers=jobs) as pool:
                reports = list(pool.map(run_task, tasks))
    text = dumps_reports([VerificationReport.from_json(r) for r in reports])
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
        for r in reports:
            p = r["params"]
            where = " ".join(f"{key}={p[key]}" for key in ("n", "k", "seed", "strategy", "input") if key in p)
            print(f"{r['theorem']:<14} {r['status']:<21} {where}")
    else:
        sys.stdout.write(text)
    return exit_code(reports)


# -- enumerate ---------------------------------------------------------------


def _enumeration(kind: str, n: int, k: int, b, e):
    fixed_b = 0 if b is None else b
    fixed_e = 0 if e is None else e
    ends = n ** (n + 1 - (b is not None) - (e is not None))
    table = {
        "decperm": (lambda: enumerate_decperms(n, k), count_decperms(n, k)),
        "decpath": (lambda: enumerate_decpaths(n, k, b, e), k**n * ends),
        "pathmutation": (lambda: enumerate_pathmutations(n, k, fixed_b, fixed_e), count_A(n, k)),
        "pathmap-H": (lambda: enumerate_H(n, k, fixed_b, fixed_e), count_H(n, k)),
        "pathmap-G": (lambda: enumerate_G(n, k, fixed_b, fixed_e), count_G(n, k)),
        "decmap": (lambda: enumerate_decorated_maps(n, k), count_decorated_maps(n, k)),
        "dec2perm": (lambda: enumerate_dec2perms(n, k), count_decperms(n, k) * factorial(n)),
        "dec2path": (lambda: enumerate_dec2paths(n, k, b, e), k**n * ends * factorial(n)),
        "pathmutation2": (lambda: enumerate_pathmutations2(n, k, fixed_b, fixed_e), count_A2(n, k)),
        "pathmap2-H": (lambda: enumerate_H2(n, k, fixed_b, fixed_e), count_H2(n, k)),
        "pathmap2-G": (lambda: enumerate_G2(n, k, fixed_b, fixed_e), count_G2(n, k)),
        "dec2map": (lambda: enumerate_decorated2_maps(n, k), count_decorated2_maps(n, k)),
    }
    if kind not in table:
        raise InputError(f"unknown object kind {kind!r}; choose from {', '.join(OBJECTS)}")
    return table[kind]


def cmd_enumerate(args) -> int:
    (n,), (k,) = _single(args.n, "--n"), _single(args.k, "--k")
    b, e = _index(args.b, n), _index(args.e, n)
    make, expected = _enumeration(args.object, n, k, b, e)
    limit = args.limit
    if limit is not None and limit < 0:
        raise InputError("--limit must be non-negative")
    count = 0
    out = sys.stdout
    for obj in make():
        if limit is None or count < limit:
            out.write(json.dumps(obj.to_json(), sort_keys=True) + "\n")
        count += 1
    out.write(json.dumps({"count": count, "expected": expected, "object": args.object,
                          "n": n, "k": k}, sort_keys=True) + "\n")
    return EXIT_OK if count == expected else EXIT_FAIL


def _single(text: str, flag: str) -> list:
    vals = parse_range(text)
    if len(vals) != 1:
        raise InputError(f"{flag} takes a single value here")
    return vals


# -- compute -----------------------------------------------------------------


def cmd_compute(args) -> int:
    if not args.input:
        raise InputError("compute needs --input")
    obj = _load(args.input)
    q = args.quantity
    if q in ("det", "permanent"):
        m = RingMatrix.from_json(obj)
        print(det(m) if q == "det" else permanent(m))
    elif q == "mixed-discriminant":
        print(mixed_discriminant(tuple_from_json(obj)))
    elif q == "mixed-charpoly":
        print(mixed_char_poly(tuple_from_json(obj)))
    elif q == "charpoly":
        mats = ConstraintFamily.from_json(obj).A if obj.get("kind") == "constraint" else _matrix_list(obj)
        print(multivar_char_poly(mats).to_poly())
    elif q == "substitute":
        if obj.get("kind") != "constraint":
            raise InputError("substitute needs a constraint-style file with A and B lists")
        fam = ConstraintFamily.from_json(obj)
        try:
            value = substitute_commuting(multivar_char_poly(fam.A), fam.B)
        except NonCommutingError as exc:
            raise InputError(str(exc)) from None
        print(json.dumps(value.to_json()["entries"]))
    else:
        raise InputError(f"unknown quantity {q!r}")
    return EXIT_OK


# -- gen ---------------------------------------------------------------------


def cmd_gen(args) -> int:
    (n,), (k,) = _single(args.n, "--n"), _single(args.k, "--k")
    spec = FamilySpec(args.strategy, n, k, args.seed, args.symbolic, args.magnitude)
    fam = args.family
    if fam == "constraint":
        doc = constrained_family(spec).to_json()
    elif fam == "mixed-constraint":
        doc = gen_mixed_constrained(spec).to_json()
    elif fam == "commuting":
        mats = gen_commuting(spec)
        doc = {"kind": "commuting", "n": n, "k": k, "mats": [m.to_json() for m in mats]}
    elif fam == "ch":
        doc = specialize_CH(random_integer_matrix(n, args.seed, args.magnitude)).to_json()
    else:
        ms = gen_commuting(FamilySpec(args.strategy, n, n, args.seed, args.symbolic, args.magnitude))
        doc = commuting_rows_family(ms).to_json()
    doc["spec"] = spec.to_json()
    text = json.dumps(doc, sort_keys=True, indent=2) + "\n"
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


# -- entry point -------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="chvlab", description="Exact multivariate Cayley-Hamilton checks.")
    parser.add_argument("--version", action="version", version=f"chvlab {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, ranges: bool):
        p.add_argument("--n", default="2", help="size; a range like 2,3 or 2-4" if ranges else "size")
        p.add_argument("--k", default="2", help="number of matrices per family")
        p.add_argument("--strategy", default="conjugated-diagonal", help=f"one of: {', '.join(STRATEGIES)}")
        p.add_argument("--seed", type=int, default=0, help="first seed")
        p.add_argument("--symbolic", action="store_true", help="use indeterminates instead of integers")
        p.add_argument("--magnitude", type=int, default=3, help="bound for random integer entries")
        p.add_argument("--out", help="write output here instead of stdout")

    v = sub.add_parser("verify", help="run verification suites and emit JSON reports")
    common(v, True)
    v.add_argument("--theorem", required=True, choices=THEOREMS + ("all",))
    v.add_argument("--seeds", type=int, default=1, help="number of consecutive seeds")
    v.add_argument("--b", default="all", help="1-based start vertex or 'all'")
    v.add_argument("--e", default="all", help="1-based end vertex or 'all'")
    v.add_argument("--input", help="family file to verify instead of generated ones")
    v.add_argument("--jobs", help="worker processes (default: $CHVLAB_JOBS or 1)")
    v.set_defaults(func=cmd_verify)

    en = sub.add_parser("enumerate", help="stream combinatorial objects as JSON lines")
    en.add_argument("--object", required=True, help=f"one of: {', '.join(OBJECTS)}")
    en.add_argument("--n", default="2")
    en.add_argument("--k", default="2")
    en.add_argument("--b", default=None, help="1-based start vertex (default 1 where one is needed)")
    en.add_argument("--e", default=None, help="1-based end vertex (default 1 where one is needed)")
    en.add_argument("--limit", type=int, default=None, help="print at most this many objects")
    en.set_defaults(func=cmd_enumerate)

    c = sub.add_parser("compute", help="evaluate a matrix function on an input file")
    c.add_argument("quantity", choices=QUANTITIES)
    c.add_argument("--input", required=False)
    c.set_defaults(func=cmd_compute)

    g = sub.add_parser("gen", help="write a generated family file")
    common(g, False)
    g.add_argument("--family", default="constraint", choices=GEN_FAMILIES)
    g.set_defaults(func=cmd_gen)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_INPUT
    try:
        return args.func(args)
    except (InputError, ParseError, DimensionError, HypothesisViolation, KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, HypothesisViolation):
            print(f"chvlab: {exc}", file=sys.stderr)
            return EXIT_HYPOTHESIS
        msg = f"missing field {exc}" if isinstance(exc, KeyError) else str(exc)
        print(f"chvlab: error: {msg}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
