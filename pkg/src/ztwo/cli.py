"""Command-line surface: classify, predict, scan, classgroup, symbol,
witness, verify.

Exit codes: 0 success, 1 invalid input, 2 no exact prediction for the
family, 3 verification found violations.

A persistent class-group cache can be supplied with --cache PATH or the
ZTWO_CACHE environment variable: an append-only JSON-lines file, one
record per discriminant; corrupt lines are skipped with a warning.
"""

import argparse
import json
import os
import sys
from datetime import datetime, timezone

from . import classifier, diophantine, qforms, symbols
from .arith import factor_squarefree
from .errors import UnsupportedFamily, ZtwoError
from .qforms import ClassGroupStructure, Discriminant

SCHEMA = "ztwo/1"
CACHE_ENV = "ZTWO_CACHE"

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_NO_PREDICTION = 2
EXIT_VIOLATIONS = 3

SCAN_COLUMNS = ("d", "tag", "p", "q", "r_oracle", "r_corollary",
                "shape_L_n1", "shape_K_n1", "lambda", "nu_L", "nu_K")


# ---------------------------------------------------------------------------
# cache
# ---------------------------------------------------------------------------

def _load_cache(path):
    """Seed the in-memory class-group memo from a JSON-lines cache file."""
    if not path or not os.path.exists(path):
        return
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.strip()
            if not line:
                continue
            try:
                rec = json.loads(line)
                D = int(rec["D"])
                h = int(rec["h"])
                divisors = tuple(int(x) for x in rec["divisors"])
                h2 = h & -h if h % 2 == 0 else 1
                structure = ClassGroupStructure(
                    D=Discriminant(D), h=h, divisors=divisors, h2=h2,
                    two_rank=sum(1 for x in divisors if x % 2 == 0))
            except (ValueError, KeyError, TypeError, ZtwoError):
                print(f"warning: skipping corrupt cache line {lineno}", file=sys.stderr)
                continue
            qforms.CLASS_GROUP_MEMO.setdefault(D, structure)


def _flush_cache(path, baseline):
    """Append records for discriminants computed during this command."""
    if not path:
        return
    new = [D for D in qforms.CLASS_GROUP_MEMO if D not in baseline]
    if not new:
        return
    stamp = datetime.now(timezone.utc).isoformat()
    with open(path, "a", encoding="utf-8") as fh:
        for D in sorted(new, reverse=True):
            s = qforms.CLASS_GROUP_MEMO[D]
            fh.write(json.dumps({"schema": SCHEMA, "D": D, "h": s.h,
                                 "divisors": list(s.divisors),
                                 "computed_at": stamp}) + "\n")


# ---------------------------------------------------------------------------
# serialization
# ---------------------------------------------------------------------------

def prediction_to_json(pred) -> dict:
    return {
        "schema": SCHEMA,
        "d": pred.d.value,
        "tower": pred.tower,
        "n": pred.n,
        "shape": list(pred.shape.divisors),
        "exact": pred.shape.exact,
        "note": pred.shape.note,
        "r": pred.r,
        "r_source": pred.r_source,
        "theorem": pred.theorem,
    }


def tag_to_json(tag) -> dict:
    return {
        "schema": SCHEMA,
        "d": tag.d.value,
        "tag": tag.tag,
        "primes": list(tag.primes),
        "symbols": [[name, val] for name, val in tag.symbols],
    }


def classgroup_to_json(s) -> dict:
    return {
        "schema": SCHEMA,
        "D": s.D.D,
        "h": s.h,
        "divisors": list(s.divisors),
        "h2": s.h2,
        "two_rank": s.two_rank,
    }


def prediction_from_json(rec) -> classifier.Prediction:
    return classifier.Prediction(
        d=factor_squarefree(rec["d"]),
        tower=rec["tower"],
        n=rec["n"],
        shape=classifier.GroupShape(tuple(rec["shape"]), rec["exact"], rec["note"]),
        r=rec["r"],
        r_source=rec["r_source"],
        theorem=rec["theorem"],
    )


def tag_from_json(rec) -> classifier.FamilyTag:
    return classifier.FamilyTag(
        tag=rec["tag"],
        d=factor_squarefree(rec["d"]),
        primes=tuple(rec["primes"]),
        symbols=tuple((name, val) for name, val in rec["symbols"]),
    )


def classgroup_from_json(rec) -> ClassGroupStructure:
    return ClassGroupStructure(
        D=Discriminant(rec["D"]),
        h=rec["h"],
        divisors=tuple(rec["divisors"]),
        h2=rec["h2"],
        two_rank=rec["two_rank"],
    )


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------

def _parse_d(text):
    try:
        return factor_squarefree(int(text))
    except ValueError:
        raise ZtwoError(f"{text!r} is not an integer")


def cmd_classify(args):
    d = _parse_d(args.d)
    tag = classifier.classify(d)
    if args.json:
        print(json.dumps(tag_to_json(tag)))
    else:
        print(tag.describe())
    return EXIT_OK


def cmd_predict(args):
    d = _parse_d(args.d)
    tag = classifier.classify(d)
    if tag.tag not in classifier.EXACT_FAMILIES:
        detail = ("2-class groups are cyclic non-trivial but no order formula exists"
                  if tag.tag == "C7" else "d matches no family with a prediction")
        print(f"no exact prediction for {d} [{tag.tag}]: {detail}", file=sys.stderr)
        return EXIT_NO_PREDICTION
    towers = ("L", "K") if args.tower == "both" else (args.tower,)
    out = []
    try:
        for tower in towers:
            out.append(classifier.predict(d, args.n, tower))
    except UnsupportedFamily as exc:
        print(f"no exact prediction: {exc}", file=sys.stderr)
        return EXIT_NO_PREDICTION
    if args.json:
        for pred in out:
            print(json.dumps(prediction_to_json(pred)))
    else:
        for pred in out:
            print(f"d={pred.d} tower={pred.tower} n={pred.n} "
                  f"shape={pred.shape} r={pred.r} ({pred.r_source}) [{pred.theorem}]")
    return EXIT_OK


def _shape_str(divisors) -> str:
    return "x".join(str(x) for x in divisors)


def scan_rows(dmin, dmax, family=None, bound=10 ** 6):
    """One row dict per odd squarefree d in [dmin, dmax], ascending."""
    start = dmin if dmin % 2 else dmin + 1
    for d in range(max(3, start), dmax + 1, 2):
        try:
            dd = factor_squarefree(d)
        except ZtwoError:
            continue
        tag = classifier.classify(dd)
        if family and tag.tag != family:
            continue
        row = dict.fromkeys(SCAN_COLUMNS, "")
        row["d"] = d
        row["tag"] = tag.tag
        if tag.tag in ("A1", "C7"):
            row["p"] = tag.primes[0]
        elif tag.tag in ("A2", "B"):
            row["p"], row["q"] = tag.primes
        if tag.tag == "C7":
            row["shape_L_n1"] = "cyclic-unknown"
        if tag.tag not in classifier.EXACT_FAMILIES:
            yield row
            continue
        try:
            r = classifier.exponent_r_oracle(tag)
        except ZtwoError:
            row["r_oracle"] = "skipped"
            yield row
            continue
        row["r_oracle"] = r
        try:
            row["r_corollary"] = str(classifier.exponent_r_corollary(tag, bound=bound))
        except ZtwoError:
            row["r_corollary"] = "skipped"
        row["shape_L_n1"] = _shape_str(classifier.predict(dd, 1, "L").shape.divisors)
        row["shape_K_n1"] = _shape_str(classifier.predict(dd, 1, "K").shape.divisors)
        inv_l = classifier.iwasawa_invariants(dd, "L")
        inv_k = classifier.iwasawa_invariants(dd, "K")
        row["lambda"] = inv_l.lam
        row["nu_L"] = inv_l.nu
        row["nu_K"] = inv_k.nu
        yield row


def cmd_scan(args):
    if args.min > args.max or args.max > 10 ** 6:
        raise ZtwoError("need min <= max <= 10**6")
    rows = scan_rows(args.min, args.max, family=args.family, bound=args.bound)
    if args.format == "csv":
        print(",".join(SCAN_COLUMNS))
        for row in rows:
            print(",".join(str(row[c]) for c in SCAN_COLUMNS))
    else:
        for row in rows:
            out = {"schema": SCHEMA}
            out.update(row)
            print(json.dumps(out))
    return EXIT_OK


def cmd_classgroup(args):
    s = qforms.class_group(int(args.D))
    if args.json:
        print(json.dumps(classgroup_to_json(s)))
    else:
        print(f"D={s.D.D} h={s.h} divisors={list(s.divisors)} h2={s.h2} two_rank={s.two_rank}")
    return EXIT_OK


def cmd_symbol(args):
    if args.jacobi:
        a, n = args.jacobi
        val = symbols.jacobi(a, n)
        name = f"({a}/{n})"
    elif args.quartic:
        a, p = args.quartic
        val = symbols.quartic_residue(a, p)
        name = f"({a}/{p})_4"
    else:
        p = args.quartic2
        val = symbols.quartic_2_reciprocal(p)
        name = f"({p}/2)_4"
    if args.json:
        print(json.dumps({"schema": SCHEMA, "symbol": name, "value": val}))
    else:
        print(f"{name} = {'+1' if val == 1 else '-1'}")
    return EXIT_OK


def cmd_witness(args):
    if args.pell:
        rep = diophantine.solve_pell_rep(args.pell, bound=args.bound)
        out = {"schema": SCHEMA, "kind": "pell", "p": rep.p, "u": rep.u, "v": rep.v}
    elif args.kaplan:
        p, q = args.kaplan
        wit = diophantine.solve_kaplan(p, q, bound=args.bound)
        out = {"schema": SCHEMA, "kind": "kaplan", "p": wit.p, "q": wit.q,
               "k": wit.k, "l": wit.l, "m": wit.m, "X": wit.X, "Y": wit.Y}
    else:
        p, q = args.legendre
        sol = diophantine.solve_legendre(p, q, bound=args.bound)
        out = {"schema": SCHEMA, "kind": "legendre", "p": sol.p, "q": sol.q,
               "Xp": sol.Xp, "Yp": sol.Yp, "Z": sol.Z,
               "criterion": diophantine.williams_criterion(sol)}
    print(json.dumps(out))
    return EXIT_OK


def _verify_corollary(d_max, bound):
    report = classifier.cross_check(d_max, bound=bound)
    print(f"corollary suite: {report.checked} classified d <= {d_max}; "
          f"{len(report.violations)} violations, {len(report.skipped)} skipped")
    for v in report.violations:
        print(f"  VIOLATION d={v.d} [{v.tag}] {v.detail}")
    for s in report.skipped:
        print(f"  skipped d={s.d} [{s.tag}] {s.detail}")
    return len(report.violations)


def _verify_genus(d_max):
    bad = 0
    total = 0
    for s in qforms.class_group_sweep(d_max):
        total += 1
        if s.two_rank != qforms.genus_two_rank(s.D):
            bad += 1
            print(f"  VIOLATION D={s.D.D}: two_rank {s.two_rank} != genus {qforms.genus_two_rank(s.D)}")
    print(f"genus suite: {total} fundamental discriminants |D| <= {d_max}; {bad} violations")
    return bad


def _verify_williams(d_max, bound):
    """Criterion invariance across every admissible solution below the bound."""
    bad = 0
    pairs = 0
    for d in range(3, d_max + 1, 2):
        try:
            tag = classifier.classify(d)
        except ZtwoError:
            continue
        if tag.tag != "B":
            continue
        p, q = tag.primes
        if symbols.jacobi(p, q) != 1 or symbols.quartic_residue(q % p, p) == 1:
            continue
        sols = diophantine.enumerate_legendre_solutions(p, q, bound)
        values = {diophantine.williams_criterion(s) for s in sols}
        if len(values) > 1:
            bad += 1
            print(f"  VIOLATION d={d}: criterion not solution-invariant over {len(sols)} solutions")
        pairs += 1
    print(f"williams suite: {pairs} pairs, all admissible solutions with Z <= {bound}; {bad} violations")
    return bad


def cmd_verify(args):
    suites = ("corollary", "genus", "williams") if args.suite == "all" else (args.suite,)
    violations = 0
    if "corollary" in suites:
        violations += _verify_corollary(args.max, args.bound)
    if "genus" in suites:
        violations += _verify_genus(min(args.max * 10, 10 ** 5))
    if "williams" in suites:
        violations += _verify_williams(args.max, min(args.bound, 20000))
    return EXIT_VIOLATIONS if violations else EXIT_OK


# ---------------------------------------------------------------------------
# entry point
# ---------------------------------------------------------------------------

def build_parser():
    ap = argparse.ArgumentParser(
        prog="ztwo",
        description="Classify odd squarefree d and predict 2-class groups "
                    "along the 2-power cyclotomic towers over Q(sqrt(d), i) "
                    "and Q(sqrt(-d)).")
    ap.add_argument("--cache", default=os.environ.get(CACHE_ENV),
                    help="JSON-lines class-group cache file (env: ZTWO_CACHE)")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="family tag of d with witnesses")
    p.add_argument("d")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("predict", help="2-class group of tower layer n")
    p.add_argument("d")
    p.add_argument("--n", type=int, default=1)
    p.add_argument("--tower", choices=("L", "K", "both"), default="both")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_predict)

    p = sub.add_parser("scan", help="one row per odd squarefree d in a range")
    p.add_argument("--min", type=int, default=3)
    p.add_argument("--max", type=int, required=True)
    p.add_argument("--family", choices=classifier.FAMILIES)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--bound", type=int, default=10 ** 6)
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("classgroup", help="exact structure of Cl(D)")
    p.add_argument("D")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_classgroup)

    p = sub.add_parser("symbol", help="quadratic / quartic residue symbols")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--jacobi", nargs=2, type=int, metavar=("A", "N"))
    g.add_argument("--quartic", nargs=2, type=int, metavar=("A", "P"))
    g.add_argument("--quartic2", type=int, metavar="P")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_symbol)

    p = sub.add_parser("witness", help="representation witness as JSON")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--pell", type=int, metavar="P")
    g.add_argument("--kaplan", nargs=2, type=int, metavar=("P", "Q"))
    g.add_argument("--legendre", nargs=2, type=int, metavar=("P", "Q"))
    p.add_argument("--bound", type=int, default=10 ** 6)
    p.set_defaults(func=cmd_witness)

    p = sub.add_parser("verify", help="run consistency suites; exit 3 on violations")
    p.add_argument("--max", type=int, default=10 ** 4)
    p.add_argument("--suite", choices=("corollary", "genus", "williams", "all"),
                   default="all")
    p.add_argument("--bound", type=int, default=10 ** 6)
    p.set_defaults(func=cmd_verify)

    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    _load_cache(args.cache)
    baseline = set(qforms.CLASS_GROUP_MEMO)
    try:
        code = args.func(args)
    except UnsupportedFamily as exc:
        print(f"no exact prediction: {exc}", file=sys.stderr)
        return EXIT_NO_PREDICTION
    except ZtwoError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    _flush_cache(args.cache, baseline)
    return code


if __name__ == "__main__":
    sys.exit(main())
