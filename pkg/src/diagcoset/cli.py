"""Command-line front end: ``diagcoset <command> ...``.

Exit status is 0 on success, 1 when a verification fails or a resource limit
is hit, 2 on usage errors.  Errors go to stderr as one JSON object.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import __version__
from .affine import DEFAULT_TOL, affine_qdim, check_level_weight, sugawara_weight, \
    sum_rule_report, vacuum_s_entry
from .cache import CharacterCache
from .characters import DEFAULT_MAX_WEIGHTS, branch
from .coset import DEFAULT_TOL as COSET_TOL
from .coset import coset_central_charge, satisfies_selection_rule, verify_classification
from .errors import ConsistencyError, DomainError, ResourceLimitError
from .export import Table, classification_table, export, weights_table
from .lie import build_root_system
from .minimal import minimal_model
from .selfcheck import CHECKS, run_selfcheck


class UsageError(Exception):
    pass


def parse_weight(text):
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"weight must be comma-separated integers: {text!r}")


def _weight_for(rs, lam):
    # "0" is accepted as shorthand for the zero weight of any rank
    if lam == (0,) and rs.rank > 1:
        return (0,) * rs.rank
    return lam


def _positive(text):
    n = int(text)
    if n < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {n}")
    return n


def _nonneg(text):
    n = int(text)
    if n < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {n}")
    return n


def build_parser():
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=("text", "json", "tsv"), default="text")
    alg = argparse.ArgumentParser(add_help=False)
    alg.add_argument("--algebra", required=True, help="e.g. A1, B2, E8")

    p = argparse.ArgumentParser(prog="diagcoset",
                                description="Diagonal coset modular data and branching functions.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    p.add_argument("--cache-dir", help="character cache directory "
                                       "(default: $DIAGCOSET_CACHE_DIR or ~/.cache/diagcoset)")
    p.add_argument("--no-cache", action="store_true", help="do not read or write the cache")
    sub = p.add_subparsers(dest="command", required=True)

    sub.add_parser("roots", parents=[fmt, alg], help="root-system summary")

    s = sub.add_parser("weights", parents=[fmt, alg], help="level-k dominant weights")
    s.add_argument("--level", type=_positive, required=True)

    s = sub.add_parser("srow", parents=[fmt, alg], help="vacuum S-row and sum rules")
    s.add_argument("--level", type=_positive, required=True)
    s.add_argument("--tol", type=float, default=DEFAULT_TOL)

    s = sub.add_parser("qdim", parents=[fmt, alg], help="quantum dimension of one module")
    s.add_argument("--level", type=_positive, required=True)
    s.add_argument("--weight", type=parse_weight, required=True)

    coset = sub.add_parser("coset", help="coset module classification")
    csub = coset.add_subparsers(dest="coset_command", required=True)
    for name, text in (("classify", "triple and orbit table"),
                       ("verify", "check the quantum dimension sum")):
        s = csub.add_parser(name, parents=[fmt, alg], help=text)
        s.add_argument("--k", type=_positive, required=True)
        s.add_argument("--l", type=_positive, required=True)
        s.add_argument("--tol", type=float, default=COSET_TOL)
        if name == "classify":
            s.add_argument("--dedup", action="store_true",
                           help="one row per simple-current orbit")
        else:
            s.add_argument("--all", action="store_true",
                           help="test every selection triple instead of orbit representatives")

    s = sub.add_parser("branch", parents=[fmt, alg], help="branching functions")
    s.add_argument("--k", type=_positive, required=True)
    s.add_argument("--l", type=_positive, required=True)
    s.add_argument("--top", type=parse_weight, required=True)
    s.add_argument("--mid", type=parse_weight, required=True)
    s.add_argument("--depth", type=_nonneg, required=True)
    s.add_argument("--normalize", choices=("none", "c24"), default="none",
                   help="c24 subtracts c/24 from every offset")
    s.add_argument("--max-weights", type=_positive, default=DEFAULT_MAX_WEIGHTS)

    s = sub.add_parser("minimal", parents=[fmt], help="Virasoro minimal model table")
    s.add_argument("--p", type=int, required=True)
    s.add_argument("--q", type=int, required=True)

    s = sub.add_parser("selfcheck", parents=[fmt], help="run the invariant grid")
    s.add_argument("--only", action="append", choices=[name for name, _ in CHECKS],
                   help="run only the named check (repeatable)")
    return p


# -- commands -----------------------------------------------------------------

def _cache(args):
    return None if args.no_cache else CharacterCache(args.cache_dir)


def cmd_roots(args, rs):
    return rs, 0


def cmd_weights(args, rs):
    return weights_table(rs, args.level), 0


def cmd_srow(args, rs):
    rep = sum_rule_report(rs, args.level, args.tol)
    return rep, 0 if rep.passed else 1


def cmd_qdim(args, rs):
    lam = check_level_weight(rs, args.level, _weight_for(rs, args.weight))
    row = {"weight": lam, "h": sugawara_weight(rs, args.level, lam),
           "s0": vacuum_s_entry(rs, args.level, lam), "qdim": affine_qdim(rs, args.level, lam)}
    return Table("qdim", rs.name, {"level": args.level}, [row]), 0


def cmd_coset(args, rs):
    if args.coset_command == "classify":
        rep = verify_classification(rs, args.k, args.l, tol=args.tol)
        return classification_table(rep, dedup=args.dedup), 0
    cands = [r.triple for r in verify_classification(rs, args.k, args.l).triples] \
        if args.all else None
    rep = verify_classification(rs, args.k, args.l, candidates=cands, tol=args.tol)
    return rep, 0 if rep.passed else 1


def cmd_branch(args, rs):
    top = _weight_for(rs, args.top)
    mid = _weight_for(rs, args.mid)
    cache = _cache(args)
    series = branch(rs, args.k, args.l, top, mid, args.depth, cache=cache,
                    max_weights=args.max_weights)
    c = coset_central_charge(rs, args.k, args.l)
    shift = -c / 24 if args.normalize == "c24" else Fraction(0)
    rows = []
    for lam, b in series.items():
        b = b.shifted(shift)
        rows.append({"bot": lam, "allowed": satisfies_selection_rule(rs, top, mid, lam),
                     "offset": b.offset, "lowest": b.lowest_exponent, "coeffs": list(b.coeffs)})
    params = {"k": args.k, "l": args.l, "top": top, "mid": mid, "depth": args.depth,
              "central_charge": c, "normalize": args.normalize}
    return Table("branch", rs.name, params, rows), 0


def cmd_minimal(args):
    return minimal_model(args.p, args.q), 0


def cmd_selfcheck(args):
    results = run_selfcheck(args.only)
    rows = [{"check": r.name, "passed": r.passed, "detail": r.detail} for r in results]
    ok = all(r.passed for r in results)
    return Table("selfcheck", None, {"passed": ok}, rows), 0 if ok else 1


_WITH_ALGEBRA = {"roots": cmd_roots, "weights": cmd_weights, "srow": cmd_srow,
                 "qdim": cmd_qdim, "coset": cmd_coset, "branch": cmd_branch}


def _error(kind, message, **extra):
    doc = {"error": kind, "reason": message}
    doc.update(extra)
    sys.stderr.write(json.dumps(doc, sort_keys=True) + "\n")


def run(argv):
    """Run one command; return the exit status."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:   # argparse reports usage errors this way
        return 0 if exc.code in (0, None) else 2
    try:
        if args.command in _WITH_ALGEBRA:
            rs = build_root_system(args.algebra)
            report, status = _WITH_ALGEBRA[args.command](args, rs)
        elif args.command == "minimal":
            report, status = cmd_minimal(args)
        else:
            report, status = cmd_selfcheck(args)
    except DomainError as exc:
        _error("usage", str(exc))
        return 2
    except ResourceLimitError as exc:
        _error("resource_limit", str(exc), grade=exc.grade)
        return 1
    except ConsistencyError as exc:
        _error("consistency", str(exc))
        return 1
    sys.stdout.write(export(report, args.format).decode())
    return status


def main(argv=None):
    sys.exit(run(sys.argv[1:] if argv is None else argv))


if __name__ == "__main__":
    main()
