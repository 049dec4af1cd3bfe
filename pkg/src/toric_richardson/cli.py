"""Command-line interface.  Exit status: 0 success, 1 mathematical counterexample, 2 usage error."""

from __future__ import annotations

import argparse
import sys
from typing import Optional, Sequence

from . import serialize as ser
from .classify import classify_toric, is_toric
from .errors import DisagreementBug, InconsistentFace, MultipleCollections, NoSolution, NotToric
from .families import (
    even_family,
    even_family_a_vector_check,
    even_family_minor_check,
    even_family_structures,
    even_family_x_chart_check,
    hypercube_constituent,
    hypercube_perms,
)
from .mrgraph import ReducedWord, default_reduced_word, minors_json
from .perm import Permutation, all_intervals, bruhat_leq, interval
from .plabic import disk_embedding_ok, family_star_graph, hypercube_graph, positroid_from_graph
from .polytope.hull import FaceLatticeTooLarge, face_lattice, hull
from .polytope.moment import affine_equivalence, moment_data, moment_polytope
from .positroid import constituent

EXIT_OK, EXIT_COUNTEREXAMPLE, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _perm(text: str) -> Permutation:
    try:
        return Permutation.parse(text)
    except (ValueError, TypeError) as exc:
        raise UsageError(f"bad permutation {text!r}: {exc}") from exc


def _pair(args) -> tuple[Permutation, Permutation]:
    if args.v is None or args.w is None:
        raise UsageError("--v and --w are required")
    v, w = _perm(args.v), _perm(args.w)
    if v.n != w.n:
        raise UsageError("v and w have different sizes")
    if not bruhat_leq(v, w):
        raise UsageError(f"{v} is not below {w} in Bruhat order")
    return v, w


def _word(args, w: Permutation) -> ReducedWord:
    if not getattr(args, "word", None):
        return default_reduced_word(w)
    try:
        word = ReducedWord.parse(args.word)
    except ValueError as exc:
        raise UsageError(f"bad word {args.word!r}: {exc}") from exc
    if word.product(w.n) != w or len(word) != w.length():
        raise UsageError(f"{list(word.letters)} is not a reduced word for {w}")
    return word


def _emit(text: str) -> None:
    sys.stdout.write(text)


# subcommands


def cmd_classify(args) -> int:
    if args.sn is not None:
        if not args.enumerate:
            raise UsageError("--sn needs --enumerate")
        for v, w in all_intervals(args.sn):
            _emit(ser.dumps(classify_toric(v, w).to_json()))
        return EXIT_OK
    v, w = _pair(args)
    if args.all_tests:
        out = classify_toric(v, w).to_json()
    else:
        out = {"v": v.to_list(), "w": w.to_list(), "d": w.length() - v.length(), "is_toric": is_toric(v, w)}
    if args.output == "text":
        _emit(f"[{v},{w}] d={out['d']} {'toric' if out['is_toric'] else 'not toric'}\n")
    elif args.output == "dot":
        _emit(ser.hasse_dot(interval(v, w)))
    else:
        _emit(ser.dumps(out))
    return EXIT_OK


def cmd_polytope(args) -> int:
    v, w = _pair(args)
    word = _word(args, w)
    data = moment_data(v, w, word)
    lp = moment_polytope(v, w, word, data)
    P = lp.polytope
    labels = {idx: str(u) for u, idx in lp.labels.items()}
    if args.output == "off":
        _emit(ser.polytope_off(P))
    elif args.output == "dot":
        lines = ["graph skeleton {"]
        for a in range(len(P.vertices)):
            lines.append(f'  v{a} [label="{labels[a]}"];')
        for a, b in sorted(P.edges()):
            lines.append(f"  v{a} -- v{b};")
        _emit("\n".join(lines + ["}"]) + "\n")
    elif args.output == "text":
        out = [f"moment polytope of [{v},{w}], word {','.join(map(str, word.letters))}", f"dimension {P.affine_dim}"]
        try:
            out.append("f-vector " + " ".join(map(str, face_lattice(P).f_vector)))
        except FaceLatticeTooLarge:
            out.append("f-vector skipped (face lattice gate)")
        for a, p in enumerate(P.vertices):
            out.append(f"{labels[a]} {' '.join(map(str, p))}")
        _emit("\n".join(out) + "\n")
    else:
        doc = ser.polytope_to_json(P, faces=args.faces)
        doc["labels"] = [labels[a] for a in range(len(P.vertices))]
        doc["word"] = list(word.letters)
        _emit(ser.dumps(doc))
    return EXIT_OK


def cmd_summands(args) -> int:
    v, w = _pair(args)
    word = _word(args, w)
    if args.output == "dot":
        from .mrgraph import graph_for

        _emit(ser.wiring_dot(graph_for(v, w, word)))
        return EXIT_OK
    data = moment_data(v, w, word)
    ks = [args.k] if args.k else list(range(1, v.n))
    for k in ks:
        if not 1 <= k < v.n:
            raise UsageError(f"k must lie in 1..{v.n - 1}")
    if args.output == "text":
        out = [f"bridges {' '.join(f't{j}' for j in data.graph.bridges)}"]
        for k in ks:
            items = ", ".join(
                f"{''.join(map(str, x))}[{''.join(map(str, B))}]" for B, x in sorted(data.m[k].items())
            )
            out.append(f"P{k} = conv({items})")
        _emit("\n".join(out) + "\n")
        return EXIT_OK
    doc = {"v": v.to_list(), "w": w.to_list(), "word": list(word.letters), "bridges": list(data.graph.bridges), "summands": []}
    for k in ks:
        fwd, back = affine_equivalence(data, k) if data.d else (None, None)
        doc["summands"].append(
            {
                "k": k,
                "points": [{"I": list(B), "m": list(x)} for B, x in sorted(data.m[k].items())],
                "polytope": ser.polytope_to_json(hull(data.m[k].values())) if data.d else None,
                "minors": [minors_json(data.graph, B) for B in sorted(data.m[k])],
                "A": [list(r) for r in fwd.A] if fwd else None,
                "b": list(fwd.b) if fwd else None,
            }
        )
    _emit(ser.dumps(doc))
    return EXIT_OK


def cmd_plabic(args) -> int:
    if args.family == "star":
        G = family_star_graph(args.n, args.k)
        I = interval(even_family(args.n).v, even_family(args.n).w)
    else:
        G = hypercube_graph(args.n, args.k)
        I = None
    if args.output == "dot":
        _emit(ser.plabic_dot(G))
        return EXIT_OK
    doc = ser.plabic_to_json(G, orientations=args.orientations)
    bases = positroid_from_graph(G)
    doc["positroid"] = [list(b) for b in sorted(bases)]
    doc["planar_forest"] = disk_embedding_ok(G)
    if I is not None:
        doc["matches_constituent"] = bases == constituent(I, args.k).bases
    elif args.n <= 4:
        doc["matches_constituent"] = bases == hypercube_constituent(args.n, args.k).bases
    _emit(ser.dumps(doc))
    return EXIT_OK if doc.get("matches_constituent", True) and doc["planar_forest"] else EXIT_COUNTEREXAMPLE


def cmd_family(args) -> int:
    if args.which == "even":
        if args.n < 4 or args.n % 2:
            raise UsageError("--n must be even and at least 4")
        fam = even_family(args.n)
        doc: dict = {"family": "even", "n": args.n, "v": fam.v.to_list(), "w": fam.w.to_list(), "word": list(fam.word.letters), "d": fam.d}
        ok = True
        if args.verify:
            reports = {
                "minors": even_family_minor_check(args.n),
                "a_vectors": even_family_a_vector_check(args.n),
                "x_chart": even_family_x_chart_check(args.n),
                "structures": even_family_structures(args.n, args.seed),
            }
            doc["checks"] = {k: {"ok": r.ok, "details": list(r.details)} for k, r in reports.items()}
            ok = all(r.ok for r in reports.values())
        _emit(ser.dumps(doc))
        return EXIT_OK if ok else EXIT_COUNTEREXAMPLE
    if args.n < 1:
        raise UsageError("--n must be positive")
    fam = hypercube_perms(args.n)
    doc = {"family": "hypercube", "n": args.n, "v": fam.v.to_list(), "w": fam.w.to_list(), "d": fam.rank}
    ok = True
    if args.k is not None:
        if not 1 <= args.k < 1 << args.n:
            raise UsageError(f"--k must lie in 1..{(1 << args.n) - 1}")
        C = hypercube_constituent(args.n, args.k)
        doc["constituent"] = ser.constituent_to_json(C)
        if args.verify:
            G = hypercube_graph(args.n, args.k)
            checks = {"graph": positroid_from_graph(G) == C.bases, "planar_forest": disk_embedding_ok(G)}
            if args.n <= 3:
                I = interval(fam.v, fam.w)
                checks["enumeration"] = constituent(I, args.k).bases == C.bases
            doc["checks"] = checks
            ok = all(checks.values())
    _emit(ser.dumps(doc))
    return EXIT_OK if ok else EXIT_COUNTEREXAMPLE


def cmd_verify_all(args) -> int:
    from .verify import run_all

    results = run_all(args.sn, args.seed, big=not args.quick)
    if args.json:
        _emit(ser.dumps({"seed": args.seed, "sn": args.sn, "results": [r.to_json() for r in results]}))
    else:
        for r in results:
            _emit(r.line(timing=args.timing) + "\n")
        _emit(f"{sum(r.ok for r in results)}/{len(results)} criteria pass\n")
    return EXIT_OK if all(r.ok for r in results) else EXIT_COUNTEREXAMPLE


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="toric-richardson", description="Toric Richardson varieties: intervals, minors, moment polytopes.")
    sub = p.add_subparsers(dest="cmd", required=True)

    def pair_args(q):
        q.add_argument("--v", help="lower permutation, one-line, e.g. 1,3,2,4")
        q.add_argument("--w", help="upper permutation, one-line")

    q = sub.add_parser("classify", help="decide toricness of [v,w]")
    pair_args(q)
    q.add_argument("--all-tests", action="store_true", help="run all four tests and report each")
    q.add_argument("--json", action="store_const", const="json", dest="output", help="JSON output (default)")
    q.add_argument("--output", choices=["json", "text", "dot"], default="json")
    q.add_argument("--sn", type=int, help="with --enumerate: classify every interval of S_n")
    q.add_argument("--enumerate", action="store_true")
    q.set_defaults(func=cmd_classify)

    q = sub.add_parser("polytope", help="moment polytope of a toric interval")
    pair_args(q)
    q.add_argument("--word", help="reduced word for w, comma-separated letters")
    q.add_argument("--output", choices=["json", "off", "dot", "text"], default="json")
    q.add_argument("--faces", action="store_true", help="include the face list in JSON")
    q.set_defaults(func=cmd_polytope)

    q = sub.add_parser("summands", help="summand polytopes, minors and affine maps")
    pair_args(q)
    q.add_argument("--word")
    q.add_argument("--k", type=int)
    q.add_argument("--output", choices=["json", "text", "dot"], default="json")
    q.set_defaults(func=cmd_summands)

    q = sub.add_parser("plabic", help="plabic forests of the two families")
    q.add_argument("--family", choices=["star", "hypercube"], required=True)
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--k", type=int, required=True)
    q.add_argument("--orientations", action="store_true")
    q.add_argument("--output", choices=["json", "dot"], default="json")
    q.set_defaults(func=cmd_plabic)

    q = sub.add_parser("family", help="even or hypercube family")
    q.add_argument("which", choices=["even", "hypercube"])
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--k", type=int)
    q.add_argument("--verify", action="store_true")
    q.add_argument("--seed", type=int, default=0)
    q.set_defaults(func=cmd_family)

    q = sub.add_parser("verify-all", help="run the eight end-to-end checks")
    q.add_argument("--sn", type=int, default=4, help="exhaustive size; samples come from S_{sn+1}")
    q.add_argument("--seed", type=int, default=0)
    q.add_argument("--quick", action="store_true", help="skip the 4096-element hypercube sweep")
    q.add_argument("--json", action="store_true")
    q.add_argument("--timing", action="store_true", help="append wall-clock seconds (output no longer byte-stable)")
    q.set_defaults(func=cmd_verify_all)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (NotToric, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (DisagreementBug, MultipleCollections, NoSolution, InconsistentFace, AssertionError) as exc:
        print(f"counterexample: {exc}", file=sys.stderr)
        return EXIT_COUNTEREXAMPLE


if __name__ == "__main__":
    sys.exit(main())
