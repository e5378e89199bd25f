"""Command-line front end.

Every invocation prints one JSON report and exits with 0 (all checks pass),
2 (bad input), 3 (size budget exceeded) or 4 (a verification failed).
"""

from __future__ import annotations

import argparse
import hashlib
import json
import logging
import sys
import time
from pathlib import Path

from . import __version__
from .commutators import freeness_report
from .complexes import (
    SimplicialComplex,
    clique_complex,
    from_facets,
    is_chordal,
    is_flag,
    missing_faces,
    one_skeleton,
    simplex,
    substitution_complex,
)
from .errors import BudgetExceededError, ExtractionError, SeriesFormulaError
from .groupalg import quillen_check
from .lie import graph_lie_dims, graph_restricted_lie_dims
from .ncalg import (
    DEFAULT_WORD_BUDGET,
    KINDS,
    AlgebraPresentation,
    graded_dim_bruteforce,
    hilbert_series_formula,
    presentation_from_complex,
)
from .words import (
    DEFAULT_BALL_BUDGET,
    GroupSpec,
    abelianization,
    format_word,
    is_in_commutator_subgroup,
    normal_form,
    parse_word,
)

EXIT_OK, EXIT_INPUT, EXIT_BUDGET, EXIT_VERIFY = 0, 2, 3, 4


class InputError(ValueError):
    pass


def parse_complex_document(text: str) -> tuple:
    """Parse ``{"m": int, "facets": [[...], ...], "name": optional}``."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"not valid JSON: {exc}") from exc
    if not isinstance(doc, dict) or "m" not in doc or "facets" not in doc:
        raise InputError("complex document needs fields 'm' and 'facets'")
    m, facets = doc["m"], doc["facets"]
    if not isinstance(m, int) or isinstance(m, bool) or m < 1:
        raise InputError("'m' must be a positive integer")
    if not isinstance(facets, list) or not all(isinstance(f, list) for f in facets):
        raise InputError("'facets' must be a list of integer lists")
    for f in facets:
        if len(set(f)) != len(f):
            raise InputError(f"duplicate vertex in facet {f}")
    try:
        K = from_facets(m, facets)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    return K, doc.get("name")


def load_complex(path: str) -> tuple:
    try:
        data = Path(path).read_bytes()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    K, name = parse_complex_document(data.decode("utf-8"))
    return K, name, data


def _faces(fs) -> list:
    return [list(f) for f in fs]


def cmd_analyze(K: SimplicialComplex, name=None) -> dict:
    clique = clique_complex(one_skeleton(K))
    same_presentation = {
        kind: presentation_from_complex(K, kind, 2) == presentation_from_complex(clique, kind, 2)
        for kind in KINDS
    }
    result = {
        "name": name,
        "m": K.m,
        "face_count": len(K) - 1,
        "f_vector": list(K.f_vector()),
        "facets": _faces(K.facets()),
        "flag": is_flag(K),
        "missing_faces": _faces(missing_faces(K)),
        "chordal": is_chordal(one_skeleton(K)),
        "equals_clique_complex": clique == K,
        "presentation_equals_clique_complex": same_presentation,
    }
    return {"result": result, "pass": all(same_presentation.values())}


def _presentation(K, algebra: str, p):
    try:
        return presentation_from_complex(K, algebra, p)
    except ValueError as exc:
        raise InputError(str(exc)) from exc


def cmd_hilbert(K, algebra, p, N, oracle=False, max_words=DEFAULT_WORD_BUDGET, degree_scale=1) -> dict:
    P = _presentation(K, algebra, p)
    H = hilbert_series_formula(P, N)
    result = {
        "algebra": algebra,
        "p": P.p,
        "degree": N,
        "series": list(H),
    }
    if degree_scale != 1:
        result["series_rescaled"] = {str(n * degree_scale): c for n, c in enumerate(H) if c}
    ok = True
    if oracle:
        brute = [graded_dim_bruteforce(P, n, max_words) for n in range(N + 1)]
        agree = [a == b for a, b in zip(H, brute)]
        result["bruteforce"] = brute
        result["agree"] = agree
        ok = all(agree)
    return {"result": result, "pass": ok}


def cmd_lie_dims(K, p, N, verify=False, max_words=DEFAULT_WORD_BUDGET, max_ball=DEFAULT_BALL_BUDGET) -> dict:
    if p is None:
        if verify:
            raise InputError("--verify-group-oracle needs --p")
        dims = graph_lie_dims(K, N)
        result = {"kind": "lower_central", "degree": N, "dims": list(dims)}
        return {"result": result, "pass": True}
    try:
        dims = graph_restricted_lie_dims(K, p, N)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    result = {"kind": "lower_p_central", "p": p, "degree": N, "dims": list(dims)}
    ok = True
    if verify:
        report = quillen_check(K, p, N, word_budget=max_words, ball_budget=max_ball)
        result["group_oracle"] = report.to_dict()
        ok = report.passed
    return {"result": result, "pass": ok}


def cmd_comm_gens(K) -> dict:
    rep = freeness_report(K)
    d = rep.to_dict()
    return {"result": d, "pass": rep.consistent and d["realized_in_commutator_subgroup"]}


def parse_orders(text: str, m: int) -> tuple:
    tokens = [t.strip().lower() for t in text.split(",") if t.strip()]
    if not tokens:
        raise InputError("empty orders list")

    def one(t):
        if t in ("inf", "infinity", "z"):
            return None
        try:
            n = int(t)
        except ValueError as exc:
            raise InputError(f"bad order {t!r}") from exc
        if n < 2:
            raise InputError(f"order {n} must be at least 2")
        return n

    orders = [one(t) for t in tokens]
    if len(orders) == 1:
        orders *= m
    if len(orders) != m:
        raise InputError(f"expected 1 or {m} orders, got {len(orders)}")
    return tuple(orders)


def cmd_word(K, orders: str, word: str) -> dict:
    spec = GroupSpec(K, parse_orders(orders, K.m))
    try:
        g = normal_form(spec, parse_word(word))
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    ab = abelianization(g)
    result = {
        "orders": ["inf" if n is None else n for n in spec.orders],
        "word": word,
        "normal_form": format_word(g.syllables),
        "identity": g.is_identity,
        "abelianization": list(ab),
        "in_commutator_subgroup": is_in_commutator_subgroup(g),
    }
    return {"result": result, "pass": True}


def elementary_abelian_graph_product(K: SimplicialComplex, sizes, p: int) -> AlgebraPresentation:
    """Truncated presentation of the graph product over K of elementary
    abelian groups of ranks ``sizes``: generators of one block commute with
    each other, and blocks commute when joined by an edge of K."""
    blocks, start = [], 1
    for n in sizes:
        blocks.append(list(range(start, start + n)))
        start += n
    edges = set()
    for block in blocks:
        edges.update((a, b) for a in block for b in block if a < b)
    for j1, j2 in (f for f in K.faces if len(f) == 2):
        edges.update((a, b) for a in blocks[j1 - 1] for b in blocks[j2 - 1])
    total = start - 1
    return AlgebraPresentation(total, p, (p,) * total, frozenset(edges), 1, None)


def cmd_subst(K, parts, p=2, N=5, max_words=DEFAULT_WORD_BUDGET) -> dict:
    if len(parts) != K.m:
        raise InputError(f"expected {K.m} part complexes, got {len(parts)}")
    S = substitution_complex(K, parts)
    result = {"complex": S.to_document()}
    ok = True
    if all(part == simplex(part.m) for part in parts):
        formula = list(hilbert_series_formula(_presentation(S, "trunc", p), N))
        brute_subst = [graded_dim_bruteforce(_presentation(S, "trunc", p), n, max_words) for n in range(N + 1)]
        direct = elementary_abelian_graph_product(K, [part.m for part in parts], p)
        brute_direct = [graded_dim_bruteforce(direct, n, max_words) for n in range(N + 1)]
        ok = formula == brute_subst == brute_direct
        result["elementary_abelian_check"] = {
            "p": p,
            "degree": N,
            "substitution_formula": formula,
            "substitution_bruteforce": brute_subst,
            "graph_product_bruteforce": brute_direct,
            "agree": ok,
        }
    return {"result": result, "pass": ok}


def _digest(blobs) -> str:
    h = hashlib.sha256()
    for b in blobs:
        h.update(hashlib.sha256(b).digest())
    return h.hexdigest()


def _render_pretty(obj, indent=0) -> str:
    pad = "  " * indent
    lines = []
    if isinstance(obj, dict):
        for k, v in obj.items():
            if isinstance(v, (dict, list)) and v and any(isinstance(x, (dict, list)) for x in
                                                       (v.values() if isinstance(v, dict) else v)):
                lines.append(f"{pad}{k}:")
                lines.append(_render_pretty(v, indent + 1))
            else:
                lines.append(f"{pad}{k}: {json.dumps(v)}")
    elif isinstance(obj, list):
        for v in obj:
            lines.append(f"{pad}- {json.dumps(v)}" if not isinstance(v, dict) else
                         f"{pad}-\n{_render_pretty(v, indent + 1)}")
    else:
        lines.append(pad + json.dumps(obj))
    return "\n".join(lines)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0, help="recorded in the report")
    common.add_argument("--pretty", action="store_true", help="human-readable output")
    common.add_argument("--timing", action="store_true", help="include wall-clock time")
    common.add_argument("--max-words", type=int, default=DEFAULT_WORD_BUDGET)
    common.add_argument("--max-ball", type=int, default=DEFAULT_BALL_BUDGET)
    common.add_argument("-v", "--verbose", action="store_true")

    parser = argparse.ArgumentParser(prog="graphprod", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", parents=[common], help="combinatorics of a complex")
    p.add_argument("file")

    p = sub.add_parser("hilbert", parents=[common], help="Hilbert series of a graph-product algebra")
    p.add_argument("file")
    p.add_argument("--algebra", choices=KINDS, default="trunc")
    p.add_argument("--p", type=int, default=None)
    p.add_argument("--degree", type=int, default=6)
    p.add_argument("--oracle", action="store_true", help="cross-check by brute force")
    p.add_argument("--degree-scale", type=int, default=1,
                   help="also list the series with generators in this degree")

    p = sub.add_parser("lie-dims", parents=[common], help="graded dimensions of graph Lie algebras")
    p.add_argument("file")
    p.add_argument("--p", type=int, default=None)
    p.add_argument("--degree", type=int, default=6)
    p.add_argument("--verify-group-oracle", action="store_true")

    p = sub.add_parser("comm-gens", parents=[common], help="commutator subgroup generators")
    p.add_argument("file")

    p = sub.add_parser("word", parents=[common], help="normal form of a group word")
    p.add_argument("file")
    p.add_argument("word")
    p.add_argument("--orders", default="2", help="'2', 'inf', or a comma list per vertex")

    p = sub.add_parser("subst", parents=[common], help="substitution complex")
    p.add_argument("file")
    p.add_argument("parts", nargs="*")
    p.add_argument("--p", type=int, default=2)
    p.add_argument("--degree", type=int, default=5)
    return parser


def run(argv=None) -> tuple:
    """Execute a command; return (exit code, report dict, pretty flag)."""
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, stream=sys.stderr)
    report = {"command": args.command, "argv": list(argv if argv is not None else sys.argv[1:]),
              "seed": args.seed}
    start = time.perf_counter()
    try:
        K, name, data = load_complex(args.file)
        blobs = [data]
        if args.command == "analyze":
            out = cmd_analyze(K, name)
        elif args.command == "hilbert":
            out = cmd_hilbert(K, args.algebra, args.p, args.degree, args.oracle,
                              args.max_words, args.degree_scale)
        elif args.command == "lie-dims":
            out = cmd_lie_dims(K, args.p, args.degree, args.verify_group_oracle,
                               args.max_words, args.max_ball)
        elif args.command == "comm-gens":
            out = cmd_comm_gens(K)
        elif args.command == "word":
            out = cmd_word(K, args.orders, args.word)
        else:
            parts = []
            for path in args.parts:
                part, _, pdata = load_complex(path)
                parts.append(part)
                blobs.append(pdata)
            out = cmd_subst(K, parts, args.p, args.degree, args.max_words)
        report["inputs_digest"] = _digest(blobs)
        report.update(out)
        code = EXIT_OK if out["pass"] else EXIT_VERIFY
    except InputError as exc:
        report.update({"error": "input", "message": str(exc), "pass": False})
        code = EXIT_INPUT
    except BudgetExceededError as exc:
        report.update({"error": "budget", "message": str(exc), "degree": exc.degree, "pass": False})
        code = EXIT_BUDGET
    except (ExtractionError, SeriesFormulaError) as exc:
        report.update({"error": "verification", "message": str(exc),
                       "degree": getattr(exc, "degree", None), "pass": False})
        code = EXIT_VERIFY
    if args.timing:
        report["timing_seconds"] = round(time.perf_counter() - start, 6)
    report["exit_code"] = code
    return code, report, args.pretty


def main(argv=None) -> int:
    code, report, pretty = run(argv)
    print(_render_pretty(report) if pretty else json.dumps(report, indent=2))
    return code


if __name__ == "__main__":
    sys.exit(main())
