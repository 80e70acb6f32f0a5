"""Command-line surface and input/output formats.

Presentations come either inline (``"<a,b | abab>"``) or as the printed
fundamental-group output of SnapPy (``Generators:`` / ``Relators:`` blocks,
uppercase letters meaning inverses).  Ideals and reports can be emitted as
human-readable text, JSON, or a plain ring-and-ideal declaration for
pasting into a computer-algebra system.

Exit codes: 0 success, 1 parse error, 2 computation aborted (Groebner
budget), 3 verification failures found.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .groebner import (
    DEFAULT_PAIR_LIMIT,
    GroebnerBudgetError,
    PolynomialIdeal,
    buchberger,
    radical_equal,
)
from .numeric import check_vanishing, jacobian_independence
from .polynomials import (
    GREVLEX,
    LEX,
    Monomial,
    MonomialOrder,
    TracePolynomial,
    TraceVariable,
    render,
)
from .relations import (
    CharVarietyPresentation,
    GroupPresentation,
    free_relations,
    full_presentation,
    generators,
    psl2_generators,
)
from .traces import reduce_trace
from .words import FreeWord, WordError, parse_word

__all__ = [
    "ParseError",
    "parse_presentation",
    "parse_snappy",
    "export_ideal",
    "poly_to_json",
    "poly_from_json",
    "ideal_from_json",
    "main",
]


class ParseError(ValueError):
    """Raised for malformed presentation or SnapPy text."""


def _letter_map(gens: list[str]) -> dict[str, int]:
    if not gens:
        raise ParseError("empty generator list")
    for g in gens:
        if len(g) != 1 or not g.islower() or not g.isalpha():
            raise ParseError(f"generator {g!r} must be a single lowercase letter")
    if len(set(gens)) != len(gens):
        raise ParseError(f"duplicate generators in {gens}")
    return {g: i + 1 for i, g in enumerate(gens)}


def _word_from_letters(text: str, mapping: dict[str, int], rank: int) -> FreeWord:
    letters = []
    for ch in text:
        low = ch.lower()
        if low not in mapping:
            raise ParseError(f"relator letter {ch!r} is not a generator")
        idx = mapping[low]
        letters.append(idx if ch.islower() else -idx)
    return FreeWord(tuple(letters), rank)


def parse_presentation(text: str) -> GroupPresentation:
    """Parse ``"<a,b | abab, aBab>"``; an empty relator list is allowed.

    >>> parse_presentation("<a,b | abab>").relators[0].letters
    (1, 2, 1, 2)
    """
    s = text.strip()
    if not (s.startswith("<") and s.endswith(">")):
        raise ParseError(f"presentation {text!r} must be wrapped in <...>")
    body = s[1:-1]
    if "|" not in body:
        raise ParseError("presentation needs a '|' separating generators and relators")
    gen_part, rel_part = body.split("|", 1)
    gens = [g.strip() for g in gen_part.split(",") if g.strip()]
    mapping = _letter_map(gens)
    rank = len(gens)
    relators = []
    for chunk in rel_part.split(","):
        chunk = chunk.strip()
        if chunk:
            relators.append(_word_from_letters(chunk, mapping, rank))
    return GroupPresentation(rank, tuple(relators))


def parse_snappy(text: str) -> list[GroupPresentation]:
    """Parse one or more printed fundamental-group blocks.

    Each block has a ``Generators:`` header with a comma-separated letter
    list (same line or following lines) and a ``Relators:`` header with one
    relator per line; uppercase means inverse.
    """
    blocks: list[tuple[list[str], list[str]]] = []
    mode = None
    for raw in text.splitlines():
        line = raw.strip()
        if not line:
            continue
        if line.lower().startswith("generators:"):
            blocks.append(([], []))
            mode = "g"
            line = line[len("generators:") :].strip()
            if not line:
                continue
        elif line.lower().startswith("relators:"):
            if not blocks:
                raise ParseError("'Relators:' before any 'Generators:' header")
            mode = "r"
            line = line[len("relators:") :].strip()
            if not line:
                continue
        if mode is None:
            raise ParseError(f"unexpected text before 'Generators:' header: {raw!r}")
        if mode == "g":
            blocks[-1][0].extend(g.strip() for g in line.split(",") if g.strip())
        else:
            blocks[-1][1].extend(line.split())
    if not blocks:
        raise ParseError("no 'Generators:' header found")
    out = []
    for gens, rels in blocks:
        mapping = _letter_map(gens)
        rank = len(gens)
        out.append(
            GroupPresentation(
                rank, tuple(_word_from_letters(w, mapping, rank) for w in rels)
            )
        )
    return out


# ---------------------------------------------------------------------------
# serialization

def poly_to_json(p: TracePolynomial) -> list[dict]:
    """Terms in descending default order, each with an exponent list."""
    out = []
    for m, c in p.terms(GREVLEX):
        out.append(
            {
                "monomial": [[list(v.indices), e] for v, e in m.exps],
                "numerator": c.numerator,
                "denominator": c.denominator,
            }
        )
    return out


def poly_from_json(data: list[dict]) -> TracePolynomial:
    terms = []
    for term in data:
        mono = Monomial.of(
            {TraceVariable(tuple(ind)): e for ind, e in term["monomial"]}
        )
        terms.append((mono, Fraction(term["numerator"], term["denominator"])))
    return TracePolynomial(terms)


def ideal_from_json(data: dict) -> list[TracePolynomial]:
    """Accept either an exported presentation or ``{"polynomials": [...]}``."""
    if "polynomials" in data:
        return [poly_from_json(p) for p in data["polynomials"]]
    polys = [poly_from_json(p) for p in data.get("free_relations", [])]
    polys += [poly_from_json(p) for p in data.get("cutout_relations", [])]
    if not polys:
        raise ParseError("no polynomials found in ideal JSON")
    return polys


def _presentation_dict(pres: CharVarietyPresentation) -> dict:
    return {
        "rank": pres.rank,
        "generators": [list(v.indices) for v in pres.generators],
        "free_relations": [poly_to_json(p) for p in pres.free_relations],
        "cutout_relations": [poly_to_json(p) for p in pres.cutout_relations],
    }


def export_ideal(pres: CharVarietyPresentation, format: str = "text") -> str:
    """Render a computed presentation in one of the three output formats."""
    if format == "json":
        return json.dumps(_presentation_dict(pres), indent=2, sort_keys=True)
    if format == "algebra_system":
        vars_ = ", ".join(str(v) for v in pres.generators)
        rels = ",\n  ".join(render(p) for p in pres.all_relations()) or "0"
        return f"ring C[{vars_}]\nideal (\n  {rels}\n)\n"
    if format == "text":
        lines = [f"rank {pres.rank}"]
        lines.append("generators: " + ", ".join(str(v) for v in pres.generators))
        lines.append(f"free relations ({len(pres.free_relations)}):")
        lines.extend("  " + render(p) for p in pres.free_relations)
        lines.append(f"cutout relations ({len(pres.cutout_relations)}):")
        lines.extend("  " + render(p) for p in pres.cutout_relations)
        if pres.dropped_cutouts:
            lines.append(
                f"dropped {len(pres.dropped_cutouts)} identically-zero cutout"
                f" relation(s): {list(pres.dropped_cutouts)}"
            )
        return "\n".join(lines) + "\n"
    raise ParseError(f"unknown format {format!r}")


# ---------------------------------------------------------------------------
# command implementations

def _read_source(src: str) -> str:
    if src == "-":
        return sys.stdin.read()
    if src.lstrip().startswith("<"):
        return src
    try:
        with open(src, "r", encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise ParseError(f"cannot read source {src!r}: {exc}") from exc


def _load_presentation(src: str) -> GroupPresentation:
    text = _read_source(src)
    if text.lstrip().startswith("<"):
        return parse_presentation(text)
    return parse_snappy(text)[0]


def _order_from_name(name: str) -> MonomialOrder:
    if name == "lex":
        return LEX
    if name == "grevlex":
        return GREVLEX
    raise ParseError(f"unknown order {name!r}")


def _cmd_presentation(args) -> int:
    pres = full_presentation(_load_presentation(args.src))
    out = export_ideal(pres, args.format)
    if args.groebner:
        order = _order_from_name(args.order)
        rels = pres.all_relations()
        if rels:
            gb = buchberger(PolynomialIdeal(rels, order), pair_limit=args.pair_limit)
            basis = list(gb.basis)
        else:
            basis = []
        if args.format == "json":
            data = json.loads(out)
            data["groebner_basis"] = [poly_to_json(p) for p in basis]
            data["order"] = args.order
            out = json.dumps(data, indent=2, sort_keys=True)
        else:
            out += f"reduced groebner basis ({args.order}, {len(basis)}):\n"
            out += "".join("  " + render(p, order) + "\n" for p in basis)
    print(out, end="" if out.endswith("\n") else "\n")
    return 0


def _cmd_reduce(args) -> int:
    rank = args.rank
    if rank is None:
        probe = parse_word(args.word, 26)
        rank = max((abs(x) for x in probe.letters), default=1)
    w = parse_word(args.word, rank)
    p = reduce_trace(w)
    if args.format == "json":
        print(json.dumps({"word": list(w.letters), "rank": rank, "trace": poly_to_json(p)}, indent=2, sort_keys=True))
    else:
        print(render(p))
    return 0


def _cmd_free_relations(args) -> int:
    rels = free_relations(args.rank)
    if args.format == "json":
        print(json.dumps({"rank": args.rank, "polynomials": [poly_to_json(p) for p in rels]}, indent=2, sort_keys=True))
    else:
        print(f"{len(rels)} free relations for rank {args.rank}:")
        for p in rels:
            print("  " + render(p))
    return 0


def _cmd_psl2(args) -> int:
    mons = psl2_generators(args.rank, args.max_factors)
    if args.format == "json":
        print(json.dumps(
            {"rank": args.rank, "max_factors": args.max_factors,
             "generators": [[[list(v.indices), e] for v, e in m.exps] for m in mons]},
            indent=2, sort_keys=True))
    else:
        print(f"{len(mons)} PSL2 generator products (rank {args.rank}, up to {args.max_factors} factors):")
        for m in mons:
            print("  " + str(m))
    return 0


def _cmd_check(args) -> int:
    pres = full_presentation(_load_presentation(args.src))
    report = check_vanishing(
        list(pres.all_relations()), pres.rank, trials=args.trials, tol=args.tol, seed=args.seed
    )
    print(report.to_json() if args.format == "json" else report.to_text())
    return 0 if report.ok else 3


def _cmd_jacobian(args) -> int:
    value = jacobian_independence(args.rank, seed=args.seed)
    if args.format == "json":
        print(json.dumps({"rank": args.rank, "seed": args.seed, "abs_det": value}, sort_keys=True))
    else:
        print(f"|det J| = {value:.6e} (rank {args.rank}, seed {args.seed})")
    return 0


def _cmd_from_snappy(args) -> int:
    text = _read_source(args.file)
    blocks = parse_snappy(text)
    pieces = []
    for k, pres in enumerate(blocks):
        body = export_ideal(full_presentation(pres), args.format)
        pieces.append(f"=== manifold {k} ===\n{body}")
    out = "".join(p if p.endswith("\n") else p + "\n" for p in pieces)
    print(out, end="")
    return 0


def _cmd_radical_equal(args) -> int:
    with open(args.ideal_a, "r", encoding="utf-8") as fh:
        gens_a = ideal_from_json(json.load(fh))
    with open(args.ideal_b, "r", encoding="utf-8") as fh:
        gens_b = ideal_from_json(json.load(fh))
    order = _order_from_name(args.order)
    eq = radical_equal(
        PolynomialIdeal(tuple(gens_a), order),
        PolynomialIdeal(tuple(gens_b), order),
        pair_limit=args.pair_limit,
    )
    print(json.dumps({"radical_equal": eq}) if args.format == "json" else str(eq).lower())
    return 0


def _build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="charvar",
        description="Presentations of SL2(C) character-variety coordinate rings.",
    )
    ap.add_argument("--format", choices=["text", "json", "algebra_system"], default="text")
    ap.add_argument("--seed", type=int, default=0)
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("presentation", help="full pipeline for one presentation")
    p.add_argument("src", help="inline '<a,b | ...>' form, a file, or '-' for stdin")
    p.add_argument("--groebner", action="store_true", help="append the reduced basis")
    p.add_argument("--order", choices=["lex", "grevlex"], default="grevlex")
    p.add_argument("--pair-limit", type=int, default=DEFAULT_PAIR_LIMIT)
    p.set_defaults(func=_cmd_presentation)

    p = sub.add_parser("reduce", help="reduce the trace of one word")
    p.add_argument("word", help="letter syntax, '[1,2,-3]' or 'Word[1,2,-3]'")
    p.add_argument("--rank", type=int, default=None)
    p.set_defaults(func=_cmd_reduce)

    p = sub.add_parser("free-relations", help="defining relations of the free-group ring")
    p.add_argument("rank", type=int)
    p.set_defaults(func=_cmd_free_relations)

    p = sub.add_parser("psl2-gens", help="generator products for the PSL2 quotient ring")
    p.add_argument("rank", type=int)
    p.add_argument("--max-factors", type=int, default=3)
    p.set_defaults(func=_cmd_psl2)

    p = sub.add_parser("check", help="numeric vanishing check of all emitted relations")
    p.add_argument("src")
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--tol", type=float, default=1e-8)
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("jacobian", help="algebraic-independence certificate")
    p.add_argument("rank", type=int)
    p.set_defaults(func=_cmd_jacobian)

    p = sub.add_parser("from-snappy", help="batch process printed SnapPy groups")
    p.add_argument("file")
    p.set_defaults(func=_cmd_from_snappy)

    p = sub.add_parser("radical-equal", help="compare two ideals from JSON files")
    p.add_argument("ideal_a")
    p.add_argument("ideal_b")
    p.add_argument("--order", choices=["lex", "grevlex"], default="grevlex")
    p.add_argument("--pair-limit", type=int, default=DEFAULT_PAIR_LIMIT)
    p.set_defaults(func=_cmd_radical_equal)
    return ap


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, WordError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except GroebnerBudgetError as exc:
        print(f"aborted: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
