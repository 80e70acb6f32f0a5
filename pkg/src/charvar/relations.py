"""Presentations of character-variety coordinate rings.

For a free group of rank r the ring is generated by the traces
``t{i}, t{i,j}, t{i,j,k}`` and its defining ideal is generated by two
families built from the traceless parts ``Z_i``:

* Type 1, one per unordered pair of increasing triples (I, J):
  ``tr(s3(Z_I)) tr(s3(Z_J)) + 18 det(tr(Z_{I_a} Z_{J_b}))``;
* Type 2, one per generator i and increasing quadruple p:
  ``sum_k (-1)^k tr(Z_i Z_{p_k}) tr(s3(Z_p without p_k))``.

A group presentation with relators R adds the cut-out relations
``tr(R g_j) - tr(g_j)`` for ``g_0 = 1`` and each generator ``g_j``.
Every emitted relation is normalized with :func:`primitive_part`.
"""

from __future__ import annotations

import itertools
import warnings
from dataclasses import dataclass, field
from fractions import Fraction

from .polynomials import (
    GREVLEX,
    Monomial,
    MonomialOrder,
    TracePolynomial,
    TraceVariable,
    primitive_part,
)
from .traces import MatrixExpr, expr_mul, reduce_trace, s3, trace_of_expr, traceless
from .words import FreeWord, concat, free_reduce

__all__ = [
    "GroupPresentation",
    "CharVarietyPresentation",
    "generators",
    "type1_relation",
    "type1_relations",
    "type2_relations",
    "free_relations",
    "cutout_relations",
    "cutout_with_diagnostics",
    "full_presentation",
    "psl2_generators",
    "generator_count",
    "free_relation_count",
]


@dataclass(frozen=True)
class GroupPresentation:
    """A finite presentation: rank plus a list of relator words."""

    rank: int
    relators: tuple[FreeWord, ...] = ()

    def __post_init__(self):
        if self.rank < 1:
            raise ValueError("presentation rank must be positive")
        kept = []
        for w in self.relators:
            if w.rank > self.rank:
                raise ValueError(f"relator {w} exceeds rank {self.rank}")
            w = free_reduce(FreeWord(w.letters, self.rank))
            if not w.letters:
                warnings.warn("dropping empty relator", stacklevel=2)
                continue
            kept.append(w)
        object.__setattr__(self, "relators", tuple(kept))

    def __str__(self):
        gens = ",".join(chr(ord("a") + i) for i in range(min(self.rank, 26)))
        rels = ", ".join(str(w) for w in self.relators)
        return f"<{gens} | {rels}>"


@dataclass(frozen=True)
class CharVarietyPresentation:
    """Generators and defining relations of the coordinate ring."""

    rank: int
    generators: tuple[TraceVariable, ...]
    free_relations: tuple[TracePolynomial, ...]
    cutout_relations: tuple[TracePolynomial, ...]
    dropped_cutouts: tuple[tuple[int, int], ...] = field(default=())

    def all_relations(self) -> tuple[TracePolynomial, ...]:
        return self.free_relations + self.cutout_relations


def generator_count(r: int) -> int:
    """r(r^2+5)/6, the number of trace generators."""
    return r * (r * r + 5) // 6


def free_relation_count(r: int) -> int:
    """(C(r,3)^2 + C(r,3))/2 + r C(r,4), the number of free-group relations."""
    c3 = _binom(r, 3)
    return (c3 * c3 + c3) // 2 + r * _binom(r, 4)


def _binom(n: int, k: int) -> int:
    if k < 0 or k > n:
        return 0
    out = 1
    for i in range(k):
        out = out * (n - i) // (i + 1)
    return out


def generators(r: int) -> list[TraceVariable]:
    """All t{i}, t{i,j}, t{i,j,k} in graded lexicographic order."""
    if r < 1:
        raise ValueError("rank must be at least 1")
    out = []
    for size in (1, 2, 3):
        for ind in itertools.combinations(range(1, r + 1), size):
            out.append(TraceVariable(ind))
    return out


def _zs(indices: tuple[int, ...], rank: int) -> list[MatrixExpr]:
    return [traceless(i, rank) for i in indices]


def _det3(m: list[list[TracePolynomial]]) -> TracePolynomial:
    return (
        m[0][0] * m[1][1] * m[2][2]
        + m[0][1] * m[1][2] * m[2][0]
        + m[1][0] * m[2][1] * m[0][2]
        - m[0][2] * m[1][1] * m[2][0]
        - m[0][1] * m[1][0] * m[2][2]
        - m[0][0] * m[1][2] * m[2][1]
    )


def type1_relation(triple_i: tuple[int, ...], triple_j: tuple[int, ...], rank: int) -> TracePolynomial:
    """Raw (unnormalized) Type 1 relation for one pair of triples."""
    zi = _zs(triple_i, rank)
    zj = _zs(triple_j, rank)
    ti = trace_of_expr(s3(*zi))
    tj = trace_of_expr(s3(*zj))
    gram = [[trace_of_expr(expr_mul(za, zb)) for zb in zj] for za in zi]
    return ti * tj + 18 * _det3(gram)


def type1_relations(r: int) -> list[TracePolynomial]:
    """One normalized relation per unordered pair of increasing triples."""
    out = []
    triples = list(itertools.combinations(range(1, r + 1), 3))
    for ti, tj in itertools.combinations_with_replacement(triples, 2):
        out.append(primitive_part(type1_relation(ti, tj, r)))
    return out


def type2_relations(r: int) -> list[TracePolynomial]:
    """One normalized relation per generator and increasing quadruple."""
    out = []
    for i in range(1, r + 1):
        zi = traceless(i, r)
        for quad in itertools.combinations(range(1, r + 1), 4):
            zp = _zs(quad, r)
            rel = TracePolynomial.zero()
            for k in range(4):
                rest = [zp[m] for m in range(4) if m != k]
                term = trace_of_expr(expr_mul(zi, zp[k])) * trace_of_expr(s3(*rest))
                rel = rel - term if k % 2 else rel + term
            out.append(primitive_part(rel))
    return out


def free_relations(r: int) -> list[TracePolynomial]:
    """Type 1 followed by Type 2 relations for the rank-r free group."""
    return type1_relations(r) + type2_relations(r)


def cutout_with_diagnostics(
    pres: GroupPresentation,
) -> tuple[list[TracePolynomial], list[tuple[int, int]]]:
    """Cut-out relations tr(R g_j) - tr(g_j), j = 0..r, with g_0 = 1.

    Returns the nonzero normalized relations and the (relator index, j)
    pairs whose relation was identically zero and therefore dropped.
    """
    relations: list[TracePolynomial] = []
    dropped: list[tuple[int, int]] = []
    for ridx, rel in enumerate(pres.relators):
        for j in range(pres.rank + 1):
            gj = FreeWord(() if j == 0 else (j,), pres.rank)
            p = reduce_trace(concat(rel, gj)) - reduce_trace(gj)
            if p.is_zero():
                dropped.append((ridx, j))
            else:
                relations.append(primitive_part(p))
    return relations, dropped


def cutout_relations(pres: GroupPresentation) -> list[TracePolynomial]:
    return cutout_with_diagnostics(pres)[0]


def full_presentation(pres: GroupPresentation) -> CharVarietyPresentation:
    """Generators, free relations and cut-out relations for ``pres``."""
    cuts, dropped = cutout_with_diagnostics(pres)
    return CharVarietyPresentation(
        rank=pres.rank,
        generators=tuple(generators(pres.rank)),
        free_relations=tuple(free_relations(pres.rank)),
        cutout_relations=tuple(cuts),
        dropped_cutouts=tuple(dropped),
    )


def psl2_generators(r: int, max_factors: int = 3) -> list[Monomial]:
    """Products of trace generators that descend to the PSL2 quotient ring.

    Enumerates multisets of 1..max_factors generators whose summed mod-2
    degree vectors vanish and drops any multiset that is the product of two
    smaller returned ones, so no returned monomial is a product of two
    returned monomials.  The enumeration is truncated at ``max_factors``;
    it is not claimed to be exhaustive beyond that bound.
    """
    if max_factors < 1:
        raise ValueError("max_factors must be at least 1")
    gens = generators(r)

    def mod2(v: TraceVariable) -> int:
        mask = 0
        for i in v.indices:
            mask ^= 1 << (i - 1)
        return mask

    kept: list[Monomial] = []
    kept_set: set[Monomial] = set()
    for size in range(1, max_factors + 1):
        for combo in itertools.combinations_with_replacement(gens, size):
            total = 0
            for v in combo:
                total ^= mod2(v)
            if total:
                continue
            mono: dict[TraceVariable, int] = {}
            for v in combo:
                mono[v] = mono.get(v, 0) + 1
            m = Monomial.of(mono)
            if any(
                f.divides(m) and m.div(f) in kept_set
                for f in kept
                if f.degree() < size
            ):
                continue
            kept.append(m)
            kept_set.add(m)
    return kept
