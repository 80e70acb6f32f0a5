"""Trace reduction: rewrite tr(w) into a polynomial in t{S}, |S| <= 3.

The engine applies, in priority order and to a fixpoint:

1. the empty word becomes the constant 2;
2. a word with an inverse run ``U X^-k V`` becomes
   ``tr(X^k) tr(VU) - tr(U X^k V)``;
3. a word with a repeated-letter run ``U X^k V`` (k >= 2) becomes
   ``tr(X) tr(X^(k-1) V U) - tr(X^(k-2) V U)``;
4. a positive word is rotated to its lexicographically minimal cyclic form;
5. a positive word ``X Y Z W`` of length > 3 is expanded by the four-letter
   product formula into traces of shorter words.

A cyclically minimal three-letter word whose letters are distinct but not
increasing (``X_i X_k X_j`` with i < j < k) is finally normalized with
``tr(ACB) = tr(A)tr(BC) + tr(B)tr(AC) + tr(C)tr(AB) - tr(A)tr(B)tr(C)
- tr(ABC)``, so every output variable has strictly increasing indices.

Results are cached keyed by the minimal cyclic rotation of the input
letters; all writers compute identical values, so concurrent use is safe.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping

from .polynomials import Monomial, TracePolynomial, TraceVariable
from .words import FreeWord, WordError, free_reduce, _min_rotation

__all__ = [
    "reduce_trace",
    "clear_trace_cache",
    "MatrixExpr",
    "trace_of_expr",
    "expr_mul",
    "traceless",
    "s3",
]

_HALF = Fraction(1, 2)

_cache: dict[tuple[int, ...], TracePolynomial] = {}


def clear_trace_cache() -> None:
    _cache.clear()


def reduce_trace(w: FreeWord) -> TracePolynomial:
    """Trace of ``w`` as a polynomial in the variables t{S} with |S| <= 3.

    >>> from .words import parse_word
    >>> str(reduce_trace(parse_word("", 1)))
    '2'
    >>> str(reduce_trace(parse_word("aa", 1)))
    't{1}^2 - 2'
    >>> str(reduce_trace(parse_word("A", 1)))
    't{1}'
    """
    return _reduce(free_reduce(w).letters)


def _tvar(indices: Iterable[int]) -> TracePolynomial:
    return TracePolynomial.variable(TraceVariable(tuple(indices)))


def _reduce(word: tuple[int, ...]) -> TracePolynomial:
    if not word:
        return TracePolynomial.constant(2)
    key = _min_rotation(word)
    hit = _cache.get(key)
    if hit is not None:
        return hit

    result = _apply_rules(word)
    _cache[key] = result
    return result


def _apply_rules(word: tuple[int, ...]) -> TracePolynomial:
    n = len(word)

    # rule 2: leftmost maximal run of a negative letter
    for i, x in enumerate(word):
        if x < 0:
            k = i + 1
            while k < n and word[k] == x:
                k += 1
            u, v = word[:i], word[k:]
            run = (-x,) * (k - i)
            return _reduce(run) * _reduce(v + u) - _reduce(u + run + v)

    # rule 3: leftmost maximal run (length >= 2) of a positive letter
    for i in range(n - 1):
        if word[i] == word[i + 1]:
            x = word[i]
            k = i + 2
            while k < n and word[k] == x:
                k += 1
            u, v = word[:i], word[k:]
            rest = (x,) * (k - i - 2) + v + u
            return _tvar((x,)) * _reduce((x,) + rest) - _reduce(rest)

    # rule 4: rotate to the minimal cyclic representative
    rotated = _min_rotation(word)
    if rotated != word:
        return _reduce(rotated)

    # rule 5: split off the first three letters
    if n > 3:
        x, y, z, w = word[0:1], word[1:2], word[2:3], word[3:]
        tx, ty, tz = _reduce(x), _reduce(y), _reduce(z)
        tw = _reduce(w)
        return _HALF * (
            tx * ty * tz * tw
            + tx * _reduce(y + z + w)
            + ty * _reduce(x + z + w)
            + tz * _reduce(x + y + w)
            + tw * _reduce(x + y + z)
            - _reduce(x + z) * _reduce(y + w)
            + _reduce(x + w) * _reduce(y + z)
            + _reduce(x + y) * _reduce(z + w)
            - tx * ty * _reduce(z + w)
            - tx * tw * _reduce(y + z)
            - ty * tz * _reduce(x + w)
            - tz * tw * _reduce(x + y)
        )

    # terminal: sorted words of length <= 3 are generators
    if n == 3 and not (word[0] < word[1] < word[2]):
        # cyclically minimal but descending pair: (i, k, j) with i < j < k
        i, k, j = word
        return (
            _tvar((i,)) * _reduce((j, k))
            + _tvar((j,)) * _reduce((i, k))
            + _tvar((k,)) * _reduce((i, j))
            - _tvar((i,)) * _tvar((j,)) * _tvar((k,))
            - _reduce((i, j, k))
        )
    return _tvar(word)


class MatrixExpr:
    """Formal linear combination of free-group words with polynomial
    coefficients; the empty word stands for the identity matrix."""

    __slots__ = ("_terms", "rank")

    def __init__(self, terms: Mapping[FreeWord, TracePolynomial], rank: int):
        d: dict[FreeWord, TracePolynomial] = {}
        for w, c in terms.items():
            w = free_reduce(w)
            if w.rank != rank:
                w = FreeWord(w.letters, rank)
            acc = d.get(w)
            acc = c if acc is None else acc + c
            if acc.is_zero():
                d.pop(w, None)
            else:
                d[w] = acc
        self._terms = d
        self.rank = rank

    @classmethod
    def zero(cls, rank: int) -> "MatrixExpr":
        return cls({}, rank)

    @classmethod
    def word(cls, w: FreeWord) -> "MatrixExpr":
        return cls({w: TracePolynomial.constant(1)}, w.rank)

    @classmethod
    def identity(cls, rank: int) -> "MatrixExpr":
        return cls({FreeWord((), rank): TracePolynomial.constant(1)}, rank)

    def terms_dict(self) -> dict[FreeWord, TracePolynomial]:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __eq__(self, other):
        return (
            isinstance(other, MatrixExpr)
            and self.rank == other.rank
            and self._terms == other._terms
        )

    def __hash__(self):
        return hash((self.rank, frozenset(self._terms.items())))

    def __add__(self, other: "MatrixExpr") -> "MatrixExpr":
        if self.rank != other.rank:
            raise WordError("rank mismatch in matrix expression sum")
        d = dict(self._terms)
        for w, c in other._terms.items():
            acc = d.get(w)
            acc = c if acc is None else acc + c
            if acc.is_zero():
                d.pop(w, None)
            else:
                d[w] = acc
        return MatrixExpr(d, self.rank)

    def __neg__(self) -> "MatrixExpr":
        return MatrixExpr({w: -c for w, c in self._terms.items()}, self.rank)

    def __sub__(self, other: "MatrixExpr") -> "MatrixExpr":
        return self + (-other)

    def scale(self, c) -> "MatrixExpr":
        if not isinstance(c, TracePolynomial):
            c = TracePolynomial.constant(c)
        return MatrixExpr({w: co * c for w, co in self._terms.items()}, self.rank)

    def __mul__(self, other: "MatrixExpr") -> "MatrixExpr":
        return expr_mul(self, other)

    def __str__(self):
        if not self._terms:
            return "0"
        parts = [f"({c})*[{w}]" for w, c in self._terms.items()]
        return " + ".join(parts)


def expr_mul(a: MatrixExpr, b: MatrixExpr) -> MatrixExpr:
    """Bilinear extension of word concatenation (with free reduction)."""
    if a.rank != b.rank:
        raise WordError("rank mismatch in matrix expression product")
    d: dict[FreeWord, TracePolynomial] = {}
    for wa, ca in a._terms.items():
        for wb, cb in b._terms.items():
            w = free_reduce(FreeWord(wa.letters + wb.letters, a.rank))
            c = ca * cb
            acc = d.get(w)
            acc = c if acc is None else acc + c
            if acc.is_zero():
                d.pop(w, None)
            else:
                d[w] = acc
    return MatrixExpr(d, a.rank)


def trace_of_expr(e: MatrixExpr) -> TracePolynomial:
    """Linear extension of the trace to matrix expressions."""
    total = TracePolynomial.zero()
    for w, c in e._terms.items():
        total = total + c * reduce_trace(w)
    return total


def traceless(i: int, rank: int) -> MatrixExpr:
    """The traceless part ``X_i - (1/2) tr(X_i) 1`` as a matrix expression."""
    if not 1 <= i <= rank:
        raise WordError(f"generator index {i} outside 1..{rank}")
    ti = TracePolynomial.variable(TraceVariable((i,)))
    return MatrixExpr(
        {
            FreeWord((i,), rank): TracePolynomial.constant(1),
            FreeWord((), rank): ti.scale(Fraction(-1, 2)),
        },
        rank,
    )


_S3_PERMS = (
    ((0, 1, 2), 1),
    ((1, 2, 0), 1),
    ((2, 0, 1), 1),
    ((0, 2, 1), -1),
    ((2, 1, 0), -1),
    ((1, 0, 2), -1),
)


def s3(a: MatrixExpr, b: MatrixExpr, c: MatrixExpr) -> MatrixExpr:
    """Antisymmetrized triple product: signed sum over all six orderings."""
    args = (a, b, c)
    total = MatrixExpr.zero(a.rank)
    for perm, sign in _S3_PERMS:
        prod = expr_mul(expr_mul(args[perm[0]], args[perm[1]]), args[perm[2]])
        total = total + (prod if sign > 0 else -prod)
    return total
