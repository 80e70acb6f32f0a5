"""Exact multivariate polynomial arithmetic in trace variables.

Coefficients are arbitrary-precision rationals (:class:`fractions.Fraction`);
there is no rounding anywhere in this module.  A variable ``t{S}`` stands for
the trace of the product of the generators indexed by the tuple ``S``
(``len(S)`` is 1, 2 or 3 and the indices strictly increase).

Monomial orders are passed explicitly.  The default ranks variables by
tuple length first (singletons lowest), then lexicographically on the index
tuples, and compares monomials in graded reverse lexicographic order.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from numbers import Rational
from typing import Any, Callable, Iterable, Mapping

__all__ = [
    "TraceVariable",
    "Monomial",
    "TracePolynomial",
    "MonomialOrder",
    "PolynomialError",
    "GREVLEX",
    "LEX",
    "tvar",
    "poly",
    "primitive_part",
    "evaluate",
    "render",
]


class PolynomialError(ValueError):
    """Raised for invalid polynomial operations (zero content, bad eval)."""


@dataclass(frozen=True)
class TraceVariable:
    """The symbol ``t{S}`` for a strictly increasing index tuple ``S``.

    The reserved tuple ``(0,)`` denotes the auxiliary elimination variable
    ``u`` used in radical-membership tests; it never appears in emitted
    presentations.
    """

    indices: tuple[int, ...]

    def __post_init__(self):
        ind = tuple(self.indices)
        object.__setattr__(self, "indices", ind)
        if ind == (0,):
            return
        if not 1 <= len(ind) <= 3:
            raise PolynomialError(f"index tuple {ind} must have length 1-3")
        if any(i < 1 for i in ind) or any(a >= b for a, b in zip(ind, ind[1:])):
            raise PolynomialError(f"indices {ind} must be strictly increasing positives")

    @classmethod
    def aux(cls) -> "TraceVariable":
        return cls((0,))

    @property
    def is_aux(self) -> bool:
        return self.indices == (0,)

    def __str__(self):
        if self.is_aux:
            return "u"
        return "t{" + ",".join(str(i) for i in self.indices) + "}"

    def __repr__(self):
        return f"TraceVariable({self.indices!r})"


def tvar(*indices: int) -> "TracePolynomial":
    """The polynomial consisting of the single variable ``t{indices}``."""
    return TracePolynomial.variable(TraceVariable(tuple(indices)))


def default_variable_key(v: TraceVariable):
    """Default ranking: by tuple length, then lexicographic; ``u`` on top."""
    if v.is_aux:
        return (99, ())
    return (len(v.indices), v.indices)


@dataclass(frozen=True)
class Monomial:
    """Product of trace variables with positive integer exponents."""

    exps: tuple[tuple[TraceVariable, int], ...]

    def __post_init__(self):
        pairs = tuple(sorted(self.exps, key=lambda ve: default_variable_key(ve[0])))
        object.__setattr__(self, "exps", pairs)
        if any(e <= 0 for _, e in pairs):
            raise PolynomialError("monomial exponents must be positive")
        if len({v for v, _ in pairs}) != len(pairs):
            raise PolynomialError("duplicate variable in monomial")

    @classmethod
    def one(cls) -> "Monomial":
        return cls(())

    @classmethod
    def of(cls, mapping: Mapping[TraceVariable, int]) -> "Monomial":
        return cls(tuple((v, e) for v, e in mapping.items() if e))

    def as_dict(self) -> dict[TraceVariable, int]:
        return dict(self.exps)

    def exponent(self, v: TraceVariable) -> int:
        for w, e in self.exps:
            if w == v:
                return e
        return 0

    def degree(self) -> int:
        return sum(e for _, e in self.exps)

    def variables(self) -> tuple[TraceVariable, ...]:
        return tuple(v for v, _ in self.exps)

    def mul(self, other: "Monomial") -> "Monomial":
        d = self.as_dict()
        for v, e in other.exps:
            d[v] = d.get(v, 0) + e
        return Monomial.of(d)

    def divides(self, other: "Monomial") -> bool:
        d = other.as_dict()
        return all(d.get(v, 0) >= e for v, e in self.exps)

    def div(self, other: "Monomial") -> "Monomial":
        d = self.as_dict()
        for v, e in other.exps:
            q = d.get(v, 0) - e
            if q < 0:
                raise PolynomialError(f"{other} does not divide {self}")
            d[v] = q
        return Monomial.of({v: e for v, e in d.items() if e})

    def lcm(self, other: "Monomial") -> "Monomial":
        d = self.as_dict()
        for v, e in other.exps:
            d[v] = max(d.get(v, 0), e)
        return Monomial.of(d)

    def __str__(self):
        if not self.exps:
            return "1"
        parts = []
        for v, e in sorted(self.exps, key=lambda ve: default_variable_key(ve[0]), reverse=True):
            parts.append(str(v) if e == 1 else f"{v}^{e}")
        return "*".join(parts)


@dataclass(frozen=True)
class MonomialOrder:
    """A monomial order: ``lex`` or ``grevlex`` over a variable ranking.

    Variables listed in ``elim`` are compared lexicographically before the
    remaining variables are compared with the base order, giving a block
    elimination order (used for radical membership).
    """

    kind: str = "grevlex"
    var_key: Callable[[TraceVariable], Any] = default_variable_key
    elim: tuple[TraceVariable, ...] = ()

    def __post_init__(self):
        if self.kind not in ("lex", "grevlex"):
            raise PolynomialError(f"unknown order kind {self.kind!r}")

    def _base_key(self, pairs: list[tuple[Any, int]]):
        if self.kind == "lex":
            return tuple(sorted(((k, e) for k, e in pairs), reverse=True))
        total = sum(e for _, e in pairs)
        return (total, tuple(sorted(((k, -e) for k, e in pairs))))

    def monomial_key(self, m: Monomial):
        """A sort key: ``key(a) > key(b)`` iff ``a`` precedes ``b``."""
        pairs = [(self.var_key(v), e) for v, e in m.exps if v not in self.elim]
        base = self._base_key(pairs)
        if not self.elim:
            return base
        head = tuple(m.exponent(v) for v in self.elim)
        return (head, base)

    def leading(self, p: "TracePolynomial") -> tuple[Monomial, Fraction]:
        if p.is_zero():
            raise PolynomialError("zero polynomial has no leading term")
        m = max(p.terms_dict(), key=self.monomial_key)
        return m, p.terms_dict()[m]


GREVLEX = MonomialOrder("grevlex")
LEX = MonomialOrder("lex")


def _as_fraction(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, (int, Rational)):
        return Fraction(c)
    raise PolynomialError(f"coefficient {c!r} is not an exact rational")


class TracePolynomial:
    """Sparse polynomial: a finite map ``Monomial -> Fraction``.

    Values are immutable; arithmetic returns fresh objects and never stores
    zero coefficients.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Monomial, Fraction] | Iterable[tuple[Monomial, Fraction]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        d: dict[Monomial, Fraction] = {}
        for m, c in items:
            c = _as_fraction(c)
            if c:
                d[m] = d.get(m, Fraction(0)) + c
                if not d[m]:
                    del d[m]
        self._terms = d

    # -- constructors -------------------------------------------------
    @classmethod
    def zero(cls) -> "TracePolynomial":
        return cls()

    @classmethod
    def constant(cls, c) -> "TracePolynomial":
        return cls({Monomial.one(): _as_fraction(c)})

    @classmethod
    def variable(cls, v: TraceVariable) -> "TracePolynomial":
        return cls({Monomial(((v, 1),)): Fraction(1)})

    # -- views ---------------------------------------------------------
    def terms_dict(self) -> dict[Monomial, Fraction]:
        return dict(self._terms)

    def terms(self, order: MonomialOrder = GREVLEX) -> list[tuple[Monomial, Fraction]]:
        """Terms sorted descending in the given order (canonical form)."""
        return sorted(self._terms.items(), key=lambda mc: order.monomial_key(mc[0]), reverse=True)

    def variables(self) -> set[TraceVariable]:
        return {v for m in self._terms for v in m.variables()}

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return all(m == Monomial.one() for m in self._terms)

    def constant_value(self) -> Fraction:
        return self._terms.get(Monomial.one(), Fraction(0))

    def total_degree(self) -> int:
        return max((m.degree() for m in self._terms), default=0)

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    # -- ring operations -----------------------------------------------
    def __eq__(self, other):
        if isinstance(other, TracePolynomial):
            return self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self == TracePolynomial.constant(other)
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __add__(self, other) -> "TracePolynomial":
        other = _coerce(other)
        d = dict(self._terms)
        for m, c in other._terms.items():
            s = d.get(m, Fraction(0)) + c
            if s:
                d[m] = s
            else:
                d.pop(m, None)
        return _wrap(d)

    __radd__ = __add__

    def __neg__(self) -> "TracePolynomial":
        return _wrap({m: -c for m, c in self._terms.items()})

    def __sub__(self, other) -> "TracePolynomial":
        return self + (-_coerce(other))

    def __rsub__(self, other) -> "TracePolynomial":
        return _coerce(other) + (-self)

    def __mul__(self, other) -> "TracePolynomial":
        other = _coerce(other)
        if len(self._terms) > len(other._terms):
            big, small = self, other
        else:
            big, small = other, self
        d: dict[Monomial, Fraction] = {}
        for m2, c2 in small._terms.items():
            for m1, c1 in big._terms.items():
                m = m1.mul(m2)
                s = d.get(m, Fraction(0)) + c1 * c2
                if s:
                    d[m] = s
                else:
                    del d[m]
        return _wrap(d)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "TracePolynomial":
        if n < 0:
            raise PolynomialError("negative powers are not defined")
        result = TracePolynomial.constant(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def scale(self, c) -> "TracePolynomial":
        c = _as_fraction(c)
        if not c:
            return TracePolynomial.zero()
        return _wrap({m: c * co for m, co in self._terms.items()})

    def mul_term(self, m: Monomial, c: Fraction) -> "TracePolynomial":
        if not c:
            return TracePolynomial.zero()
        return _wrap({mm.mul(m): cc * c for mm, cc in self._terms.items()})

    def __str__(self):
        return render(self)

    def __repr__(self):
        return f"<TracePolynomial {render(self)}>"


def _wrap(d: dict[Monomial, Fraction]) -> TracePolynomial:
    p = TracePolynomial.__new__(TracePolynomial)
    p._terms = d
    return p


def _coerce(x) -> TracePolynomial:
    if isinstance(x, TracePolynomial):
        return x
    return TracePolynomial.constant(x)


def poly(*terms: tuple[Fraction | int, Mapping[TraceVariable, int]]) -> TracePolynomial:
    """Build a polynomial from ``(coefficient, {variable: exponent})`` pairs."""
    return TracePolynomial([(Monomial.of(m), _as_fraction(c)) for c, m in terms])


def primitive_part(p: TracePolynomial, order: MonomialOrder = GREVLEX) -> TracePolynomial:
    """Integer-content-free scalar multiple of ``p`` with positive lead.

    Clears denominators, divides by the integer content and fixes the sign
    so the leading coefficient under ``order`` is positive.

    >>> from fractions import Fraction
    >>> str(primitive_part(tvar(1) * tvar(1) * Fraction(3, 2) - 3))
    't{1}^2 - 2'
    """
    if p.is_zero():
        raise PolynomialError("primitive_part of the zero polynomial")
    coeffs = list(p.terms_dict().values())
    denom_lcm = 1
    for c in coeffs:
        denom_lcm = denom_lcm * c.denominator // _gcd(denom_lcm, c.denominator)
    nums = [c.numerator * (denom_lcm // c.denominator) for c in coeffs]
    g = 0
    for n in nums:
        g = _gcd(g, abs(n))
    scalar = Fraction(denom_lcm, g)
    q = p.scale(scalar)
    _, lead = order.leading(q)
    if lead < 0:
        q = -q
    return q


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


def evaluate(p: TracePolynomial, assignment: Mapping[TraceVariable, complex]) -> complex:
    """Evaluate ``p`` at a complex point, term by term in canonical order.

    Powers of each variable are accumulated by repeated multiplication so
    the result is deterministic for a fixed assignment.
    """
    powers: dict[tuple[TraceVariable, int], complex] = {}

    def power(v: TraceVariable, e: int) -> complex:
        key = (v, e)
        if key not in powers:
            if v not in assignment:
                raise PolynomialError(f"no value assigned to {v}")
            val = complex(assignment[v])
            acc = val
            for k in range(2, e + 1):
                acc *= val
                powers[(v, k)] = acc
            powers[(v, 1)] = val
        return powers[key]

    total = 0j
    for m, c in p.terms():
        term = complex(c)
        for v, e in m.exps:
            term *= power(v, e)
        total += term
    return total


def render(p: TracePolynomial, order: MonomialOrder = GREVLEX) -> str:
    """Canonical text form: terms descending in ``order``.

    >>> render(tvar(1, 2) * tvar(1, 2) - 4)
    't{1,2}^2 - 4'
    """
    if p.is_zero():
        return "0"
    out = []
    for i, (m, c) in enumerate(p.terms(order)):
        neg = c < 0
        mag = -c if neg else c
        coeff = "" if (mag == 1 and m.exps) else str(mag)
        body = "" if not m.exps else str(m)
        piece = coeff + ("*" if coeff and body else "") + body
        if i == 0:
            out.append(("-" if neg else "") + piece)
        else:
            out.append((" - " if neg else " + ") + piece)
    return "".join(out)
