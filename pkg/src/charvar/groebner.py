"""Buchberger's algorithm over exact rationals, with radical membership.

Polynomials are converted to dense exponent vectors over the ideal's
variable set for the inner loops and converted back on exit.  The reduced
basis (monic, fully inter-reduced, sorted by descending leading monomial)
is the canonical output for a fixed monomial order.

Radical membership uses the auxiliary variable ``u``: ``f`` lies in the
radical of ``I`` iff the ideal ``I + <1 - u f>`` is the unit ideal, tested
with ``u`` compared before all other variables (a block elimination order).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .polynomials import (
    GREVLEX,
    Monomial,
    MonomialOrder,
    PolynomialError,
    TracePolynomial,
    TraceVariable,
)

__all__ = [
    "PolynomialIdeal",
    "GroebnerBasis",
    "GroebnerBudgetError",
    "buchberger",
    "normal_form",
    "s_polynomial",
    "radical_member",
    "radical_equal",
    "DEFAULT_PAIR_LIMIT",
]

DEFAULT_PAIR_LIMIT = 10**6


class GroebnerBudgetError(RuntimeError):
    """The pair-queue budget was exhausted before the basis stabilized."""


@dataclass(frozen=True)
class PolynomialIdeal:
    """A list of nonzero generators together with a monomial order."""

    generators: tuple[TracePolynomial, ...]
    order: MonomialOrder = GREVLEX

    def __post_init__(self):
        gens = tuple(g for g in self.generators)
        if any(g.is_zero() for g in gens):
            raise PolynomialError("ideal generators must be nonzero")
        object.__setattr__(self, "generators", gens)


@dataclass(frozen=True)
class GroebnerBasis:
    """A reduced Groebner basis under ``order`` (monic, inter-reduced)."""

    basis: tuple[TracePolynomial, ...]
    order: MonomialOrder = GREVLEX

    def is_unit(self) -> bool:
        return len(self.basis) == 1 and self.basis[0].is_constant()

    def is_principal(self) -> bool:
        return len(self.basis) == 1


class _Ctx:
    """Dense-exponent workspace for a fixed variable list and order."""

    def __init__(self, variables: set[TraceVariable], order: MonomialOrder):
        elim = [v for v in order.elim if v in variables]
        rest = sorted(variables - set(elim), key=order.var_key, reverse=True)
        self.vars = elim + rest
        self.n = len(self.vars)
        self.ne = len(elim)
        self.index = {v: i for i, v in enumerate(self.vars)}
        self.kind = order.kind
        self.order = order

    def key(self, exp: tuple[int, ...]):
        head = exp[: self.ne]
        rest = exp[self.ne :]
        if self.kind == "lex":
            base = rest
        else:
            base = (sum(rest), tuple(-e for e in reversed(rest)))
        return (head, base) if self.ne else base

    def to_dense(self, p: TracePolynomial) -> dict[tuple[int, ...], Fraction]:
        out = {}
        for m, c in p.terms_dict().items():
            exp = [0] * self.n
            for v, e in m.exps:
                exp[self.index[v]] = e
            out[tuple(exp)] = c
        return out

    def to_poly(self, d: dict[tuple[int, ...], Fraction]) -> TracePolynomial:
        terms = []
        for exp, c in d.items():
            mono = Monomial.of({self.vars[i]: e for i, e in enumerate(exp) if e})
            terms.append((mono, c))
        return TracePolynomial(terms)


def _lm(d: dict, ctx: _Ctx) -> tuple[int, ...]:
    return max(d, key=ctx.key)


def _monic(d: dict, ctx: _Ctx) -> dict:
    c = d[_lm(d, ctx)]
    if c == 1:
        return d
    return {m: co / c for m, co in d.items()}


def _divides(a: tuple, b: tuple) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _reduce_full(f: dict, basis: list[dict], ctx: _Ctx) -> dict:
    """Remainder of multivariate division of f by the basis (all terms)."""
    lts = [(_lm(g, ctx), g) for g in basis]
    h = dict(f)
    r: dict[tuple, Fraction] = {}
    while h:
        m = _lm(h, ctx)
        c = h[m]
        for ltm, g in lts:
            if _divides(ltm, m):
                q = tuple(a - b for a, b in zip(m, ltm))
                coeff = c / g[ltm]
                for gm, gc in g.items():
                    mm = tuple(a + b for a, b in zip(gm, q))
                    s = h.get(mm, Fraction(0)) - coeff * gc
                    if s:
                        h[mm] = s
                    else:
                        h.pop(mm, None)
                break
        else:
            r[m] = c
            del h[m]
    return r


def _spoly(f: dict, g: dict, ctx: _Ctx) -> dict:
    mf, mg = _lm(f, ctx), _lm(g, ctx)
    lcm = tuple(max(a, b) for a, b in zip(mf, mg))
    qf = tuple(a - b for a, b in zip(lcm, mf))
    qg = tuple(a - b for a, b in zip(lcm, mg))
    cf, cg = f[mf], g[mg]
    out: dict[tuple, Fraction] = {}
    for m, c in f.items():
        out[tuple(a + b for a, b in zip(m, qf))] = c / cf
    for m, c in g.items():
        mm = tuple(a + b for a, b in zip(m, qg))
        s = out.get(mm, Fraction(0)) - c / cg
        if s:
            out[mm] = s
        else:
            out.pop(mm, None)
    return out


def buchberger(ideal: PolynomialIdeal, pair_limit: int = DEFAULT_PAIR_LIMIT) -> GroebnerBasis:
    """The unique reduced Groebner basis of ``ideal`` under its order.

    Pairs are selected by minimal lcm (normal strategy) and discarded with
    the coprime-lead and chain criteria.  Raises
    :class:`GroebnerBudgetError` after ``pair_limit`` processed pairs.
    """
    if not ideal.generators:
        return GroebnerBasis((), ideal.order)
    ctx = _Ctx(set().union(*(g.variables() for g in ideal.generators)), ideal.order)
    gens = [ctx.to_dense(g) for g in ideal.generators]

    # inter-reduce the inputs to a fixpoint before pairing
    while True:
        reduced: list[dict] = []
        for i, p in enumerate(gens):
            rest = reduced + gens[i + 1 :]
            r = _reduce_full(p, rest, ctx) if rest else p
            if r:
                reduced.append(_monic(r, ctx))
        if reduced == gens:
            break
        gens = reduced
    if not gens:
        return GroebnerBasis((), ideal.order)

    basis = list(gens)
    lms = [_lm(g, ctx) for g in basis]
    pairs = {(i, j) for i in range(len(basis)) for j in range(i + 1, len(basis))}
    processed = 0

    def lcm_of(i: int, j: int) -> tuple:
        return tuple(max(a, b) for a, b in zip(lms[i], lms[j]))

    while pairs:
        processed += 1
        if processed > pair_limit:
            raise GroebnerBudgetError(
                f"Groebner pair budget of {pair_limit} exceeded"
            )
        i, j = min(pairs, key=lambda ij: (ctx.key(lcm_of(*ij)), ij))
        pairs.discard((i, j))
        lcm = lcm_of(i, j)
        # coprime leading terms: S-polynomial reduces to zero
        if all(a + b == c for a, b, c in zip(lms[i], lms[j], lcm)):
            continue
        # chain criterion: a third lead divides the lcm and both side pairs
        # are already settled
        skip = False
        for k in range(len(basis)):
            if k in (i, j) or not _divides(lms[k], lcm):
                continue
            ik = (min(i, k), max(i, k))
            jk = (min(j, k), max(j, k))
            if ik not in pairs and jk not in pairs:
                skip = True
                break
        if skip:
            continue
        h = _reduce_full(_spoly(basis[i], basis[j], ctx), basis, ctx)
        if h:
            h = _monic(h, ctx)
            basis.append(h)
            lms.append(_lm(h, ctx))
            new = len(basis) - 1
            pairs.update((k, new) for k in range(new))

    # minimalize: drop elements whose lead is divisible by a kept lead,
    # scanning in ascending lead order
    keep: list[int] = []
    for i in sorted(range(len(basis)), key=lambda i: ctx.key(lms[i])):
        if not any(_divides(lms[j], lms[i]) for j in keep):
            keep.append(i)
    minimal = [basis[i] for i in keep]

    # fully inter-reduce the minimal basis
    final: list[dict] = []
    for i, p in enumerate(minimal):
        others = minimal[:i] + minimal[i + 1 :]
        r = _reduce_full(p, others, ctx) if others else p
        if r:
            final.append(_monic(r, ctx))
    final.sort(key=lambda g: ctx.key(_lm(g, ctx)), reverse=True)
    return GroebnerBasis(tuple(ctx.to_poly(g) for g in final), ideal.order)


def s_polynomial(f: TracePolynomial, g: TracePolynomial, order: MonomialOrder = GREVLEX) -> TracePolynomial:
    """S-polynomial of f and g (both made monic on their leads)."""
    ctx = _Ctx(f.variables() | g.variables(), order)
    return ctx.to_poly(_spoly(ctx.to_dense(f), ctx.to_dense(g), ctx))


def normal_form(
    f: TracePolynomial,
    gb: GroebnerBasis,
    order: MonomialOrder | None = None,
) -> TracePolynomial:
    """Remainder of ``f`` modulo ``gb``: zero iff ``f`` is in the ideal."""
    if order is not None and order != gb.order:
        raise PolynomialError("monomial order mismatch with the basis")
    if f.is_zero() or not gb.basis:
        return f
    variables = f.variables() | set().union(*(g.variables() for g in gb.basis))
    ctx = _Ctx(variables, gb.order)
    rem = _reduce_full(ctx.to_dense(f), [ctx.to_dense(g) for g in gb.basis], ctx)
    return ctx.to_poly(rem)


def radical_member(
    f: TracePolynomial,
    ideal: PolynomialIdeal,
    pair_limit: int = DEFAULT_PAIR_LIMIT,
) -> bool:
    """True iff ``f`` vanishes on the zero set of ``ideal``.

    Tests whether ``ideal + <1 - u f>`` is the unit ideal for a fresh
    variable ``u`` ranked above all others.
    """
    if f.is_zero():
        return True
    u = TraceVariable.aux()
    if any(u in g.variables() for g in ideal.generators) or u in f.variables():
        raise PolynomialError("auxiliary variable already in use")
    trick = TracePolynomial.constant(1) - TracePolynomial.variable(u) * f
    order = MonomialOrder(
        kind=ideal.order.kind,
        var_key=ideal.order.var_key,
        elim=(u,) + ideal.order.elim,
    )
    extended = PolynomialIdeal(ideal.generators + (trick,), order)
    return buchberger(extended, pair_limit).is_unit()


def radical_equal(
    a: PolynomialIdeal,
    b: PolynomialIdeal,
    pair_limit: int = DEFAULT_PAIR_LIMIT,
) -> bool:
    """True iff the two ideals have the same radical (same zero set)."""
    return all(radical_member(g, b, pair_limit) for g in a.generators) and all(
        radical_member(g, a, pair_limit) for g in b.generators
    )
