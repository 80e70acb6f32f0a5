"""Floating-point verification: random SL2(C) points, trace evaluation,
relation-vanishing checks, and the Jacobian independence certificate.

Everything here is probabilistic evidence for the exact symbolic modules;
nothing is certified.  All sampling is deterministic given a seed, and
per-trial seeds are derived as ``seed + trial`` so reports are reproducible
under any execution schedule.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field

import numpy as np

from .polynomials import TracePolynomial, TraceVariable, evaluate
from .words import FreeWord

__all__ = [
    "SL2Matrix",
    "RepresentationPoint",
    "random_sl2",
    "random_point",
    "eval_word",
    "assignment_of",
    "check_vanishing",
    "VanishingReport",
    "VanishingFailure",
    "jacobian_matrix",
    "jacobian_independence",
]

_DET_TOL = 1e-12


@dataclass(frozen=True)
class SL2Matrix:
    """A complex 2x2 matrix with determinant 1 (within 1e-12)."""

    a: complex
    b: complex
    c: complex
    d: complex

    def __post_init__(self):
        det = self.a * self.d - self.b * self.c
        if abs(det - 1) > _DET_TOL:
            raise ValueError(f"determinant {det} is not 1 within {_DET_TOL}")

    def as_array(self) -> np.ndarray:
        return np.array([[self.a, self.b], [self.c, self.d]], dtype=complex)

    def inverse_array(self) -> np.ndarray:
        # adjugate of a determinant-1 matrix
        return np.array([[self.d, -self.b], [-self.c, self.a]], dtype=complex)

    @property
    def trace(self) -> complex:
        return self.a + self.d

    @classmethod
    def identity(cls) -> "SL2Matrix":
        return cls(1.0, 0.0, 0.0, 1.0)


@dataclass(frozen=True)
class RepresentationPoint:
    """An r-tuple of SL2 matrices with the seed that produced it."""

    matrices: tuple[SL2Matrix, ...]
    seed: int

    @property
    def rank(self) -> int:
        return len(self.matrices)


def _uniform_complex(rng: np.random.Generator) -> complex:
    re, im = rng.uniform(-1.0, 1.0, 2)
    return complex(re, im)


def random_sl2(rng: np.random.Generator) -> SL2Matrix:
    """Sample a, b, c with parts uniform in [-1, 1] (|a| >= 0.1, resampled)
    and solve d = (1 + bc)/a."""
    a = _uniform_complex(rng)
    while abs(a) < 0.1:
        a = _uniform_complex(rng)
    b = _uniform_complex(rng)
    c = _uniform_complex(rng)
    return SL2Matrix(a, b, c, (1 + b * c) / a)


def random_point(rank: int, seed: int) -> RepresentationPoint:
    rng = np.random.default_rng(seed)
    return RepresentationPoint(tuple(random_sl2(rng) for _ in range(rank)), seed)


def eval_word(w: FreeWord, pt: RepresentationPoint) -> complex:
    """Trace of the literal matrix product of ``w`` at ``pt``."""
    if w.rank > pt.rank:
        raise ValueError(f"word rank {w.rank} exceeds point rank {pt.rank}")
    m = np.eye(2, dtype=complex)
    for x in w.letters:
        mat = pt.matrices[abs(x) - 1]
        m = m @ (mat.as_array() if x > 0 else mat.inverse_array())
    return complex(np.trace(m))


def assignment_of(pt: RepresentationPoint) -> dict[TraceVariable, complex]:
    """Values of every t{S}, |S| <= 3, at the point."""
    out = {}
    for size in (1, 2, 3):
        for ind in itertools.combinations(range(1, pt.rank + 1), size):
            out[TraceVariable(ind)] = eval_word(FreeWord(ind, pt.rank), pt)
    return out


@dataclass(frozen=True)
class VanishingFailure:
    poly_index: int
    trial: int
    seed: int
    abs_value: float


@dataclass(frozen=True)
class VanishingReport:
    n_polynomials: int
    trials: int
    tol: float
    seed: int
    failures: tuple[VanishingFailure, ...] = field(default=())

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_text(self) -> str:
        lines = [
            f"checked {self.n_polynomials} polynomials at {self.trials} points"
            f" (tol {self.tol:g}, seed {self.seed}): "
            + ("all vanish" if self.ok else f"{len(self.failures)} failures")
        ]
        for f in self.failures:
            lines.append(
                f"FAIL poly {f.poly_index} trial {f.trial} seed {f.seed}"
                f" |value| {f.abs_value:.3e}"
            )
        return "\n".join(lines)

    def to_json(self) -> str:
        return json.dumps(
            {
                "n_polynomials": self.n_polynomials,
                "trials": self.trials,
                "tol": self.tol,
                "seed": self.seed,
                "failures": [
                    {
                        "poly_index": f.poly_index,
                        "trial": f.trial,
                        "seed": f.seed,
                        "abs_value": f.abs_value,
                    }
                    for f in self.failures
                ],
            },
            indent=2,
            sort_keys=True,
        )


def _term_bound(p: TracePolynomial, assignment: dict[TraceVariable, complex]) -> float:
    bound = 0.0
    for m, c in p.terms_dict().items():
        mag = abs(float(c.numerator) / float(c.denominator))
        for v, e in m.exps:
            mag *= abs(assignment[v]) ** e
        bound = max(bound, mag)
    return bound


def check_vanishing(
    polys: list[TracePolynomial],
    rank: int,
    trials: int = 100,
    tol: float = 1e-8,
    seed: int = 0,
) -> VanishingReport:
    """Check that each polynomial vanishes (relative to its term sizes) at
    ``trials`` random SL2 tuples."""
    if trials < 1:
        raise ValueError("at least one trial is required")
    failures = []
    for t in range(trials):
        pt = random_point(rank, seed + t)
        asg = assignment_of(pt)
        for i, p in enumerate(polys):
            val = abs(evaluate(p, asg))
            if val > tol * (1.0 + _term_bound(p, asg)):
                failures.append(VanishingFailure(i, t, seed + t, val))
    return VanishingReport(len(polys), trials, tol, seed, tuple(failures))


def _param_matrices(params: np.ndarray, r: int) -> list[np.ndarray]:
    """Matrices of the local parametrization used for the Jacobian.

    The first matrix is diagonal with one free entry, the second has unit
    lower-left entry and two free entries, and each later matrix has three
    free entries with the remaining one solved from det = 1.
    """
    mats = []
    p = params[0]
    mats.append(np.array([[p, 0.0], [0.0, 1.0 / p]], dtype=complex))
    if r >= 2:
        q11, q22 = params[1], params[2]
        mats.append(np.array([[q11, q11 * q22 - 1.0], [1.0, q22]], dtype=complex))
    for k in range(2, r):
        a, b, d = params[3 + 3 * (k - 2) : 6 + 3 * (k - 2)]
        mats.append(np.array([[a, b], [(a * d - 1.0) / b, d]], dtype=complex))
    return mats


def _trace_functions(mats: list[np.ndarray], r: int) -> np.ndarray:
    vals = []
    for i in range(r):
        vals.append(np.trace(mats[i]))
    for i in range(1, r):
        vals.append(np.trace(mats[0] @ mats[i]))
    for i in range(2, r):
        vals.append(np.trace(mats[1] @ mats[i]))
    return np.array(vals)


def jacobian_matrix(r: int, seed: int = 0, step: float = 1e-6) -> np.ndarray:
    """Central-difference Jacobian of the 3r-3 independent trace functions
    with respect to the 3r-3 free matrix entries, at a random point.

    Resamples internally (up to 10 times) if the parametrization is nearly
    singular at the sampled point.
    """
    if r < 2:
        raise ValueError("the Jacobian certificate needs rank at least 2")
    n = 3 * r - 3
    rng = np.random.default_rng(seed)
    for _ in range(10):
        params = np.array([_uniform_complex(rng) for _ in range(n)])
        denominators = [params[0]] + [params[4 + 3 * k] for k in range(r - 2)]
        if all(abs(d) >= 0.1 for d in denominators):
            break
    else:
        raise ValueError("could not sample a nonsingular parametrization point")

    jac = np.zeros((n, n), dtype=complex)
    for j in range(n):
        up = params.copy()
        down = params.copy()
        up[j] += step
        down[j] -= step
        fu = _trace_functions(_param_matrices(up, r), r)
        fd = _trace_functions(_param_matrices(down, r), r)
        jac[:, j] = (fu - fd) / (2.0 * step)
    return jac


def jacobian_independence(r: int, seed: int = 0) -> float:
    """|det| of the Jacobian; a nonzero value certifies that the 3r-3
    chosen trace functions are algebraically independent."""
    return float(abs(np.linalg.det(jacobian_matrix(r, seed))))
