"""Patch ideals of type A semisimple Hessenberg varieties at torus fixed points.

Near wB the flag variety is parametrised by u*w*B with u lower unitriangular
with entries x_ij.  The point lies in B(S, H) exactly when
A = u^{-1} (w^{-1}.S) u has a_ij = 0 for i > h(j); those entries generate the
patch ideal.  The middle factor is P_w^{-1} D P_w = diag(d_{w(1)}, ..., d_{w(n)})
with P_w the permutation matrix having a 1 in position (w(i), i).
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence, Union

from .components import (InvalidHessenberg, check_hessenberg_function, cell_dimension,
                         component_data, hessenberg_from_function, make_semisimple)
from .poly import (DEFAULT_MAX_VARS, MonomialOrder, Polynomial, buchberger, interreduce,
                   is_squarefree_leading, jacobian, mat_mul, rank_at, unipotent_inverse)
from .roots import build_root_system
from .weyl import WeylElement, WeylGroup

GENERIC_SAMPLES = 5
GENERIC_RANGE = 10


class InconsistencyError(RuntimeError):
    """Tangent dimension below the local dimension: a bug or a wrong supplied dimension."""


def generic_unipotent(n: int, order: Optional[MonomialOrder] = None) -> list:
    if n < 1:
        raise ValueError("n must be positive")
    order = order or MonomialOrder.standard(n)
    return [[Polynomial.constant(order, 1) if i == j
             else Polynomial.var(order, (i + 1, j + 1)) if i > j
             else Polynomial(order)
             for j in range(n)] for i in range(n)]


def _one_line(w) -> tuple:
    if isinstance(w, WeylElement):
        return tuple(abs(a) for a in w.action)
    return tuple(w)


def conjugated_matrix(w, s_values: Sequence, n: Optional[int] = None,
                      order: Optional[MonomialOrder] = None) -> list:
    """A = u^{-1} (P_w^{-1} D P_w) u for the generic lower unitriangular u.

    ``w`` is a type A Weyl element or a one-line permutation tuple.
    """
    perm = _one_line(w)
    n = n or len(perm)
    if len(perm) != n or len(s_values) != n or sorted(perm) != list(range(1, n + 1)):
        raise ValueError("w and s_values must both have length n")
    order = order or MonomialOrder.standard(n)
    u = generic_unipotent(n, order)
    d = [Fraction(s_values[perm[i] - 1]) for i in range(n)]
    middle_u = [[u[i][j] * d[i] for j in range(n)] for i in range(n)]
    return mat_mul(unipotent_inverse(u), middle_u)


@dataclass
class PatchIdeal:
    n: int
    w: object
    h: tuple
    s_values: tuple
    order: MonomialOrder = field(repr=False)
    positions: list                  # the (i, j) with i > h(j)
    generators: list                 # a_ij, zero entries kept
    reduced_generators: list

    @property
    def variables(self) -> tuple:
        return self.order.variables

    @property
    def nonzero_generators(self) -> list:
        return [g for g in self.generators if g]


def patch_ideal(w, s_values: Sequence, h: Sequence[int]) -> PatchIdeal:
    perm = _one_line(w)
    n = len(perm)
    h = check_hessenberg_function(n, h)
    s_values = tuple(Fraction(x) for x in s_values)
    order = MonomialOrder.standard(n)
    a = conjugated_matrix(perm, s_values, n, order)
    positions = [(i, j) for j in range(1, n + 1) for i in range(h[j - 1] + 1, n + 1)]
    gens = [a[i - 1][j - 1] for i, j in positions]
    return PatchIdeal(n, w, h, s_values, order, positions, gens, interreduce(gens))


def origin(order: MonomialOrder) -> dict:
    return {v: 0 for v in order.variables}


def origin_rank(ideal: PatchIdeal) -> int:
    gens = ideal.nonzero_generators
    if not gens:
        return 0
    return rank_at(jacobian(gens, ideal.order), origin(ideal.order))


def tangent_dimension(ideal: PatchIdeal) -> int:
    return ideal.order.nvars - origin_rank(ideal)


def groebner_certificate(ideal: PatchIdeal, max_vars: int = DEFAULT_MAX_VARS):
    """(reduced Groebner basis, square-free certificate).  False is inconclusive."""
    basis = buchberger(ideal.nonzero_generators, ideal.order, max_vars=max_vars)
    return basis, is_squarefree_leading(basis)


def generic_rank(ideal: PatchIdeal, seed: int = 0, samples: int = GENERIC_SAMPLES) -> int:
    """Diagnostic only: max Jacobian rank over a few seeded random integer points."""
    gens = ideal.nonzero_generators
    if not gens:
        return 0
    rng = random.Random(seed)
    jac = jacobian(gens, ideal.order)
    best = 0
    for _ in range(samples):
        pt = {v: rng.randint(-GENERIC_RANGE, GENERIC_RANGE) for v in ideal.order.variables}
        best = max(best, rank_at(jac, pt))
    return best


@dataclass
class FixedPointReport:
    w: WeylElement
    tangent_dim: int
    local_dim: Optional[int]
    verdict: str                     # smooth | singular | unknown
    radical_certified: bool
    origin_jacobian_rank: int
    generators: list = field(repr=False, default_factory=list)
    generic_rank: Optional[int] = None
    on_multiple_components: Optional[bool] = None

    def to_dict(self) -> dict:
        return {
            "word": str(self.w),
            "tangent_dim": self.tangent_dim,
            "local_dim": self.local_dim,
            "verdict": self.verdict,
            "radical_certified": self.radical_certified,
            "origin_rank": self.origin_jacobian_rank,
            "generic_rank": self.generic_rank,
            "on_multiple_components": self.on_multiple_components,
            "generators": [str(g) for g in self.generators],
        }


@dataclass
class ScanResult:
    n: int
    s_values: tuple
    h: tuple
    source: str
    reports: list
    note: str = ""

    @property
    def singular(self) -> list:
        return [r.w for r in self.reports if r.verdict == "singular"]

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "s": [str(x) for x in self.s_values],
            "h": list(self.h),
            "local_dim_source": self.source,
            "note": self.note,
            "fixed_points": [r.to_dict() for r in self.reports],
        }


def _type_a(n: int) -> WeylGroup:
    return WeylGroup(build_root_system("A", n - 1))


def _verdict(tangent: int, local: Optional[int], strict: bool, w) -> str:
    if local is None:
        return "unknown"
    if tangent > local:
        return "singular"
    if tangent == local:
        return "smooth"
    if strict:
        raise InconsistencyError(
            f"tangent dimension {tangent} < local dimension {local} at {w}")
    return "unknown"


def singular_scan(s_values: Sequence, h: Sequence[int],
                  local_dim: Union[str, int] = "combinatorial",
                  seed: int = 0, W: Optional[WeylGroup] = None) -> ScanResult:
    """Jacobian verdict at every fixed point wB.

    ``local_dim`` selects the dimension compared against the tangent space:
    ``"combinatorial"`` (standard h only) uses the largest component through
    w; ``"max_cell"`` uses the largest cell dimension, which is the global
    dimension; an integer is taken as the known dimension.  With
    ``max_cell`` a singular verdict is always sound, a smooth verdict assumes
    the variety is pure-dimensional and a tangent space below the global
    dimension yields ``unknown``.
    """
    n = len(s_values)
    h = check_hessenberg_function(n, h)
    W = W or _type_a(n)
    S = make_semisimple(W.rs, s_values)
    H = hessenberg_from_function(W.rs, h)
    local_of = {}
    multi = {}
    strict = True
    note = ""
    if local_dim == "combinatorial":
        if not H.is_standard:
            raise InvalidHessenberg("combinatorial local dimensions need the standard h")
        report = component_data(W, S)
        for w in W:
            dims = [c.dimension for c in report.components if w in c.vertices]
            local_of[w] = max(dims)
            multi[w] = len(dims) > 1
    elif local_dim == "max_cell":
        d = max(cell_dimension(W, w, S, H) for w in W)
        local_of = {w: d for w in W}
        strict = False
        note = f"max-cell dimension {d}; smooth verdicts assume pure dimension"
    elif isinstance(local_dim, int) and not isinstance(local_dim, bool):
        local_of = {w: local_dim for w in W}
    else:
        raise ValueError(f"unknown local dimension source {local_dim!r}")

    reports = []
    for w in W:
        ideal = patch_ideal(w, S.values, h)
        rank0 = origin_rank(ideal)
        tangent = ideal.order.nvars - rank0
        _, certified = groebner_certificate(ideal)
        reports.append(FixedPointReport(
            w=w,
            tangent_dim=tangent,
            local_dim=local_of[w],
            verdict=_verdict(tangent, local_of[w], strict, w),
            radical_certified=certified,
            origin_jacobian_rank=rank0,
            generators=ideal.reduced_generators,
            generic_rank=generic_rank(ideal, seed),
            on_multiple_components=multi.get(w),
        ))
    source = local_dim if isinstance(local_dim, str) else f"supplied({local_dim})"
    return ScanResult(n, S.values, h, source, reports, note)


@dataclass
class VerificationResult:
    agree: bool
    disagreements: list              # (word, jacobian verdict, on several components)
    scan: ScanResult = field(repr=False)


def verify_against_combinatorics(s_values: Sequence, seed: int = 0) -> VerificationResult:
    """Compare the Jacobian verdict with membership in the combinatorial singular locus."""
    n = len(s_values)
    h = tuple(min(j + 1, n) for j in range(1, n + 1))
    scan = singular_scan(s_values, h, "combinatorial", seed=seed)
    diff = [(str(r.w), r.verdict, r.on_multiple_components) for r in scan.reports
            if (r.verdict == "singular") != r.on_multiple_components]
    return VerificationResult(not diff, diff, scan)
