"""Irreducible components and singular fixed points of semisimple Hessenberg
varieties for the standard Hessenberg space.

Everything here is combinatorics in the Weyl group: the minimal coset
representatives ^M W, the sets O(v), the component indices, their vertex
sets y*x_v*z and dimensions l(y_0) + |R(v)|.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Optional, Sequence

from .roots import RootSystem
from .weyl import WeylElement, WeylGroup


class NotStandardPosition(ValueError):
    """A root vanishes on S without lying in the span of Delta_M."""

    def __init__(self, message: str, root: int, suggestion: Optional[tuple] = None):
        super().__init__(message)
        self.root = root
        self.suggestion = suggestion


class UnsupportedHessenberg(ValueError):
    pass


class InvalidHessenberg(ValueError):
    pass


@dataclass(frozen=True)
class SemisimpleElement:
    rs: RootSystem = field(repr=False)
    values: tuple
    delta_M: frozenset

    @property
    def is_regular(self) -> bool:
        return not self.delta_M


@dataclass(frozen=True)
class HessenbergSpace:
    rs: RootSystem = field(repr=False)
    phi_H_minus: frozenset

    @property
    def is_standard(self) -> bool:
        return self.phi_H_minus == frozenset(self.rs.negate(a) for a in self.rs.simple)


def make_semisimple(rs: RootSystem, values: Sequence) -> SemisimpleElement:
    """Build S from its ambient coordinates, checking standard position."""
    if len(values) != rs.ambient_dim:
        raise ValueError(f"expected {rs.ambient_dim} values for {rs.name}, got {len(values)}")
    vals = tuple(Fraction(v) for v in values)
    delta_m = frozenset(i + 1 for i, a in enumerate(rs.simple) if rs.value(a, vals) == 0)
    for k in rs.positive:
        if rs.value(k, vals) == 0 and not rs.in_span(k, delta_m):
            suggestion = None
            if rs.cartan_type == "A":
                # group equal diagonal entries into contiguous blocks
                firsts = {}
                for i, x in enumerate(vals):
                    firsts.setdefault(x, i)
                suggestion = tuple(sorted(range(len(vals)), key=lambda i: (firsts[vals[i]], i)))
            msg = f"root {rs.pretty(k)} vanishes on S but is not in the span of Delta_M"
            if suggestion is not None:
                perm = ",".join(str(i + 1) for i in suggestion)
                msg += f"; reorder coordinates as ({perm}) to group equal values"
            raise NotStandardPosition(msg, k, suggestion)
    return SemisimpleElement(rs, vals, delta_m)


def standard_hessenberg(rs: RootSystem) -> HessenbergSpace:
    return HessenbergSpace(rs, frozenset(rs.negate(a) for a in rs.simple))


def hessenberg_violations(rs: RootSystem, phi_H_minus: Iterable[int]) -> list[tuple[int, int]]:
    """Pairs (gamma, alpha) with gamma + alpha negative but outside the set."""
    phi = frozenset(phi_H_minus)
    bad = []
    for g in sorted(phi):
        if rs.is_positive(g):
            raise InvalidHessenberg(f"{rs.pretty(g)} is not a negative root")
        for a in rs.simple:
            t = rs.add(g, a)
            if t is not None and not rs.is_positive(t) and t not in phi:
                bad.append((g, a))
    return bad


def validate_hessenberg(rs: RootSystem, phi_H_minus: Iterable[int]) -> HessenbergSpace:
    bad = hessenberg_violations(rs, phi_H_minus)
    if bad:
        pairs = ", ".join(f"({rs.pretty(g)}, {rs.pretty(a)})" for g, a in bad)
        raise InvalidHessenberg(f"not closed under bracket with b: {pairs}")
    return HessenbergSpace(rs, frozenset(phi_H_minus))


def check_hessenberg_function(n: int, h: Sequence[int]) -> tuple:
    h = tuple(int(x) for x in h)
    if len(h) != n:
        raise InvalidHessenberg(f"Hessenberg function needs {n} entries, got {len(h)}")
    for j, x in enumerate(h, start=1):
        if not j <= x <= n:
            raise InvalidHessenberg(f"h({j}) = {x} must satisfy {j} <= h({j}) <= {n}")
    if any(a > b for a, b in zip(h, h[1:])):
        raise InvalidHessenberg(f"Hessenberg function {h} is not weakly increasing")
    return h


def hessenberg_from_function(rs: RootSystem, h: Sequence[int]) -> HessenbergSpace:
    """Type A: the space of matrices with a_ij = 0 whenever i > h(j)."""
    if rs.cartan_type != "A":
        raise InvalidHessenberg("Hessenberg functions describe type A only")
    n = rs.ambient_dim
    h = check_hessenberg_function(n, h)
    phi = set()
    for j in range(1, n + 1):
        for i in range(j + 1, h[j - 1] + 1):
            vec = [0] * n
            vec[i - 1], vec[j - 1] = 1, -1
            phi.add(rs.index(vec))
    return HessenbergSpace(rs, frozenset(phi))


def cell_dimension(W: WeylGroup, w: WeylElement, S: SemisimpleElement, H: HessenbergSpace) -> int:
    """Dimension of the Hessenberg-Schubert cell C_w in B(S, H)."""
    y, v = W.parabolic_decompose(w, S.delta_M, "left")
    return len(W.inversions(W.inverse(y))) + len(
        W.inversions(W.inverse(v)) & W.act_set(v, H.phi_H_minus))


def _require_standard(H: Optional[HessenbergSpace]) -> None:
    if H is not None and not H.is_standard:
        raise UnsupportedHessenberg(
            "components are only available for the standard Hessenberg space")


def o_set(W: WeylGroup, v: WeylElement, S: SemisimpleElement) -> list[WeylElement]:
    """O(v): the tau = x_v*z != v in ^M W with R(tau) = R(z), z in W_{L_v}."""
    x_v, _ = W.xv_wv(v)
    phi_m = W.phi_plus(S.delta_M)
    out = []
    for z in W.parabolic_subgroup(W.right_descents(v)):
        tau = W.mul(x_v, z)
        if tau == v or W.inversions(W.inverse(tau)) & phi_m:
            continue
        if W.right_descents(tau) == W.right_descents(z):
            out.append(tau)
    return out


def cell_closure_contains(W: WeylGroup, v: WeylElement, tau: WeylElement,
                          S: SemisimpleElement) -> bool:
    """Whether the cell of tau lies in the closure of the cell of v (v, tau in ^M W)."""
    if v == tau:
        raise ValueError("v and tau must be distinct")
    reps = set(W.min_coset_reps(S.delta_M, "left"))
    if v not in reps or tau not in reps:
        raise ValueError("v and tau must both lie in ^M W")
    return tau in o_set(W, v, S)


def component_reps(W: WeylGroup, S: SemisimpleElement,
                   H: Optional[HessenbergSpace] = None) -> list[WeylElement]:
    """The component indices: ^M W minus every O(v), largest dimension first."""
    _require_standard(H)
    reps = W.min_coset_reps(S.delta_M, "left")
    covered = set()
    for v in reps:
        covered.update(o_set(W, v, S))
    chosen = [v for v in reps if v not in covered]
    return sorted(chosen, key=lambda v: (-len(W.right_descents(v)), v.word))


@dataclass(frozen=True)
class ComponentDatum:
    v: WeylElement
    R_v: frozenset
    x_v: WeylElement
    w_v: WeylElement
    O_v: tuple
    dimension: int
    vertices: frozenset


@dataclass
class DecompositionReport:
    W: WeylGroup = field(repr=False)
    S: SemisimpleElement
    components: list
    variety_dim: int
    singular_vertices: dict      # (v, tau) -> frozenset of vertices, nonempty only
    all_singular: frozenset

    def component(self, v: WeylElement) -> ComponentDatum:
        return next(c for c in self.components if c.v == v)

    def to_dict(self) -> dict:
        W = self.W
        rs = W.rs

        def words(ws):
            return [str(w) for w in sorted(ws, key=lambda w: w.index)]

        return {
            "type": rs.cartan_type,
            "rank": rs.rank,
            "s": [str(x) for x in self.S.values],
            "delta_M": sorted(self.S.delta_M),
            "components": [
                {
                    "v": str(c.v),
                    "R": [f"a{i}" for i in sorted(c.R_v)],
                    "x_v": str(c.x_v),
                    "w_v": str(c.w_v),
                    "O_v": [str(t) for t in c.O_v],
                    "dim": c.dimension,
                    "vertices": words(c.vertices),
                }
                for c in self.components
            ],
            "variety_dim": self.variety_dim,
            "singular": [
                {"pair": [str(v), str(t)], "vertices": words(vs)}
                for (v, t), vs in self.singular_vertices.items()
            ],
            "all_singular": words(self.all_singular),
        }


def component_vertices(W: WeylGroup, S: SemisimpleElement, x_v: WeylElement,
                       levi: Iterable[int]) -> frozenset:
    return frozenset(W.mul(y, x_v, z)
                     for y in W.parabolic_subgroup(S.delta_M)
                     for z in W.parabolic_subgroup(levi))


def component_data(W: WeylGroup, S: SemisimpleElement,
                   H: Optional[HessenbergSpace] = None) -> DecompositionReport:
    _require_standard(H)
    y0_len = W.longest_element(S.delta_M).length
    comps = []
    for v in component_reps(W, S):
        x_v, w_v = W.xv_wv(v)
        r_v = W.right_descents(v)
        comps.append(ComponentDatum(
            v=v,
            R_v=r_v,
            x_v=x_v,
            w_v=w_v,
            O_v=tuple(o_set(W, v, S)),
            dimension=y0_len + len(r_v),
            vertices=component_vertices(W, S, x_v, r_v),
        ))
    singular = {}
    for a, b in combinations(comps, 2):
        common = a.vertices & b.vertices
        if common:
            singular[(a.v, b.v)] = common
    return DecompositionReport(
        W=W,
        S=S,
        components=comps,
        variety_dim=max(c.dimension for c in comps),
        singular_vertices=singular,
        all_singular=frozenset().union(*singular.values()),
    )
