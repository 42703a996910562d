"""Classical root systems (types A, B, C, D) in standard ambient coordinates.

Roots are dense integer vectors.  A root is referred to by its index into
``RootSystem.roots``; positive roots come first, sorted by height, and the
negative of positive root ``i`` sits at index ``i + npos``.

>>> rs = build_root_system("C", 2)
>>> [rs.pretty(i) for i in rs.positive]
['a1', 'a2', 'a1+a2', '2a1+a2']
>>> rs.roots[rs.simple[1]]
(0, 2)
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Optional, Sequence

CARTAN_TYPES = ("A", "B", "C", "D")

Vector = tuple  # tuple[int, ...]


class RootSystemError(ValueError):
    """Unsupported type/rank combination or a vector that is not a root."""


def _unit(n: int, i: int, c: int = 1) -> Vector:
    v = [0] * n
    v[i] = c
    return tuple(v)


def _add(u: Sequence[int], v: Sequence[int]) -> Vector:
    return tuple(a + b for a, b in zip(u, v))


def _neg(u: Sequence[int]) -> Vector:
    return tuple(-a for a in u)


def dot(u: Sequence, v: Sequence):
    return sum(a * b for a, b in zip(u, v))


def _ambient_roots(cartan_type: str, rank: int):
    """Return (ambient_dim, positive roots, simple roots) as coordinate vectors."""
    if cartan_type == "A":
        n = rank + 1
        pos = [_add(_unit(n, i), _unit(n, j, -1)) for i, j in combinations(range(n), 2)]
        simple = [_add(_unit(n, i), _unit(n, i + 1, -1)) for i in range(rank)]
        return n, pos, simple
    n = rank
    pos = []
    for i, j in combinations(range(n), 2):
        pos.append(_add(_unit(n, i), _unit(n, j, -1)))
        pos.append(_add(_unit(n, i), _unit(n, j)))
    simple = [_add(_unit(n, i), _unit(n, i + 1, -1)) for i in range(n - 1)]
    if cartan_type == "B":
        pos += [_unit(n, i) for i in range(n)]
        simple.append(_unit(n, n - 1))
    elif cartan_type == "C":
        pos += [_unit(n, i, 2) for i in range(n)]
        simple.append(_unit(n, n - 1, 2))
    else:
        simple.append(_add(_unit(n, n - 2), _unit(n, n - 1)))
    return n, pos, simple


def _solve_coefficients(simple: list[Vector], gamma: Vector) -> tuple[Fraction, ...]:
    """Exact coefficients c with sum(c_k * simple_k) == gamma."""
    r = len(simple)
    rows = [[Fraction(simple[k][i]) for k in range(r)] + [Fraction(gamma[i])]
            for i in range(len(gamma))]
    pivots = []
    row = 0
    for col in range(r):
        piv = next((i for i in range(row, len(rows)) if rows[i][col] != 0), None)
        if piv is None:
            continue
        rows[row], rows[piv] = rows[piv], rows[row]
        p = rows[row][col]
        rows[row] = [x / p for x in rows[row]]
        for i in range(len(rows)):
            if i != row and rows[i][col] != 0:
                f = rows[i][col]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[row])]
        pivots.append(col)
        row += 1
    if any(rows[i][r] != 0 for i in range(row, len(rows))):
        raise RootSystemError(f"{gamma} is not in the span of the simple roots")
    coeffs = [Fraction(0)] * r
    for i, col in enumerate(pivots):
        coeffs[col] = rows[i][r]
    return tuple(coeffs)


@dataclass(frozen=True)
class RootSystem:
    cartan_type: str
    rank: int
    ambient_dim: int
    roots: tuple
    simple: tuple          # root indices of alpha_1 .. alpha_r (Bourbaki order)
    npos: int
    coefficients: tuple    # per root, integer coefficients in the simple roots
    lookup: dict = field(repr=False, compare=False)

    @property
    def positive(self) -> range:
        return range(self.npos)

    @property
    def negative(self) -> range:
        return range(self.npos, 2 * self.npos)

    def is_positive(self, i: int) -> bool:
        return i < self.npos

    def negate(self, i: int) -> int:
        return (i + self.npos) % (2 * self.npos)

    def index(self, vec: Sequence[int]) -> int:
        try:
            return self.lookup[tuple(vec)]
        except KeyError:
            raise RootSystemError(f"{tuple(vec)} is not a root of {self.name}") from None

    def find(self, vec: Sequence[int]) -> Optional[int]:
        return self.lookup.get(tuple(vec))

    @property
    def name(self) -> str:
        return f"{self.cartan_type}{self.rank}"

    def simple_root(self, i: int) -> int:
        """Root index of alpha_i, with i 1-based as in s_1, s_2, ..."""
        return self.simple[i - 1]

    def simple_label(self, root: int) -> Optional[int]:
        """1-based label i when ``root`` is alpha_i, else None."""
        try:
            return self.simple.index(root) + 1
        except ValueError:
            return None

    def height(self, root: int) -> int:
        if not self.is_positive(root):
            raise RootSystemError(f"height is defined for positive roots only, got {self.pretty(root)}")
        return sum(self.coefficients[root])

    def reflect(self, gamma: int, beta: int) -> int:
        """Index of s_gamma(beta)."""
        g, b = self.roots[gamma], self.roots[beta]
        c = 2 * dot(b, g) // dot(g, g)
        return self.lookup[tuple(x - c * y for x, y in zip(b, g))]

    def add(self, gamma: int, beta: int) -> Optional[int]:
        """Index of gamma + beta when that vector is a root, otherwise None."""
        return self.lookup.get(_add(self.roots[gamma], self.roots[beta]))

    def value(self, root: int, point: Sequence) -> Fraction:
        """gamma(S) for S given by its ambient coordinates."""
        return sum((Fraction(a) * b for a, b in zip(self.roots[root], point)), Fraction(0))

    def in_span(self, root: int, labels) -> bool:
        """True when the root is a combination of the simple roots alpha_i, i in labels."""
        return all(c == 0 or i + 1 in labels for i, c in enumerate(self.coefficients[root]))

    def highest_root(self) -> int:
        return max(self.positive, key=self.height)

    def pretty(self, root: int) -> str:
        parts = [f"{abs(c) if abs(c) > 1 else ''}a{i + 1}"
                 for i, c in enumerate(self.coefficients[root]) if c]
        text = "+".join(parts)
        if self.is_positive(root):
            return text
        return f"-({text})" if len(parts) > 1 else f"-{text}"

    def __hash__(self) -> int:
        return hash((self.cartan_type, self.rank))


def build_root_system(cartan_type: str, rank: int) -> RootSystem:
    """Construct the classical root system of the given type and Weyl-group rank.

    Type A uses ``rank = n - 1`` with ``n`` ambient coordinates.
    """
    cartan_type = cartan_type.upper()
    if cartan_type not in CARTAN_TYPES:
        raise RootSystemError(f"unsupported Cartan type {cartan_type!r}")
    if rank < 1 or (cartan_type == "D" and rank < 2):
        raise RootSystemError(f"unsupported rank {rank} for type {cartan_type}")
    n, pos, simple = _ambient_roots(cartan_type, rank)
    coeffs = {}
    for g in pos:
        c = _solve_coefficients(simple, g)
        assert all(x.denominator == 1 and x >= 0 for x in c), (g, c)
        coeffs[g] = tuple(int(x) for x in c)
    pos.sort(key=lambda g: (sum(coeffs[g]), coeffs[g][::-1]))
    roots = tuple(pos) + tuple(_neg(g) for g in pos)
    all_coeffs = tuple(coeffs[g] for g in pos) + tuple(
        tuple(-x for x in coeffs[g]) for g in pos)
    lookup = {g: i for i, g in enumerate(roots)}
    return RootSystem(
        cartan_type=cartan_type,
        rank=rank,
        ambient_dim=n,
        roots=roots,
        simple=tuple(lookup[a] for a in simple),
        npos=len(pos),
        coefficients=all_coeffs,
        lookup=lookup,
    )


def expected_root_count(cartan_type: str, rank: int) -> int:
    if cartan_type == "A":
        n = rank + 1
        return n * (n - 1)
    if cartan_type in "BC":
        return 2 * rank * rank
    return 2 * rank * (rank - 1)
