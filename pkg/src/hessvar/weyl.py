"""Weyl groups of classical root systems as signed permutations.

Elements are compared by their action on the ambient coordinates, never by
word.  Every element carries a canonical reduced word obtained by stripping
the smallest right descent repeatedly, so ``s1*s2*s1`` is the longest element
of A2 and the A3 element written ``s2s1s3`` prints as ``s2*s3*s1``.

>>> from hessvar.roots import build_root_system
>>> W = WeylGroup(build_root_system("A", 2))
>>> [W.word_str(w) for w in W]
['e', 's1', 's2', 's1*s2', 's2*s1', 's1*s2*s1']
"""

from __future__ import annotations

import re
from array import array
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import Iterable, Iterator, Sequence

from . import kernels
from .roots import RootSystem, dot

DEFAULT_LIMIT = 10**6


class GroupTooLarge(ValueError):
    pass


@dataclass(frozen=True)
class WeylElement:
    action: tuple
    length: int = field(compare=False)
    word: tuple = field(compare=False)
    index: int = field(compare=False, repr=False)

    def __str__(self) -> str:
        return "*".join(f"s{i}" for i in self.word) or "e"


@dataclass(frozen=True)
class ParabolicData:
    delta_L: frozenset
    phi_L_plus: frozenset
    w_L: WeylElement


def weyl_order(rs: RootSystem) -> int:
    r = rs.rank
    if rs.cartan_type == "A":
        return factorial(r + 1)
    if rs.cartan_type in "BC":
        return 2**r * factorial(r)
    return 2 ** (r - 1) * factorial(r)


def reflection_action(rs: RootSystem, root: int) -> tuple:
    """Signed permutation of s_root acting on the ambient basis."""
    g = rs.roots[root]
    gg = dot(g, g)
    out = []
    for i in range(rs.ambient_dim):
        c = Fraction(2 * g[i], gg)
        image = [(1 if k == i else 0) - c * g[k] for k in range(rs.ambient_dim)]
        nz = [(k, x) for k, x in enumerate(image) if x != 0]
        assert len(nz) == 1 and abs(nz[0][1]) == 1, image
        k, x = nz[0]
        out.append((k + 1) if x > 0 else -(k + 1))
    return tuple(out)


def _inverse_action(a: Sequence[int]) -> tuple:
    inv = [0] * len(a)
    for i, x in enumerate(a):
        if x > 0:
            inv[x - 1] = i + 1
        else:
            inv[-x - 1] = -(i + 1)
    return tuple(inv)


_WORD_TOKEN = re.compile(r"s_?\{?(\d+)\}?")


class WeylGroup:
    """The Weyl group of ``rs``, fully enumerated.

    Subsets of simple roots (Delta_L, R(w), ...) are frozensets of 1-based
    labels i for alpha_i.
    """

    def __init__(self, rs: RootSystem, limit: int = DEFAULT_LIMIT):
        order = weyl_order(rs)
        if order > limit:
            raise GroupTooLarge(f"|W({rs.name})| = {order} exceeds the guard {limit}")
        self.rs = rs
        self.gens = [reflection_action(rs, a) for a in rs.simple]
        pos = [rs.roots[k] for k in rs.positive]
        slots = [[(i, c) for i, c in enumerate(g) if c] for g in pos]
        self._table = (
            array("q", [s[0][0] for s in slots]),
            array("q", [s[0][1] for s in slots]),
            array("q", [s[1][0] if len(s) > 1 else -1 for s in slots]),
            array("q", [s[1][1] if len(s) > 1 else 0 for s in slots]),
        )
        actions = kernels.enumerate_actions(self.gens, limit)
        masks = dict(zip(actions, kernels.inversion_masks(actions, *self._table)))

        words: dict[tuple, tuple] = {}
        simple_vecs = [rs.roots[a] for a in rs.simple]
        for a in sorted(actions, key=lambda x: bin(masks[x]).count("1")):
            if bin(masks[a]).count("1") == 0:
                words[a] = ()
                continue
            i = next(i for i, v in enumerate(simple_vecs)
                     if rs.find(kernels.act(a, v)) >= rs.npos)
            words[a] = words[kernels.compose(a, self.gens[i])] + (i + 1,)

        ordered = sorted(actions, key=lambda a: (len(words[a]), words[a]))
        self.elements = [WeylElement(a, len(words[a]), words[a], k) for k, a in enumerate(ordered)]
        self._by_action = {w.action: w for w in self.elements}
        self._masks = [masks[w.action] for w in self.elements]
        self._inv = [self._by_action[_inverse_action(w.action)] for w in self.elements]
        self._subgroups: dict[frozenset, list[WeylElement]] = {}

    def __iter__(self) -> Iterator[WeylElement]:
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    @property
    def identity(self) -> WeylElement:
        return self.elements[0]

    @property
    def longest(self) -> WeylElement:
        return self.elements[-1]

    @property
    def simple_labels(self) -> frozenset:
        return frozenset(range(1, self.rs.rank + 1))

    def element(self, action: Sequence[int]) -> WeylElement:
        return self._by_action[tuple(action)]

    def s(self, i: int) -> WeylElement:
        return self._by_action[self.gens[i - 1]]

    def mul(self, *factors: WeylElement) -> WeylElement:
        a = self.identity.action
        for f in factors:
            a = kernels.compose(a, f.action)
        return self._by_action[a]

    def inverse(self, w: WeylElement) -> WeylElement:
        return self._inv[w.index]

    def from_word(self, word) -> WeylElement:
        """Evaluate a word: ``"s2s3s1"``, ``"s2*s3*s1"``, ``"e"`` or a list of labels."""
        if isinstance(word, str):
            text = word.replace("*", "").replace(" ", "")
            if text in ("", "e", "id", "1"):
                labels = []
            else:
                labels = [int(m) for m in _WORD_TOKEN.findall(text)]
                if _WORD_TOKEN.sub("", text):
                    raise ValueError(f"cannot parse Weyl group word {word!r}")
        else:
            labels = list(word)
        for i in labels:
            if not 1 <= i <= self.rs.rank:
                raise ValueError(f"s{i} is not a simple reflection of {self.rs.name}")
        return self.mul(*(self.s(i) for i in labels))

    def word_str(self, w: WeylElement) -> str:
        return str(w)

    def one_line(self, w: WeylElement) -> tuple:
        """One-line notation (w(1), ..., w(n)); type A only."""
        if self.rs.cartan_type != "A":
            raise ValueError("one-line notation is only defined in type A")
        return tuple(abs(a) for a in w.action)

    def act(self, w: WeylElement, root: int) -> int:
        return self.rs.index(kernels.act(w.action, self.rs.roots[root]))

    def act_set(self, w: WeylElement, roots: Iterable[int]) -> frozenset:
        return frozenset(self.act(w, r) for r in roots)

    def inversions(self, w: WeylElement) -> frozenset:
        """N(w): positive roots sent to negative roots."""
        m = self._masks[w.index]
        return frozenset(k for k in self.rs.positive if m >> k & 1)

    def right_descents(self, w: WeylElement) -> frozenset:
        """R(w) = N(w) intersected with the simple roots, as labels."""
        m = self._masks[w.index]
        return frozenset(i + 1 for i, a in enumerate(self.rs.simple) if m >> a & 1)

    def left_descents(self, w: WeylElement) -> frozenset:
        return self.right_descents(self.inverse(w))

    def reflection(self, root: int) -> WeylElement:
        return self._by_action[reflection_action(self.rs, root)]

    # -- parabolic subgroups and cosets ---------------------------------------

    def phi_plus(self, labels: Iterable[int]) -> frozenset:
        labels = frozenset(labels)
        return frozenset(k for k in self.rs.positive if self.rs.in_span(k, labels))

    def parabolic_subgroup(self, labels: Iterable[int]) -> list[WeylElement]:
        labels = frozenset(labels)
        if labels not in self._subgroups:
            gens = [self.s(i) for i in sorted(labels)]
            seen = {self.identity}
            frontier = [self.identity]
            while frontier:
                nxt = []
                for w in frontier:
                    for g in gens:
                        x = self.mul(w, g)
                        if x not in seen:
                            seen.add(x)
                            nxt.append(x)
                frontier = nxt
            self._subgroups[labels] = sorted(seen, key=lambda w: w.index)
        return self._subgroups[labels]

    def longest_element(self, labels: Iterable[int]) -> WeylElement:
        return max(self.parabolic_subgroup(labels), key=lambda w: w.length)

    def parabolic(self, labels: Iterable[int]) -> ParabolicData:
        labels = frozenset(labels)
        return ParabolicData(labels, self.phi_plus(labels), self.longest_element(labels))

    def min_coset_reps(self, labels: Iterable[int], side: str = "left") -> list[WeylElement]:
        """Minimal length representatives: ``left`` gives ^L W, ``right`` gives W^L."""
        phi_l = self.phi_plus(labels)
        if side == "left":
            return [v for v in self if not self.inversions(self.inverse(v)) & phi_l]
        if side == "right":
            return [v for v in self if not self.inversions(v) & phi_l]
        raise ValueError(f"side must be 'left' or 'right', not {side!r}")

    def parabolic_decompose(self, w: WeylElement, labels: Iterable[int], side: str = "left"):
        """Split w with respect to W_L.

        ``left``: returns (y, v) with w = y*v, y in W_L, v in ^L W.
        ``right``: returns (v, y) with w = v*y, v in W^L, y in W_L.
        Lengths add in both cases.
        """
        labels = frozenset(labels)
        if side not in ("left", "right"):
            raise ValueError(f"side must be 'left' or 'right', not {side!r}")
        y = self.identity
        v = w
        while True:
            desc = (self.left_descents(v) if side == "left" else self.right_descents(v)) & labels
            if not desc:
                break
            s = self.s(min(desc))
            if side == "left":
                v, y = self.mul(s, v), self.mul(y, s)
            else:
                v, y = self.mul(v, s), self.mul(s, y)
        return (y, v) if side == "left" else (v, y)

    def xv_wv(self, v: WeylElement):
        """(x_v, w_v): w_v is the longest element of W_{R(v)} and x_v = v*w_v^{-1}."""
        w_v = self.longest_element(self.right_descents(v))
        return self.mul(v, self.inverse(w_v)), w_v
