"""Exact sparse polynomials in the coordinates x_ij (i > j) of the opposite
unipotent group, with Buchberger's algorithm and exact Jacobian ranks.

Monomials are dense exponent tuples laid out in decreasing variable
priority, so Python tuple comparison *is* the lex monomial order.  The
default priority puts variables farther from the diagonal first and breaks
ties by the smaller row index:

>>> order = MonomialOrder.standard(4)
>>> [var_name(v) for v in order.variables]
['x41', 'x31', 'x42', 'x21', 'x32', 'x43']
>>> p = parse_polynomial("x21*x42 - x41", order)
>>> str(p)
'-x41 + x21*x42'
"""

from __future__ import annotations

import re
from collections import deque
from fractions import Fraction
from math import lcm
from typing import Iterable, Mapping, Optional, Sequence

from . import kernels

Variable = tuple  # (i, j) with i > j

DEFAULT_MAX_VARS = 15


class GuardExceeded(ValueError):
    pass


class MissingAssignment(KeyError):
    pass


def var_name(v: Variable) -> str:
    i, j = v
    return f"x{i}{j}" if i < 10 and j < 10 else f"x{i}_{j}"


class MonomialOrder:
    """Lex order over an explicit ranking of the variables (highest first)."""

    def __init__(self, variables: Sequence[Variable]):
        self.variables = tuple(tuple(v) for v in variables)
        if len(set(self.variables)) != len(self.variables):
            raise ValueError("duplicate variables in monomial order")
        self.position = {v: k for k, v in enumerate(self.variables)}
        self.nvars = len(self.variables)

    @classmethod
    def standard(cls, n: int) -> "MonomialOrder":
        vs = [(i, j) for i in range(1, n + 1) for j in range(1, i)]
        vs.sort(key=lambda v: (-(v[0] - v[1]), v[0]))
        return cls(vs)

    def var_greater(self, a: Variable, b: Variable) -> bool:
        return self.position[a] < self.position[b]

    def __eq__(self, other) -> bool:
        return isinstance(other, MonomialOrder) and self.variables == other.variables

    def __hash__(self) -> int:
        return hash(self.variables)

    def __repr__(self) -> str:
        return f"MonomialOrder({', '.join(var_name(v) for v in self.variables)})"

    @property
    def one(self) -> tuple:
        return (0,) * self.nvars

    def monomial(self, var: Variable, power: int = 1) -> tuple:
        e = [0] * self.nvars
        e[self.position[tuple(var)]] = power
        return tuple(e)


def _divides(a: tuple, b: tuple) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _mono_sub(a: tuple, b: tuple) -> tuple:
    return tuple(x - y for x, y in zip(a, b))


def _mono_add(a: tuple, b: tuple) -> tuple:
    return tuple(x + y for x, y in zip(a, b))


class Polynomial:
    """A polynomial with Fraction coefficients; zero terms are never stored."""

    __slots__ = ("order", "terms", "_lm")

    def __init__(self, order: MonomialOrder, terms: Optional[Mapping] = None):
        self.order = order
        self.terms = {m: Fraction(c) for m, c in (terms or {}).items() if c != 0}
        self._lm = None

    @classmethod
    def _raw(cls, order, terms):
        p = cls.__new__(cls)
        p.order, p.terms, p._lm = order, terms, None
        return p

    @classmethod
    def constant(cls, order: MonomialOrder, c) -> "Polynomial":
        return cls(order, {order.one: c})

    @classmethod
    def var(cls, order: MonomialOrder, v: Variable) -> "Polynomial":
        return cls._raw(order, {order.monomial(v): Fraction(1)})

    # -- ring operations ------------------------------------------------------

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other.order is not self.order and other.order != self.order:
                raise ValueError("polynomials over different variable universes")
            return other
        return Polynomial.constant(self.order, other)

    def __add__(self, other) -> "Polynomial":
        other = self._coerce(other)
        res = dict(self.terms)
        for m, c in other.terms.items():
            s = res.get(m, 0) + c
            if s:
                res[m] = s
            else:
                res.pop(m, None)
        return Polynomial._raw(self.order, res)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial._raw(self.order, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other) -> "Polynomial":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "Polynomial":
        return self._coerce(other) - self

    def __mul__(self, other) -> "Polynomial":
        if not isinstance(other, Polynomial):
            c = Fraction(other)
            if not c:
                return Polynomial._raw(self.order, {})
            return Polynomial._raw(self.order, {m: c * v for m, v in self.terms.items()})
        other = self._coerce(other)
        res: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = _mono_add(m1, m2)
                s = res.get(m, 0) + c1 * c2
                if s:
                    res[m] = s
                else:
                    res.pop(m, None)
        return Polynomial._raw(self.order, res)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Polynomial":
        out = Polynomial.constant(self.order, 1)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, Polynomial):
            try:
                other = self._coerce(other)
            except (TypeError, ValueError):
                return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    # -- leading data ---------------------------------------------------------

    def leading_monomial(self) -> tuple:
        if self._lm is None:
            if not self.terms:
                raise ValueError("the zero polynomial has no leading monomial")
            self._lm = max(self.terms)
        return self._lm

    def leading_coefficient(self) -> Fraction:
        return self.terms[self.leading_monomial()]

    def monic(self) -> "Polynomial":
        if not self.terms:
            return self
        return self * (1 / self.leading_coefficient())

    def degree(self) -> int:
        return max((sum(m) for m in self.terms), default=0)

    def variables_used(self) -> list:
        used = set()
        for m in self.terms:
            used.update(k for k, e in enumerate(m) if e)
        return [self.order.variables[k] for k in sorted(used)]

    def constant_term(self) -> Fraction:
        return self.terms.get(self.order.one, Fraction(0))

    # -- calculus and evaluation ---------------------------------------------

    def diff(self, v: Variable) -> "Polynomial":
        k = self.order.position[tuple(v)]
        res = {}
        for m, c in self.terms.items():
            if m[k]:
                e = list(m)
                e[k] -= 1
                res[tuple(e)] = c * m[k]
        return Polynomial._raw(self.order, res)

    def evaluate(self, point: Mapping) -> Fraction:
        """Exact value at ``point``, a mapping (i, j) -> rational."""
        vals = []
        for k, v in enumerate(self.order.variables):
            if v in point:
                vals.append(Fraction(point[v]))
            elif any(m[k] for m in self.terms):
                raise MissingAssignment(f"no value supplied for {var_name(v)}")
            else:
                vals.append(Fraction(0))
        total = Fraction(0)
        for m, c in self.terms.items():
            t = c
            for x, e in zip(vals, m):
                if e:
                    t *= x**e
            total += t
        return total

    # -- printing -------------------------------------------------------------

    def _mono_str(self, m: tuple) -> str:
        factors = sorted((v, m[k]) for k, v in enumerate(self.order.variables) if m[k])
        return "*".join(var_name(v) + (f"^{e}" if e > 1 else "") for v, e in factors)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        out = []
        for m in sorted(self.terms, reverse=True):
            c = self.terms[m]
            mono = self._mono_str(m)
            mag = abs(c)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            if not out:
                out.append(("-" if c < 0 else "") + body)
            else:
                out.append((" - " if c < 0 else " + ") + body)
        return "".join(out)

    def __repr__(self) -> str:
        return f"Polynomial({str(self)!r})"


# module-level spellings of the ring operations

def add(p: Polynomial, q: Polynomial) -> Polynomial:
    return p + q


def mul(p: Polynomial, q: Polynomial) -> Polynomial:
    return p * q


def scale(c, p: Polynomial) -> Polynomial:
    return p * Fraction(c)


def negate(p: Polynomial) -> Polynomial:
    return -p


def evaluate(p: Polynomial, point: Mapping) -> Fraction:
    return p.evaluate(point)


def partial_derivative(p: Polynomial, v: Variable) -> Polynomial:
    return p.diff(v)


_TOKEN = re.compile(r"\s*(?:(?P<num>\d+(?:/\d+)?)|(?P<var>x(?:\d+_\d+|\d\d))|(?P<op>[-+*^]))")


def _parse_var(tok: str) -> Variable:
    body = tok[1:]
    if "_" in body:
        i, j = body.split("_")
        return int(i), int(j)
    return int(body[0]), int(body[1])


def parse_polynomial(text: str, order: MonomialOrder) -> Polynomial:
    """Parse sums of signed products of rationals and variables, e.g. ``2*x21*x32^2 - 1/2``."""
    tokens = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse polynomial at {text[pos:]!r}")
        pos = m.end()
        kind = m.lastgroup
        tokens.append((kind, m.group(kind)))
    result = Polynomial(order)
    k = 0
    sign = 1
    expect_term = True
    while k < len(tokens):
        kind, tok = tokens[k]
        if expect_term and kind == "op" and tok in "+-":
            sign = -sign if tok == "-" else sign
            k += 1
            continue
        if not expect_term:
            if kind != "op" or tok not in "+-":
                raise ValueError(f"unexpected token {tok!r}")
            sign = -1 if tok == "-" else 1
            expect_term = True
            k += 1
            continue
        coeff = Fraction(sign)
        mono = list(order.one)
        while True:
            kind, tok = tokens[k]
            if kind == "num":
                coeff *= Fraction(tok)
                k += 1
            elif kind == "var":
                v = _parse_var(tok)
                if v not in order.position:
                    raise ValueError(f"unknown variable {tok}")
                power = 1
                k += 1
                if k < len(tokens) and tokens[k] == ("op", "^"):
                    if k + 1 >= len(tokens) or tokens[k + 1][0] != "num":
                        raise ValueError("exponent must be a nonnegative integer")
                    power = int(tokens[k + 1][1])
                    k += 2
                mono[order.position[v]] += power
            else:
                raise ValueError(f"unexpected token {tok!r}")
            if k < len(tokens) and tokens[k] == ("op", "*"):
                k += 1
                continue
            break
        result = result + Polynomial._raw(order, {tuple(mono): coeff})
        expect_term = False
        sign = 1
    if expect_term and tokens:
        raise ValueError("polynomial ends with an operator")
    return result


# -- division and Groebner bases ----------------------------------------------

def normal_form(p: Polynomial, basis: Sequence[Polynomial],
                order: Optional[MonomialOrder] = None) -> Polynomial:
    """Fully reduced remainder of ``p`` on division by ``basis``."""
    divisors = [(g.leading_monomial(), g.leading_coefficient(), g.terms) for g in basis if g]
    rem: dict = {}
    work = dict(p.terms)
    while work:
        lm = max(work)
        lc = work[lm]
        for glm, glc, gterms in divisors:
            if _divides(glm, lm):
                shift = _mono_sub(lm, glm)
                f = lc / glc
                for m, c in gterms.items():
                    mm = _mono_add(m, shift)
                    s = work.get(mm, 0) - f * c
                    if s:
                        work[mm] = s
                    else:
                        work.pop(mm, None)
                break
        else:
            rem[lm] = lc
            del work[lm]
    return Polynomial._raw(p.order, rem)


def s_polynomial(f: Polynomial, g: Polynomial) -> Polynomial:
    a, b = f.leading_monomial(), g.leading_monomial()
    lcm_m = tuple(max(x, y) for x, y in zip(a, b))
    fa = Polynomial._raw(f.order, {_mono_sub(lcm_m, a): 1 / f.leading_coefficient()})
    gb = Polynomial._raw(g.order, {_mono_sub(lcm_m, b): 1 / g.leading_coefficient()})
    return fa * f - gb * g


def _coprime(a: tuple, b: tuple) -> bool:
    return all(not (x and y) for x, y in zip(a, b))


def reduce_basis(G: Iterable[Polynomial]) -> list[Polynomial]:
    """Auto-reduce: minimal leading terms, tail-reduced, monic, sorted by leading monomial."""
    G = [g.monic() for g in G if g]
    G.sort(key=lambda g: g.leading_monomial())
    minimal = []
    for g in G:
        if not any(_divides(h.leading_monomial(), g.leading_monomial()) for h in minimal):
            minimal.append(g)
    out = []
    for k, g in enumerate(minimal):
        r = normal_form(g, minimal[:k] + minimal[k + 1:])
        out.append(r.monic())
    out.sort(key=lambda g: g.leading_monomial(), reverse=True)
    return out


def interreduce(polys: Iterable[Polynomial]) -> list[Polynomial]:
    """Reduce each polynomial by the others until nothing changes (not a Groebner basis)."""
    G = [p.monic() for p in polys if p]
    changed = True
    while changed:
        changed = False
        for k in range(len(G)):
            r = normal_form(G[k], G[:k] + G[k + 1:])
            if r != G[k]:
                changed = True
                G[k] = r.monic()
                break
        G = [g for g in G if g]
    G.sort(key=lambda g: g.leading_monomial(), reverse=True)
    return G


def buchberger(generators: Sequence[Polynomial], order: Optional[MonomialOrder] = None,
               max_vars: int = DEFAULT_MAX_VARS) -> list[Polynomial]:
    """Reduced Groebner basis with monic leading coefficients.

    Pairs are processed first-in first-out; only the coprime-leading-monomial
    criterion is used to skip pairs.
    """
    gens = [g for g in generators if g]
    if order is None and gens:
        order = gens[0].order
    if order is not None and order.nvars > max_vars:
        raise GuardExceeded(f"{order.nvars} variables exceeds the guard of {max_vars}")
    if order is not None and any(g.order != order for g in gens):
        raise ValueError("generators do not share the requested monomial order")
    G = [g.monic() for g in gens]
    pairs = deque((i, j) for j in range(len(G)) for i in range(j))
    while pairs:
        i, j = pairs.popleft()
        if _coprime(G[i].leading_monomial(), G[j].leading_monomial()):
            continue
        r = normal_form(s_polynomial(G[i], G[j]), G)
        if r:
            G.append(r.monic())
            pairs.extend((k, len(G) - 1) for k in range(len(G) - 1))
    return reduce_basis(G)


def is_groebner(basis: Sequence[Polynomial]) -> bool:
    B = [g for g in basis if g]
    return all(not normal_form(s_polynomial(B[i], B[j]), B)
               for j in range(len(B)) for i in range(j))


def is_squarefree_leading(basis: Sequence[Polynomial]) -> bool:
    return all(max(g.leading_monomial(), default=0) <= 1 for g in basis if g)


def same_ideal(F: Sequence[Polynomial], G: Sequence[Polynomial]) -> bool:
    """Equality of ideals by mutual normal-form reduction against Groebner bases."""
    gf, gg = buchberger(F), buchberger(G)
    return (all(not normal_form(p, gg) for p in F if p)
            and all(not normal_form(p, gf) for p in G if p))


# -- matrices over the polynomial ring ----------------------------------------

def identity_matrix(order: MonomialOrder, n: int) -> list:
    return [[Polynomial.constant(order, 1 if i == j else 0) for j in range(n)] for i in range(n)]


def mat_mul(a: Sequence[Sequence[Polynomial]], b: Sequence[Sequence[Polynomial]]) -> list:
    n, m, p = len(a), len(b), len(b[0])
    out = []
    for i in range(n):
        row = []
        for j in range(p):
            acc = Polynomial(a[i][0].order)
            for k in range(m):
                if a[i][k] and b[k][j]:
                    acc = acc + a[i][k] * b[k][j]
            row.append(acc)
        out.append(row)
    return out


def unipotent_inverse(m: Sequence[Sequence[Polynomial]]) -> list:
    """Inverse of a lower unitriangular polynomial matrix by forward substitution."""
    n = len(m)
    for i in range(n):
        if len(m[i]) != n:
            raise ValueError("matrix is not square")
        if m[i][i] != 1 or any(m[i][j] for j in range(i + 1, n)):
            raise ValueError("matrix is not lower unitriangular")
    order = m[0][0].order
    inv = identity_matrix(order, n)
    for j in range(n):
        for i in range(j + 1, n):
            acc = Polynomial(order)
            for k in range(j, i):
                if m[i][k] and inv[k][j]:
                    acc = acc + m[i][k] * inv[k][j]
            inv[i][j] = -acc
    return inv


def charpoly_coefficients(a: Sequence[Sequence[Polynomial]]) -> list[Polynomial]:
    """Coefficients c_0..c_n of det(t*I - A) by the Faddeev-LeVerrier recursion."""
    n = len(a)
    order = a[0][0].order
    coeffs = [Polynomial(order)] * (n + 1)
    coeffs[n] = Polynomial.constant(order, 1)
    ident = identity_matrix(order, n)
    mk = [[Polynomial(order) for _ in range(n)] for _ in range(n)]
    for k in range(1, n + 1):
        am = mat_mul(a, mk)
        mk = [[am[i][j] + (ident[i][j] * coeffs[n - k + 1] if i == j else 0)
               for j in range(n)] for i in range(n)]
        prod = mat_mul(a, mk)
        trace = Polynomial(order)
        for i in range(n):
            trace = trace + prod[i][i]
        coeffs[n - k] = trace * Fraction(-1, k)
    return coeffs


def jacobian(polys: Sequence[Polynomial], order: MonomialOrder) -> list:
    return [[p.diff(v) for v in order.variables] for p in polys]


def rational_rank(rows: Sequence[Sequence[Fraction]]) -> int:
    """Exact rank of a rational matrix; rows are cleared to integers first."""
    ints = []
    for row in rows:
        row = [Fraction(x) for x in row]
        d = lcm(*(x.denominator for x in row)) if row else 1
        ints.append([int(x * d) for x in row])
    return kernels.bareiss_rank(ints)


def rank_at(matrix: Sequence[Sequence[Polynomial]], point: Mapping) -> int:
    """Exact rank of a polynomial matrix evaluated at ``point``."""
    return rational_rank([[p.evaluate(point) for p in row] for row in matrix])
