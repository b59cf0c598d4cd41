"""The wreath product C_m wr S_n: normal forms, group algebra, special elements.

Elements are written in the normal form t_1^{r_1} ... t_n^{r_n} * w with
t_1 = t and t_{i+1} = s_i t_i s_i, so an element is a residue vector mod m
together with a permutation in one-line notation.  Permutations act on
positions: (w . r)_j = r_{w^{-1}(j)}, and composition is function
application, (w o w')(x) = w(w'(x)).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations, product

from .cyclo import CycRat, Rational

DEFAULT_ENUMERATION_CAP = 10 ** 6


@dataclass(frozen=True)
class GroupElement:
    m: int
    n: int
    residues: tuple[int, ...]
    perm: tuple[int, ...]

    def __post_init__(self):
        if len(self.residues) != self.n or len(self.perm) != self.n:
            raise ValueError("residues and perm must have length n")
        if any(not (0 <= r < self.m) for r in self.residues):
            raise ValueError(f"residues must be reduced mod {self.m}")
        if sorted(self.perm) != list(range(1, self.n + 1)):
            raise ValueError(f"{self.perm} is not a permutation of 1..{self.n}")

    def __mul__(self, other: GroupElement) -> GroupElement:
        if not isinstance(other, GroupElement):
            return NotImplemented
        if (self.m, self.n) != (other.m, other.n):
            raise ValueError("cannot multiply elements of different groups")
        w, r, rp = self.perm, self.residues, other.residues
        inv = [0] * self.n
        for pos, val in enumerate(w):
            inv[val - 1] = pos
        residues = tuple((r[j] + rp[inv[j]]) % self.m for j in range(self.n))
        perm = tuple(w[other.perm[x] - 1] for x in range(self.n))
        return GroupElement(self.m, self.n, residues, perm)

    def inverse(self) -> GroupElement:
        w = self.perm
        residues = tuple((-self.residues[w[j] - 1]) % self.m for j in range(self.n))
        inv = [0] * self.n
        for pos, val in enumerate(w):
            inv[val - 1] = pos + 1
        return GroupElement(self.m, self.n, residues, tuple(inv))

    def __pow__(self, exponent: int) -> GroupElement:
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = identity(self.m, self.n)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def sort_key(self):
        return (self.residues, self.perm)

    def is_identity(self) -> bool:
        return not any(self.residues) and self.perm == tuple(range(1, self.n + 1))


def identity(m: int, n: int) -> GroupElement:
    return GroupElement(m, n, (0,) * n, tuple(range(1, n + 1)))


def gen_t(m: int, n: int) -> GroupElement:
    if n < 1:
        raise ValueError("t requires n >= 1")
    return GroupElement(m, n, (1 % m,) + (0,) * (n - 1), tuple(range(1, n + 1)))


def gen_s(m: int, n: int, i: int) -> GroupElement:
    if not 1 <= i <= n - 1:
        raise ValueError(f"s index must lie in [1, {n - 1}], got {i}")
    perm = list(range(1, n + 1))
    perm[i - 1], perm[i] = perm[i], perm[i - 1]
    return GroupElement(m, n, (0,) * n, tuple(perm))


def gen_ti(m: int, n: int, i: int) -> GroupElement:
    """The reflection t_i = s_{i-1} ... s_1 t s_1 ... s_{i-1}."""
    if not 1 <= i <= n:
        raise ValueError(f"t index must lie in [1, {n}], got {i}")
    residues = [0] * n
    residues[i - 1] = 1 % m
    return GroupElement(m, n, tuple(residues), tuple(range(1, n + 1)))


def _parse_token(m: int, n: int, token: str) -> GroupElement:
    base, _, exp = token.partition("^")
    exponent = int(exp) if exp else 1
    if base == "t":
        g = gen_t(m, n)
    elif base.startswith("s") and base[1:].isdigit():
        g = gen_s(m, n, int(base[1:]))
    else:
        raise ValueError(f"unknown word letter {token!r}")
    return g ** exponent


def evaluate_word(m: int, n: int, word) -> GroupElement:
    """Evaluate a word over {t, s_1..s_{n-1}}; tokens allow ^k exponents.

    Accepts a whitespace-separated string such as "t s1 t^-1" or an
    iterable of tokens.
    """
    tokens = word.split() if isinstance(word, str) else list(word)
    result = identity(m, n)
    for token in tokens:
        result = result * _parse_token(m, n, token)
    return result


def group_order(m: int, n: int) -> int:
    return m ** n * math.factorial(n)


def enumerate_group(m: int, n: int, cap: int = DEFAULT_ENUMERATION_CAP) -> list[GroupElement]:
    """All elements in canonical order (residues lex, then one-line perm lex)."""
    order = group_order(m, n)
    if order > cap:
        raise ValueError(f"group order {order} exceeds the enumeration cap {cap}")
    return [
        GroupElement(m, n, residues, perm)
        for residues in product(range(m), repeat=n)
        for perm in permutations(range(1, n + 1))
    ]


def defining_relations(m: int, n: int) -> list[tuple[str, tuple[str, ...], tuple[str, ...]]]:
    """Named (lhs word, rhs word) pairs presenting the group."""
    rels: list[tuple[str, tuple[str, ...], tuple[str, ...]]] = []
    for i in range(1, n - 1):
        rels.append((f"braid s{i} s{i + 1}",
                     (f"s{i}", f"s{i + 1}", f"s{i}"),
                     (f"s{i + 1}", f"s{i}", f"s{i + 1}")))
    for i in range(1, n):
        for j in range(i + 2, n):
            rels.append((f"commute s{i} s{j}", (f"s{i}", f"s{j}"), (f"s{j}", f"s{i}")))
    for i in range(1, n):
        rels.append((f"involution s{i}", (f"s{i}", f"s{i}"), ()))
    if n >= 2:
        rels.append(("mixed braid t s1", ("t", "s1", "t", "s1"), ("s1", "t", "s1", "t")))
    for i in range(2, n):
        rels.append((f"commute t s{i}", ("t", f"s{i}"), (f"s{i}", "t")))
    rels.append((f"t^{m}", (f"t^{m}",), ()))
    return rels


def _as_coefficient(m: int, value) -> CycRat:
    if isinstance(value, CycRat):
        if value.m != m:
            raise ValueError(f"coefficient order {value.m} does not match {m}")
        return value
    if isinstance(value, (int, Fraction)):
        return CycRat.from_rational(m, value)
    raise TypeError(f"cannot use {type(value).__name__} as a coefficient")


class AlgebraElement:
    """A finitely supported CycRat-linear combination of group elements."""

    __slots__ = ("m", "n", "terms")

    def __init__(self, m: int, n: int, terms=None) -> None:
        self.m = m
        self.n = n
        clean: dict[GroupElement, CycRat] = {}
        if terms:
            for g, c in (terms.items() if isinstance(terms, dict) else terms):
                if (g.m, g.n) != (m, n):
                    raise ValueError("group element does not match the algebra")
                coeff = _as_coefficient(m, c)
                if g in clean:
                    coeff = clean[g] + coeff
                if coeff:
                    clean[g] = coeff
                elif g in clean:
                    del clean[g]
        self.terms = clean

    @classmethod
    def zero(cls, m: int, n: int) -> AlgebraElement:
        return cls(m, n)

    @classmethod
    def one(cls, m: int, n: int) -> AlgebraElement:
        return cls.basis(identity(m, n))

    @classmethod
    def basis(cls, g: GroupElement, coeff=1) -> AlgebraElement:
        return cls(g.m, g.n, [(g, coeff)])

    def coefficient(self, g: GroupElement) -> CycRat:
        return self.terms.get(g, CycRat.zero(self.m))

    def sorted_terms(self) -> list[tuple[GroupElement, CycRat]]:
        return sorted(self.terms.items(), key=lambda item: item[0].sort_key())

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction, CycRat)):
            other = AlgebraElement.one(self.m, self.n) * other
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return (self.m, self.n) == (other.m, other.n) and self.terms == other.terms

    def __hash__(self):
        return hash((self.m, self.n, frozenset(self.terms.items())))

    def _check_compatible(self, other: AlgebraElement):
        if (self.m, self.n) != (other.m, other.n):
            raise ValueError("algebra elements live over different groups")

    def __add__(self, other) -> AlgebraElement:
        if isinstance(other, (int, Fraction, CycRat)):
            other = AlgebraElement.one(self.m, self.n) * other
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        self._check_compatible(other)
        terms = dict(self.terms)
        for g, c in other.terms.items():
            acc = terms.get(g)
            acc = c if acc is None else acc + c
            if acc:
                terms[g] = acc
            elif g in terms:
                del terms[g]
        out = AlgebraElement(self.m, self.n)
        out.terms = terms
        return out

    __radd__ = __add__

    def __neg__(self) -> AlgebraElement:
        out = AlgebraElement(self.m, self.n)
        out.terms = {g: -c for g, c in self.terms.items()}
        return out

    def __sub__(self, other) -> AlgebraElement:
        return self + (-other if isinstance(other, AlgebraElement) else -1 * other)

    def __rsub__(self, other) -> AlgebraElement:
        return (-self) + other

    def __mul__(self, other) -> AlgebraElement:
        if isinstance(other, AlgebraElement):
            self._check_compatible(other)
            terms: dict[GroupElement, CycRat] = {}
            for g, a in self.terms.items():
                for h, b in other.terms.items():
                    gh = g * h
                    c = a * b
                    acc = terms.get(gh)
                    acc = c if acc is None else acc + c
                    if acc:
                        terms[gh] = acc
                    elif gh in terms:
                        del terms[gh]
            out = AlgebraElement(self.m, self.n)
            out.terms = terms
            return out
        coeff = _as_coefficient(self.m, other)
        if not coeff:
            return AlgebraElement.zero(self.m, self.n)
        out = AlgebraElement(self.m, self.n)
        out.terms = {g: c * coeff for g, c in self.terms.items()}
        return out

    def __rmul__(self, other) -> AlgebraElement:
        # scalars commute with everything; group-valued left factors use __mul__
        return self * other

    def __pow__(self, exponent: int) -> AlgebraElement:
        if exponent < 0:
            raise ValueError("negative powers are not defined in the group algebra")
        result = AlgebraElement.one(self.m, self.n)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __repr__(self) -> str:
        if not self.terms:
            return f"AlgebraElement({self.m}, {self.n}, 0)"
        bits = [f"({c!r})*{g.residues}{g.perm}" for g, c in self.sorted_terms()]
        return " + ".join(bits)


def commutator(a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    return a * b - b * a


def jm_j(m: int, n: int, i: int) -> AlgebraElement:
    """Jucys-Murphy element j_i: j_1 = t and j_{i+1} = s_i j_i s_i."""
    if not 1 <= i <= n:
        raise ValueError(f"index must lie in [1, {n}], got {i}")
    g = gen_t(m, n)
    for k in range(1, i):
        s = gen_s(m, n, k)
        g = s * g * s
    return AlgebraElement.basis(g)


def jm_jtilde(m: int, n: int, i: int) -> AlgebraElement:
    """Jucys-Murphy element with zero initial condition.

    j~_1 = 0 and j~_{i+1} = s_i j~_i s_i + (1/m) sum_{p=1..m} j_i^p s_i j_i^{-p}.
    """
    if not 1 <= i <= n:
        raise ValueError(f"index must lie in [1, {n}], got {i}")
    result = AlgebraElement.zero(m, n)
    inv_m = Fraction(1, m)
    for k in range(1, i):
        s = AlgebraElement.basis(gen_s(m, n, k))
        t_k = gen_ti(m, n, k)
        mixed = AlgebraElement.zero(m, n)
        for p in range(1, m + 1):
            mixed = mixed + AlgebraElement.basis((t_k ** p) * gen_s(m, n, k) * (t_k ** (-p)))
        result = s * result * s + inv_m * mixed
    return result


def projector(m: int, n: int, i: int) -> AlgebraElement:
    """The idempotent P_i = (1/m) sum_{p=1..m} j_{i-1}^p j_i^{-p}, for 2 <= i <= n."""
    if not 2 <= i <= n:
        raise ValueError(f"index must lie in [2, {n}], got {i}")
    a = gen_ti(m, n, i - 1)
    b = gen_ti(m, n, i)
    total = AlgebraElement.zero(m, n)
    for p in range(1, m + 1):
        total = total + AlgebraElement.basis((a ** p) * (b ** (-p)))
    return Fraction(1, m) * total


def intertwiner(m: int, n: int, i: int) -> AlgebraElement:
    """The intertwiner u~_{i+1} = s_i j~_i - j~_i s_i, for 1 <= i <= n-1.

    Both closed forms (the commutator and s_i(j~_i - j~_{i+1}) + P_{i+1})
    are computed and must agree.
    """
    if not 1 <= i <= n - 1:
        raise ValueError(f"index must lie in [1, {n - 1}], got {i}")
    s = AlgebraElement.basis(gen_s(m, n, i))
    jt_i = jm_jtilde(m, n, i)
    first = s * jt_i - jt_i * s
    second = s * (jt_i - jm_jtilde(m, n, i + 1)) + projector(m, n, i + 1)
    if first != second:
        raise ArithmeticError(
            f"intertwiner closed forms disagree at (m={m}, n={n}, i={i})"
        )
    return first


def baxterize(m: int, n: int, i: int, alpha, beta) -> AlgebraElement:
    """The spectral-parameter element s_i + 1/(alpha - beta)."""
    alpha, beta = Fraction(alpha), Fraction(beta)
    if alpha == beta:
        raise ValueError("spectral parameters must be distinct")
    return AlgebraElement.basis(gen_s(m, n, i)) + AlgebraElement.one(m, n) * (
        Fraction(1) / (alpha - beta)
    )
