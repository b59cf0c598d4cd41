"""Exact arithmetic in Q(zeta_m), the field of m-th cyclotomic rationals.

A scalar is a rational polynomial in zeta = exp(2*pi*i/m), stored as a
length-m coefficient vector that is canonically reduced modulo the m-th
cyclotomic polynomial (entries at degree >= phi(m) are zero after
reduction).  Equality is componentwise on the canonical vector.  The m
roots of x**m - 1 are enumerated as xi_k = zeta**(k-1) for k = 1..m.
"""

from __future__ import annotations

import cmath
from fractions import Fraction
from functools import lru_cache

Rational = Fraction

_F0 = Fraction(0)
_F1 = Fraction(1)


def _poly_divmod(num: list, den: list) -> tuple[list, list]:
    """Quotient and remainder of polynomial division (ascending coefficients)."""
    num = list(num)
    while den and not den[-1]:
        den = den[:-1]
    if not den:
        raise ZeroDivisionError("polynomial division by zero")
    dd = len(den) - 1
    lead = den[-1]
    if len(num) <= dd:
        return [], num
    quot = [_F0] * (len(num) - dd)
    for k in range(len(num) - 1, dd - 1, -1):
        c = num[k]
        if not c:
            continue
        q = Fraction(c) / lead
        quot[k - dd] = q
        for j, d in enumerate(den):
            num[k - dd + j] -= q * d
    return quot, num[:dd]


@lru_cache(maxsize=None)
def cyclotomic_polynomial(m: int) -> tuple[int, ...]:
    """Coefficients of the m-th cyclotomic polynomial, ascending and monic."""
    if m < 1:
        raise ValueError(f"order must be a positive integer, got {m}")
    # x^m - 1 is the product of the d-th cyclotomic polynomials over d | m.
    poly = [Fraction(-1)] + [_F0] * (m - 1) + [_F1]
    for d in range(1, m):
        if m % d == 0:
            quot, rem = _poly_divmod(poly, [Fraction(c) for c in cyclotomic_polynomial(d)])
            if any(rem):
                raise ArithmeticError("cyclotomic division left a remainder")
            poly = quot
    result = tuple(int(c) for c in poly)
    if any(Fraction(r) != c for r, c in zip(result, poly)):
        raise ArithmeticError("cyclotomic polynomial has non-integer coefficients")
    return result


@lru_cache(maxsize=None)
def _phi_degree(m: int) -> int:
    return len(cyclotomic_polynomial(m)) - 1


def _reduce_mod_phi(coeffs: list, m: int) -> tuple[Fraction, ...]:
    """Canonical length-m vector: remainder mod Phi_m, zero-padded."""
    phi = cyclotomic_polynomial(m)
    dd = len(phi) - 1
    vec = [Fraction(c) for c in coeffs]
    for k in range(len(vec) - 1, dd - 1, -1):
        c = vec[k]
        if not c:
            continue
        vec[k] = _F0
        for j in range(dd):
            vec[k - dd + j] -= c * phi[j]
    vec = vec[:m]
    vec.extend([_F0] * (m - len(vec)))
    return tuple(vec)


class CycRat:
    """An element of Q(zeta_m).

    Instances are immutable and hashable; arithmetic lifts int and Fraction
    operands of the same order automatically.
    """

    __slots__ = ("m", "coeffs")

    def __init__(self, m: int, coeffs) -> None:
        if m < 1:
            raise ValueError(f"order must be a positive integer, got {m}")
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "coeffs", _reduce_mod_phi(list(coeffs), m))

    def __setattr__(self, name, value):
        raise AttributeError("CycRat is immutable")

    @classmethod
    def from_rational(cls, m: int, value) -> CycRat:
        return cls(m, [Fraction(value)] + [_F0] * (m - 1))

    @classmethod
    def zero(cls, m: int) -> CycRat:
        return _zero(m)

    @classmethod
    def one(cls, m: int) -> CycRat:
        return _one(m)

    def _lift(self, other):
        if isinstance(other, CycRat):
            if other.m != self.m:
                raise ValueError(f"mixed orders {self.m} and {other.m}")
            return other
        if isinstance(other, (int, Fraction)):
            return CycRat.from_rational(self.m, other)
        return None

    def __bool__(self) -> bool:
        return any(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = CycRat.from_rational(self.m, other)
        if not isinstance(other, CycRat):
            return NotImplemented
        return self.m == other.m and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((CycRat, self.m, self.coeffs))

    def __add__(self, other) -> CycRat:
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return CycRat(self.m, [a + b for a, b in zip(self.coeffs, o.coeffs)])

    __radd__ = __add__

    def __neg__(self) -> CycRat:
        return CycRat(self.m, [-a for a in self.coeffs])

    def __sub__(self, other) -> CycRat:
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return CycRat(self.m, [a - b for a, b in zip(self.coeffs, o.coeffs)])

    def __rsub__(self, other) -> CycRat:
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other) -> CycRat:
        o = self._lift(other)
        if o is None:
            return NotImplemented
        if self.is_rational():
            r = self.coeffs[0]
            return CycRat(self.m, [r * b for b in o.coeffs])
        if o.is_rational():
            r = o.coeffs[0]
            return CycRat(self.m, [r * a for a in self.coeffs])
        out = [_F0] * (2 * self.m)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(o.coeffs):
                if b:
                    out[i + j] += a * b
        return CycRat(self.m, out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> CycRat:
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = CycRat.one(self.m)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __truediv__(self, other) -> CycRat:
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other) -> CycRat:
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def conjugate(self) -> CycRat:
        """Complex conjugation: the coefficient at zeta^k moves to zeta^((m-k) mod m)."""
        out = [_F0] * self.m
        for k, a in enumerate(self.coeffs):
            out[(self.m - k) % self.m] += a
        return CycRat(self.m, out)

    def inverse(self) -> CycRat:
        """Exact inverse in Q(zeta_m); raises on zero."""
        if not self:
            raise ValueError("zero has no inverse")
        phi = [Fraction(c) for c in cyclotomic_polynomial(self.m)]
        dd = len(phi) - 1
        a = list(self.coeffs[:max(dd, 1)])
        # extended Euclid on (a, Phi_m); Phi_m is irreducible so the gcd is a constant
        r0, r1 = phi, a
        t0, t1 = [_F0], [_F1]
        while any(r1):
            q, r = _poly_divmod(r0, r1)
            r0, r1 = r1, r
            prod = [_F0] * (len(q) + len(t1))
            for i, qc in enumerate(q):
                if not qc:
                    continue
                for j, tc in enumerate(t1):
                    prod[i + j] += qc * tc
            width = max(len(t0), len(prod))
            t0, t1 = t1, [
                (t0[k] if k < len(t0) else _F0) - (prod[k] if k < len(prod) else _F0)
                for k in range(width)
            ]
        while r0 and not r0[-1]:
            r0 = r0[:-1]
        if len(r0) != 1:
            raise ArithmeticError("gcd with the cyclotomic polynomial is not constant")
        g = r0[0]
        return CycRat(self.m, [c / g for c in t0])

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def rational_value(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self!r} is not rational")
        return self.coeffs[0]

    def to_complex(self) -> complex:
        """Evaluate at zeta = exp(2*pi*i/m)."""
        total = 0j
        for k, a in enumerate(self.coeffs):
            if a:
                total += float(a) * cmath.exp(2j * cmath.pi * k / self.m)
        return total

    def __repr__(self) -> str:
        if self.is_rational():
            return f"CycRat({self.m}, {str(self.coeffs[0])!r})"
        terms = []
        for k, a in enumerate(self.coeffs):
            if not a:
                continue
            if k == 0:
                terms.append(str(a))
            else:
                terms.append(f"{a}*z^{k}" if a != 1 else f"z^{k}")
        return f"CycRat({self.m}, {' + '.join(terms)})"


@lru_cache(maxsize=None)
def _zero(m: int) -> CycRat:
    return CycRat(m, [_F0] * m)


@lru_cache(maxsize=None)
def _one(m: int) -> CycRat:
    return CycRat(m, [_F1] + [_F0] * (m - 1))


@lru_cache(maxsize=None)
def root_of_unity(m: int, k: int) -> CycRat:
    """The k-th root of unity xi_k = zeta**(k-1), for k in [1, m]."""
    if not isinstance(k, int) or not (1 <= k <= m):
        raise ValueError(f"root index must lie in [1, {m}], got {k}")
    vec = [_F0] * m
    vec[k - 1] = _F1
    return CycRat(m, vec)


def all_roots(m: int) -> tuple[CycRat, ...]:
    return tuple(root_of_unity(m, k) for k in range(1, m + 1))


def root_index(value: CycRat) -> int:
    """Recover k with xi_k == value; raises if value is not an m-th root."""
    for k in range(1, value.m + 1):
        if value == root_of_unity(value.m, k):
            return k
    raise ValueError(f"{value!r} is not one of the {value.m} roots of unity")


def scalar_inverse(a: CycRat) -> CycRat:
    """Inverse of a nonzero scalar; raises ValueError on zero."""
    return a.inverse()
