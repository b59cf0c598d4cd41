"""Dense exact matrices over Q(zeta_m).

Small dimensions, exact arithmetic; multiplication skips zero entries so
products against sparse generator matrices stay cheap.
"""

from __future__ import annotations

from fractions import Fraction

from .cyclo import CycRat


def _lift_entry(m: int, value) -> CycRat:
    if isinstance(value, CycRat):
        if value.m != m:
            raise ValueError(f"entry order {value.m} does not match matrix order {m}")
        return value
    return CycRat.from_rational(m, Fraction(value))


class Matrix:
    __slots__ = ("m", "dim", "rows")

    def __init__(self, m: int, rows) -> None:
        rows = tuple(tuple(_lift_entry(m, v) for v in row) for row in rows)
        dim = len(rows)
        if any(len(row) != dim for row in rows):
            raise ValueError("matrix must be square")
        self.m = m
        self.dim = dim
        self.rows = rows

    @classmethod
    def zeros(cls, m: int, dim: int) -> Matrix:
        zero = CycRat.zero(m)
        return cls(m, [[zero] * dim for _ in range(dim)])

    @classmethod
    def identity(cls, m: int, dim: int) -> Matrix:
        zero, one = CycRat.zero(m), CycRat.one(m)
        return cls(m, [[one if i == j else zero for j in range(dim)] for i in range(dim)])

    @classmethod
    def diagonal(cls, m: int, entries) -> Matrix:
        entries = [_lift_entry(m, v) for v in entries]
        zero = CycRat.zero(m)
        dim = len(entries)
        return cls(
            m, [[entries[i] if i == j else zero for j in range(dim)] for i in range(dim)]
        )

    def _check(self, other: Matrix):
        if self.m != other.m or self.dim != other.dim:
            raise ValueError("matrix shapes or scalar orders differ")

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.m == other.m and self.rows == other.rows

    def __hash__(self):
        return hash((self.m, self.rows))

    def __add__(self, other: Matrix) -> Matrix:
        self._check(other)
        return Matrix(
            self.m,
            [
                [a + b for a, b in zip(ra, rb)]
                for ra, rb in zip(self.rows, other.rows)
            ],
        )

    def __sub__(self, other: Matrix) -> Matrix:
        self._check(other)
        return Matrix(
            self.m,
            [
                [a - b for a, b in zip(ra, rb)]
                for ra, rb in zip(self.rows, other.rows)
            ],
        )

    def __neg__(self) -> Matrix:
        return Matrix(self.m, [[-a for a in row] for row in self.rows])

    def __mul__(self, other):
        if isinstance(other, Matrix):
            self._check(other)
            dim = self.dim
            zero = CycRat.zero(self.m)
            out = [[zero] * dim for _ in range(dim)]
            orows = other.rows
            for i, arow in enumerate(self.rows):
                orow_out = out[i]
                for k, a in enumerate(arow):
                    if not a:
                        continue
                    for j, b in enumerate(orows[k]):
                        if b:
                            orow_out[j] = orow_out[j] + a * b
            return Matrix(self.m, out)
        coeff = _lift_entry(self.m, other)
        return Matrix(self.m, [[a * coeff for a in row] for row in self.rows])

    def __rmul__(self, other) -> Matrix:
        return self * other

    def __pow__(self, exponent: int) -> Matrix:
        if exponent < 0:
            raise ValueError("negative matrix powers are not supported")
        result = Matrix.identity(self.m, self.dim)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def transpose(self) -> Matrix:
        return Matrix(self.m, list(zip(*self.rows)))

    def conjugate_transpose(self) -> Matrix:
        return Matrix(
            self.m,
            [[self.rows[j][i].conjugate() for j in range(self.dim)] for i in range(self.dim)],
        )

    def entry(self, i: int, j: int) -> CycRat:
        return self.rows[i][j]

    def is_zero(self) -> bool:
        return not any(any(row) for row in self.rows)

    def is_diagonal(self) -> bool:
        return all(
            not v for i, row in enumerate(self.rows) for j, v in enumerate(row) if i != j
        )

    def diagonal_entries(self) -> tuple[CycRat, ...]:
        return tuple(self.rows[i][i] for i in range(self.dim))

    def __repr__(self) -> str:
        return f"Matrix({self.m}, dim={self.dim})"
