"""Primitive idempotents of the group algebra, built by adding one entry at a time.

For a standard tableau X the projector p_X is the product, along the chain
of subtableaux, of Lagrange-style factors in the Jucys-Murphy elements:
at step k the addable nodes beta of the previous shape contribute
(j~_k - c(beta))/(c(alpha) - c(beta)) when contents differ and
(j_k - p(beta))/(p(alpha) - p(beta)) when roots differ, alpha being the
node that receives k.  The family is a complete set of pairwise
orthogonal primitive idempotents.
"""

from __future__ import annotations

import math
from fractions import Fraction

import numpy as np

from .certificates import Certificate, Check
from .cyclo import CycRat, cyclotomic_polynomial
from .groups import (
    AlgebraElement,
    enumerate_group,
    gen_s,
    gen_t,
    jm_j,
    jm_jtilde,
)
from .reps import Representation, all_representations
from .tableaux import (
    MTableau,
    addable_nodes,
    content_column,
    content_string,
    enum_mpartitions,
    enum_standard_mtableaux,
    node_content,
)

GROUP_ALGEBRA_CAPS = {1: 5, 2: 4, 3: 3}


def _chain(tab: MTableau):
    """Subtableaux of X: yields (previous shape, node receiving k, k) for k = 1..n."""
    steps = []
    current = tab
    for k in range(tab.n, 0, -1):
        node = current.node_of(k)
        current = current.remove_last()
        steps.append((current.shape, node, k))
    steps.reverse()
    return steps


def build_idempotent(tab: MTableau) -> AlgebraElement:
    """The group-algebra projector attached to a standard tableau."""
    m, n = tab.m, tab.n
    result = AlgebraElement.one(m, n)
    for shape, alpha, k in _chain(tab):
        alpha_col = content_column(shape.add(alpha), alpha)
        jt = jm_jtilde(m, n, k)
        jj = jm_j(m, n, k)
        one = AlgebraElement.one(m, n)
        for beta in addable_nodes(shape):
            c_beta = node_content(beta)
            if c_beta != alpha_col.c:
                denom = Fraction(alpha_col.c - c_beta)
                result = result * ((jt - one * c_beta) * (1 / denom))
            p_beta = content_column(shape.add(beta), beta).p
            if p_beta != alpha_col.p:
                scale = (alpha_col.p - p_beta).inverse()
                result = result * ((jj - one * p_beta) * scale)
    return result


def build_idempotent_table(m: int, n: int) -> dict[MTableau, AlgebraElement]:
    table = {}
    for shape in enum_mpartitions(m, n):
        for tab in enum_standard_mtableaux(shape):
            table[tab] = build_idempotent(tab)
    return table


def within_group_algebra_caps(m: int, n: int) -> bool:
    return n <= GROUP_ALGEBRA_CAPS.get(m, 0)


class _DenseKernel:
    """Cayley-table convolution on integer coefficient vectors.

    Algebra elements are encoded per zeta-power component (degree < phi(m))
    as integer numerator arrays over a common denominator; products use
    int64 when an exact bound allows it and Python objects otherwise.
    """

    def __init__(self, m: int, n: int):
        self.m = m
        self.n = n
        self.elements = enumerate_group(m, n)
        self.index = {g: i for i, g in enumerate(self.elements)}
        self.size = len(self.elements)
        self.phi = len(cyclotomic_polynomial(m)) - 1
        table = np.empty((self.size, self.size), dtype=np.int32)
        for i, g in enumerate(self.elements):
            row = table[i]
            for j, h in enumerate(self.elements):
                row[j] = self.index[g * h]
        self.table = table
        # zeta^i * zeta^j expanded over the canonical basis, as integers
        self.struct = [
            [self._reduce_power(i + j) for j in range(self.phi)] for i in range(self.phi)
        ]

    def _reduce_power(self, k: int) -> tuple[int, ...]:
        coeffs = CycRat(self.m, [0] * k + [1] + [0] * max(self.m - k - 1, 0)).coeffs
        out = []
        for c in coeffs[: self.phi]:
            if c.denominator != 1:
                raise ArithmeticError("cyclotomic reduction of a power is not integral")
            out.append(c.numerator)
        return tuple(out)

    def encode(self, a: AlgebraElement):
        """(denominator, integer comps with shape (phi, size))."""
        denom = 1
        for coeff in a.terms.values():
            for c in coeff.coeffs[: self.phi]:
                denom = denom * c.denominator // math.gcd(denom, c.denominator)
        comps = np.zeros((self.phi, self.size), dtype=object)
        for g, coeff in a.terms.items():
            col = self.index[g]
            for comp in range(self.phi):
                c = coeff.coeffs[comp]
                comps[comp, col] = int(c * denom)
        return denom, comps

    def _max_abs(self, comps) -> int:
        worst = 0
        for comp in range(self.phi):
            for v in comps[comp]:
                a = -v if v < 0 else v
                if a > worst:
                    worst = a
        return int(worst)

    def convolve(self, comps_a, comps_b):
        """Numerator arrays of the product (denominators multiply outside)."""
        max_struct = max(
            (abs(c) for row in self.struct for cell in row for c in cell), default=1
        )
        bound = (
            self._max_abs(comps_a)
            * self._max_abs(comps_b)
            * self.size
            * self.phi
            * self.phi
            * max(max_struct, 1)
        )
        use_int64 = bound < 2 ** 62
        dtype = np.int64 if use_int64 else object
        out = np.zeros((self.phi, self.size), dtype=dtype)
        a = comps_a.astype(dtype) if use_int64 else comps_a
        b = comps_b.astype(dtype) if use_int64 else comps_b
        for ci in range(self.phi):
            arow = a[ci]
            support = np.nonzero(arow)[0]
            for cj in range(self.phi):
                brow = b[cj]
                if not brow.any():
                    continue
                struct = self.struct[ci][cj]
                for i in support:
                    contrib = arow[i] * brow
                    targets = self.table[i]
                    for ck, s in enumerate(struct):
                        if s:
                            out[ck][targets] += s * contrib
        return out

    def is_zero(self, comps) -> bool:
        return not any(comps[comp].any() for comp in range(self.phi))

    def equals_scaled(self, comps, reference, scale: int) -> bool:
        """comps == scale * reference, exactly."""
        for comp in range(self.phi):
            left = comps[comp]
            right = reference[comp]
            for j in range(self.size):
                if int(left[j]) != scale * int(right[j]):
                    return False
        return True


def verify_idempotent_system(
    m: int,
    n: int,
    reps: list[Representation] | None = None,
    include_group_algebra: bool | None = None,
) -> Certificate:
    """Orthogonal idempotent family summing to 1, with matrix-unit witnesses."""
    checks: list[Check] = []
    if include_group_algebra is None:
        include_group_algebra = within_group_algebra_caps(m, n)
    table = None
    if include_group_algebra:
        table = build_idempotent_table(m, n)
        tabs = list(table)
        total = AlgebraElement.zero(m, n)
        for elem in table.values():
            total = total + elem
        checks.append(
            Check(f"idempotents sum to 1 at (m={m}, n={n})", total == AlgebraElement.one(m, n))
        )
        kernel = _DenseKernel(m, n)
        encoded = [kernel.encode(table[tab]) for tab in tabs]
        square_ok = True
        ortho_ok = True
        for i, (den_i, comps_i) in enumerate(encoded):
            prod = kernel.convolve(comps_i, comps_i)
            if not kernel.equals_scaled(prod, comps_i, den_i):
                square_ok = False
                checks.append(Check(f"p^2 = p fails for tableau {i}", False))
            for j, (_, comps_j) in enumerate(encoded):
                if i == j:
                    continue
                if not kernel.is_zero(kernel.convolve(comps_i, comps_j)):
                    ortho_ok = False
                    checks.append(Check(f"p_{i} p_{j} != 0", False))
        checks.append(Check(f"all idempotents square to themselves at (m={m}, n={n})", square_ok))
        checks.append(Check(f"pairwise orthogonality at (m={m}, n={n})", ortho_ok))
    checks.extend(matrix_unit_witness(m, n, reps=reps).checks)
    return Certificate(f"idempotent system (m={m}, n={n})", tuple(checks))


def rep_idempotent_diagonal(rep: Representation, tab: MTableau) -> list[CycRat] | None:
    """Diagonal of the image of p_X in a representation, or None if a
    Jucys-Murphy image fails to be diagonal (reported by the caller)."""
    m = rep.m
    jm_diag = []
    for k in range(1, rep.n + 1):
        jmat = rep.jm_matrix(k)
        jtmat = rep.jm_matrix(k, tilde=True)
        if not (jmat.is_diagonal() and jtmat.is_diagonal()):
            return None
        jm_diag.append((jmat.diagonal_entries(), jtmat.diagonal_entries()))
    values = [CycRat.one(m)] * rep.dim
    live = set(range(rep.dim))
    for shape, alpha, k in _chain(tab):
        alpha_col = content_column(shape.add(alpha), alpha)
        j_diag, jt_diag = jm_diag[k - 1]
        for beta in addable_nodes(shape):
            c_beta = node_content(beta)
            p_beta = content_column(shape.add(beta), beta).p
            c_active = c_beta != alpha_col.c
            p_active = p_beta != alpha_col.p
            if not (c_active or p_active):
                continue
            inv_c = Fraction(1, alpha_col.c - c_beta) if c_active else None
            inv_p = (alpha_col.p - p_beta).inverse() if p_active else None
            dead = []
            for idx in live:
                v = values[idx]
                if c_active:
                    v = v * (jt_diag[idx] - c_beta) * inv_c
                if p_active:
                    v = v * (j_diag[idx] - p_beta) * inv_p
                values[idx] = v
                if not v:
                    dead.append(idx)
            for idx in dead:
                live.discard(idx)
        if not live:
            break
    return values


def matrix_unit_witness(
    m: int, n: int, reps: list[Representation] | None = None
) -> Certificate:
    """In its own representation p_X acts as the matrix unit at X; elsewhere as 0."""
    if reps is None:
        reps = all_representations(m, n)
    by_shape = {rep.shape: rep for rep in reps}
    checks = []
    ok_all = True
    detail = ""
    for shape in enum_mpartitions(m, n):
        home = by_shape[shape]
        for tab in enum_standard_mtableaux(shape):
            for rep in reps:
                diag = rep_idempotent_diagonal(rep, tab)
                if diag is None:
                    ok_all = False
                    detail = f"non-diagonal JM image in {rep.shape.parts}"
                    break
                if rep.shape == shape:
                    expected = [CycRat.zero(m)] * rep.dim
                    expected[rep.index_of(tab)] = CycRat.one(m)
                else:
                    expected = [CycRat.zero(m)] * rep.dim
                if diag != expected:
                    ok_all = False
                    detail = f"wrong diagonal for {tab.rows} in {rep.shape.parts}"
                    break
            if not ok_all:
                break
        if not ok_all:
            break
    checks.append(Check(f"matrix-unit witness at (m={m}, n={n})", ok_all, detail))
    return Certificate(f"idempotent witnesses (m={m}, n={n})", tuple(checks))


def jm_eigen_invariant_check(m: int, n: int) -> Certificate:
    """j_n and j~_n act on p_X by the last column of the string of X."""
    checks = []
    jj = jm_j(m, n, n)
    jt = jm_jtilde(m, n, n)
    for shape in enum_mpartitions(m, n):
        for tab in enum_standard_mtableaux(shape):
            p = build_idempotent(tab)
            col = content_string(tab).columns[-1]
            ok = (jj * p == p * col.p) and (jt * p == p * Fraction(col.c))
            ok = ok and (p * jj == p * col.p) and (p * jt == p * Fraction(col.c))
            checks.append(Check(f"JM eigen-action on {tab.rows}", ok))
    return Certificate(f"jm-eigen invariants (m={m}, n={n})", tuple(checks))


def verify_T_compatibility(m: int, n: int) -> Certificate:
    """The exchange relations hold with tableau generators replaced by p_X.

    For p(X|i) != p(X|i+1):  s_i p_X  =  p_{X^{s_i}} s_i.
    For equal roots:  (s_i + (c_i - c_{i+1})^{-1}) p_X
                      =  p_{X^{s_i}} (s_i + (c_{i+1} - c_i)^{-1}),
    reading p of a non-standard swap as 0.  Always: (t - p(X|1)) p_X = 0.
    """
    checks = []
    table = build_idempotent_table(m, n)
    t = AlgebraElement.basis(gen_t(m, n))
    one = AlgebraElement.one(m, n)
    for tab, p in table.items():
        cols = content_string(tab).columns
        ok_t = (t - one * cols[0].p) * p == AlgebraElement.zero(m, n)
        checks.append(Check(f"t-eigenvalue relation on {tab.rows}", ok_t))
        for i in range(1, n):
            s = AlgebraElement.basis(gen_s(m, n, i))
            swapped = tab.swap(i)
            p_swapped = table[swapped] if swapped is not None else AlgebraElement.zero(m, n)
            if cols[i - 1].p != cols[i].p:
                ok = s * p == p_swapped * s
                name = f"swap relation i={i} on {tab.rows}"
            else:
                gap = Fraction(1, cols[i - 1].c - cols[i].c)
                lhs = (s + one * gap) * p
                rhs = p_swapped * (s - one * gap)
                ok = lhs == rhs
                name = f"shifted swap relation i={i} on {tab.rows}"
            checks.append(Check(name, ok))
    return Certificate(f"tableau-generator compatibility (m={m}, n={n})", tuple(checks))
