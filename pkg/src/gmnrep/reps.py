"""Seminormal representations of G(m,1,n) and their exact verification.

Basis vectors are the standard m-tableaux of a shape in canonical order;
matrices act on column vectors, and the representation map satisfies
rep(gh) = rep(g) rep(h).  The generator action is: t scales each basis
vector by the root attached to entry 1; s_i either swaps i and i+1 across
diagrams, or acts by the rational two-term rule driven by the integer
content gap when both entries sit in the same diagram (a vanishing swap
term when the exchanged filling is not standard).
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction

from .certificates import Certificate, Check
from .cyclo import CycRat
from .groups import (
    AlgebraElement,
    GroupElement,
    defining_relations,
    evaluate_word,
    group_order,
    intertwiner,
    jm_j,
    jm_jtilde,
)
from .matrices import Matrix
from .tableaux import (
    MPartition,
    MTableau,
    content_string,
    enum_mpartitions,
    enum_standard_mtableaux,
    removable_nodes,
)


class Representation:
    """Generator matrices for one shape, with per-instance evaluation caches."""

    def __init__(self, m, n, shape, basis, mat_t, mat_s):
        self.m = m
        self.n = n
        self.shape = shape
        self.basis = basis
        self.mat_t = mat_t
        self.mat_s = mat_s
        self._index = {tab: i for i, tab in enumerate(basis)}
        self._strings = [content_string(tab) for tab in basis]
        self._perm_cache: dict[tuple[int, ...], Matrix] = {}
        self._ti_cache: list[Matrix] | None = None
        self._jm_cache: dict[tuple[int, bool], Matrix] = {}

    @property
    def dim(self) -> int:
        return len(self.basis)

    def index_of(self, tab: MTableau) -> int:
        return self._index[tab]

    def string_of(self, index: int):
        return self._strings[index]

    def generator_matrices(self) -> list[tuple[str, Matrix]]:
        named = [("t", self.mat_t)]
        named += [(f"s{i}", mat) for i, mat in enumerate(self.mat_s, start=1)]
        return named

    def matrix_of_letter(self, token: str) -> Matrix:
        if token == "t":
            return self.mat_t
        if token.startswith("s"):
            return self.mat_s[int(token[1:]) - 1]
        raise ValueError(f"unknown letter {token!r}")

    def matrix_of_word(self, word) -> Matrix:
        tokens = word.split() if isinstance(word, str) else list(word)
        out = Matrix.identity(self.m, self.dim)
        for token in tokens:
            base, _, exp = token.partition("^")
            e = int(exp) if exp else 1
            if e < 0:
                raise ValueError("matrix words take nonnegative exponents")
            out = out * (self.matrix_of_letter(base) ** e)
        return out

    def _reflection_matrices(self) -> list[Matrix]:
        # t_1 = t, t_{i+1} = s_i t_i s_i, as honest matrix products
        if self._ti_cache is None:
            mats = [self.mat_t]
            for i in range(1, self.n):
                s = self.mat_s[i - 1]
                mats.append(s * mats[-1] * s)
            self._ti_cache = mats
        return self._ti_cache

    def _perm_matrix(self, perm: tuple[int, ...]) -> Matrix:
        cached = self._perm_cache.get(perm)
        if cached is not None:
            return cached
        word = _adjacent_transposition_word(perm)
        out = Matrix.identity(self.m, self.dim)
        for i in word:
            out = out * self.mat_s[i - 1]
        self._perm_cache[perm] = out
        return out

    def matrix_of(self, g: GroupElement) -> Matrix:
        """Image of a group element, multiplied out from generator matrices."""
        if (g.m, g.n) != (self.m, self.n):
            raise ValueError("group element does not match the representation")
        out = None
        reflections = self._reflection_matrices()
        for i, r in enumerate(g.residues):
            if r:
                factor = reflections[i] ** r
                out = factor if out is None else out * factor
        perm_part = self._perm_matrix(g.perm)
        out = perm_part if out is None else out * perm_part
        return out

    def jm_matrix(self, i: int, tilde: bool = False) -> Matrix:
        """Image of j_i (or j~_i), via the defining recursion at matrix level."""
        if not 1 <= i <= self.n:
            raise ValueError(f"index must lie in [1, {self.n}], got {i}")
        key = (i, tilde)
        cached = self._jm_cache.get(key)
        if cached is not None:
            return cached
        if not tilde:
            mat = self._reflection_matrices()[i - 1]
        elif i == 1:
            mat = Matrix.zeros(self.m, self.dim)
        else:
            prev = self.jm_matrix(i - 1, tilde=True)
            s = self.mat_s[i - 2]
            t_prev = self._reflection_matrices()[i - 2]
            powers = [Matrix.identity(self.m, self.dim)]
            for _ in range(self.m - 1):
                powers.append(powers[-1] * t_prev)
            mixed = None
            for p in range(1, self.m + 1):
                term = powers[p % self.m] * s * powers[(self.m - p) % self.m]
                mixed = term if mixed is None else mixed + term
            mat = s * prev * s + mixed * Fraction(1, self.m)
        self._jm_cache[key] = mat
        return mat


def _adjacent_transposition_word(perm: tuple[int, ...]) -> list[int]:
    """Indices i with perm = s_{i_k} ... s_{i_1} (right-to-left application)."""
    line = list(perm)
    applied: list[int] = []
    changed = True
    while changed:
        changed = False
        for j in range(len(line) - 1):
            if line[j] > line[j + 1]:
                line[j], line[j + 1] = line[j + 1], line[j]
                applied.append(j + 1)
                changed = True
    applied.reverse()
    return applied


def build_seminormal(m: int, n: int, shape: MPartition) -> Representation:
    """Construct the representation attached to an m-partition of n."""
    if shape.m != m:
        raise ValueError(f"shape has {shape.m} diagrams, expected {m}")
    if shape.size != n:
        raise ValueError(f"shape has size {shape.size}, expected {n}")
    basis = enum_standard_mtableaux(shape)
    index = {tab: i for i, tab in enumerate(basis)}
    strings = [content_string(tab) for tab in basis]
    dim = len(basis)
    zero, one = CycRat.zero(m), CycRat.one(m)

    mat_t = Matrix.diagonal(m, [s.columns[0].p if n else one for s in strings])

    mat_s = []
    for i in range(1, n):
        rows = [[zero] * dim for _ in range(dim)]
        for col, tab in enumerate(basis):
            cols = strings[col].columns
            p_lo, p_hi = cols[i - 1].p, cols[i].p
            swapped = tab.swap(i)
            if p_lo != p_hi:
                rows[index[swapped]][col] = one
            else:
                gap = Fraction(1, cols[i].c - cols[i - 1].c)
                rows[col][col] = CycRat.from_rational(m, gap)
                if swapped is not None:
                    rows[index[swapped]][col] = CycRat.from_rational(m, 1 + gap)
        mat_s.append(Matrix(m, rows))

    return Representation(m, n, shape, basis, mat_t, tuple(mat_s))


def all_representations(m: int, n: int) -> list[Representation]:
    return [build_seminormal(m, n, shape) for shape in enum_mpartitions(m, n)]


def evaluate_algebra_element(rep: Representation, a: AlgebraElement) -> Matrix:
    """Extend the representation linearly to the group algebra."""
    if (a.m, a.n) != (rep.m, rep.n):
        raise ValueError("algebra element does not match the representation")
    out = Matrix.zeros(rep.m, rep.dim)
    for g, c in a.terms.items():
        out = out + rep.matrix_of(g) * c
    return out


def verify_relations(rep: Representation) -> Certificate:
    """Every defining relation of the group holds as an exact matrix identity."""
    checks = []
    for name, lhs, rhs in defining_relations(rep.m, rep.n):
        ok = rep.matrix_of_word(lhs) == rep.matrix_of_word(rhs)
        checks.append(Check(f"{name} on {rep.shape.parts}", ok))
    return Certificate(f"relations {rep.shape.parts}", tuple(checks))


def homomorphism_spot_check(rep: Representation, pairs: int = 50, seed: int = 1) -> Certificate:
    """rep(uv) == rep(u) rep(v) on random word pairs."""
    rng = random.Random(seed)
    letters = ["t"] + [f"s{i}" for i in range(1, rep.n)]
    checks = []
    for trial in range(pairs):
        u = [rng.choice(letters) for _ in range(rng.randint(0, 6))]
        v = [rng.choice(letters) for _ in range(rng.randint(0, 6))]
        gu, gv = evaluate_word(rep.m, rep.n, u), evaluate_word(rep.m, rep.n, v)
        ok = rep.matrix_of(gu * gv) == rep.matrix_of(gu) * rep.matrix_of(gv)
        checks.append(Check(f"word pair {trial}", ok, detail=f"{' '.join(u)} | {' '.join(v)}"))
    return Certificate(f"homomorphism {rep.shape.parts}", tuple(checks))


def jm_diagonal_check(rep: Representation, direct: bool = True) -> Certificate:
    """Jucys-Murphy images are diagonal and match each basis string entrywise."""
    checks = []
    for i in range(1, rep.n + 1):
        for tilde in (False, True):
            if direct:
                elem = jm_jtilde(rep.m, rep.n, i) if tilde else jm_j(rep.m, rep.n, i)
                mat = evaluate_algebra_element(rep, elem)
            else:
                mat = rep.jm_matrix(i, tilde=tilde)
            name = f"{'j~' if tilde else 'j'}_{i} on {rep.shape.parts}"
            if not mat.is_diagonal():
                checks.append(Check(name, False, "matrix is not diagonal"))
                continue
            ok = True
            detail = ""
            for idx in range(rep.dim):
                col = rep.string_of(idx).columns[i - 1]
                expected = CycRat.from_rational(rep.m, col.c) if tilde else col.p
                if mat.entry(idx, idx) != expected:
                    ok = False
                    detail = f"basis {idx} expected {expected!r}"
                    break
            checks.append(Check(name, ok, detail))
    return Certificate(f"jm-diagonal {rep.shape.parts}", tuple(checks))


def spectrum_bound_check(rep: Representation) -> Certificate:
    """Diagonal entries of each j~_i image lie in the integer window [1-i, i-1]."""
    checks = []
    for i in range(1, rep.n + 1):
        mat = rep.jm_matrix(i, tilde=True)
        name = f"spectrum j~_{i} on {rep.shape.parts}"
        if not mat.is_diagonal():
            checks.append(Check(name, False, "matrix is not diagonal"))
            continue
        ok = True
        detail = ""
        for idx in range(rep.dim):
            v = mat.entry(idx, idx)
            if not v.is_rational():
                ok, detail = False, f"entry {idx} is irrational"
                break
            value = v.rational_value()
            if value.denominator != 1 or not (1 - i <= value <= i - 1):
                ok, detail = False, f"entry {idx} = {value} outside [{1 - i}, {i - 1}]"
                break
        checks.append(Check(name, ok, detail))
    return Certificate(f"spectrum-bound {rep.shape.parts}", tuple(checks))


@dataclass(frozen=True)
class HermitianForm:
    diag: tuple[Fraction, ...]


def hermitian_form(rep: Representation) -> HermitianForm:
    """Diagonal invariant form.

    The squared norm of a basis tableau is the product over entry pairs
    j < k in the same diagram, with contents differing by at least two, of
    (c_j - c_k - 1)/(c_j - c_k); an empty product is 1.
    """
    values = []
    for idx in range(rep.dim):
        cols = rep.string_of(idx).columns
        total = Fraction(1)
        for j in range(len(cols)):
            for k in range(j + 1, len(cols)):
                if cols[j].p != cols[k].p:
                    continue
                diff = cols[j].c - cols[k].c
                if diff in (-1, 0, 1):
                    continue
                total *= Fraction(diff - 1, diff)
        if total <= 0:
            raise ArithmeticError(
                f"form value {total} is not positive on basis {idx} of {rep.shape.parts}"
            )
        values.append(total)
    return HermitianForm(tuple(values))


def verify_form_invariance(rep: Representation, form: HermitianForm | None = None) -> Certificate:
    """conj-transpose(M) . G . M == G for every generator matrix M."""
    form = form or hermitian_form(rep)
    gram = Matrix.diagonal(rep.m, form.diag)
    checks = []
    for name, mat in rep.generator_matrices():
        ok = mat.conjugate_transpose() * gram * mat == gram
        checks.append(Check(f"form invariance {name} on {rep.shape.parts}", ok))
    return Certificate(f"form {rep.shape.parts}", tuple(checks))


def unitary_matrices(rep: Representation, form: HermitianForm | None = None):
    """Float matrices in the rescaled orthonormal basis, as nested lists."""
    form = form or hermitian_form(rep)
    scale = [math.sqrt(float(v)) for v in form.diag]
    out = []
    for _, mat in rep.generator_matrices():
        rows = [
            [
                mat.entry(i, j).to_complex() * scale[i] / scale[j]
                for j in range(rep.dim)
            ]
            for i in range(rep.dim)
        ]
        out.append(rows)
    return out


def unitarity_residual(mats) -> float:
    """Largest absolute deviation of conj-transpose(U) . U from the identity."""
    worst = 0.0
    for rows in mats:
        dim = len(rows)
        for i in range(dim):
            for j in range(dim):
                acc = sum(rows[k][i].conjugate() * rows[k][j] for k in range(dim))
                target = 1.0 if i == j else 0.0
                worst = max(worst, abs(acc - target))
    return worst


def intertwiner_action_check(rep: Representation) -> Certificate:
    """u~_{i+1} maps a basis tableau to the pinned multiple of its swap."""
    checks = []
    for i in range(1, rep.n):
        mat = evaluate_algebra_element(rep, intertwiner(rep.m, rep.n, i))
        ok = True
        detail = ""
        for col in range(rep.dim):
            cols = rep.string_of(col).columns
            delta = 1 if cols[i - 1].p == cols[i].p else 0
            coeff = Fraction(cols[i - 1].c - cols[i].c - delta)
            swapped = rep.basis[col].swap(i)
            expected = [CycRat.zero(rep.m)] * rep.dim
            if swapped is not None and coeff:
                expected[rep.index_of(swapped)] = CycRat.from_rational(rep.m, coeff)
            actual = [mat.entry(r, col) for r in range(rep.dim)]
            if actual != expected:
                ok, detail = False, f"column {col}"
                break
        checks.append(Check(f"intertwiner action i={i} on {rep.shape.parts}", ok, detail))
    return Certificate(f"intertwiner-action {rep.shape.parts}", tuple(checks))


def projector_matrix_check(rep: Representation) -> Certificate:
    """Image of each P_{i+1} is idempotent with spectrum inside {0, 1}."""
    from .groups import projector

    checks = []
    zero, one = CycRat.zero(rep.m), CycRat.one(rep.m)
    for i in range(2, rep.n + 1):
        mat = evaluate_algebra_element(rep, projector(rep.m, rep.n, i))
        idem = mat * mat == mat
        diag_01 = mat.is_diagonal() and all(v in (zero, one) for v in mat.diagonal_entries())
        checks.append(Check(f"P_{i} idempotent on {rep.shape.parts}", idem))
        checks.append(Check(f"P_{i} spectrum in {{0,1}} on {rep.shape.parts}", diag_01))
    return Certificate(f"projectors {rep.shape.parts}", tuple(checks))


def prop_swap_encoding_check(rep: Representation) -> Certificate:
    """Column behaviour of s_i is pinned by the neighbouring string columns.

    Same root and content gap +-1 with a non-standard swap forces the
    column (gap) e_X; distinct roots force the bare swap; same root with
    |gap| >= 2 makes s_i e_X - gap^{-1} e_X a joint eigenvector carrying
    the swapped string.
    """
    checks = []
    for i in range(1, rep.n):
        mat = rep.mat_s[i - 1]
        jm_cols = [
            (rep.jm_matrix(k, tilde=False), rep.jm_matrix(k, tilde=True))
            for k in range(1, rep.n + 1)
        ]
        for col in range(rep.dim):
            cols = rep.string_of(col).columns
            swapped = rep.basis[col].swap(i)
            same_root = cols[i - 1].p == cols[i].p
            gap = cols[i].c - cols[i - 1].c if same_root else None
            if same_root and swapped is None:
                eps = CycRat.from_rational(rep.m, Fraction(1, gap))
                column_ok = all(
                    mat.entry(r, col) == (eps if r == col else CycRat.zero(rep.m))
                    for r in range(rep.dim)
                )
                checks.append(
                    Check(f"pinned +-1 column i={i} col={col} on {rep.shape.parts}", column_ok)
                )
            elif not same_root:
                target = rep.index_of(swapped)
                column_ok = all(
                    mat.entry(r, col)
                    == (CycRat.one(rep.m) if r == target else CycRat.zero(rep.m))
                    for r in range(rep.dim)
                )
                checks.append(
                    Check(f"swap column i={i} col={col} on {rep.shape.parts}", column_ok)
                )
            elif abs(gap) >= 2:
                # v = s_i e_X - gap^{-1} e_X must satisfy J v = (swapped string) v
                v = [mat.entry(r, col) for r in range(rep.dim)]
                v[col] = v[col] - CycRat.from_rational(rep.m, Fraction(1, gap))
                swapped_cols = content_string(swapped).columns
                ok = any(v)
                for k in range(1, rep.n + 1):
                    jmat, jtmat = jm_cols[k - 1]
                    pk = swapped_cols[k - 1].p
                    ck = CycRat.from_rational(rep.m, swapped_cols[k - 1].c)
                    jv = [
                        sum(
                            (jmat.entry(r, t) * v[t] for t in range(rep.dim)),
                            CycRat.zero(rep.m),
                        )
                        for r in range(rep.dim)
                    ]
                    jtv = [
                        sum(
                            (jtmat.entry(r, t) * v[t] for t in range(rep.dim)),
                            CycRat.zero(rep.m),
                        )
                        for r in range(rep.dim)
                    ]
                    if jv != [pk * x for x in v] or jtv != [ck * x for x in v]:
                        ok = False
                        break
                checks.append(
                    Check(f"eigenvector move i={i} col={col} on {rep.shape.parts}", ok)
                )
    return Certificate(f"string-moves {rep.shape.parts}", tuple(checks))


def irreducibility_check(rep: Representation) -> Certificate:
    """Simple joint spectrum plus generator connectivity of the basis graph."""
    checks = []
    keys = {rep.string_of(i).sort_key() for i in range(rep.dim)}
    checks.append(Check(f"simple spectrum on {rep.shape.parts}", len(keys) == rep.dim))
    if rep.dim:
        adj = [set() for _ in range(rep.dim)]
        for _, mat in rep.generator_matrices():
            for i in range(rep.dim):
                for j in range(rep.dim):
                    if i != j and mat.entry(i, j):
                        adj[i].add(j)
                        adj[j].add(i)
        seen = {0}
        frontier = [0]
        while frontier:
            nxt = frontier.pop()
            for j in adj[nxt]:
                if j not in seen:
                    seen.add(j)
                    frontier.append(j)
        checks.append(Check(f"connected basis graph on {rep.shape.parts}", len(seen) == rep.dim))
    return Certificate(f"irreducibility {rep.shape.parts}", tuple(checks))


def branching(rep: Representation) -> Certificate:
    """Restriction drops n: blocks over removable nodes match the smaller shapes."""
    checks = []
    if rep.n == 0:
        return Certificate(f"branching {rep.shape.parts}", (Check("empty shape", True),))
    nodes = removable_nodes(rep.shape)
    blocks: dict = {node: [] for node in nodes}
    for idx, tab in enumerate(rep.basis):
        blocks[tab.node_of(rep.n)].append(idx)
    sizes_ok = sum(len(v) for v in blocks.values()) == rep.dim
    checks.append(Check(f"blocks partition the basis of {rep.shape.parts}", sizes_ok))
    shapes = [rep.shape.remove(node) for node in nodes]
    checks.append(
        Check(f"restriction of {rep.shape.parts} is multiplicity free", len(set(shapes)) == len(shapes))
    )

    restricted = [("t", rep.mat_t)] + [
        (f"s{i}", rep.mat_s[i - 1]) for i in range(1, rep.n - 1)
    ]
    block_of = {}
    for node, members in blocks.items():
        for idx in members:
            block_of[idx] = node
    for node in nodes:
        members = blocks[node]
        sub = build_seminormal(rep.m, rep.n - 1, rep.shape.remove(node))
        mapping = {idx: sub.index_of(rep.basis[idx].remove_last()) for idx in members}
        ok = len(set(mapping.values())) == len(members) == sub.dim
        checks.append(Check(f"block {node} of {rep.shape.parts} indexes {sub.shape.parts}", ok))
        for gen_name, mat in restricted:
            sub_mat = sub.mat_t if gen_name == "t" else sub.mat_s[int(gen_name[1:]) - 1]
            good = True
            for x in members:
                for y in range(rep.dim):
                    v = mat.entry(y, x)
                    if block_of[y] != node:
                        if v:
                            good = False
                            break
                    elif v != sub_mat.entry(mapping[y], mapping[x]):
                        good = False
                        break
                if not good:
                    break
            checks.append(
                Check(f"block {node} generator {gen_name} of {rep.shape.parts} matches", good)
            )
    return Certificate(f"branching {rep.shape.parts}", tuple(checks))


def dimension_census(m: int, n: int) -> dict:
    shapes = enum_mpartitions(m, n)
    dims = {shape: len(enum_standard_mtableaux(shape)) for shape in shapes}
    total = sum(d * d for d in dims.values())
    order = group_order(m, n)
    return {
        "sum_sq": total,
        "order": order,
        "pass": total == order,
        "dims": dims,
    }


def completeness_check(m: int, n: int, reps: list[Representation] | None = None) -> Certificate:
    """Dimension count, global simple spectrum, and per-shape irreducibility."""
    census = dimension_census(m, n)
    checks = [
        Check(
            f"sum of squared dimensions at (m={m}, n={n})",
            census["pass"],
            f"sum_sq={census['sum_sq']} order={census['order']}",
        )
    ]
    seen = {}
    distinct = True
    for shape in enum_mpartitions(m, n):
        for tab in enum_standard_mtableaux(shape):
            key = content_string(tab).sort_key()
            if key in seen:
                distinct = False
            seen[key] = tab
    checks.append(Check(f"strings separate all tableaux at (m={m}, n={n})", distinct))
    for rep in reps if reps is not None else all_representations(m, n):
        checks.extend(irreducibility_check(rep).checks)
    return Certificate(f"completeness (m={m}, n={n})", tuple(checks))
