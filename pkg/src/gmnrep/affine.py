"""The five-generator algebra governing adjacent eigenvalue moves.

Three matrix families (one one-dimensional, two two-dimensional) realize
the generators x, y, x~, y~, s subject to: xy = yx, x~y~ = y~x~,
xx~ = x~x, yx~ = x~y, y = sxs, x^m = 1,
y~ = s x~ s + (1/m) sum_{p=1..m} x^p s x^{m-p}, and s^2 = 1.
The two-dimensional family with equal roots is irreducible exactly when
the two rational eigenvalues of x~ do not differ by 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .certificates import Certificate, Check
from .cyclo import CycRat
from .matrices import Matrix

KINDS = ("one-dim", "two-dim-distinct", "two-dim-equal")


@dataclass(frozen=True)
class A2Rep:
    kind: str
    m: int
    params: tuple
    x: Matrix
    y: Matrix
    xt: Matrix
    yt: Matrix
    s: Matrix

    @property
    def dim(self) -> int:
        return self.x.dim

    def matrices(self) -> dict[str, Matrix]:
        return {"x": self.x, "y": self.y, "xt": self.xt, "yt": self.yt, "s": self.s}


def _check_root(m: int, a: CycRat, name: str):
    if a.m != m:
        raise ValueError(f"{name} has order {a.m}, expected {m}")
    if a ** m != CycRat.one(m):
        raise ValueError(f"{name} must satisfy {name}^{m} = 1")


def build_one_dim(m: int, a: CycRat, atilde, eps: int) -> A2Rep:
    _check_root(m, a, "a")
    if eps not in (1, -1):
        raise ValueError(f"sign must be +1 or -1, got {eps}")
    atilde = Fraction(atilde)
    return A2Rep(
        kind="one-dim",
        m=m,
        params=(a, atilde, eps),
        x=Matrix(m, [[a]]),
        y=Matrix(m, [[a]]),
        xt=Matrix(m, [[atilde]]),
        yt=Matrix(m, [[atilde + eps]]),
        s=Matrix(m, [[eps]]),
    )


def build_two_dim_distinct(m: int, a: CycRat, b: CycRat, atilde, btilde) -> A2Rep:
    _check_root(m, a, "a")
    _check_root(m, b, "b")
    if a == b:
        raise ValueError("the two roots must be distinct")
    atilde, btilde = Fraction(atilde), Fraction(btilde)
    zero = CycRat.zero(m)
    return A2Rep(
        kind="two-dim-distinct",
        m=m,
        params=(a, b, atilde, btilde),
        x=Matrix.diagonal(m, [a, b]),
        y=Matrix.diagonal(m, [b, a]),
        xt=Matrix.diagonal(m, [atilde, btilde]),
        yt=Matrix.diagonal(m, [btilde, atilde]),
        s=Matrix(m, [[zero, CycRat.one(m)], [CycRat.one(m), zero]]),
    )


def build_two_dim_equal(m: int, a: CycRat, atilde, btilde) -> A2Rep:
    _check_root(m, a, "a")
    atilde, btilde = Fraction(atilde), Fraction(btilde)
    if btilde == atilde:
        raise ValueError("the two rational eigenvalues must be distinct")
    u = Fraction(1) / (btilde - atilde)
    return A2Rep(
        kind="two-dim-equal",
        m=m,
        params=(a, atilde, btilde),
        x=Matrix.diagonal(m, [a, a]),
        y=Matrix.diagonal(m, [a, a]),
        xt=Matrix.diagonal(m, [atilde, btilde]),
        yt=Matrix.diagonal(m, [btilde, atilde]),
        s=Matrix(m, [[u, 1 - u * u], [Fraction(1), -u]]),
    )


def build_a2(kind: str, m: int, **params) -> A2Rep:
    if kind == "one-dim":
        return build_one_dim(m, params["a"], params["atilde"], params["eps"])
    if kind == "two-dim-distinct":
        return build_two_dim_distinct(
            m, params["a"], params["b"], params["atilde"], params["btilde"]
        )
    if kind == "two-dim-equal":
        return build_two_dim_equal(m, params["a"], params["atilde"], params["btilde"])
    raise ValueError(f"unknown kind {kind!r}; expected one of {KINDS}")


def relations_certificate(
    m: int, x: Matrix, y: Matrix, xt: Matrix, yt: Matrix, s: Matrix, label: str
) -> Certificate:
    """The eight defining relations, as exact matrix identities."""
    dim = x.dim
    ident = Matrix.identity(m, dim)
    mixed = None
    for p in range(1, m + 1):
        term = (x ** p) * s * (x ** (m - p))
        mixed = term if mixed is None else mixed + term
    mixed = mixed * Fraction(1, m)
    checks = [
        Check(f"{label}: x y = y x", x * y == y * x),
        Check(f"{label}: x~ y~ = y~ x~", xt * yt == yt * xt),
        Check(f"{label}: x x~ = x~ x", x * xt == xt * x),
        Check(f"{label}: y x~ = x~ y", y * xt == xt * y),
        Check(f"{label}: y = s x s", y == s * x * s),
        Check(f"{label}: x^m = 1", x ** m == ident),
        Check(f"{label}: y~ = s x~ s + mean conjugate sum", yt == s * xt * s + mixed),
        Check(f"{label}: s^2 = 1", s * s == ident),
    ]
    return Certificate(label, tuple(checks))


def verify_a2_relations(rep: A2Rep) -> Certificate:
    label = f"{rep.kind} {tuple(str(p) for p in rep.params)}"
    return relations_certificate(rep.m, rep.x, rep.y, rep.xt, rep.yt, rep.s, label)


def pairwise_commuting(rep: A2Rep) -> bool:
    mats = [rep.x, rep.y, rep.xt, rep.yt]
    return all(a * b == b * a for a in mats for b in mats)


def _kernel_2x2(mat: Matrix) -> list[tuple[CycRat, CycRat]]:
    """Basis of the kernel of a 2x2 matrix over the cyclotomic field."""
    m = mat.m
    zero, one = CycRat.zero(m), CycRat.one(m)
    a, b = mat.entry(0, 0), mat.entry(0, 1)
    c, d = mat.entry(1, 0), mat.entry(1, 1)
    det = a * d - b * c
    if det:
        return []
    for r0, r1 in ((a, b), (c, d)):
        if r0 or r1:
            return [(r1, -r0)]
    return [(one, zero), (zero, one)]


@dataclass(frozen=True)
class IrreducibilityResult:
    irreducible: bool
    invariant_vector: tuple[CycRat, CycRat] | None = None


def is_irreducible_a2(rep: A2Rep) -> IrreducibilityResult:
    """Criterion plus an exact common-eigenvector search.

    One-dimensional representations are trivially irreducible.  For the
    two-dimensional families a common invariant line must in particular be
    an eigenline of s (s^2 = 1 gives eigenvalues +-1); each candidate is
    tested against all five matrices, and a reducible representation
    reports an explicit invariant vector.
    """
    if rep.dim == 1:
        return IrreducibilityResult(True)
    candidates: list[tuple[CycRat, CycRat]] = []
    ident = Matrix.identity(rep.m, 2)
    for eps in (1, -1):
        shifted = rep.s - ident * Fraction(eps)
        candidates.extend(_kernel_2x2(shifted))
    mats = list(rep.matrices().values())
    for v in candidates:
        if not (v[0] or v[1]):
            continue
        invariant = True
        for mat in mats:
            w0 = mat.entry(0, 0) * v[0] + mat.entry(0, 1) * v[1]
            w1 = mat.entry(1, 0) * v[0] + mat.entry(1, 1) * v[1]
            if w0 * v[1] != w1 * v[0]:
                invariant = False
                break
        if invariant:
            return IrreducibilityResult(False, v)
    return IrreducibilityResult(True)


def expected_irreducible(rep: A2Rep) -> bool:
    """The closed-form boundary: equal-root pairs reduce exactly at gap 1."""
    if rep.kind != "two-dim-equal":
        return True
    _, atilde, btilde = rep.params
    return btilde - atilde not in (1, -1)


def quotient_relations_check(group_rep, i: int) -> Certificate:
    """Adjacent Jucys-Murphy images inside a G(m,1,n) representation satisfy
    the five-generator relations with s the i-th swap matrix."""
    m, n = group_rep.m, group_rep.n
    if not 1 <= i <= n - 1:
        raise ValueError(f"index must lie in [1, {n - 1}], got {i}")
    return relations_certificate(
        m,
        group_rep.jm_matrix(i),
        group_rep.jm_matrix(i + 1),
        group_rep.jm_matrix(i, tilde=True),
        group_rep.jm_matrix(i + 1, tilde=True),
        group_rep.mat_s[i - 1],
        label=f"quotient at i={i} on {group_rep.shape.parts}",
    )
