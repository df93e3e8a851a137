"""The diagonal torus of the determinant-one group, its normalizer, and
the monomial lifts of braid generators.

A section is a choice of nonzero parameters a_1..a_n; the i-th lift is the
identity outside rows and columns {i, i+1} with the block

    (   0      a_i )
    ( -1/a_i    0  )

which has determinant one and squares to the diagonal matrix with -1 at
slots i and i+1.  Words in the braid generators evaluate to products of
these lifts and always land in the normalizer of the torus, i.e. among
monomial matrices.  Everything is exact over the rationals; where a
construction would force a root that the rationals do not contain, the
operation reports that explicitly instead of approximating.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .braid import BraidWord
from .linalg import Matrix, Scalar, canonical, scalar_to_str
from .roots import Permutation


class NotInNormalizer(ValueError):
    """The matrix is not monomial, so it does not normalize the torus."""


class NoExactWitness(ValueError):
    """The conjugating torus element would need an irrational root."""


@dataclass(frozen=True)
class GroupElement:
    """A square rational matrix with determinant exactly one."""

    m: Matrix

    def __post_init__(self):
        if self.m.det() != 1:
            raise ValueError("matrix does not have determinant 1")

    @property
    def dim(self) -> int:
        return self.m.dim

    @classmethod
    def identity(cls, dim: int) -> GroupElement:
        return cls(Matrix.identity(dim))

    def __mul__(self, other: GroupElement) -> GroupElement:
        return GroupElement(self.m * other.m)

    def inv(self) -> GroupElement:
        return GroupElement(self.m.inv())

    def conjugate(self, other: GroupElement) -> GroupElement:
        """self * other * self^{-1}."""
        return GroupElement(self.m * other.m * self.m.inv())


@dataclass(frozen=True)
class TitsSection:
    """Nonzero parameters a_1..a_n choosing one lift per braid generator."""

    n: int
    params: tuple[Scalar, ...]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"rank must be at least 1, got {self.n}")
        if len(self.params) != self.n:
            raise ValueError(f"rank {self.n} needs {self.n} parameters")
        params = tuple(canonical(a) for a in self.params)
        object.__setattr__(self, "params", params)
        if any(a == 0 for a in params):
            raise ValueError("section parameters must be nonzero")

    @classmethod
    def ones(cls, n: int) -> TitsSection:
        return cls(n, (1,) * n)


def section_to_json(s: TitsSection) -> dict:
    return {"n": s.n, "a": [scalar_to_str(a) for a in s.params]}


def section_from_json(obj: dict) -> TitsSection:
    try:
        return TitsSection(obj["n"], tuple(obj["a"]))
    except (TypeError, KeyError) as exc:
        raise ValueError("section JSON needs 'n' and 'a'") from exc


@lru_cache(maxsize=None)
def sigma_generator(s: TitsSection, i: int) -> GroupElement:
    """The i-th monomial lift of the section s."""
    if not 1 <= i <= s.n:
        raise ValueError(f"generator index {i} out of range 1..{s.n}")
    a = s.params[i - 1]
    rows = [[1 if r == c else 0 for c in range(s.n + 1)]
            for r in range(s.n + 1)]
    rows[i - 1][i - 1] = 0
    rows[i][i] = 0
    rows[i - 1][i] = a
    rows[i][i - 1] = canonical(Fraction(-1) / Fraction(a))
    return GroupElement(Matrix(rows))


@lru_cache(maxsize=None)
def _sigma_generator_inv(s: TitsSection, i: int) -> GroupElement:
    return sigma_generator(s, i).inv()


def exp_construction(n: int, i: int) -> GroupElement:
    """The all-ones lift built from terminating exponentials.

    Multiplies exp(e_i) exp(-f_i) exp(e_i), an independent construction
    path that must agree with sigma_generator at parameter 1.
    """
    from .linalg import exp_nilpotent
    if not 1 <= i <= n:
        raise ValueError(f"generator index {i} out of range 1..{n}")
    e = Matrix.unit(n + 1, i, i + 1)
    f = Matrix.unit(n + 1, i + 1, i)
    return GroupElement(exp_nilpotent(e) * exp_nilpotent(-f) * exp_nilpotent(e))


def evaluate_word(s: TitsSection, w: BraidWord) -> GroupElement:
    """Evaluate a braid word as a product of section lifts."""
    if s.n != w.n:
        raise ValueError(f"rank mismatch: section {s.n} vs word {w.n}")
    out = Matrix.identity(s.n + 1)
    for i, e in w.letters:
        g = sigma_generator(s, i) if e == 1 else _sigma_generator_inv(s, i)
        out = out * g.m
    return GroupElement(out)


@dataclass(frozen=True)
class MonomialDecomposition:
    """A monomial matrix as (permutation, column scales).

    The matrix is sum_i scales[i-1] * E_{sigma(i), i}: column i holds its
    single nonzero entry scales[i-1] in row sigma(i).  Scales are read
    directly off the entries, signs included, so reconstruct() inverts
    decomposition exactly.
    """

    sigma: Permutation
    scales: tuple[Scalar, ...]

    def __post_init__(self):
        if len(self.scales) != self.sigma.n_points:
            raise ValueError("scales length must match permutation size")
        scales = tuple(canonical(x) for x in self.scales)
        object.__setattr__(self, "scales", scales)
        if any(x == 0 for x in scales):
            raise ValueError("monomial scales must be nonzero")

    def reconstruct(self) -> GroupElement:
        dim = self.sigma.n_points
        rows = [[0] * dim for _ in range(dim)]
        for col in range(1, dim + 1):
            rows[self.sigma(col) - 1][col - 1] = self.scales[col - 1]
        return GroupElement(Matrix(rows))


def normalizer_decompose(x: GroupElement) -> MonomialDecomposition:
    """Split a monomial matrix into permutation and scales.

    Raises NotInNormalizer when any row or column has zero or at least
    two nonzero entries; exactly the monomial matrices normalize the
    diagonal torus.
    """
    dim = x.dim
    images = []
    scales = []
    for col in range(1, dim + 1):
        hits = [row for row in range(1, dim + 1) if x.m[row, col] != 0]
        if len(hits) != 1:
            raise NotInNormalizer(
                f"column {col} has {len(hits)} nonzero entries")
        images.append(hits[0])
        scales.append(x.m[hits[0], col])
    if len(set(images)) != dim:
        shared = [r for r in images if images.count(r) > 1][0]
        raise NotInNormalizer(f"row {shared} has multiple nonzero entries")
    return MonomialDecomposition(Permutation(tuple(images)), tuple(scales))


def is_monomial(x: GroupElement) -> bool:
    try:
        normalizer_decompose(x)
        return True
    except NotInNormalizer:
        return False


def coset_representative(sigma: Permutation) -> GroupElement:
    """The signed permutation matrix with determinant one.

    Column 1 carries sign(sigma), every other column carries 1, in rows
    sigma(1), .., sigma(n+1).
    """
    dim = sigma.n_points
    rows = [[0] * dim for _ in range(dim)]
    rows[sigma(1) - 1][0] = sigma.sign()
    for col in range(2, dim + 1):
        rows[sigma(col) - 1][col - 1] = 1
    return GroupElement(Matrix(rows))


def coset_class(x: GroupElement) -> Permutation:
    """The torus coset of a monomial matrix, as a permutation.

    Dividing by the coset representative lands in the torus: the product
    x * coset_representative(result)^{-1} is diagonal.
    """
    return normalizer_decompose(x).sigma


def torus_generation_witness(x: GroupElement) -> list[GroupElement]:
    """Factor a diagonal determinant-one matrix across the rank-one tori.

    The i-th factor is the identity outside slots (i, i+1) where it
    carries (P_i, 1/P_i), with P_i the product of the first i diagonal
    entries of x; the cumulative pattern telescopes so the factors
    multiply back to x.  Over the rationals every nonzero P_i is allowed,
    so any diagonal determinant-one matrix factors exactly.
    """
    if not x.m.is_diagonal():
        raise ValueError("matrix is not diagonal")
    dim = x.dim
    if dim < 2:
        raise ValueError("need dimension at least 2")
    diag = x.m.diagonal_entries()
    factors = []
    running: Scalar = 1
    for i in range(1, dim):
        running = canonical(Fraction(running) * Fraction(diag[i - 1]))
        entries = [1] * dim
        entries[i - 1] = running
        entries[i] = canonical(Fraction(1) / Fraction(running))
        factors.append(GroupElement(Matrix.diagonal(entries)))
    return factors


def _int_nth_root(m: int, k: int) -> int:
    """Floor of the k-th root of a nonnegative integer, by Newton steps."""
    if m < 0:
        raise ValueError("negative radicand")
    if m in (0, 1) or k == 1:
        return m
    x = 1 << -(-m.bit_length() // k)  # power of two >= true root
    while True:
        y = ((k - 1) * x + m // x ** (k - 1)) // k
        if y >= x:
            return x
        x = y


def rational_nth_root(x: Scalar, k: int) -> Scalar | None:
    """The exact rational k-th root of x, or None when there is none.

    For even k the nonnegative root is returned; negative x with even k
    has no rational root.

    >>> rational_nth_root(Fraction(8, 27), 3)
    Fraction(2, 3)
    >>> rational_nth_root(2, 2) is None
    True
    """
    f = Fraction(x)
    if f < 0 and k % 2 == 0:
        return None
    sign = -1 if f < 0 else 1
    p, q = abs(f.numerator), f.denominator
    rp, rq = _int_nth_root(p, k), _int_nth_root(q, k)
    if rp ** k != p or rq ** k != q:
        return None
    return canonical(Fraction(sign * rp, rq))


def conjugation_witness(s: TitsSection, s2: TitsSection) -> GroupElement:
    """A torus element t with t * lift'(i) * t^{-1} = lift(i) for all i.

    Conjugating the block of the i-th lift by diag(t_1..t_{n+1}) scales
    its upper entry by t_i / t_{i+1}, so t must satisfy

        t_i / t_{i+1} = a_i / b_i   for all i,   prod t_i = 1,

    where a are the parameters of s and b those of s2.  The determinant
    condition forces t_{n+1} to be an (n+1)-th root of a product of
    parameter ratios; when the rationals contain no such root the witness
    does not exist exactly and NoExactWitness is raised.  For even n+1
    the positive root is chosen.
    """
    if s.n != s2.n:
        raise ValueError(f"rank mismatch: {s.n} vs {s2.n}")
    n = s.n
    ratios = [Fraction(a) / Fraction(b) for a, b in zip(s.params, s2.params)]
    # suffix[i] = prod of ratios i..n (1-based); t_i = t_{n+1} * suffix[i]
    suffix = [Fraction(1)] * (n + 2)
    for i in range(n, 0, -1):
        suffix[i] = ratios[i - 1] * suffix[i + 1]
    prod_suffix = Fraction(1)
    for i in range(1, n + 2):
        prod_suffix *= suffix[i]
    t_last = rational_nth_root(1 / prod_suffix, n + 1)
    if t_last is None:
        raise NoExactWitness(
            f"no rational ({n + 1})-th root of {1 / prod_suffix}")
    entries = [canonical(Fraction(t_last) * suffix[i]) for i in range(1, n + 2)]
    t = GroupElement(Matrix.diagonal(entries))
    for i in range(1, n + 1):
        if t.conjugate(sigma_generator(s2, i)) != sigma_generator(s, i):
            raise AssertionError(
                f"witness fails to conjugate generator {i}")
    return t
