"""The type A_n root system and its Weyl group.

Roots live in coordinates over eps_1..eps_{n+1} (integer vectors whose
entries sum to zero), so the Weyl group acts by permuting coordinates and
reflections can be cross-checked against transpositions directly.  The
group itself is realized as permutations of {1, .., n+1} in one-line
notation.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator


@dataclass(frozen=True)
class Permutation:
    """A bijection of {1, .., n_points}; images[k-1] = sigma(k)."""

    images: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "images", tuple(self.images))
        if sorted(self.images) != list(range(1, len(self.images) + 1)):
            raise ValueError(f"not a permutation of 1..{len(self.images)}: "
                             f"{self.images}")

    @classmethod
    def identity(cls, n_points: int) -> Permutation:
        return cls(tuple(range(1, n_points + 1)))

    @classmethod
    def transposition(cls, n_points: int, i: int, j: int) -> Permutation:
        if not (1 <= i <= n_points and 1 <= j <= n_points):
            raise ValueError(f"transposition ({i} {j}) out of range")
        images = list(range(1, n_points + 1))
        images[i - 1], images[j - 1] = j, i
        return cls(tuple(images))

    @property
    def n_points(self) -> int:
        return len(self.images)

    def __call__(self, k: int) -> int:
        return self.images[k - 1]

    def __mul__(self, other: Permutation) -> Permutation:
        """Composition (self * other)(k) = self(other(k))."""
        if self.n_points != other.n_points:
            raise ValueError("cannot compose permutations of different sizes")
        return Permutation(tuple(self.images[k - 1] for k in other.images))

    def inverse(self) -> Permutation:
        images = [0] * self.n_points
        for k, image in enumerate(self.images, start=1):
            images[image - 1] = k
        return Permutation(tuple(images))

    def is_identity(self) -> bool:
        return all(image == k for k, image in enumerate(self.images, start=1))

    def sign(self) -> int:
        """+1 for even permutations, -1 for odd ones."""
        inversions = sum(1 for a, b in itertools.combinations(self.images, 2)
                         if a > b)
        return -1 if inversions % 2 else 1

    def __str__(self) -> str:
        return "[" + " ".join(str(k) for k in self.images) + "]"


def all_permutations(n_points: int) -> Iterator[Permutation]:
    for images in itertools.permutations(range(1, n_points + 1)):
        yield Permutation(images)


@dataclass(frozen=True)
class RootVector:
    """An integer vector over eps_1..eps_{n+1} with entries summing to 0."""

    n: int
    eps: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "eps", tuple(self.eps))
        if len(self.eps) != self.n + 1:
            raise ValueError(f"rank {self.n} needs {self.n + 1} coordinates")
        if any(not isinstance(c, int) for c in self.eps):
            raise ValueError("eps coordinates must be integers")
        if sum(self.eps) != 0:
            raise ValueError(f"coordinates must sum to 0: {self.eps}")

    def is_root(self) -> bool:
        """True for eps_i - eps_j vectors: one +1, one -1, rest 0."""
        return sorted(self.eps) == [-1] + [0] * (self.n - 1) + [1]

    def __add__(self, other: RootVector) -> RootVector:
        return RootVector(self.n, tuple(a + b for a, b in
                                        zip(self.eps, other.eps)))

    def __sub__(self, other: RootVector) -> RootVector:
        return RootVector(self.n, tuple(a - b for a, b in
                                        zip(self.eps, other.eps)))

    def __neg__(self) -> RootVector:
        return RootVector(self.n, tuple(-a for a in self.eps))

    def __rmul__(self, c: int) -> RootVector:
        return RootVector(self.n, tuple(c * a for a in self.eps))


def root(n: int, i: int, j: int) -> RootVector:
    """The root eps_i - eps_j, for i != j in 1..n+1."""
    if i == j or not (1 <= i <= n + 1 and 1 <= j <= n + 1):
        raise ValueError(f"({i}, {j}) does not name a root for rank {n}")
    eps = [0] * (n + 1)
    eps[i - 1], eps[j - 1] = 1, -1
    return RootVector(n, tuple(eps))


def simple_root(n: int, i: int) -> RootVector:
    """The simple root alpha_i = eps_i - eps_{i+1}, 1 <= i <= n."""
    if not 1 <= i <= n:
        raise ValueError(f"simple root index {i} out of range 1..{n}")
    return root(n, i, i + 1)


def all_roots(n: int) -> list[RootVector]:
    return [root(n, i, j)
            for i in range(1, n + 2) for j in range(1, n + 2) if i != j]


def pairing(beta: RootVector, i: int) -> int:
    """The integer beta(h_i) = beta_i - beta_{i+1} against the coroot h_i.

    >>> pairing(simple_root(2, 1), 1)
    2
    >>> pairing(simple_root(2, 2), 1)
    -1
    """
    if not 1 <= i <= beta.n:
        raise ValueError(f"coroot index {i} out of range 1..{beta.n}")
    return beta.eps[i - 1] - beta.eps[i]


def reflect(alpha: RootVector, beta: RootVector) -> RootVector:
    """Reflect beta in the root alpha: beta - beta(h_alpha) * alpha.

    For alpha = eps_i - eps_j the coroot pairing is beta_i - beta_j, so on
    the eps coordinates the reflection is exactly the swap of slots i and
    j.  Note the adjacent-root case: reflecting alpha_{i+1} in alpha_i
    gives the composite root eps_i - eps_{i+2}, not another simple root.
    """
    if not alpha.is_root():
        raise ValueError(f"not a root: {alpha.eps}")
    if alpha.n != beta.n:
        raise ValueError(f"rank mismatch: {alpha.n} vs {beta.n}")
    i = alpha.eps.index(1)
    j = alpha.eps.index(-1)
    k = beta.eps[i] - beta.eps[j]
    return beta - k * alpha


def weyl_action(sigma: Permutation, beta: RootVector) -> RootVector:
    """Permute coordinates: eps_i goes to eps_{sigma(i)}."""
    if sigma.n_points != beta.n + 1:
        raise ValueError(f"permutation of {sigma.n_points} points cannot act "
                         f"on rank {beta.n} vectors")
    eps = [0] * (beta.n + 1)
    for k, c in enumerate(beta.eps, start=1):
        eps[sigma(k) - 1] = c
    return RootVector(beta.n, tuple(eps))


def transposition_word(i: int, j: int, n: int) -> tuple[int, ...]:
    """A word in the simple transpositions whose product is (i j).

    The word climbs from s_i up to s_{j-1} and back down, and the result
    is certified at construction by composing the permutations.

    >>> transposition_word(1, 3, 2)
    (1, 2, 1)
    """
    if not 1 <= i < j <= n + 1:
        raise ValueError(f"need 1 <= i < j <= {n + 1}, got ({i}, {j})")
    word = tuple(range(i, j)) + tuple(range(j - 2, i - 1, -1))
    product = Permutation.identity(n + 1)
    for k in word:
        product = product * Permutation.transposition(n + 1, k, k + 1)
    if product != Permutation.transposition(n + 1, i, j):
        raise AssertionError(f"word {word} fails to compose to ({i} {j})")
    return word
