"""Words over the Artin generators S_1..S_n and their projection to the
symmetric group on n+1 letters.

Words are never rewritten with braid relations (that would be the word
problem); equality of the group elements they denote is checked downstream
by evaluating both sides as matrices.  The only rewriting here is free
reduction, the cancellation of adjacent S_i S_i^{-1} pairs.
"""

from __future__ import annotations

from dataclasses import dataclass

from .roots import Permutation, simple_root, pairing

Letter = tuple[int, int]  # (generator index, exponent +1 or -1)


@dataclass(frozen=True)
class BraidWord:
    """A word over S_1..S_n, stored literally (not freely reduced)."""

    n: int
    letters: tuple[Letter, ...]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"rank must be at least 1, got {self.n}")
        letters = tuple((int(i), int(e)) for i, e in self.letters)
        object.__setattr__(self, "letters", letters)
        for i, e in letters:
            if not 1 <= i <= self.n:
                raise ValueError(f"generator index {i} out of range 1..{self.n}")
            if e not in (1, -1):
                raise ValueError(f"exponent must be +1 or -1, got {e}")

    @classmethod
    def empty(cls, n: int) -> BraidWord:
        return cls(n, ())

    @classmethod
    def from_ints(cls, n: int, signed: list[int] | tuple[int, ...]) -> BraidWord:
        """Build from signed indices: -k means S_k inverse.

        >>> BraidWord.from_ints(2, [1, 2, -1]).letters
        ((1, 1), (2, 1), (1, -1))
        """
        letters = []
        for v in signed:
            if v == 0:
                raise ValueError("0 is not a generator index")
            letters.append((abs(v), 1 if v > 0 else -1))
        return cls(n, tuple(letters))

    def to_ints(self) -> tuple[int, ...]:
        return tuple(i * e for i, e in self.letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __mul__(self, other: BraidWord) -> BraidWord:
        return concat_reduce(self, other)

    def inverse(self) -> BraidWord:
        return BraidWord(self.n, tuple((i, -e) for i, e in
                                       reversed(self.letters)))

    def free_reduce(self) -> BraidWord:
        """Cancel adjacent inverse pairs until none remain."""
        stack: list[Letter] = []
        for letter in self.letters:
            if stack and stack[-1][0] == letter[0] and \
                    stack[-1][1] == -letter[1]:
                stack.pop()
            else:
                stack.append(letter)
        return BraidWord(self.n, tuple(stack))

    def __str__(self) -> str:
        return word_to_text(self)


def parse_word(n: int, text: str) -> BraidWord:
    """Parse the whitespace-separated signed-integer format, e.g. "1 2 -1"."""
    try:
        signed = [int(tok) for tok in text.split()]
    except ValueError as exc:
        raise ValueError(f"cannot parse word {text!r}") from exc
    return BraidWord.from_ints(n, signed)


def word_to_text(w: BraidWord) -> str:
    return " ".join(str(v) for v in w.to_ints())


def concat_reduce(a: BraidWord, b: BraidWord) -> BraidWord:
    """Concatenate two words and apply free reduction.

    >>> w = BraidWord.from_ints(2, [1, 2])
    >>> concat_reduce(w, BraidWord.from_ints(2, [-2, 1])).to_ints()
    (1, 1)
    """
    if a.n != b.n:
        raise ValueError(f"rank mismatch: {a.n} vs {b.n}")
    return BraidWord(a.n, a.letters + b.letters).free_reduce()


def natural_projection(w: BraidWord) -> Permutation:
    """The image of a word in the symmetric group on n+1 letters.

    Each S_i, with either exponent, maps to the adjacent transposition
    (i, i+1); letters compose left to right, matching matrix products.
    """
    result = Permutation.identity(w.n + 1)
    for i, _ in w.letters:
        result = result * Permutation.transposition(w.n + 1, i, i + 1)
    return result


def is_pure(w: BraidWord) -> bool:
    """True when the word projects to the identity permutation."""
    return natural_projection(w).is_identity()


@dataclass(frozen=True)
class CoxeterMatrix:
    """Pair orders for type A_n: m(i,i) = 1, adjacent 3, distant 2."""

    n: int

    def m(self, i: int, j: int) -> int:
        for k in (i, j):
            if not 1 <= k <= self.n:
                raise ValueError(f"index {k} out of range 1..{self.n}")
        if i == j:
            return 1
        return 3 if abs(i - j) == 1 else 2


@dataclass(frozen=True)
class RelationInstance:
    """One relation template: assert left and right evaluate equally."""

    tag: str
    i: int
    j: int
    left: BraidWord
    right: BraidWord


def _alternating(n: int, first: int, second: int, length: int) -> BraidWord:
    signed = [first if k % 2 == 0 else second for k in range(length)]
    return BraidWord.from_ints(n, signed)


def relation_instances(n: int) -> list[RelationInstance]:
    """All relation templates for rank n, as pairs of braid words.

    Four families are emitted, tagged 2.9 (braid relations), 2.10
    (commuting squares), 2.11 (fourth power trivial) and 2.12 (square
    twisted by conjugation).  Families 2.9, 2.10 and 2.12 range over
    ordered pairs i != j; family 2.11 involves a single index and is
    emitted once per i (so rank 1 still checks S_1^4).
    """
    if n < 1:
        raise ValueError(f"rank must be at least 1, got {n}")
    cox = CoxeterMatrix(n)
    out = []
    for i in range(1, n + 1):
        out.append(RelationInstance(
            "2.11", i, i,
            BraidWord.from_ints(n, [i] * 4), BraidWord.empty(n)))
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if i == j:
                continue
            m = cox.m(i, j)
            out.append(RelationInstance(
                "2.9", i, j,
                _alternating(n, i, j, m), _alternating(n, j, i, m)))
            out.append(RelationInstance(
                "2.10", i, j,
                BraidWord.from_ints(n, [i, i, j, j]),
                BraidWord.from_ints(n, [j, j, i, i])))
            # exponent -2 * <alpha_j, h_i>: 2 for adjacent i, j, else 0
            e = -2 * pairing(simple_root(n, j), i)
            sign = 1 if e >= 0 else -1
            out.append(RelationInstance(
                "2.12", i, j,
                BraidWord.from_ints(n, [i, j, j, -i]),
                BraidWord.from_ints(n, [j, j] + [sign * i] * abs(e))))
    return out
