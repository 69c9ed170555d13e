"""Braid words, the symmetric-group quotient, Markov moves, and cables.

A word is a sequence of nonzero letters: +i is the i-th elementary
crossing (strand i passing over strand i+1), -i its inverse. Words are
kept as-is; equality beyond free reduction is delegated to invariants.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .errors import ParseError


@dataclass(frozen=True)
class Permutation:
    """Bijection of {1..n}; images[j-1] is where j is sent."""

    images: tuple[int, ...]

    def __post_init__(self):
        n = len(self.images)
        if sorted(self.images) != list(range(1, n + 1)):
            raise ValueError(f"not a permutation of 1..{n}: {self.images}")

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    def of(self, j: int) -> int:
        return self.images[j - 1]

    def then(self, other: "Permutation") -> "Permutation":
        """Left-to-right composition: apply self first, then other."""
        return Permutation(tuple(other.of(i) for i in self.images))

    def is_identity(self) -> bool:
        return all(v == j + 1 for j, v in enumerate(self.images))

    def cycle_count(self) -> int:
        seen = [False] * len(self.images)
        count = 0
        for start in range(len(self.images)):
            if seen[start]:
                continue
            count += 1
            j = start
            while not seen[j]:
                seen[j] = True
                j = self.images[j] - 1
        return count


@dataclass(frozen=True)
class BraidWord:
    strands: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        if self.strands < 1:
            raise ValueError("a braid needs at least one strand")
        for e in self.letters:
            if e == 0 or abs(e) > self.strands - 1:
                raise ValueError(f"letter {e} out of range for {self.strands} strands")

    def __len__(self) -> int:
        return len(self.letters)

    def __mul__(self, other: "BraidWord") -> "BraidWord":
        if self.strands != other.strands:
            raise ValueError("cannot concatenate braids on different strand counts")
        return BraidWord(self.strands, self.letters + other.letters)

    def inverse(self) -> "BraidWord":
        return BraidWord(self.strands, tuple(-e for e in reversed(self.letters)))

    def free_reduce(self) -> "BraidWord":
        """Cancel adjacent inverse pairs until none remain."""
        out: list[int] = []
        for e in self.letters:
            if out and out[-1] == -e:
                out.pop()
            else:
                out.append(e)
        return BraidWord(self.strands, tuple(out))

    def permutation(self) -> Permutation:
        # at[p] = strand currently at position p (0-based).
        at = list(range(1, self.strands + 1))
        for e in self.letters:
            i = abs(e) - 1
            at[i], at[i + 1] = at[i + 1], at[i]
        images = [0] * self.strands
        for pos, strand in enumerate(at):
            images[strand - 1] = pos + 1
        return Permutation(tuple(images))

    def is_pure(self) -> bool:
        return self.permutation().is_identity()

    def closure_components(self) -> int:
        return self.permutation().cycle_count()

    def writhe(self) -> int:
        return sum(1 if e > 0 else -1 for e in self.letters)

    def stabilize(self) -> "BraidWord":
        """Markov move 1: append a positive crossing on a fresh strand."""
        return BraidWord(self.strands + 1, self.letters + (self.strands,))

    def conjugate(self, g: "BraidWord") -> "BraidWord":
        """Markov move 2: g * self * g^-1."""
        if g.strands != self.strands:
            raise ValueError("conjugating braid must have the same strand count")
        return g * self * g.inverse()

    def cable(self, r: int) -> "BraidWord":
        """Replace every strand by r parallel copies.

        Each letter becomes the block transposition passing all r strands
        of block i over block i+1 (r*r same-sign crossings), so the
        writhe scales by exactly r*r.
        """
        if r < 1:
            raise ValueError("cable width must be at least 1")
        if r == 1:
            return self
        letters: list[int] = []
        for e in self.letters:
            p0 = (abs(e) - 1) * r
            block = [p0 + r - a + b for a in range(r) for b in range(r)]
            if e > 0:
                letters.extend(block)
            else:
                letters.extend(-g for g in reversed(block))
        return BraidWord(self.strands * r, tuple(letters))

    def to_text(self) -> str:
        return " ".join([f"n={self.strands}"] + [str(e) for e in self.letters])

    def __repr__(self) -> str:
        return f"BraidWord({self.to_text()})"


def parse_braid(text: str) -> BraidWord:
    """Whitespace-separated signed integers, optional "n=<k>" prefix."""
    tokens = text.split()
    strands = None
    if tokens and tokens[0].startswith("n="):
        try:
            strands = int(tokens[0][2:])
        except ValueError:
            raise ParseError(f"bad strand count {tokens[0]!r}") from None
        if strands < 1:
            raise ParseError(f"strand count must be positive, got {strands}")
        tokens = tokens[1:]
    letters = []
    for tok in tokens:
        try:
            e = int(tok)
        except ValueError:
            raise ParseError(f"bad braid letter {tok!r}") from None
        if e == 0:
            raise ParseError("0 is not a braid letter (generators start at 1)")
        letters.append(e)
    needed = max((abs(e) for e in letters), default=0) + 1 if letters else 1
    if strands is None:
        strands = needed
    elif strands < needed:
        raise ParseError(f"letter out of range for declared n={strands}")
    return BraidWord(strands, tuple(letters))


def random_braid(n: int, length: int, seed: int) -> BraidWord:
    """Uniform letters over +-{1..n-1}; deterministic for a fixed seed."""
    if n < 2:
        raise ValueError("random braids need at least 2 strands")
    rng = random.Random(seed)
    letters = []
    for _ in range(length):
        i = rng.randrange(1, n)
        letters.append(i if rng.random() < 0.5 else -i)
    return BraidWord(n, tuple(letters))
