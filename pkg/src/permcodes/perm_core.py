"""Core value types and group operations for permutations of [n].

Everything here speaks 1-based values: a permutation of size n is a
rearrangement of {1, ..., n} written in one-line notation, and a staircase
word of length n has its i-th letter drawn from [1, i].  There are n! such
words, which is what makes them usable as codes for permutations.

All types are immutable after construction and all operations are pure.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import factorial
from typing import Iterator, Sequence


def _parse_csv_ints(text: str, what: str) -> tuple[int, ...]:
    parts = [p.strip() for p in text.split(",")]
    try:
        return tuple(int(p) for p in parts)
    except ValueError:
        raise ValueError(f"cannot parse {what} {text!r}: expected comma-separated integers") from None


@dataclass(frozen=True)
class Word:
    """A staircase word: the letter at 1-based position i lies in [1, i]."""

    letters: tuple[int, ...]

    def __post_init__(self):
        letters = tuple(int(x) for x in self.letters)
        object.__setattr__(self, "letters", letters)
        if not letters:
            raise ValueError("a word must have length >= 1")
        for i, x in enumerate(letters, start=1):
            if not 1 <= x <= i:
                raise ValueError(f"letter at position {i} is {x}, allowed range is [1, {i}]")

    @property
    def n(self) -> int:
        return len(self.letters)

    def letter(self, i: int) -> int:
        """The letter at 1-based position i."""
        return self.letters[i - 1]

    def to_text(self) -> str:
        return ",".join(str(x) for x in self.letters)

    @classmethod
    def from_text(cls, text: str) -> "Word":
        return cls(_parse_csv_ints(text, "word"))


def validate_word(letters: Sequence[int]) -> Word:
    """Check the staircase bounds and wrap the sequence as a Word."""
    return Word(tuple(letters))


@dataclass(frozen=True)
class Permutation:
    """A permutation of {1, ..., n} in one-line notation: images[i-1] = sigma(i)."""

    images: tuple[int, ...]

    def __post_init__(self):
        images = tuple(int(x) for x in self.images)
        object.__setattr__(self, "images", images)
        n = len(images)
        if n == 0:
            raise ValueError("a permutation must have size >= 1")
        if sorted(images) != list(range(1, n + 1)):
            raise ValueError(f"{images} is not a rearrangement of 1..{n}")

    @property
    def n(self) -> int:
        return len(self.images)

    def image(self, i: int) -> int:
        """sigma(i), with i 1-based."""
        return self.images[i - 1]

    def to_text(self) -> str:
        return ",".join(str(x) for x in self.images)

    @classmethod
    def from_text(cls, text: str) -> "Permutation":
        return cls(_parse_csv_ints(text, "permutation"))


@dataclass(frozen=True)
class CycleForm:
    """Disjoint cycles covering {1, ..., n}, kept in canonical order.

    Each cycle lists an orbit (x, sigma(x), sigma(sigma(x)), ...).  On
    construction every cycle is rotated so its minimum comes first and the
    cycles are sorted by ascending minimum; rotation does not change the
    permutation the cycle denotes.
    """

    cycles: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        cycles = tuple(tuple(int(x) for x in c) for c in self.cycles)
        if not cycles or any(not c for c in cycles):
            raise ValueError("cycle form needs at least one nonempty cycle")
        flat = [x for c in cycles for x in c]
        n = len(flat)
        if sorted(flat) != list(range(1, n + 1)):
            raise ValueError(f"cycles {cycles} do not partition 1..{n}")
        canon = []
        for c in cycles:
            k = c.index(min(c))
            canon.append(c[k:] + c[:k])
        canon.sort(key=lambda c: c[0])
        object.__setattr__(self, "cycles", tuple(canon))

    @property
    def n(self) -> int:
        return sum(len(c) for c in self.cycles)

    def to_text(self) -> str:
        return "".join("(" + " ".join(str(x) for x in c) + ")" for c in self.cycles)

    @classmethod
    def from_text(cls, text: str) -> "CycleForm":
        body = text.strip()
        if not (body.startswith("(") and body.endswith(")")):
            raise ValueError(f"cannot parse cycle form {text!r}")
        chunks = body[1:-1].split(")(")
        try:
            cycles = tuple(tuple(int(t) for t in chunk.split()) for chunk in chunks)
        except ValueError:
            raise ValueError(f"cannot parse cycle form {text!r}") from None
        return cls(cycles)


@dataclass(frozen=True)
class CycleType:
    """counts[j-1] = number of j-cycles; sum of j * counts[j-1] must equal n."""

    counts: tuple[int, ...]

    def __post_init__(self):
        counts = tuple(int(x) for x in self.counts)
        object.__setattr__(self, "counts", counts)
        n = len(counts)
        if n == 0:
            raise ValueError("a cycle type must have size >= 1")
        if any(a < 0 for a in counts):
            raise ValueError(f"negative multiplicity in cycle type {counts}")
        if sum(j * a for j, a in enumerate(counts, start=1)) != n:
            raise ValueError(f"cycle type {counts} does not weigh {n}")

    @property
    def n(self) -> int:
        return len(self.counts)

    @property
    def num_cycles(self) -> int:
        return sum(self.counts)

    def to_text(self) -> str:
        return ",".join(str(x) for x in self.counts)

    @classmethod
    def from_text(cls, text: str) -> "CycleType":
        return cls(_parse_csv_ints(text, "cycle type"))


def identity(n: int) -> Permutation:
    return Permutation(tuple(range(1, n + 1)))


def order_reversal(n: int) -> Permutation:
    """The order-reversing permutation n, n-1, ..., 1."""
    return Permutation(tuple(range(n, 0, -1)))


def compose(p: Permutation, q: Permutation) -> Permutation:
    """(p o q)(i) = p(q(i))."""
    if p.n != q.n:
        raise ValueError(f"size mismatch: {p.n} vs {q.n}")
    return Permutation(tuple(p.images[x - 1] for x in q.images))


def inverse(p: Permutation) -> Permutation:
    out = [0] * p.n
    for i, v in enumerate(p.images, start=1):
        out[v - 1] = i
    return Permutation(tuple(out))


def reverse(p: Permutation) -> Permutation:
    """The one-line sequence read right to left."""
    return Permutation(tuple(reversed(p.images)))


def complement(p: Permutation) -> Permutation:
    """Elementwise x -> n+1-x."""
    return Permutation(tuple(p.n + 1 - x for x in p.images))


def to_cycle_form(p: Permutation) -> CycleForm:
    n = p.n
    seen = [False] * (n + 1)
    cycles = []
    for start in range(1, n + 1):
        if seen[start]:
            continue
        cyc = [start]
        seen[start] = True
        x = p.images[start - 1]
        while x != start:
            cyc.append(x)
            seen[x] = True
            x = p.images[x - 1]
        cycles.append(tuple(cyc))
    return CycleForm(tuple(cycles))


def from_cycle_form(c: CycleForm) -> Permutation:
    out = [0] * c.n
    for cyc in c.cycles:
        for a, b in zip(cyc, cyc[1:] + (cyc[0],)):
            out[a - 1] = b
    return Permutation(tuple(out))


def cycle_type(p: Permutation) -> CycleType:
    counts = [0] * p.n
    for cyc in to_cycle_form(p).cycles:
        counts[len(cyc) - 1] += 1
    return CycleType(tuple(counts))


def is_involution(p: Permutation) -> bool:
    return compose(p, p).images == identity(p.n).images


def involution_count(n: int) -> int:
    """Number of self-inverse permutations of [n], by the standard recurrence."""
    if n < 0:
        raise ValueError("n must be >= 0")
    a, b = 1, 1  # counts for sizes m-2, m-1
    for m in range(2, n + 1):
        a, b = b, b + (m - 1) * a
    return b


# ---------------------------------------------------------------------------
# Word ranking in two linear orders.
#
# Lexicographic order compares letters left to right, so position i carries
# weight n!/i!.  Right-to-left lexicographic order compares letters from the
# last position backwards, giving position i weight (i-1)!.
# ---------------------------------------------------------------------------


def _check_rank(k: int, n: int):
    if n < 1:
        raise ValueError("n must be >= 1")
    if not 1 <= k <= factorial(n):
        raise ValueError(f"rank {k} out of range [1, {n}!] = [1, {factorial(n)}]")


def rank_lex(w: Word) -> int:
    n = w.n
    rank = 0
    weight = 1
    for i in range(n, 0, -1):
        rank += (w.letters[i - 1] - 1) * weight
        weight *= i
    return rank + 1


def unrank_lex(k: int, n: int) -> Word:
    _check_rank(k, n)
    k0 = k - 1
    letters = [0] * n
    weight = factorial(n)
    for i in range(1, n + 1):
        weight //= i
        letters[i - 1] = k0 // weight + 1
        k0 %= weight
    return Word(tuple(letters))


def rank_revlex(w: Word) -> int:
    rank = 0
    weight = 1
    for i in range(1, w.n + 1):
        rank += (w.letters[i - 1] - 1) * weight
        weight *= i
    return rank + 1


def unrank_revlex(k: int, n: int) -> Word:
    _check_rank(k, n)
    k0 = k - 1
    letters = [0] * n
    weight = factorial(n) // n
    for i in range(n, 0, -1):
        letters[i - 1] = k0 // weight + 1
        k0 %= weight
        if i > 1:
            weight //= i - 1
    return Word(tuple(letters))


def iter_words(n: int) -> Iterator[Word]:
    """All n! staircase words of length n, in lexicographic order."""
    if n < 1:
        raise ValueError("n must be >= 1")
    for tail in itertools.product(*[range(1, i + 1) for i in range(1, n + 1)]):
        yield Word(tail)
