"""Binary codes over F_2 with the Hamming metric.

Codewords are immutable bit vectors backed by Python integers. Position 0
is the leftmost character of the textual form and the most significant bit
of the backing integer, so integer order on equal-length words coincides
with lexicographic order on their bitstrings.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Iterator

MAX_LENGTH = 64


@dataclass(frozen=True, order=True)
class Codeword:
    """Fixed-length bit vector, an element of F_2^n for n <= 64."""

    length: int
    bits: int

    def __post_init__(self) -> None:
        if not 1 <= self.length <= MAX_LENGTH:
            raise ValueError(f"length must be in 1..{MAX_LENGTH}, got {self.length}")
        if not 0 <= self.bits < (1 << self.length):
            raise ValueError(f"bits 0b{self.bits:b} do not fit in length {self.length}")

    @classmethod
    def from_string(cls, text: str) -> Codeword:
        if not text or set(text) - {"0", "1"}:
            raise ValueError(f"not a bitstring: {text!r}")
        return cls(len(text), int(text, 2))

    @classmethod
    def zero(cls, length: int) -> Codeword:
        return cls(length, 0)

    def bit(self, position: int) -> int:
        """Bit at `position`, counting from the left."""
        if not 0 <= position < self.length:
            raise IndexError(f"position {position} out of range for length {self.length}")
        return (self.bits >> (self.length - 1 - position)) & 1

    def __str__(self) -> str:
        return format(self.bits, f"0{self.length}b")


@dataclass(frozen=True)
class BinaryCode:
    """Duplicate-free collection of equal-length codewords, kept sorted.

    Single-word codes are representable (they appear as intermediate
    puncturing results) but the metric operations reject them.
    """

    length: int
    words: tuple[Codeword, ...]

    def __post_init__(self) -> None:
        if not 1 <= self.length <= MAX_LENGTH:
            raise ValueError(f"length must be in 1..{MAX_LENGTH}, got {self.length}")
        if not self.words:
            raise ValueError("a code needs at least one word")
        for word in self.words:
            if word.length != self.length:
                raise ValueError(
                    f"word {word} has length {word.length}, code has length {self.length}"
                )
        normalized = tuple(sorted(set(self.words)))
        if normalized != self.words:
            object.__setattr__(self, "words", normalized)

    @classmethod
    def from_ints(cls, length: int, ints: Iterable[int]) -> BinaryCode:
        return cls(length, tuple(Codeword(length, bits) for bits in set(ints)))

    @classmethod
    def from_strings(cls, strings: Iterable[str]) -> BinaryCode:
        words = tuple(Codeword.from_string(text) for text in strings)
        if not words:
            raise ValueError("a code needs at least one word")
        return cls(words[0].length, words)

    @classmethod
    def full_space(cls, length: int) -> BinaryCode:
        return cls.from_ints(length, range(1 << length))

    @property
    def size(self) -> int:
        return len(self.words)

    @cached_property
    def word_ints(self) -> tuple[int, ...]:
        return tuple(word.bits for word in self.words)

    @property
    def contains_zero(self) -> bool:
        return self.words[0].bits == 0

    def __len__(self) -> int:
        return len(self.words)

    def __iter__(self) -> Iterator[Codeword]:
        return iter(self.words)

    def __contains__(self, word: Codeword) -> bool:
        return word.length == self.length and word.bits in set(self.word_ints)

    def __str__(self) -> str:
        return "{" + ", ".join(str(word) for word in self.words) + "}"


def _require_same_length(v: Codeword, w: Codeword) -> None:
    if v.length != w.length:
        raise ValueError(f"length mismatch: {v.length} vs {w.length}")


def weight(word: Codeword) -> int:
    """Number of nonzero positions."""
    return word.bits.bit_count()


def overlap(v: Codeword, w: Codeword) -> int:
    """Number of positions where both words are 1."""
    _require_same_length(v, w)
    return (v.bits & w.bits).bit_count()


def distance(v: Codeword, w: Codeword) -> int:
    """Hamming distance: number of positions where the words differ."""
    _require_same_length(v, w)
    return (v.bits ^ w.bits).bit_count()


def min_distance(code: BinaryCode) -> int:
    """Minimum Hamming distance over distinct word pairs.

    Exits early once a pair at distance 1 is found, since distinct words
    cannot be closer.
    """
    if code.size < 2:
        raise ValueError("minimum distance undefined for codes with fewer than two words")
    ints = code.word_ints
    best = code.length
    for i, a in enumerate(ints):
        for b in ints[i + 1 :]:
            dist = (a ^ b).bit_count()
            if dist < best:
                if dist == 1:
                    return 1
                best = dist
    return best


def weight_distribution(code: BinaryCode) -> tuple[int, ...]:
    """Counts of codewords at each weight 0..n; requires the zero word."""
    if not code.contains_zero:
        raise ValueError("weight distribution requires the zero word")
    counts = [0] * (code.length + 1)
    for bits in code.word_ints:
        counts[bits.bit_count()] += 1
    return tuple(counts)


def distance_distribution(code: BinaryCode) -> tuple[Fraction, ...]:
    """Ordered-pair counts at each distance 0..n, divided by the code size.

    The entries are exact rationals: for codes that are not linear the
    normalized counts need not be integers.
    """
    counts = [0] * (code.length + 1)
    counts[0] = code.size
    ints = code.word_ints
    for i, a in enumerate(ints):
        for b in ints[i + 1 :]:
            counts[(a ^ b).bit_count()] += 2
    return tuple(Fraction(c, code.size) for c in counts)


def is_linear(code: BinaryCode) -> bool:
    """True iff the code contains zero and is closed under XOR (quadratic scan)."""
    ints = set(code.word_ints)
    if 0 not in ints:
        return False
    members = sorted(ints)
    for i, a in enumerate(members):
        for b in members[i + 1 :]:
            if (a ^ b) not in ints:
                return False
    return True


def translate(code: BinaryCode, t: Codeword) -> BinaryCode:
    """XOR every codeword with `t`; preserves all pairwise distances."""
    if t.length != code.length:
        raise ValueError(f"length mismatch: {t.length} vs {code.length}")
    return BinaryCode.from_ints(code.length, (bits ^ t.bits for bits in code.word_ints))


def puncture_last(code: BinaryCode) -> BinaryCode:
    """Drop the last coordinate of every codeword, merging any collisions."""
    if code.length < 2:
        raise ValueError("cannot puncture a length-1 code")
    return BinaryCode.from_ints(code.length - 1, (bits >> 1 for bits in code.word_ints))


def extend_parity(code: BinaryCode) -> BinaryCode:
    """Append to each codeword the XOR of its bits.

    Raises an odd minimum distance by exactly one.
    """
    if code.length >= MAX_LENGTH:
        raise ValueError(f"cannot extend beyond length {MAX_LENGTH}")
    return BinaryCode.from_ints(
        code.length + 1,
        ((bits << 1) | (bits.bit_count() & 1) for bits in code.word_ints),
    )


@dataclass(frozen=True)
class DistributionReport:
    """Weight distribution (integers) and distance distribution (rationals)."""

    length: int
    weight_distribution: tuple[int, ...] | None
    distance_distribution: tuple[Fraction, ...]

    @classmethod
    def of(cls, code: BinaryCode) -> DistributionReport:
        weights = weight_distribution(code) if code.contains_zero else None
        return cls(code.length, weights, distance_distribution(code))
