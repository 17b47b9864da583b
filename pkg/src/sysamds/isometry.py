"""Isometries of binary Hamming space and canonical forms under them.

For q = 2 every distance-preserving bijection of F_2^n is a translation
composed with a coordinate permutation, so that pair is the whole group.
Canonical forms minimize the sorted word list lexicographically over all
images; translations can be restricted to elements of the code because
only those put zero (the smallest word) at the front of the list.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Sequence

from .core import (
    BinaryCode,
    Codeword,
    distance_distribution,
    min_distance,
    weight_distribution,
)


def invert_permutation(perm: Sequence[int]) -> tuple[int, ...]:
    inverse = [0] * len(perm)
    for source, target in enumerate(perm):
        inverse[target] = source
    return tuple(inverse)


def permute_bits(bits: int, perm: Sequence[int], n: int) -> int:
    """Move the bit at position i to position perm[i] (positions count from the left)."""
    out = 0
    for i in range(n):
        if (bits >> (n - 1 - i)) & 1:
            out |= 1 << (n - 1 - perm[i])
    return out


@dataclass(frozen=True)
class Isometry:
    """Translation followed by a coordinate permutation."""

    translation: Codeword
    permutation: tuple[int, ...]

    def __post_init__(self) -> None:
        if sorted(self.permutation) != list(range(self.translation.length)):
            raise ValueError("permutation must rearrange exactly the coordinate positions")

    @property
    def n(self) -> int:
        return self.translation.length

    @classmethod
    def identity(cls, n: int) -> Isometry:
        return cls(Codeword.zero(n), tuple(range(n)))

    def compose(self, other: Isometry) -> Isometry:
        """The isometry acting as `self` after `other`."""
        if self.n != other.n:
            raise ValueError(f"length mismatch: {self.n} vs {other.n}")
        n = self.n
        perm = tuple(self.permutation[other.permutation[p]] for p in range(n))
        pulled_back = permute_bits(
            self.translation.bits, invert_permutation(other.permutation), n
        )
        return Isometry(Codeword(n, other.translation.bits ^ pulled_back), perm)

    def __call__(self, word: Codeword) -> Codeword:
        if word.length != self.n:
            raise ValueError(f"length mismatch: {word.length} vs {self.n}")
        return Codeword(self.n, permute_bits(word.bits ^ self.translation.bits, self.permutation, self.n))


def apply(iso: Isometry, code: BinaryCode) -> BinaryCode:
    """Image of the code; same size, identical pairwise-distance multiset."""
    if iso.n != code.length:
        raise ValueError(f"length mismatch: {iso.n} vs {code.length}")
    t = iso.translation.bits
    return BinaryCode.from_ints(
        code.length,
        (permute_bits(bits ^ t, iso.permutation, code.length) for bits in code.word_ints),
    )


def _min_image(words: list[int], n: int, best: tuple[int, ...] | None) -> tuple[int, ...] | None:
    """Least sorted word list over column permutations, branch-and-bound.

    Output columns are fixed left to right. A partial assignment is viable
    only while its sorted prefix list does not exceed the prefix of the
    best complete image found so far; because truncating a sorted word
    list entrywise yields the sorted prefix list, that comparison is exact.
    Interchangeable (identical) columns are collapsed into one branch.
    """
    size = len(words)
    columns = Counter(tuple((w >> (n - 1 - c)) & 1 for w in words) for c in range(n))
    state = [best]

    def descend(depth: int, prefixes: list[int]) -> None:
        options = []
        for column, left in columns.items():
            if not left:
                continue
            extended = [(p << 1) | column[i] for i, p in enumerate(prefixes)]
            options.append((sorted(extended), column, extended))
        options.sort(key=lambda option: option[0])
        for skey, column, extended in options:
            current = state[0]
            if current is not None and skey > [c >> (n - depth - 1) for c in current]:
                break
            if depth + 1 == n:
                candidate = tuple(skey)
                if current is None or candidate < current:
                    state[0] = candidate
            else:
                columns[column] -= 1
                descend(depth + 1, extended)
                columns[column] += 1

    descend(0, [0] * size)
    return state[0]


def canonical_form(code: BinaryCode) -> BinaryCode:
    """Least image of the code over all isometries.

    Constant on isometry orbits and idempotent. Translation candidates are
    the codewords themselves; translated sets that coincide (as they all do
    for linear codes) are canonicalized once.
    """
    n = code.length
    ints = code.word_ints
    best: tuple[int, ...] | None = None
    seen: set[tuple[int, ...]] = set()
    for t in ints:
        translated = tuple(sorted(w ^ t for w in ints))
        if translated in seen:
            continue
        seen.add(translated)
        best = _min_image(list(translated), n, best)
    assert best is not None
    return BinaryCode.from_ints(n, best)


def _translation_column_profile(code: BinaryCode) -> tuple[tuple[int, ...], ...]:
    """Isometry-invariant refinement: column-weight multisets over all zero-normalizations."""
    n = code.length
    ints = code.word_ints
    profiles = []
    for t in ints:
        translated = [w ^ t for w in ints]
        weights = tuple(
            sorted(sum((w >> (n - 1 - c)) & 1 for w in translated) for c in range(n))
        )
        profiles.append(weights)
    return tuple(sorted(profiles))


def are_isometric(first: BinaryCode, second: BinaryCode) -> bool:
    """Whether some isometry maps one code onto the other."""
    if first.length != second.length:
        raise ValueError(f"length mismatch: {first.length} vs {second.length}")
    if first.size != second.size:
        return False
    if distance_distribution(first) != distance_distribution(second):
        return False
    if _translation_column_profile(first) != _translation_column_profile(second):
        return False
    return canonical_form(first) == canonical_form(second)


def are_w_equivalent(first: BinaryCode, second: BinaryCode) -> bool:
    """Equal lengths and equal weight distributions (zero-containing codes)."""
    if not first.contains_zero or not second.contains_zero:
        raise ValueError("weight comparison requires zero-containing codes")
    if first.length != second.length:
        return False
    return weight_distribution(first) == weight_distribution(second)


def are_p_equivalent(first: BinaryCode, second: BinaryCode) -> bool:
    """Equal parameter triples (length, size, minimum distance)."""
    if first.size < 2 or second.size < 2:
        raise ValueError("parameters undefined for codes with fewer than two words")
    return (first.length, first.size, min_distance(first)) == (
        second.length,
        second.size,
        min_distance(second),
    )


def dedupe_up_to_isometry(codes: Sequence[BinaryCode]) -> list[BinaryCode]:
    """One canonical representative per isometry class, in sorted order."""
    codes = list(codes)
    if not codes:
        return []
    length = codes[0].length
    if any(code.length != length for code in codes):
        raise ValueError("codes must share a length")
    unique: dict[tuple[int, ...], BinaryCode] = {}
    for code in codes:
        form = canonical_form(code)
        unique.setdefault(form.word_ints, form)
    return [unique[key] for key in sorted(unique)]
