"""Systematic encodings and the backtracking enumerator for AMDS codes.

A systematic code of size 2^k is stored as its encoding table: the list of
2^k redundancy values indexed by message value, with table[0] = 0. The
enumerator assigns table entries in message order and prunes a branch as
soon as a newly placed codeword sits closer than the target distance to
any earlier codeword, which keeps the (7,3) and (8,4) searches desk-scale.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .core import BinaryCode

MAX_ENUM_LENGTH = 12


@dataclass(frozen=True)
class EncodingTable:
    """Map from k-bit messages to r-bit redundancy values."""

    k: int
    r: int
    table: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.k < 0 or self.r < 1 or self.k + self.r > 64:
            raise ValueError(f"need 0 <= k, 1 <= r, k + r <= 64, got k={self.k}, r={self.r}")
        if len(self.table) != 1 << self.k:
            raise ValueError(f"table must have 2^{self.k} entries, got {len(self.table)}")
        if self.table[0] != 0:
            raise ValueError("the zero message must encode to zero")
        top = 1 << self.r
        for message, value in enumerate(self.table):
            if not 0 <= value < top:
                raise ValueError(f"entry {value} for message {message} does not fit in {self.r} bits")

    @property
    def n(self) -> int:
        return self.k + self.r


def code_from_table(table: EncodingTable) -> BinaryCode:
    """Code {(message, redundancy)}; the message occupies the first k positions."""
    return BinaryCode.from_ints(
        table.n, ((message << table.r) | value for message, value in enumerate(table.table))
    )


def is_systematic(code: BinaryCode, k: int) -> bool:
    """True iff the code contains zero and its first k positions carry every message once."""
    if k < 0 or code.size != 1 << k:
        raise ValueError(f"size must be 2^k, got size {code.size} with k={k}")
    if code.length <= k:
        raise ValueError("need at least one redundancy position")
    if not code.contains_zero:
        return False
    r = code.length - k
    return len({bits >> r for bits in code.word_ints}) == code.size


def table_from_code(code: BinaryCode, k: int) -> EncodingTable:
    """Recover the encoding table of a systematic code."""
    if not is_systematic(code, k):
        raise ValueError(f"code is not systematic with message length {k}")
    r = code.length - k
    mask = (1 << r) - 1
    values = [0] * (1 << k)
    for bits in code.word_ints:
        values[bits >> r] = bits & mask
    return EncodingTable(k, r, tuple(values))


def is_parity_check_function(table: EncodingTable) -> bool:
    """True iff every message encodes to its own bit-parity (r = 1 only)."""
    if table.r != 1:
        raise ValueError("parity-check test applies to single-bit redundancy")
    return all(value == (message.bit_count() & 1) for message, value in enumerate(table.table))


def count_d1_amds(n: int) -> int:
    """Closed-form count of distance-1 systematic AMDS codes of length n."""
    if n < 2:
        raise ValueError("need n >= 2")
    return 2 ** (2 ** (n - 1) - 1) - 1


def check_d2_characterization(table: EncodingTable) -> bool:
    """True iff the two-bit redundancy values differ on every adjacent message pair."""
    if table.r != 2:
        raise ValueError("characterization applies to two-bit redundancy")
    if table.k < 2:
        raise ValueError("need k >= 2")
    values = table.table
    for message in range(1 << table.k):
        for bit in range(table.k):
            neighbor = message ^ (1 << bit)
            if neighbor > message and values[message] == values[neighbor]:
                return False
    return True


@dataclass(frozen=True)
class EnumerationResult:
    """Outcome of one (n, d) search, in deterministic table order."""

    n: int
    d: int
    count: int
    codes: tuple[BinaryCode, ...] | None
    nodes_explored: int


def _constraints(k: int, d: int) -> list[list[tuple[int, int]]]:
    """For each message, the earlier messages whose codewords can violate d.

    Entry (other, need) means the redundancy values must differ in at least
    `need` bits. Tightest constraints first, so infeasible candidates die
    on the first check most of the time.
    """
    size = 1 << k
    out: list[list[tuple[int, int]]] = [[] for _ in range(size)]
    for message in range(1, size):
        rows = []
        for other in range(message):
            need = d - (message ^ other).bit_count()
            if need > 0:
                rows.append((other, need))
        rows.sort(key=lambda row: -row[1])
        out[message] = rows
    return out


def _achieves_distance(table: list[int], r: int, d: int) -> bool:
    """Whether some pair of codewords sits at distance exactly d."""
    words = [(message << r) | value for message, value in enumerate(table)]
    for i, a in enumerate(words):
        for b in words[i + 1 :]:
            if (a ^ b).bit_count() == d:
                return True
    return False


def _search_branch(
    k: int,
    r: int,
    d: int,
    prefix: tuple[int, ...],
    limit: int | None,
    collect: bool,
) -> tuple[list[tuple[int, ...]] | int, int]:
    """Backtracking over tables with the first entries fixed to `prefix`.

    Iterative depth-first search in message order, candidate values
    ascending; the emitted tables are therefore in lexicographic order.
    Returns (tables or count, nodes explored).
    """
    size = 1 << k
    ncand = 1 << r
    cons = _constraints(k, d)
    table = [0] * size
    nodes = 0
    for offset, value in enumerate(prefix):
        message = 1 + offset
        nodes += 1
        if any((value ^ table[other]).bit_count() < need for other, need in cons[message]):
            return ([] if collect else 0), nodes
        table[message] = value
    start = 1 + len(prefix)
    tables: list[tuple[int, ...]] = []
    count = 0
    if start >= size:
        if _achieves_distance(table, r, d):
            count = 1
            if collect:
                tables.append(tuple(table))
        return (tables if collect else count), nodes
    next_value = [0] * (size + 1)
    pos = start
    while True:
        value = next_value[pos]
        if value == ncand:
            pos -= 1
            if pos < start:
                break
            continue
        next_value[pos] = value + 1
        nodes += 1
        feasible = True
        for other, need in cons[pos]:
            if (value ^ table[other]).bit_count() < need:
                feasible = False
                break
        if not feasible:
            continue
        table[pos] = value
        if pos + 1 == size:
            # complete table; pruning already guarantees min distance >= d
            if _achieves_distance(table, r, d):
                count += 1
                if collect:
                    tables.append(tuple(table))
                if limit is not None and count >= limit:
                    break
        else:
            pos += 1
            next_value[pos] = 0
    return (tables if collect else count), nodes


def _search_branch_args(args: tuple) -> tuple[list[tuple[int, ...]] | int, int]:
    return _search_branch(*args)


def enumerate_systematic_amds(
    n: int,
    d: int,
    *,
    count_only: bool = False,
    limit: int | None = None,
    jobs: int = 1,
) -> EnumerationResult:
    """All systematic AMDS codes of length n and minimum distance exactly d.

    Codes contain zero by construction and are emitted in lexicographic
    table order, so two runs (with any worker count) agree byte for byte.
    With jobs > 1 the search forest is split on the first table entry and
    the partial results re-sorted; `limit` forces the sequential path.
    """
    if d < 1:
        raise ValueError("minimum distance must be at least 1")
    if n > MAX_ENUM_LENGTH:
        raise ValueError(f"length capped at {MAX_ENUM_LENGTH} to keep searches bounded")
    k = n - d
    if k < 1:
        raise ValueError("need at least one message position (d < n)")
    if limit is not None and limit < 1:
        raise ValueError("limit must be positive")
    r = d
    if jobs > 1 and limit is None:
        branch_args = [(k, r, d, (value,), None, not count_only) for value in range(1 << r)]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = list(pool.map(_search_branch_args, branch_args))
        nodes = sum(part_nodes for _, part_nodes in parts)
        if count_only:
            return EnumerationResult(n, d, sum(payload for payload, _ in parts), None, nodes)
        tables = sorted(table for payload, _ in parts for table in payload)
    else:
        payload, nodes = _search_branch(k, r, d, (), limit, not count_only)
        if count_only:
            return EnumerationResult(n, d, payload, None, nodes)
        tables = payload
    codes = tuple(code_from_table(EncodingTable(k, r, table)) for table in tables)
    return EnumerationResult(n, d, len(codes), codes, nodes)
