"""Size bounds for codes and the MDS/AMDS predicates.

All arithmetic is exact integer arithmetic; the Plotkin bound reports an
explicit "no constraint" marker (None) when its hypothesis 2d > n fails,
rather than conflating a vacuous bound with a full-space one.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .core import BinaryCode, min_distance


def _check_params(n: int, d: int) -> None:
    if d < 1 or d > n:
        raise ValueError(f"need 1 <= d <= n, got n={n}, d={d}")


def singleton_max(n: int, d: int, q: int = 2) -> int:
    """Largest size allowed by the Singleton bound: q^(n-d+1)."""
    _check_params(n, d)
    return q ** (n - d + 1)


def hamming_max(n: int, d: int, q: int = 2) -> int:
    """Sphere-packing bound: floor(q^n / V) with balls of radius (d-1)//2."""
    _check_params(n, d)
    radius = (d - 1) // 2
    volume = sum(math.comb(n, j) * (q - 1) ** j for j in range(radius + 1))
    return q**n // volume


def plotkin_max(n: int, d: int) -> int | None:
    """Binary Plotkin bound 2*floor(d/(2d-n)) when 2d > n, else None."""
    _check_params(n, d)
    if 2 * d <= n:
        return None
    return 2 * (d // (2 * d - n))


def mds_dimension_cap(d: int, q: int = 2) -> int:
    """Upper bound q-1 on k for an MDS code of size q^k with d >= 3."""
    if d < 3:
        raise ValueError("restriction applies only for d >= 3")
    return q - 1


def amds_dimension_cap(d: int, q: int = 2) -> int:
    """Upper bound q^2+q-2 on k for an AMDS code of size q^k with d >= 3."""
    if d < 3:
        raise ValueError("restriction applies only for d >= 3")
    return q * q + q - 2


def is_mds(code: BinaryCode) -> bool:
    """True iff the code attains the Singleton bound."""
    return code.size == singleton_max(code.length, min_distance(code))


def is_amds(code: BinaryCode) -> bool:
    """True iff the code sits one factor of two below the Singleton bound."""
    return 2 * code.size == singleton_max(code.length, min_distance(code))


@dataclass(frozen=True)
class BoundVerdict:
    bound: str
    max_size: int | None
    attained: bool | None


def bound_verdicts(n: int, d: int, size: int | None = None) -> list[BoundVerdict]:
    """Evaluate every bound at (n, d); `attained` only when a size is given."""
    _check_params(n, d)
    values: list[tuple[str, int | None]] = [
        ("singleton", singleton_max(n, d)),
        ("hamming", hamming_max(n, d)),
        ("plotkin", plotkin_max(n, d)),
        ("amds_restriction", (1 << amds_dimension_cap(d)) if d >= 3 else None),
    ]
    verdicts = []
    for name, max_size in values:
        attained = None
        if size is not None and max_size is not None:
            attained = size == max_size
        verdicts.append(BoundVerdict(name, max_size, attained))
    return verdicts
