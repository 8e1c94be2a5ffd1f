"""GF(2) linear algebra on bit-packed rows.

Rows are Python ints used as bitsets (bit j = column j).  Rank and
row-span queries are all the homology engine needs; both are backed by
the compiled kernel in `clcc._gf2fast` when it was built, with a pure
Python elimination as fallback.  Both paths are deterministic and return
identical results.
"""

from __future__ import annotations

from array import array
from typing import Iterable

try:
    from clcc import _gf2fast

    IMPLEMENTATION = "compiled"
except ImportError:  # pragma: no cover - depends on build environment
    _gf2fast = None
    IMPLEMENTATION = "pure"


def rank_pure(rows: Iterable[int]) -> int:
    """Gaussian elimination; pivot = highest set bit of each row."""
    basis: dict[int, int] = {}
    rank = 0
    for row in rows:
        while row:
            p = row.bit_length() - 1
            other = basis.get(p)
            if other is None:
                basis[p] = row
                rank += 1
                break
            row ^= other
    return rank


def _pack(rows: list[int], ncols: int) -> tuple[array, int]:
    nwords = max(1, (ncols + 63) // 64)
    buf = bytearray()
    nbytes = nwords * 8
    for row in rows:
        buf += row.to_bytes(nbytes, "little")
    return array("Q", bytes(buf)), nwords


def rank(rows: Iterable[int], ncols: int) -> int:
    rows = list(rows)
    if not rows or ncols <= 0:
        return 0
    if _gf2fast is not None:
        data, nwords = _pack(rows, ncols)
        return _gf2fast.rank_words(data, len(rows), nwords)
    return rank_pure(rows)


def in_rowspan(vec: int, rows: list[int], ncols: int) -> bool:
    if vec == 0:
        return True
    base = rank(rows, ncols)
    return rank(rows + [vec], ncols) == base
