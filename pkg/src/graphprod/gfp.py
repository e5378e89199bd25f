"""Incremental row echelon forms over prime fields.

Rows are streamed in one at a time and reduced against the pivots seen so
far; only independent rows are stored.  The pivot of a row is its largest
column index.
"""

from __future__ import annotations

from sympy import isprime


def check_prime(p: int) -> int:
    if not isinstance(p, int) or isinstance(p, bool) or not isprime(p):
        raise ValueError(f"{p!r} is not a prime")
    return p


class SparseEchelon:
    """Echelon structure over GF(p) with rows stored as ``{column: coefficient}``.

    Pivot rows are normalised to leading coefficient 1.
    """

    def __init__(self, p: int):
        self.p = check_prime(p)
        self.pivots = {}

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def reduce(self, row: dict) -> dict:
        p = self.p
        row = {c: v % p for c, v in row.items() if v % p}
        while row:
            lead = max(row)
            piv = self.pivots.get(lead)
            if piv is None:
                break
            factor = row[lead]
            for c, v in piv.items():
                nv = (row.get(c, 0) - factor * v) % p
                if nv:
                    row[c] = nv
                else:
                    row.pop(c, None)
        return row

    def add(self, row: dict) -> bool:
        """Insert ``row``; return True if it was independent of earlier rows."""
        row = self.reduce(row)
        if not row:
            return False
        lead = max(row)
        inv = pow(row[lead], -1, self.p)
        self.pivots[lead] = {c: v * inv % self.p for c, v in row.items()}
        return True

    def contains(self, row: dict) -> bool:
        return not self.reduce(row)


class BitsetEchelon:
    """Echelon structure over GF(2) with rows packed into Python integers."""

    p = 2

    def __init__(self):
        self.pivots = {}

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def reduce(self, row: int) -> int:
        pivots = self.pivots
        while row:
            piv = pivots.get(row.bit_length() - 1)
            if piv is None:
                break
            row ^= piv
        return row

    def add(self, row: int) -> bool:
        row = self.reduce(row)
        if not row:
            return False
        self.pivots[row.bit_length() - 1] = row
        return True

    def contains(self, row: int) -> bool:
        return not self.reduce(row)


def bits_from_columns(columns) -> int:
    """Pack an iterable of distinct column indices into an integer bitset."""
    cols = list(columns)
    if not cols:
        return 0
    buf = bytearray((max(cols) >> 3) + 1)
    for c in cols:
        buf[c >> 3] ^= 1 << (c & 7)
    return int.from_bytes(buf, "little")


def rank(rows, p: int) -> int:
    """Rank over GF(p) of an iterable of sparse rows."""
    if p == 2:
        ech = BitsetEchelon()
        for r in rows:
            ech.add(bits_from_columns(c for c, v in r.items() if v % 2))
        return ech.rank
    ech = SparseEchelon(p)
    for r in rows:
        ech.add(r)
    return ech.rank
