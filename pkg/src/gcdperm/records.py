"""Turning points, essential turning points, and the record machinery of f_3.

A turning point is an index where the sequence jumps by more than one (or
index 3 when f(3) is not the smallest available value); the value there is
a record.  An essential turning point (ETP) additionally has f(t-1) = t-2
with the values 1..t-1 fully used, which pins the whole future of the
recursion: the next ETP is f(t) + 1, and between the two the sequence just
counts upward.

For f_3 this gives a closed enumeration of records with no sequence
generation at all: after a record r, the next record is (r-1) + p where p
is the smallest prime not dividing r-1.  The first record is 5 at index 4,
every later record r sits at index (previous record) + 1, every prime >= 5
shows up as a record, and every record is odd and congruent to 1 or 5 mod 6.

Enumeration is seedable (the recurrence is local), so disjoint record
ranges can be produced independently, e.g. in parallel workers.
"""

from __future__ import annotations

from bisect import bisect_left, bisect_right
from dataclasses import dataclass
from typing import Iterable, Sequence

from .primes import is_prime, smallest_prime_not_dividing
from .sequence import SequenceBuffer

FIRST_ETP = 4
FIRST_RECORD = 5

CACHE_HEADER = "# a=3 records"


class InsufficientRecordsError(ValueError):
    """The supplied record list does not cover the requested index."""


@dataclass(frozen=True)
class TurningPoint:
    t: int
    is_etp: bool
    record_value: int


@dataclass(frozen=True)
class Record:
    """An f_3 record with its index and jump j = value - index."""

    value: int
    turning_point: int
    jump: int
    is_composite: bool


def find_turning_points(buffer: SequenceBuffer) -> list[TurningPoint]:
    """All turning points of the buffered prefix, each with its ETP verdict.

    Works for any seed a.  Index 3 is a turning point exactly when f(3)
    skips the smallest value outside {1, a}; later indices are turning
    points when the forward jump exceeds 1.
    """
    n = len(buffer)
    if n < 3:
        raise ValueError(f"need at least 3 terms, have {n}")
    a = buffer.a
    terms = buffer.terms
    smallest_free = 3 if a == 2 else 2  # min of the naturals minus {1, a}
    out: list[TurningPoint] = []
    running_max = max(1, a)
    for t in range(3, n + 1):
        complete_below = running_max == t - 1  # {f(1..t-1)} == {1..t-1}
        v = terms[t]
        if v - terms[t - 1] > 1 if t > 3 else v != smallest_free:
            is_etp = t > a and v != t and terms[t - 1] == t - 2 and complete_below
            out.append(TurningPoint(t, is_etp, v))
        if v > running_max:
            running_max = v
    return out


def next_etp(t: int, f_t: int) -> int:
    """Index of the ETP that follows the ETP t with record f_t: f_t + 1."""
    if f_t <= t:
        raise ValueError(f"({t}, {f_t}) cannot be an ETP with its record: need f(t) > t")
    return f_t + 1


def next_record(r: int) -> int:
    """The f_3 record that follows the record r (r >= 5).

    Equals (r-1) + p with p the smallest prime not dividing r-1: the next
    record is the least value above r coprime to r-1, and r-1 kills every
    smaller offset.
    """
    if r < FIRST_RECORD:
        raise ValueError(f"records start at {FIRST_RECORD}, got {r}")
    m = r - 1
    return m + smallest_prime_not_dividing(m)


class RecordStream:
    """Iterator over f_3 record values, strictly increasing.

    Seed with a known record to enumerate a later range without replaying
    from the start.
    """

    def __init__(self, seed: int = FIRST_RECORD):
        if seed < FIRST_RECORD or seed % 6 not in (1, 5):
            raise ValueError(f"{seed} cannot be a record (records are 6k+-1, >= 5)")
        self.last_record: int | None = None
        self.count = 0
        self._next = seed

    def __iter__(self) -> "RecordStream":
        return self

    def __next__(self) -> int:
        r = self._next
        self._next = next_record(r)
        self.last_record = r
        self.count += 1
        return r


# Shared ascending record list, grown on demand.  Its tail always extends
# past any limit it was asked to cover, so "the record after x" is always
# resolvable for x <= limit.
_CACHE = [FIRST_RECORD]


def cached_records(limit: int) -> list[int]:
    """The shared record list, guaranteed to extend beyond limit.

    Returns the live internal list for zero-copy bisecting; do not mutate.
    """
    r = _CACHE[-1]
    while r <= limit:
        r = next_record(r)
        _CACHE.append(r)
    return _CACHE


def record_values(limit: int) -> list[int]:
    """All f_3 record values <= limit, ascending."""
    if limit < FIRST_RECORD:
        return []
    recs = cached_records(limit)
    return recs[: bisect_right(recs, limit)]


def records_from_values(values: Sequence[int]) -> list[Record]:
    """Annotate a full ascending record-value list (starting at 5).

    The index of the first record is 4; each later record r follows the
    previous record q at index q + 1, so its jump is r - q - 1.
    """
    if values and values[0] != FIRST_RECORD:
        raise ValueError(f"annotation needs the full list from {FIRST_RECORD}, got {values[0]}")
    out: list[Record] = []
    prev = None
    for r in values:
        t = FIRST_ETP if prev is None else prev + 1
        out.append(Record(r, t, r - t, not is_prime(r)))
        prev = r
    return out


def record_stream_upto(limit: int) -> list[Record]:
    """All f_3 records <= limit with indices, jumps, and compositeness."""
    if limit < FIRST_RECORD:
        raise ValueError(f"limit must be >= {FIRST_RECORD}, got {limit}")
    return records_from_values(record_values(limit))


def _as_values(records: Sequence) -> Sequence[int]:
    if records and isinstance(records[0], Record):
        return [rec.value for rec in records]
    return records


def reconstruct_f3(n: int, records: Sequence | None = None) -> int:
    """f_3(n) straight from the record list, without sequential generation.

    If n-1 is a record, n is a turning point and f_3(n) is the next record;
    otherwise f_3(n) = n - 1 (counting stretch), with f(1)=1 and f(2)=3
    handled directly.  ``records`` may be record values or Record objects
    covering at least n+1; by default the shared cache is used and grown
    as needed.
    """
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    if n <= 4:
        return (1, 3, 2, 5)[n - 1]
    if records is None:
        recs = cached_records(n + 1)
    else:
        recs = _as_values(records)
        if not recs or recs[-1] < n + 1:
            have = recs[-1] if recs else None
            raise InsufficientRecordsError(
                f"reconstructing f_3({n}) needs records through {n + 1}, have {have}"
            )
    i = bisect_left(recs, n - 1)
    if i < len(recs) and recs[i] == n - 1:
        return recs[i + 1]
    return n - 1


def prime_multiple_records(p: int, limit: int) -> tuple[list[int], list[int]]:
    """Records <= limit divisible by the prime p >= 5, with their gaps.

    p itself (the only possible prime multiple) is excluded: the point is
    the trail of composite multiples.  Returns (values, consecutive diffs).
    """
    if p < 5 or not is_prime(p):
        raise ValueError(f"need a prime p >= 5, got {p}")
    vals = [r for r in record_values(limit) if r % p == 0 and r != p]
    gaps = [b - a for a, b in zip(vals, vals[1:])]
    return vals, gaps


def twin_records(limit: int) -> list[tuple[int, int]]:
    """Pairs of records (r, r+2), both <= limit.

    Equivalently: records with jump 1, paired with their predecessor."""
    recs = record_values(limit)
    return [(lo, hi) for lo, hi in zip(recs, recs[1:]) if hi - lo == 2]


def save_record_cache(path, records: Iterable[int]) -> None:
    """Write a plain-text record cache: header line, one value per line."""
    with open(path, "w", encoding="ascii", newline="\n") as fh:
        fh.write(CACHE_HEADER + "\n")
        for r in records:
            fh.write(f"{r}\n")


def load_record_cache(path, verify: bool = False) -> list[int]:
    """Read a record cache written by save_record_cache.

    Always checks the header and strict monotonicity; with verify=True also
    replays the record recurrence across the list.
    """
    with open(path, "r", encoding="ascii") as fh:
        lines = fh.read().splitlines()
    if not lines or lines[0].strip() != CACHE_HEADER:
        raise ValueError(f"{path}: missing record-cache header {CACHE_HEADER!r}")
    values = []
    for lineno, line in enumerate(lines[1:], start=2):
        line = line.strip()
        if not line:
            continue
        try:
            values.append(int(line))
        except ValueError:
            raise ValueError(f"{path}:{lineno}: not an integer: {line!r}") from None
    for prev, cur in zip(values, values[1:]):
        if cur <= prev:
            raise ValueError(f"{path}: record values must increase ({prev} -> {cur})")
    if verify:
        for prev, cur in zip(values, values[1:]):
            expected = next_record(prev)
            if cur != expected:
                raise ValueError(f"{path}: {cur} does not follow {prev} (expected {expected})")
    return values
