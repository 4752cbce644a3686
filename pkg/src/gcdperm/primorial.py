"""Primorial structure of the f_3 records: translation, counts, density.

The record set is nearly periodic with the primorials P_n = p_1 * ... * p_n
as periods: every r * P_n +- 1 is a record for r up to p_{n+1} - 1, and
f_3(P_n + k) = f_3(k) + P_n across a long k-range.  Counting records in
primorial windows gives an exact recurrence

    w_{n+1} = w_n * p_{n+1} - s_{n+1}

with s_n the record count in [p_n, p_{n+1}) and w_n the count in
[p_{n+1}, P_n + 1], from which the asymptotic record density (about 0.2948)
is bracketed rigorously.

All operations here read the shared record cache and prefix snapshots, so
they are safe to run concurrently over different n or k ranges.
"""

from __future__ import annotations

import math
from bisect import bisect_left, bisect_right
from dataclasses import dataclass
from fractions import Fraction

from .primes import is_prime, next_prime, sieve_flags
from .records import cached_records, record_values, reconstruct_f3
from .sequence import LimitExceededError, generate_prefix

# Decimal value of the primorial reciprocal series 1/2 + 1/6 + 1/30 + ...
PRIMORIAL_RECIPROCAL_SERIES = 0.7052301717918009

# Enumeration guard for the record-heavy verifiers below.
DEFAULT_RECORD_LIMIT_CAP = 20_000_000


class PrimorialTable:
    """Primes p_1, p_2, ... with exact primorials P_n = p_1 * ... * p_n."""

    def __init__(self) -> None:
        self.primes = [2]
        self.primorials = [2]

    def _grow(self, n: int) -> None:
        while len(self.primes) < n:
            p = next_prime(self.primes[-1])
            self.primes.append(p)
            self.primorials.append(self.primorials[-1] * p)

    def prime(self, n: int) -> int:
        """The n-th prime, 1-based."""
        if n < 1:
            raise ValueError(f"need n >= 1, got {n}")
        self._grow(n)
        return self.primes[n - 1]

    def primorial(self, n: int) -> int:
        """P_n, the product of the first n primes, exact."""
        if n < 1:
            raise ValueError(f"need n >= 1, got {n}")
        self._grow(n)
        return self.primorials[n - 1]


_TABLE = PrimorialTable()


def primorial(n: int) -> int:
    """Product of the first n primes: 2, 6, 30, 210, 2310, ..."""
    return _TABLE.primorial(n)


def nth_prime(n: int) -> int:
    """The n-th prime, 1-based: p_1 = 2."""
    return _TABLE.prime(n)


def _counting_records(limit: int) -> list[int]:
    # Interval counters treat 3 = f_3(2) as a record (the window [3, 3]
    # holds one); the enumeration APIs start at 5.
    return [3] + record_values(limit)


def s_count(n: int) -> int:
    """Number of records in [p_n, p_{n+1})."""
    lo = _TABLE.prime(n)
    hi = _TABLE.prime(n + 1)
    recs = _counting_records(hi)
    return bisect_left(recs, hi) - bisect_left(recs, lo)


def w_count(n: int, check: bool = True) -> int:
    """Number of records in [p_{n+1}, P_n + 1].

    With check=True (default) the count is cross-checked against the
    recurrence w_n = w_{n-1} * p_n - s_n for n >= 3.
    """
    lo = _TABLE.prime(n + 1)
    hi = _TABLE.primorial(n) + 1
    recs = _counting_records(hi)
    w = bisect_right(recs, hi) - bisect_left(recs, lo)
    if check and n >= 3:
        prev = w_count(n - 1, check=False)
        expected = prev * _TABLE.prime(n) - s_count(n)
        if w != expected:
            raise RuntimeError(
                f"record count w_{n} = {w} breaks the window recurrence "
                f"(w_{n - 1} * p_{n} - s_{n} = {expected})"
            )
    return w


@dataclass(frozen=True)
class PrimorialRecordReport:
    """Outcome of checking that every r * P_n +- 1 is a record."""

    n: int
    r_range: tuple[int, int]
    checked: tuple[int, ...]
    missing: tuple[int, ...]

    @property
    def passed(self) -> bool:
        return not self.missing


def verify_primorial_records(n: int, record_limit_cap: int | None = None) -> PrimorialRecordReport:
    """Check r * P_n +- 1 against the record set for r = 1 .. p_{n+1} - 1."""
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    cap = DEFAULT_RECORD_LIMIT_CAP if record_limit_cap is None else record_limit_cap
    pn = _TABLE.primorial(n)
    r_hi = _TABLE.prime(n + 1) - 1
    limit = r_hi * pn + 1
    if limit > cap:
        raise LimitExceededError(f"record check up to {limit} exceeds the cap {cap}")
    recs = cached_records(limit)

    def present(v: int) -> bool:
        i = bisect_left(recs, v)
        return i < len(recs) and recs[i] == v

    targets = tuple(r * pn + eps for r in range(1, r_hi + 1) for eps in (-1, 1))
    missing = tuple(v for v in targets if not present(v))
    return PrimorialRecordReport(n, (1, r_hi), targets, missing)


@dataclass(frozen=True)
class TranslationReport:
    """Outcome of checking f_3(P_n + k) = f_3(k) + P_n over a k-range.

    ``stated`` is the range the window recurrence rests on,
    [p_{n+1}, (p_{n+1} - 1) * P_n]; ``maximal`` is the widest contiguous
    range around it that actually holds, found by probing outward (it is
    (0, 0) when the stated range itself fails somewhere).
    """

    n: int
    stated: tuple[int, int]
    failures: tuple[int, ...]
    maximal: tuple[int, int]

    @property
    def holds_on_stated(self) -> bool:
        return not self.failures


def verify_translation(n: int) -> TranslationReport:
    """Check the primorial translation identity for f_3 and find its true extent."""
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    pn = _TABLE.primorial(n)
    p_next = _TABLE.prime(n + 1)
    lo, hi = p_next, (p_next - 1) * pn
    prefix = generate_prefix(3, pn * p_next + pn)
    terms = prefix.terms
    failures = tuple(k for k in range(lo, hi + 1) if terms[pn + k] != terms[k] + pn)
    if failures:
        return TranslationReport(n, (lo, hi), failures, (0, 0))
    k_lo, k_hi = lo, hi
    while k_lo > 1 and terms[pn + k_lo - 1] == terms[k_lo - 1] + pn:
        k_lo -= 1
    while pn + k_hi + 1 < len(terms) and terms[pn + k_hi + 1] == terms[k_hi + 1] + pn:
        k_hi += 1
    return TranslationReport(n, (lo, hi), (), (k_lo, k_hi))


@dataclass(frozen=True)
class KappaBounds:
    """Rigorous two-sided estimate of the record density."""

    lower: Fraction
    upper: Fraction

    def as_floats(self) -> tuple[float, float]:
        return float(self.lower), float(self.upper)


def kappa_bounds(k_max: int) -> KappaBounds:
    """Bracket the record density via primorial partial sums.

        3/10 - sum_{k>=4} (p_{k+1} - p_k) / (2 P_k)  <=  kappa
        kappa  <=  3/10 - sum_{k>=4} 1 / P_k

    Sums are truncated at k_max; the lower bound subtracts a tail estimate
    (each tail term is at most 1/(2 P_{k-1}) and successive primorial
    reciprocals shrink by a factor >= 3, so the tail is below (3/4)/P_k_max),
    which keeps both sides rigorous.
    """
    if k_max < 4:
        raise ValueError(f"need k_max >= 4, got {k_max}")
    lower_sum = Fraction(0)
    upper_sum = Fraction(0)
    for k in range(4, k_max + 1):
        pk = _TABLE.prime(k)
        pk1 = _TABLE.prime(k + 1)
        prim = _TABLE.primorial(k)
        lower_sum += Fraction(pk1 - pk, 2 * prim)
        upper_sum += Fraction(1, prim)
    tail = Fraction(3, 4 * _TABLE.primorial(k_max))
    return KappaBounds(
        lower=Fraction(3, 10) - lower_sum - tail,
        upper=Fraction(3, 10) - upper_sum,
    )


def kappa_coarse_bounds() -> KappaBounds:
    """The coarse density bracket from bounding the primorial reciprocal series.

    With 0.704 <= 1/2 + 1/6 + 1/30 + 1/210 + ... <= 0.706:

        lower = 3/10 - (0.706 - 1/2 - 1/6)        = 782/3000
        upper = 3/10 - (0.704 - 1/2 - 1/6 - 1/30) = 296/1000

    Weaker than kappa_bounds (the lower side drops a factor 1/2) but exact
    round numbers, handy as a reference interval.
    """
    series_lo = Fraction(704, 1000)
    series_hi = Fraction(706, 1000)
    head2 = Fraction(1, 2) + Fraction(1, 6)
    head3 = head2 + Fraction(1, 30)
    return KappaBounds(
        lower=Fraction(3, 10) - (series_hi - head2),
        upper=Fraction(3, 10) - (series_lo - head3),
    )


def kappa_empirical(n: int) -> float:
    """Record density in [1, n]: #records <= n divided by n."""
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    recs = cached_records(n)
    return bisect_right(recs, n) / n


def prime_ratio_series(limit: int, stride: int = 1) -> list[tuple[int, float]]:
    """Sampled series of (prime records / records) * ln(record value).

    One point per stride-th record r <= limit, counting records and prime
    records up to and including r.  The series drifts toward the reciprocal
    of the record density.
    """
    if stride < 1:
        raise ValueError(f"need stride >= 1, got {stride}")
    recs = record_values(limit)
    flags = sieve_flags(limit)
    out = []
    prime_count = 0
    for k, r in enumerate(recs, start=1):
        prime_count += flags[r]
        if k % stride == 0:
            out.append((r, prime_count / k * math.log(r)))
    return out


def primes_within_records_series(limit: int, stride: int = 1) -> list[tuple[int, int]]:
    """Cumulative count of prime records at every stride-th record <= limit."""
    if stride < 1:
        raise ValueError(f"need stride >= 1, got {stride}")
    recs = record_values(limit)
    flags = sieve_flags(limit)
    out = []
    prime_count = 0
    for k, r in enumerate(recs, start=1):
        prime_count += flags[r]
        if k % stride == 0:
            out.append((r, prime_count))
    return out


@dataclass(frozen=True)
class DerivativeCheck:
    """One probe of the forward difference at a prime index q = k * P_n + 1."""

    k: int
    q: int
    derivative: int
    bound: int

    @property
    def ok(self) -> bool:
        return self.derivative >= self.bound


def derivative_bound_check(n: int, k_max: int) -> list[DerivativeCheck]:
    """Check g(q) >= 2n + 1 at every prime q = k * P_n + 1 with q > 5, k <= k_max.

    The report may be empty (vacuous) when no k in range yields a prime.
    The derivative is taken from the record reconstruction of f_3.
    """
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    pn = _TABLE.primorial(n)
    rows = []
    for k in range(1, k_max + 1):
        q = k * pn + 1
        if q <= 5 or not is_prime(q):
            continue
        g = reconstruct_f3(q + 1) - reconstruct_f3(q)
        rows.append(DerivativeCheck(k, q, g, 2 * n + 1))
    return rows


@dataclass(frozen=True)
class DensityLedger:
    """Window record counts with the density estimates they support."""

    s: tuple[int, ...]  # s[i] = s_{i+1}
    w: tuple[int, ...]  # w[i] = w_{i+1}
    kappa_empirical: float
    bounds: KappaBounds

    def recurrence_holds(self) -> bool:
        # 0-based tuples: w[i] is the count w_{i+1}.
        return all(
            self.w[i + 1] == self.w[i] * _TABLE.prime(i + 2) - self.s[i + 1]
            for i in range(len(self.w) - 1)
        )

    def ratios_non_increasing(self) -> bool:
        ratios = [Fraction(wn, _TABLE.primorial(i + 1)) for i, wn in enumerate(self.w)]
        return all(b <= a for a, b in zip(ratios, ratios[1:]))


def build_density_ledger(n_max: int = 5, kappa_at: int = 100_000) -> DensityLedger:
    """Ledger of s_1..s_{n_max}, w_1..w_{n_max}, and the density estimates."""
    if n_max < 2:
        raise ValueError(f"need n_max >= 2, got {n_max}")
    s = tuple(s_count(i) for i in range(1, n_max + 1))
    w = tuple(w_count(i, check=False) for i in range(1, n_max + 1))
    return DensityLedger(s, w, kappa_empirical(kappa_at), kappa_bounds(max(4, n_max)))
