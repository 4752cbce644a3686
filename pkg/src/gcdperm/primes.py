"""Prime utilities: sieve, deterministic 64-bit primality, non-divisor search."""

import math

# Witness set making Miller-Rabin deterministic for all n < 3.3e24.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic primality test, exact well beyond the 64-bit range."""
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def sieve_flags(n: int) -> bytearray:
    """Bytearray of length n+1 with flags[i] == 1 iff i is prime."""
    if n < 0:
        return bytearray()
    flags = bytearray(b"\x01") * (n + 1)
    flags[0 : min(2, n + 1)] = b"\x00" * min(2, n + 1)
    for p in range(2, math.isqrt(n) + 1):
        if flags[p]:
            flags[p * p :: p] = bytearray(len(range(p * p, n + 1, p)))
    return flags


def primes_upto(n: int) -> list[int]:
    """All primes <= n, ascending."""
    if n < 2:
        return []
    flags = sieve_flags(n)
    return [i for i, f in enumerate(flags) if f]


def next_prime(n: int) -> int:
    """Smallest prime strictly greater than n."""
    if n < 2:
        return 2
    k = n + 1
    if k == 2:
        return 2
    if k % 2 == 0:
        k += 1
    while not is_prime(k):
        k += 2
    return k


# Grown on demand by smallest_prime_not_dividing; stays tiny because any
# m < p_k# has a non-divisor among the first k primes.
_NONDIV_CANDIDATES = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47]


def smallest_prime_not_dividing(m: int) -> int:
    """Least prime that is not a factor of m (m >= 1)."""
    if m < 1:
        raise ValueError(f"need m >= 1, got {m}")
    for p in _NONDIV_CANDIDATES:
        if m % p:
            return p
    p = _NONDIV_CANDIDATES[-1]
    while True:
        p = next_prime(p)
        _NONDIV_CANDIDATES.append(p)
        if m % p:
            return p


def twin_prime_pairs(limit: int) -> list[tuple[int, int]]:
    """All pairs (p, p+2) of primes with p + 2 <= limit, ascending."""
    if limit < 5:
        return []
    flags = sieve_flags(limit)
    return [(p, p + 2) for p in range(3, limit - 1, 2) if flags[p] and flags[p + 2]]
