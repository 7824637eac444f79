"""Ring families used by sweeps and presets."""

from __future__ import annotations

from itertools import combinations_with_replacement

from .rings import Modular, PolyQuotient, Product, RingSpec, galois_field, is_prime


def prime_power(m: int) -> tuple[int, int] | None:
    """(p, k) with m = p^k, or None."""
    if m < 2:
        return None
    p = next(d for d in range(2, m + 1) if m % d == 0)
    k = 0
    while m % p == 0:
        m //= p
        k += 1
    return (p, k) if m == 1 else None


def modular(limit: int, start: int = 2) -> list[RingSpec]:
    return [Modular(m) for m in range(start, limit + 1)]


def odd_prime_powers(limit: int) -> list[RingSpec]:
    return [Modular(m) for m in range(3, limit + 1) if (pp := prime_power(m)) and pp[0] != 2]


def truncated_polynomials(limit: int, min_degree: int = 2) -> list[RingSpec]:
    """Z_p[x]/(x^k) with p^k <= limit."""
    out = []
    for p in range(2, limit + 1):
        if not is_prime(p):
            continue
        k = min_degree
        while p**k <= limit:
            out.append(PolyQuotient(p, (1,) + (0,) * k))
            k += 1
    return out


def small_products(lo: int = 2, hi: int = 7, sizes=(2, 3)) -> list[RingSpec]:
    """Products of Z_lo..Z_hi, one per multiset of factors."""
    return [
        Product(tuple(Modular(m) for m in combo))
        for k in sizes
        for combo in combinations_with_replacement(range(lo, hi + 1), k)
    ]


def galois_fields(limit: int) -> list[RingSpec]:
    """F_q for non-prime prime powers q <= limit (prime fields are Z_p)."""
    return [galois_field(q) for q in range(4, limit + 1)
            if (pp := prime_power(q)) and pp[1] > 1]


def non_ideal_modular(limit: int) -> list[RingSpec]:
    """Z_m with m composite and not a prime power, so Z(Z_m) is not an ideal."""
    return [Modular(m) for m in range(2, limit + 1) if prime_power(m) is None]


def curated() -> list[RingSpec]:
    return (modular(343) + truncated_polynomials(343) + small_products()
            + galois_fields(64))


CURATED_N = range(1, 9)

# (ring, n values, selector) for each figure
FIGURES = (
    ("Z8", (1, 2, 3, 4), "all"),
    ("Z6", (3,), "reg"),
    ("Z6", (3,), "all"),
    ("Z6", (2,), "all"),
    ("Z3xZ3", (2,), "all"),
    ("Z2xZ2", (2,), "all"),
)
