"""Constructive search for rings whose periodic term has a prescribed period.

Any target period pi is reachable: pick a prime modulus n == 1 (mod 2*pi), so
the cyclic unit group mod n has order divisible by 2*pi and contains elements
of order exactly 2*pi; pick a prime p in such a residue class.  The unit
group, being cyclic of even order, has a unique involution, -1 mod n, so
p^pi == -1 (mod n) and the period of phi halves from omega = 2*pi to exactly
pi.  Dirichlet guarantees the primes exist but gives no bound, so every
search here takes explicit limits and reports exhaustion rather than spinning.
"""

import dataclasses
from dataclasses import dataclass

from .closed_form import RingSpec
from .numtheory import find_prime_in_class, is_prime, mod_pow, multiplicative_order
from .period import PeriodReport, period_of


@dataclass
class SearchStats:
    """Counters for candidates examined during a realization search."""

    n_candidates: int = 0
    p_candidates: int = 0


class SearchExhausted(Exception):
    """Search limits ran out before a realization was found."""

    def __init__(self, target_pi: int, n_limit: int, p_limit: int, stats: SearchStats):
        self.target_pi = target_pi
        self.n_limit = n_limit
        self.p_limit = p_limit
        self.stats = stats
        super().__init__(
            f"no realization of period {target_pi} within n <= {n_limit}, "
            f"p <= {p_limit} ({stats.n_candidates} moduli and "
            f"{stats.p_candidates} characteristics examined)"
        )


@dataclass(frozen=True)
class RealizationResult:
    """A ring (p, n) whose periodic term has exact period target_pi.

    residue_used is the class r with ord_n(r) = 2 * target_pi in which p was
    found when the result came from the arithmetic-progression construction
    (realize); results discovered by exhaustive scanning
    (enumerate_realizations) leave it None, and for those the construction
    invariants (n prime, omega = 2 * target_pi, halved branch) need not hold.
    """

    target_pi: int
    spec: RingSpec
    report: PeriodReport
    residue_used: int | None
    search_stats: SearchStats


def _progression_count(start: int, step: int, limit: int, found: int | None) -> int:
    # members start, start+step, ... examined, up to `found` or up to limit
    if found is not None:
        return (found - start) // step + 1
    if limit < start:
        return 0
    return (limit - start) // step + 1


def realize(pi: int, n_limit: int = 10_000, p_limit: int = 10_000) -> RealizationResult:
    """Smallest-first construction of a ring with period exactly pi.

    Scans prime moduli n == 1 (mod 2*pi) in increasing order; within each,
    residues r in [2, n-1] of multiplicative order 2*pi in increasing order;
    within each class, primes p == r (mod n) in increasing order.  The first
    hit wins, so the output is deterministic.  Raises SearchExhausted (with
    the candidate counts) when the limits run out.

    The involution congruence p^pi == -1 (mod n) and the resulting period are
    re-checked on the way out; a violation would be a bug in this library,
    not bad input, and raises RuntimeError.
    """
    if pi < 1:
        raise ValueError(f"target period must be at least 1, got {pi}")
    if n_limit < 2 or p_limit < 2:
        raise ValueError("search limits must be at least 2")
    stats = SearchStats()
    step = 2 * pi
    n = 1 + step
    while n <= n_limit:
        stats.n_candidates += 1
        if is_prime(n):
            for r in range(2, n):
                if multiplicative_order(r, n) != step:
                    continue
                p = find_prime_in_class(r, n, p_limit)
                stats.p_candidates += _progression_count(r, n, p_limit, p)
                if p is None:
                    continue
                spec = RingSpec(p, n)
                if mod_pow(p, pi, n).value != n - 1:
                    raise RuntimeError(
                        f"unique-involution check failed for p={p}, n={n}: "
                        "library bug"
                    )
                report = period_of(spec)
                if report.pi != pi:
                    raise RuntimeError(
                        f"constructed spec p={p}, n={n} has period "
                        f"{report.pi}, expected {pi}: library bug"
                    )
                return RealizationResult(
                    target_pi=pi,
                    spec=spec,
                    report=report,
                    residue_used=r,
                    search_stats=stats,
                )
        n += step
    raise SearchExhausted(pi, n_limit, p_limit, stats)


def enumerate_realizations(
    pi: int, n_limit: int, p_limit: int, max_results: int
) -> list[RealizationResult]:
    """Every (p, n) with period exactly pi within the limits, ordered by (n, p).

    Unlike realize, this sweeps all moduli n >= 2 (composite included) and
    accepts both period branches, so it finds realizations the progression
    construction cannot, for instance full-branch rings with composite n.
    Each result carries the cumulative candidate counts at the moment it was
    found.  Truncated at max_results.
    """
    if pi < 1:
        raise ValueError(f"target period must be at least 1, got {pi}")
    if n_limit < 2 or p_limit < 2:
        raise ValueError("search limits must be at least 2")
    if max_results < 1:
        raise ValueError(f"max_results must be at least 1, got {max_results}")
    primes = [p for p in range(2, p_limit + 1) if is_prime(p)]
    stats = SearchStats()
    results: list[RealizationResult] = []
    for n in range(2, n_limit + 1):
        stats.n_candidates += 1
        for p in primes:
            if n % p == 0:  # p divides n, not a valid ring
                continue
            stats.p_candidates += 1
            spec = RingSpec(p, n)
            report = period_of(spec)
            if report.pi != pi:
                continue
            results.append(
                RealizationResult(
                    target_pi=pi,
                    spec=spec,
                    report=report,
                    residue_used=None,
                    search_stats=dataclasses.replace(stats),
                )
            )
            if len(results) >= max_results:
                return results
    return results
