"""Exact period of the periodic term phi(e) = b(n-b).

The period pi is always omega or omega/2, where omega is the multiplicative
order of p mod n, and the halved case happens exactly when omega is even and
p^(omega/2) == -1 (mod n).
"""

import enum
from dataclasses import dataclass, field
from typing import Mapping

from .closed_form import RingSpec, phi_value
from .numtheory import mod_pow, multiplicative_order


class Branch(enum.Enum):
    HALF = "HALF"  # pi = omega / 2
    FULL = "FULL"  # pi = omega


@dataclass(frozen=True)
class PeriodReport:
    """Classification of the period of phi for one ring.

    involution_check is True exactly when omega is even and the congruence
    p^(omega/2) == n-1 (mod n) held; for odd omega the congruence is never
    tested and the flag is False.  The comparison uses the canonical
    representative n-1, never a signed -1, to dodge sign-convention bugs.
    """

    omega: int
    pi: int
    branch: Branch
    involution_check: bool
    phi_profile: tuple[int, ...]


def period_of(spec: RingSpec) -> PeriodReport:
    """Compute omega, the exact period pi, and one full cycle of phi values."""
    omega = multiplicative_order(spec.p, spec.n)
    involution = (
        omega % 2 == 0
        and mod_pow(spec.p, omega // 2, spec.n).value == spec.n - 1
    )
    if involution:
        pi, branch = omega // 2, Branch.HALF
    else:
        pi, branch = omega, Branch.FULL
    profile = tuple(phi_value(spec, e) for e in range(omega))
    return PeriodReport(
        omega=omega,
        pi=pi,
        branch=branch,
        involution_check=involution,
        phi_profile=profile,
    )


@dataclass(frozen=True)
class PeriodCheck:
    """Outcome of a direct periodicity-and-minimality check.

    On success, divisor_witnesses maps each proper divisor d of the period to
    the least index e with phi(e + d) != phi(e), the witness that rejects d.
    On failure, failing_distance is the offending shift: the claimed period
    itself if plain periodicity broke at index failing_index, or a proper
    divisor that turned out to be a period too (failing_index is then None).
    """

    ok: bool
    failing_distance: int | None = None
    failing_index: int | None = None
    divisor_witnesses: Mapping[int, int] = field(default_factory=dict)

    def __bool__(self) -> bool:
        return self.ok


def verify_minimal_period(spec: RingSpec, window_multiplier: int) -> PeriodCheck:
    """Check the classified period against phi itself, from e = 0 on.

    Two independent checks:
      (a) phi(e + pi) == phi(e) for every 0 <= e <= window_multiplier * omega,
          starting at e = 0, so the period is immediate, with no transient;
      (b) every proper divisor d of pi has a witness e < omega with
          phi(e + d) != phi(e).  The minimal period of a periodic sequence
          divides every period, so testing divisors of pi suffices.
    """
    if window_multiplier < 2:
        raise ValueError(
            f"window_multiplier must be at least 2, got {window_multiplier}"
        )
    report = period_of(spec)
    return _check_claimed_period(spec, report.pi, report.omega, window_multiplier)


def _check_claimed_period(
    spec: RingSpec, pi: int, omega: int, window_multiplier: int
) -> PeriodCheck:
    for e in range(window_multiplier * omega + 1):
        if phi_value(spec, e + pi) != phi_value(spec, e):
            return PeriodCheck(ok=False, failing_distance=pi, failing_index=e)
    witnesses: dict[int, int] = {}
    for d in range(1, pi):
        if pi % d != 0:
            continue
        for e in range(omega):
            if phi_value(spec, e + d) != phi_value(spec, e):
                witnesses[d] = e
                break
        else:
            return PeriodCheck(
                ok=False, failing_distance=d, divisor_witnesses=witnesses
            )
    return PeriodCheck(ok=True, divisor_witnesses=witnesses)
