"""Closed-form Hilbert-Kunz function of k[[x,y]]/(x^n - y^n) in characteristic p.

With q = p^e and b the representative of q mod n in [1, n-1], the colength of
the Frobenius-power ideal (x^q, y^q) in the quotient ring is exactly

    HK(e) = n * q - b * (n - b),

so the Hilbert-Kunz multiplicity is n and the periodic term is
phi(e) = b * (n - b).  All values are exact integers; e is uncapped.
"""

from dataclasses import dataclass

from .numtheory import is_prime

# n must fit in a machine word; only q = p^e is allowed to grow without bound.
_N_MAX = 2**63 - 1


class InvalidRingError(ValueError):
    """A (p, n) pair that does not define a ring of this family."""


@dataclass(frozen=True)
class RingSpec:
    """The pair (p, n) defining k[[x,y]]/(x^n - y^n) over characteristic p.

    The coefficient field k never matters: the colength formula depends only
    on p and n, so k stays implicit (the Groebner oracle fixes the prime
    field, losing nothing).
    """

    p: int
    n: int

    def __post_init__(self) -> None:
        if self.n < 2:
            raise InvalidRingError(f"n must be at least 2, got n={self.n}")
        if self.n > _N_MAX:
            raise InvalidRingError(f"n={self.n} does not fit in a 64-bit word")
        if not is_prime(self.p):
            raise InvalidRingError(f"p must be prime, got p={self.p}")
        if self.n % self.p == 0:
            raise InvalidRingError(
                f"p={self.p} divides n={self.n}: n must not be divisible by "
                "the characteristic"
            )

    @property
    def hk_multiplicity(self) -> int:
        """Leading coefficient of HK(e) against p^e; exactly n for this family."""
        return self.n


@dataclass(frozen=True)
class HKRecord:
    """One table row: e, q = p^e, residue b, HK(e), and phi(e) = b(n-b)."""

    e: int
    q: int
    b: int
    hk: int
    phi: int


def residue_b(spec: RingSpec, e: int) -> int:
    """The representative of p^e mod n in [1, n-1].

    Never 0: gcd(p, n) = 1 keeps every power of p a unit mod n.
    """
    if e < 0:
        raise ValueError(f"e must be nonnegative, got {e}")
    return pow(spec.p, e, spec.n)


def phi_value(spec: RingSpec, e: int) -> int:
    """Periodic term phi(e) = b(n-b); always in [n-1, floor(n^2/4)]."""
    b = residue_b(spec, e)
    return b * (spec.n - b)


def hk_value(spec: RingSpec, e: int) -> int:
    """HK(e) = n * p^e - b(n-b), exact in unbounded integers."""
    return spec.n * spec.p**e - phi_value(spec, e)


def hk_table(spec: RingSpec, e_max: int) -> list[HKRecord]:
    """Rows for e = 0..e_max, in order, with q built incrementally."""
    if e_max < 0:
        raise ValueError(f"e_max must be nonnegative, got {e_max}")
    rows = []
    q = 1
    for e in range(e_max + 1):
        b = q % spec.n
        phi = b * (spec.n - b)
        rows.append(HKRecord(e=e, q=q, b=b, hk=spec.n * q - phi, phi=phi))
        q *= spec.p
    return rows
