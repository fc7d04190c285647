"""Sparse bivariate polynomials over F_p and Buchberger's algorithm.

The point of this module is an independent colength oracle: the dimension of
F_p[x,y]/(x^q, y^q, x^n - y^n) as an F_p-vector space, computed by finding a
reduced lex Groebner basis and counting the lattice points under its
staircase.  Nothing here consults the closed Hilbert-Kunz formula; the
agreement of the two routes is checked in the test suite, and that agreement
is only evidence because the routes share no code.

Monomial order is lex with x > y throughout, which for exponent pairs (i, j)
is plain tuple comparison.
"""

import heapq
import itertools
from collections.abc import Mapping, Sequence
from dataclasses import dataclass
from typing import NamedTuple

from .closed_form import RingSpec
from .numtheory import is_prime

Q_CAP_DEFAULT = 512


class Monomial(NamedTuple):
    """Power product x^i * y^j.  Tuple order coincides with lex(x > y)."""

    i: int
    j: int

    def divides(self, other: "Monomial") -> bool:
        return self.i <= other.i and self.j <= other.j

    def lcm(self, other: "Monomial") -> "Monomial":
        return Monomial(max(self.i, other.i), max(self.j, other.j))

    def mul(self, other: "Monomial") -> "Monomial":
        return Monomial(self.i + other.i, self.j + other.j)

    def div(self, other: "Monomial") -> "Monomial":
        if not other.divides(self):
            raise ValueError(f"{other} does not divide {self}")
        return Monomial(self.i - other.i, self.j - other.j)

    def __str__(self) -> str:
        if self.i == 0 and self.j == 0:
            return "1"
        parts = []
        if self.i == 1:
            parts.append("x")
        elif self.i > 1:
            parts.append(f"x^{self.i}")
        if self.j == 1:
            parts.append("y")
        elif self.j > 1:
            parts.append(f"y^{self.j}")
        return "*".join(parts)


class CharacteristicMismatchError(ValueError):
    """Polynomials over different prime fields were combined."""


class PairBudgetExceededError(RuntimeError):
    """The S-pair queue outlived its budget; the run is aborted, not trusted."""


class QCapExceededError(ValueError):
    """q = p^e exceeds the cap the brute-force oracle was given."""

    def __init__(self, q: int, q_cap: int):
        self.q = q
        self.q_cap = q_cap
        super().__init__(f"q = {q} exceeds the oracle cap {q_cap}")


class FpPoly:
    """Element of F_p[x, y]: a sparse map from Monomial to coefficient.

    Stored coefficients are least nonnegative representatives in [1, p-1];
    the zero polynomial is the empty map.  Instances are immutable by
    convention: every operation returns a fresh polynomial.
    """

    __slots__ = ("p", "terms")

    def __init__(self, p: int, terms: Mapping | Sequence = ()):
        if not is_prime(p):
            raise ValueError(f"coefficient field needs a prime characteristic, got {p}")
        clean: dict[Monomial, int] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for mono, coeff in items:
            mono = Monomial(*mono)
            if mono.i < 0 or mono.j < 0:
                raise ValueError(f"negative exponent in {mono!r}")
            c = (clean.get(mono, 0) + coeff) % p
            if c:
                clean[mono] = c
            else:
                clean.pop(mono, None)
        self.p = p
        self.terms = clean

    @classmethod
    def _raw(cls, p: int, terms: dict[Monomial, int]) -> "FpPoly":
        # internal fast path: terms must already be normalized
        poly = object.__new__(cls)
        poly.p = p
        poly.terms = terms
        return poly

    def is_zero(self) -> bool:
        return not self.terms

    def leading_term(self) -> tuple[Monomial, int]:
        if not self.terms:
            raise ValueError("the zero polynomial has no leading term")
        mono = max(self.terms)
        return mono, self.terms[mono]

    def _check_char(self, other: "FpPoly") -> None:
        if self.p != other.p:
            raise CharacteristicMismatchError(
                f"characteristics differ: {self.p} and {other.p}"
            )

    def __add__(self, other: "FpPoly") -> "FpPoly":
        if not isinstance(other, FpPoly):
            return NotImplemented
        self._check_char(other)
        out = dict(self.terms)
        for mono, coeff in other.terms.items():
            c = (out.get(mono, 0) + coeff) % self.p
            if c:
                out[mono] = c
            else:
                out.pop(mono, None)
        return FpPoly._raw(self.p, out)

    def __neg__(self) -> "FpPoly":
        return FpPoly._raw(self.p, {m: self.p - c for m, c in self.terms.items()})

    def __sub__(self, other: "FpPoly") -> "FpPoly":
        if not isinstance(other, FpPoly):
            return NotImplemented
        self._check_char(other)
        out = dict(self.terms)
        for mono, coeff in other.terms.items():
            c = (out.get(mono, 0) - coeff) % self.p
            if c:
                out[mono] = c
            else:
                out.pop(mono, None)
        return FpPoly._raw(self.p, out)

    def __mul__(self, other: "FpPoly") -> "FpPoly":
        if not isinstance(other, FpPoly):
            return NotImplemented
        self._check_char(other)
        out: dict[Monomial, int] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                mono = m1.mul(m2)
                c = (out.get(mono, 0) + c1 * c2) % self.p
                if c:
                    out[mono] = c
                else:
                    out.pop(mono, None)
        return FpPoly._raw(self.p, out)

    def mul_monomial(self, mono: Monomial, coeff: int = 1) -> "FpPoly":
        """Product with the single term coeff * x^mono.i * y^mono.j."""
        c0 = coeff % self.p
        if c0 == 0:
            return FpPoly._raw(self.p, {})
        mono = Monomial(*mono)
        if mono.i < 0 or mono.j < 0:
            raise ValueError(f"negative exponent in {mono!r}")
        # c * c0 stays nonzero: both are units mod a prime
        return FpPoly._raw(
            self.p, {m.mul(mono): (c * c0) % self.p for m, c in self.terms.items()}
        )

    def monic(self) -> "FpPoly":
        """Scale so the leading coefficient is 1."""
        _, lc = self.leading_term()
        if lc == 1:
            return self
        inv = pow(lc, -1, self.p)
        return FpPoly._raw(self.p, {m: (c * inv) % self.p for m, c in self.terms.items()})

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FpPoly):
            return NotImplemented
        return self.p == other.p and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.p, frozenset(self.terms.items())))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        chunks = []
        for mono in sorted(self.terms, reverse=True):
            coeff = self.terms[mono]
            if mono == Monomial(0, 0):
                chunks.append(str(coeff))
            elif coeff == 1:
                chunks.append(str(mono))
            else:
                chunks.append(f"{coeff}*{mono}")
        return " + ".join(chunks)

    def __repr__(self) -> str:
        return f"FpPoly(p={self.p}: {self})"


def s_polynomial(f: FpPoly, g: FpPoly) -> FpPoly:
    """Leading-term cancellation (L/lt f)*f - (L/lt g)*g, L the lcm, both monic."""
    if f.is_zero() or g.is_zero():
        raise ValueError("s_polynomial of the zero polynomial is undefined")
    f._check_char(g)
    lm_f, lc_f = f.leading_term()
    lm_g, lc_g = g.leading_term()
    big = lm_f.lcm(lm_g)
    left = f.mul_monomial(big.div(lm_f), pow(lc_f, -1, f.p))
    right = g.mul_monomial(big.div(lm_g), pow(lc_g, -1, g.p))
    return left - right


def reduce(f: FpPoly, basis: Sequence[FpPoly]) -> FpPoly:
    """Full normal form of f modulo a list of nonzero polynomials.

    Always rewrites the largest remaining monomial, using the first basis
    element (in list order) whose leading monomial divides it, so the result
    is deterministic for a fixed list.  No monomial of the output is
    divisible by any basis leading monomial.  Rewriting only ever introduces
    monomials strictly below the one removed, and lex on nonnegative
    exponents is a well-order, so this terminates.
    """
    leads = []
    for g in basis:
        if g.is_zero():
            raise ValueError("basis elements must be nonzero")
        f._check_char(g)
        leads.append(g.leading_term())
    p = f.p
    work = dict(f.terms)
    out: dict[Monomial, int] = {}
    while work:
        mono = max(work)
        coeff = work.pop(mono)
        for g, (lm, lc) in zip(basis, leads):
            if lm.divides(mono):
                factor = (coeff * pow(lc, -1, p)) % p
                shift = mono.div(lm)
                for m2, c2 in g.terms.items():
                    if m2 == lm:
                        continue
                    key = m2.mul(shift)
                    c = (work.get(key, 0) - factor * c2) % p
                    if c:
                        work[key] = c
                    else:
                        work.pop(key, None)
                break
        else:
            out[mono] = coeff
    return FpPoly._raw(p, out)


@dataclass(frozen=True)
class GroebnerBasis:
    """A reduced lex Groebner basis and its leading-term staircase.

    generators are monic, pairwise tail-reduced, and sorted by ascending
    leading monomial; staircase holds exactly those leading monomials, which
    are pairwise incomparable under divisibility.  Reduced bases are unique
    for a given ideal and order, so equal ideals give equal objects here.
    """

    generators: tuple[FpPoly, ...]
    staircase: tuple[Monomial, ...]


def _reduced_form(basis: list[FpPoly]) -> list[FpPoly]:
    # minimalize: scan by ascending leading monomial so a survivor is seen
    # before any of its multiples, then drop the multiples
    by_lm = sorted(basis, key=lambda g: g.leading_term()[0])
    minimal: list[FpPoly] = []
    kept: list[Monomial] = []
    for g in by_lm:
        lm = g.leading_term()[0]
        if any(k.divides(lm) for k in kept):
            continue
        minimal.append(g)
        kept.append(lm)
    # tail-reduce each survivor against the others; leading monomials are
    # pairwise indivisible so one pass lands on the unique reduced form
    out = []
    for idx, g in enumerate(minimal):
        others = minimal[:idx] + minimal[idx + 1 :]
        out.append(reduce(g, others) if others else g)
    return out


def buchberger(gens: Sequence[FpPoly], pair_budget: int = 100_000) -> GroebnerBasis:
    """Reduced lex Groebner basis of the ideal the generators span.

    Textbook Buchberger: a queue of index pairs ordered by the lcm of leading
    monomials (normal strategy, smallest first), pairs with coprime leading
    monomials skipped, every nonzero S-polynomial remainder appended.  A final
    pass minimalizes and tail-reduces, so the output is the unique reduced
    basis no matter how the generators were ordered.

    pair_budget caps how many pairs may be processed; exhausting it raises
    PairBudgetExceededError rather than returning anything partial.
    """
    if not gens:
        raise ValueError("need at least one generator")
    p = gens[0].p
    basis = []
    for g in gens:
        g._check_char(gens[0])
        if g.is_zero():
            raise ValueError("generators must be nonzero")
        basis.append(g.monic())

    heap: list[tuple[Monomial, int, int]] = []

    def push_pairs(new: int) -> None:
        lm_new = basis[new].leading_term()[0]
        for k in range(new):
            lm_k = basis[k].leading_term()[0]
            if min(lm_k.i, lm_new.i) == 0 and min(lm_k.j, lm_new.j) == 0:
                continue  # coprime leading monomials: S-poly reduces to zero
            heapq.heappush(heap, (lm_k.lcm(lm_new), k, new))

    for idx in range(len(basis)):
        push_pairs(idx)

    processed = 0
    while heap:
        _, a, b = heapq.heappop(heap)
        processed += 1
        if processed > pair_budget:
            raise PairBudgetExceededError(
                f"more than {pair_budget} S-pairs processed"
            )
        remainder = reduce(s_polynomial(basis[a], basis[b]), basis)
        if remainder.is_zero():
            continue
        basis.append(remainder.monic())
        push_pairs(len(basis) - 1)

    final = _reduced_form(basis)
    # membership sanity check: each input was used to build the basis, and
    # must in turn vanish modulo it
    for g in gens:
        if not reduce(g, final).is_zero():
            raise RuntimeError(
                "input generator fails to reduce to zero modulo the computed "
                "basis: library bug"
            )
    staircase = tuple(g.leading_term()[0] for g in final)
    return GroebnerBasis(generators=tuple(final), staircase=staircase)


def count_under_staircase(staircase: Sequence[Monomial]) -> int | None:
    """Monomials divisible by no staircase element; None when infinitely many.

    In two variables the count is finite exactly when the staircase blocks
    both axes, i.e. contains pure powers x^a and y^c.  Row sweep: in column
    i < a the blocked y-exponents are an upward ray starting at
    min{m.j : m.i <= i}, so the column contributes that minimum.
    """
    x_power = min((m.i for m in staircase if m.j == 0), default=None)
    y_power = min((m.j for m in staircase if m.i == 0), default=None)
    if x_power is None or y_power is None:
        return None
    total = 0
    for i in range(x_power):
        total += min(m.j for m in staircase if m.i <= i)
    return total


def standard_monomial_count(gb: GroebnerBasis) -> int | None:
    """Dimension of the quotient by gb's ideal; None when infinite."""
    return count_under_staircase(gb.staircase)


def frobenius_power_generators(spec: RingSpec, e: int) -> list[FpPoly]:
    """Generators x^q, y^q, x^n - y^n with q = p^e, as polynomials over F_p."""
    if e < 0:
        raise ValueError(f"e must be nonnegative, got {e}")
    q = spec.p**e
    return [
        FpPoly(spec.p, {Monomial(q, 0): 1}),
        FpPoly(spec.p, {Monomial(0, q): 1}),
        FpPoly(spec.p, {Monomial(spec.n, 0): 1, Monomial(0, spec.n): -1}),
    ]


def hk_brute(spec: RingSpec, e: int, q_cap: int = Q_CAP_DEFAULT) -> int:
    """Colength of (x^q, y^q, x^n - y^n) in F_p[x, y], the slow honest way.

    Runs buchberger on the raw generators and counts standard monomials.
    The closed formula is never consulted, which is what makes agreement
    with hk_value meaningful.  q above q_cap raises QCapExceededError to
    tell the caller to fall back to the formula.
    """
    if e < 0:
        raise ValueError(f"e must be nonnegative, got {e}")
    if q_cap < 1:
        raise ValueError(f"q_cap must be positive, got {q_cap}")
    q = spec.p**e
    if q > q_cap:
        raise QCapExceededError(q, q_cap)
    gb = buchberger(frobenius_power_generators(spec, e))
    count = standard_monomial_count(gb)
    if count is None:
        # x^q and y^q are in the ideal, so both axes are always blocked
        raise RuntimeError("staircase misses a pure power: library bug")
    return count


def _minimal_monomials(monos: Sequence[Monomial]) -> tuple[Monomial, ...]:
    out: list[Monomial] = []
    for m in sorted(set(monos)):
        if not any(k.divides(m) for k in out):
            out.append(m)
    return tuple(out)


@dataclass(frozen=True)
class BasisCheck:
    """Outcome of verify_closed_form_basis, one flag per sub-check."""

    ok: bool
    telescoping_ok: bool
    spoly_ok: bool
    staircase_ok: bool
    expected_staircase: tuple[Monomial, ...]
    computed_staircase: tuple[Monomial, ...]
    q: int
    b: int

    def __bool__(self) -> bool:
        return self.ok


def verify_closed_form_basis(
    spec: RingSpec, e: int, q_cap: int = Q_CAP_DEFAULT
) -> BasisCheck:
    """Check the predicted reduced basis {x^b y^(q-b), y^q, x^n - y^n} head-on.

    Requires q = p^e > n, with b = q mod n (so 1 <= b <= n-1).  Three
    independent checks:

    (a) telescoping: x^q - x^b y^(q-b) equals
        (x^(q-n) + x^(q-2n) y^n + ... + x^b y^(q-b-n)) * (x^n - y^n),
        verified by explicit multiplication, so swapping x^q for x^b y^(q-b)
        leaves the ideal unchanged;
    (b) all three S-polynomials of the predicted basis reduce to zero modulo
        it (Buchberger's criterion, so the predicted set is a Groebner basis);
    (c) buchberger run on the raw generators lands on the staircase
        {x^b y^(q-b), y^q, x^n}, redundancies dropped.
    """
    if e < 0:
        raise ValueError(f"e must be nonnegative, got {e}")
    q = spec.p**e
    if q <= spec.n:
        raise ValueError(f"need q > n, got q = {q} and n = {spec.n}")
    if q_cap < 1:
        raise ValueError(f"q_cap must be positive, got {q_cap}")
    if q > q_cap:
        raise QCapExceededError(q, q_cap)
    p, n = spec.p, spec.n
    b = q % n

    relation = FpPoly(p, {Monomial(n, 0): 1, Monomial(0, n): -1})
    steps = (q - b) // n
    ladder = FpPoly(
        p, {Monomial(q - k * n, (k - 1) * n): 1 for k in range(1, steps + 1)}
    )
    lhs = FpPoly(p, {Monomial(q, 0): 1, Monomial(b, q - b): -1})
    telescoping_ok = ladder * relation == lhs

    predicted = [
        FpPoly(p, {Monomial(b, q - b): 1}),
        FpPoly(p, {Monomial(0, q): 1}),
        relation,
    ]
    spoly_ok = all(
        reduce(s_polynomial(f, g), predicted).is_zero()
        for f, g in itertools.combinations(predicted, 2)
    )

    expected = _minimal_monomials(
        [Monomial(b, q - b), Monomial(0, q), Monomial(n, 0)]
    )
    computed = buchberger(frobenius_power_generators(spec, e)).staircase
    staircase_ok = computed == expected

    return BasisCheck(
        ok=telescoping_ok and spoly_ok and staircase_ok,
        telescoping_ok=telescoping_ok,
        spoly_ok=spoly_ok,
        staircase_ok=staircase_ok,
        expected_staircase=expected,
        computed_staircase=computed,
        q=q,
        b=b,
    )
