"""Witness sequences and even/odd density counts for C-bar_{p,1}.

The doubly-exponential sequences a_{j+1} = a_j(3a_j + 1)/2 (even
variant) and a_{j+1} = a_j(3a_j - 1)/2 (odd variant) tile [1, X] with
intervals that each contain a parity witness, giving the exact counts
an explicit floor(nu/2) lower bound where nu is the last index with
a_nu <= X. Terms are exact big integers; a_5 from seed 4 already
overflows 64 bits.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DiscrepancyError, ParameterError, TableTooShortError
from .params import SingularParams
from .parity import ParityWitness, _is_prime, _scan_interval
from .tables import CoeffTable, ParityTable

_VARIANTS = ("even", "odd")
# Index of the first term: the even variant is written a_0, a_1, ...,
# the odd variant a_1, a_2, ...
_START_INDEX = {"even": 0, "odd": 1}
_SEED_RESIDUE = {"even": 1, "odd": 2}
DEFAULT_SEEDS = {"even": 4, "odd": 2}


def next_term(variant: str, a: int) -> int:
    """One recurrence step: a(3a+1)/2 for even, a(3a-1)/2 for odd."""
    if variant == "even":
        return a * (3 * a + 1) // 2
    if variant == "odd":
        return a * (3 * a - 1) // 2
    raise ParameterError(f"variant must be 'even' or 'odd', got {variant!r}")


@dataclass(frozen=True)
class WitnessSequence:
    """Terms of the recursive sequence that stay at or below the cutoff."""

    variant: str
    seed: int
    terms: tuple[int, ...]
    cutoff: int

    @property
    def start_index(self) -> int:
        return _START_INDEX[self.variant]

    @property
    def nu(self) -> int:
        """Largest index j with a_j <= cutoff."""
        return self.start_index + len(self.terms) - 1

    def mod3_invariant_holds(self) -> bool:
        """Even variant: even-indexed terms are 1 mod 3 (odd-indexed 2);
        odd variant: every term is 2 mod 3."""
        if self.variant == "odd":
            return all(a % 3 == 2 for a in self.terms)
        return all(
            a % 3 == (1 if j % 2 == 0 else 2) for j, a in enumerate(self.terms)
        )

    def chain_inequalities_hold(self) -> bool:
        """a_j <= 2 a_{j-1}^2 (even) resp. a_j <= (3/2) a_{j-1}^2 (odd)."""
        for prev, cur in zip(self.terms, self.terms[1:]):
            if self.variant == "even":
                if cur > 2 * prev * prev:
                    return False
            else:
                if 2 * cur > 3 * prev * prev:
                    return False
        return True

    def power_chain_bound_holds(self) -> bool:
        """Iterated form of the chain: a_j <= c^(2^(j-1)-1) a_1^(2^(j-1))
        with c = 2 (even) or 3/2 (odd), for stored indices j >= 1.
        Checked in exact integer arithmetic."""
        for offset, a in enumerate(self.terms):
            j = self.start_index + offset
            if j < 1:
                continue
            a1 = self.terms[1 - self.start_index]
            e = 2 ** (j - 1)
            if self.variant == "even":
                if a > 2 ** (e - 1) * a1**e:
                    return False
            else:
                if 2 ** (e - 1) * a > 3 ** (e - 1) * a1**e:
                    return False
        return True


def build_sequence(variant: str, seed: int, cutoff: int) -> WitnessSequence:
    """Iterate the recurrence from the seed until the next term passes X.

    The even variant needs seed = 1 mod 3, the odd variant seed = 2
    mod 3, both >= 2; the mod-3 residues then keep every generated
    interval eligible for its parity-witness guarantee.
    """
    if variant not in _VARIANTS:
        raise ParameterError(f"variant must be 'even' or 'odd', got {variant!r}")
    if seed < 2 or seed % 3 != _SEED_RESIDUE[variant]:
        raise ParameterError(
            f"{variant} variant needs a seed >= 2 with seed = "
            f"{_SEED_RESIDUE[variant]} mod 3, got {seed}"
        )
    if cutoff < seed:
        raise ParameterError(f"cutoff {cutoff} is below the seed {seed}")
    terms = [seed]
    while True:
        nxt = next_term(variant, terms[-1])
        if nxt > cutoff:
            break
        terms.append(nxt)
    return WitnessSequence(variant, seed, tuple(terms), cutoff)


@dataclass(frozen=True)
class DensityReport:
    """Exact parity census of C-bar_{p,1}(1..X) with its proven floors."""

    p: int
    cutoff: int
    even_count: int
    odd_count: int
    nu_even: int
    nu_odd: int
    even_lower_bound: int
    odd_lower_bound: int
    even_dominates: bool
    odd_dominates: bool


def _count_parities(table, cutoff: int) -> tuple[int, int]:
    if table.trunc_degree < cutoff:
        raise TableTooShortError(
            f"table degree {table.trunc_degree} does not cover X = {cutoff}"
        )
    if isinstance(table, ParityTable):
        window = (table.bits >> 1) & ((1 << cutoff) - 1)
        odd = window.bit_count()
    else:
        odd = sum(v & 1 for v in table.values[1 : cutoff + 1])
    return cutoff - odd, odd


def parity_census(
    p: int,
    cutoff: int,
    table,
    seed_even: int = DEFAULT_SEEDS["even"],
    seed_odd: int = DEFAULT_SEEDS["odd"],
) -> DensityReport:
    """Count even and odd values of C-bar_{p,1}(n) for 1 <= n <= X.

    Both counts must dominate the floor(nu/2) bound coming from their
    witness sequence; a violation raises DiscrepancyError carrying the
    failing report.
    """
    if not _is_prime(p) or p < 5:
        raise ParameterError(f"p must be a prime >= 5, got {p}")
    if cutoff < 1:
        raise ParameterError(f"X must be >= 1, got {cutoff}")
    if table.params != SingularParams(p, 1):
        raise ParameterError(
            f"table is for (k, i) = ({table.params.k}, {table.params.i}), "
            f"census is about ({p}, 1)"
        )
    even_count, odd_count = _count_parities(table, cutoff)
    nu_even = build_sequence("even", seed_even, cutoff).nu
    nu_odd = build_sequence("odd", seed_odd, cutoff).nu
    report = DensityReport(
        p=p,
        cutoff=cutoff,
        even_count=even_count,
        odd_count=odd_count,
        nu_even=nu_even,
        nu_odd=nu_odd,
        even_lower_bound=nu_even // 2,
        odd_lower_bound=nu_odd // 2,
        even_dominates=even_count >= nu_even // 2,
        odd_dominates=odd_count >= nu_odd // 2,
    )
    if not (report.even_dominates and report.odd_dominates):
        raise DiscrepancyError(
            f"parity census for p = {p}, X = {cutoff} fell below its proven "
            "lower bound",
            payload=report,
        )
    return report


def interval_cover_check(
    variant: str,
    seed: int,
    cutoff: int,
    params: SingularParams,
    table,
) -> list[ParityWitness]:
    """Find the guaranteed parity witness in each sequence interval.

    Even variant searches [a_{2m}, a_{2m+1}] for even values, odd
    variant [2 a_j - 1, a_{j+1}] for odd values, for every term at or
    below the cutoff. Upper endpoints beyond the table are clipped to
    its degree; an interval whose lower endpoint is already past the
    table ends the walk. Every searched interval must yield a witness.
    """
    if variant not in _VARIANTS:
        raise ParameterError(f"variant must be 'even' or 'odd', got {variant!r}")
    if seed < 2 or seed % 3 != _SEED_RESIDUE[variant]:
        raise ParameterError(
            f"{variant} variant needs a seed >= 2 with seed = "
            f"{_SEED_RESIDUE[variant]} mod 3, got {seed}"
        )
    witnesses = []
    a = seed
    while a <= cutoff:
        nxt = next_term(variant, a)
        lo = a if variant == "even" else 2 * a - 1
        if lo > table.trunc_degree:
            break
        hi = min(nxt, table.trunc_degree)
        want_bit = 0 if variant == "even" else 1
        witnesses.append(
            _scan_interval(
                params, table, lo, hi, want_bit, a, variant
            )
        )
        a = next_term(variant, nxt) if variant == "even" else nxt
    return witnesses
