"""Coefficient tables C-bar_{k,i}(0..N) from independent series pipelines.

Three routes to the same numbers:

* ``coefficients_product``: the defining infinite-product quotient
  (q^k;q^k) (-q^i;q^k) (-q^(k-i);q^k) / (q;q).
* ``coefficients_theta``: Andrews' theta identity, a sparse two-sided
  theta numerator divided by (q;q). This is the default fast exact path.
* ``special_form``: the reduced eta-quotients available when (k, i) is
  (3k', k'), (4k', k') or (6k', k').

``parity_table`` is the mod-2 shortcut used by the witness searches: the
same theta quotient carried out entirely in packed GF(2) arithmetic.

Tables are memoized by (k, i, N) so the parity and distribution layers
share one expansion; the caches are the plain thread-safe lru_cache.

Edge case: for even k with i = k/2 the residues +i and -i coincide and
the product formula lists the same overline factor twice. All pipelines
follow the formula literally (and agree with each other), but from
n = k/2 on the values exceed the one-mark-per-value enumeration count;
the brute-force oracle is the authority on the combinatorial object.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from . import oracle as _oracle
from . import qseries as qs
from .errors import ParameterError, TableTooShortError
from .params import SingularParams


@dataclass(frozen=True)
class CoeffTable:
    """Exact values C-bar_{k,i}(0..N) with their provenance tag."""

    params: SingularParams
    values: tuple[int, ...]
    source: str

    @property
    def trunc_degree(self) -> int:
        return len(self.values) - 1

    def __getitem__(self, n: int) -> int:
        return self.values[n]

    def value(self, n: int) -> int:
        """Table value with the convention C-bar(n) = 0 for n < 0."""
        if n < 0:
            return 0
        if n > self.trunc_degree:
            raise TableTooShortError(
                f"table covers degrees 0..{self.trunc_degree}, asked for {n}"
            )
        return self.values[n]

    def parity(self, n: int) -> int:
        return self.value(n) & 1

    def truncate(self, trunc_degree: int) -> "CoeffTable":
        if trunc_degree > self.trunc_degree:
            raise ParameterError(
                f"cannot extend table degree {self.trunc_degree} to {trunc_degree}"
            )
        return CoeffTable(self.params, self.values[: trunc_degree + 1], self.source)

    def series(self) -> qs.TruncSeriesZ:
        return qs.TruncSeriesZ(self.values)


@dataclass(frozen=True)
class ParityTable:
    """Parities of C-bar_{k,i}(0..N), packed one bit per degree."""

    params: SingularParams
    bits: int
    trunc_degree: int
    source: str

    def parity(self, n: int) -> int:
        if n < 0:
            return 0
        if n > self.trunc_degree:
            raise TableTooShortError(
                f"parity table covers degrees 0..{self.trunc_degree}, asked for {n}"
            )
        return (self.bits >> n) & 1

    def truncate(self, trunc_degree: int) -> "ParityTable":
        if trunc_degree > self.trunc_degree:
            raise ParameterError(
                f"cannot extend table degree {self.trunc_degree} to {trunc_degree}"
            )
        mask = (1 << (trunc_degree + 1)) - 1
        return ParityTable(self.params, self.bits & mask, trunc_degree, self.source)


@lru_cache(maxsize=None)
def _product_values(k: int, i: int, trunc_degree: int) -> tuple[int, ...]:
    num = qs.mul(
        qs.mul(qs.eta_product(k, trunc_degree), qs.pochhammer_neg(i, k, trunc_degree)),
        qs.pochhammer_neg(k - i, k, trunc_degree),
    )
    return qs.div(num, qs.eta_product(1, trunc_degree)).coeffs


@lru_cache(maxsize=None)
def _theta_values(k: int, i: int, trunc_degree: int) -> tuple[int, ...]:
    return qs.div(
        qs.theta_sum(k, i, trunc_degree), qs.eta_product(1, trunc_degree)
    ).coeffs


@lru_cache(maxsize=None)
def _parity_bits(k: int, i: int, trunc_degree: int) -> int:
    theta = qs.reduce_mod2(qs.theta_sum(k, i, trunc_degree))
    penta = qs.reduce_mod2(qs.eta_product(1, trunc_degree))
    return qs.mul_f2(theta, qs.inv_f2(penta)).bits


def coefficients_product(params: SingularParams, trunc_degree: int) -> CoeffTable:
    """Table from the defining product quotient."""
    if trunc_degree < 0:
        raise ParameterError("truncation degree must be nonnegative")
    return CoeffTable(
        params, _product_values(params.k, params.i, trunc_degree), "product"
    )


def coefficients_theta(params: SingularParams, trunc_degree: int) -> CoeffTable:
    """Table from the theta-numerator quotient (the fast exact route)."""
    if trunc_degree < 0:
        raise ParameterError("truncation degree must be nonnegative")
    return CoeffTable(params, _theta_values(params.k, params.i, trunc_degree), "theta")


def parity_table(params: SingularParams, trunc_degree: int) -> ParityTable:
    """Mod-2 table via the packed GF(2) theta quotient."""
    if trunc_degree < 0:
        raise ParameterError("truncation degree must be nonnegative")
    return ParityTable(
        params, _parity_bits(params.k, params.i, trunc_degree), trunc_degree, "theta"
    )


# Reduced eta-quotients, as (modulus multiple, numerator eta steps,
# denominator eta steps), steps in multiples of k except the literal
# "abs" marker for the absolute (q;q) factor. Derived by rewriting the
# two negative Pochhammer factors of the product form.
_SPECIAL_FAMILIES = {
    "3k": (3, (2, 3, 3), ("abs", 1, 6)),
    "4k": (4, (2, 2), ("abs", 1)),
    "6k": (6, (2, 2, 3, 12), ("abs", 1, 4, 6)),
}


def special_form(family: str, k: int, trunc_degree: int) -> CoeffTable:
    """Table for C-bar_{3k,k}, C-bar_{4k,k} or C-bar_{6k,k} from its eta-quotient."""
    if family not in _SPECIAL_FAMILIES:
        raise ParameterError(
            f"family must be one of {sorted(_SPECIAL_FAMILIES)}, got {family!r}"
        )
    if k < 1:
        raise ParameterError(f"scale k must be >= 1, got {k}")
    if trunc_degree < 0:
        raise ParameterError("truncation degree must be nonnegative")
    factor, nums, dens = _SPECIAL_FAMILIES[family]
    params = SingularParams(factor * k, k)
    acc = qs.TruncSeriesZ.constant(1, trunc_degree)
    for m in nums:
        acc = qs.mul(acc, qs.eta_product(m * k, trunc_degree))
    for m in dens:
        step = 1 if m == "abs" else m * k
        acc = qs.div(acc, qs.eta_product(step, trunc_degree))
    return CoeffTable(params, acc.coeffs, f"special{family}")


def oracle_table(
    params: SingularParams, trunc_degree: int, cap: int = _oracle.DEFAULT_CAP
) -> CoeffTable:
    """Table built purely by enumeration; small degrees only."""
    values = tuple(
        _oracle.enumerate_overpartitions(params, n, cap).count
        for n in range(trunc_degree + 1)
    )
    return CoeffTable(params, values, "oracle")


def clear_caches() -> None:
    """Drop all memoized tables (used by timing measurements)."""
    _product_values.cache_clear()
    _theta_values.cache_clear()
    _parity_bits.cache_clear()
