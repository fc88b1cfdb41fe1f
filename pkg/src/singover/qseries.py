"""Truncated formal power series over the integers and over GF(2).

Everything here is exact: coefficients are arbitrary-precision Python
integers, parity series are bit sequences packed into a single int.
A series truncated at degree N stores the N+1 coefficients of q^0..q^N;
products and quotients of truncations agree with the truncation of the
exact infinite-series result through degree N.
"""

from __future__ import annotations

from .errors import (
    DegreeMismatchError,
    NonUnitDivisorError,
    ParameterError,
)


class TruncSeriesZ:
    """Integer power series truncated at a fixed degree.

    ``coeffs[n]`` is the coefficient of q^n; the truncation degree is
    ``len(coeffs) - 1``. Instances are immutable by convention; all
    operations return new series.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        self.coeffs = tuple(coeffs)
        if not self.coeffs:
            raise ParameterError("a truncated series needs at least the q^0 coefficient")

    @classmethod
    def constant(cls, value: int, trunc_degree: int) -> "TruncSeriesZ":
        return cls((value,) + (0,) * trunc_degree)

    @property
    def trunc_degree(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, n: int) -> int:
        return self.coeffs[n]

    def __eq__(self, other) -> bool:
        return isinstance(other, TruncSeriesZ) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __mul__(self, other: "TruncSeriesZ") -> "TruncSeriesZ":
        return mul(self, other)

    def __truediv__(self, other: "TruncSeriesZ") -> "TruncSeriesZ":
        return div(self, other)

    def support(self) -> tuple[int, ...]:
        """Exponents with nonzero coefficient."""
        return tuple(n for n, c in enumerate(self.coeffs) if c)

    def truncate(self, trunc_degree: int) -> "TruncSeriesZ":
        if trunc_degree > self.trunc_degree:
            raise ParameterError(
                f"cannot extend truncation degree {self.trunc_degree} to {trunc_degree}"
            )
        return TruncSeriesZ(self.coeffs[: trunc_degree + 1])

    def __repr__(self):
        shown = list(self.coeffs[:8])
        tail = "..." if len(self.coeffs) > 8 else ""
        return f"TruncSeriesZ(N={self.trunc_degree}, coeffs={shown}{tail})"


class TruncSeriesF2:
    """Parity series truncated at a fixed degree, bits packed into one int.

    Bit n of ``bits`` is the coefficient of q^n reduced mod 2. The packed
    form makes convolution a word-parallel shift-XOR.
    """

    __slots__ = ("bits", "trunc_degree")

    def __init__(self, bits: int, trunc_degree: int):
        if trunc_degree < 0:
            raise ParameterError("truncation degree must be nonnegative")
        if bits < 0 or bits >> (trunc_degree + 1):
            raise ParameterError("bit sequence extends past the truncation degree")
        self.bits = bits
        self.trunc_degree = trunc_degree

    @classmethod
    def from_bits(cls, flags, trunc_degree: int) -> "TruncSeriesF2":
        value = 0
        for n, f in enumerate(flags):
            if f:
                value |= 1 << n
        return cls(value, trunc_degree)

    def bit(self, n: int) -> int:
        if n > self.trunc_degree:
            raise IndexError(f"degree {n} beyond truncation {self.trunc_degree}")
        return (self.bits >> n) & 1

    def support(self) -> tuple[int, ...]:
        out = []
        x = self.bits
        while x:
            low = x & -x
            out.append(low.bit_length() - 1)
            x ^= low
        return tuple(out)

    def truncate(self, trunc_degree: int) -> "TruncSeriesF2":
        if trunc_degree > self.trunc_degree:
            raise ParameterError(
                f"cannot extend truncation degree {self.trunc_degree} to {trunc_degree}"
            )
        return TruncSeriesF2(self.bits & ((1 << (trunc_degree + 1)) - 1), trunc_degree)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, TruncSeriesF2)
            and self.bits == other.bits
            and self.trunc_degree == other.trunc_degree
        )

    def __hash__(self):
        return hash((self.bits, self.trunc_degree))

    def __mul__(self, other: "TruncSeriesF2") -> "TruncSeriesF2":
        return mul_f2(self, other)

    def __repr__(self):
        head = self.support()[:10]
        return f"TruncSeriesF2(N={self.trunc_degree}, support={list(head)}...)"


def _require_same_degree(s, t):
    if s.trunc_degree != t.trunc_degree:
        raise DegreeMismatchError(
            f"truncation degrees differ: {s.trunc_degree} vs {t.trunc_degree}"
        )


def mul(s: TruncSeriesZ, t: TruncSeriesZ) -> TruncSeriesZ:
    """Product of two series with equal truncation degrees.

    The factor with fewer nonzero terms drives the outer loop, so
    sparse-by-dense products cost O(terms * N).
    """
    _require_same_degree(s, t)
    n = s.trunc_degree
    a, b = s.coeffs, t.coeffs
    if sum(1 for c in a if c) > sum(1 for c in b if c):
        a, b = b, a
    res = [0] * (n + 1)
    for j, c in enumerate(a):
        if not c:
            continue
        res[j:] = [r + c * v for r, v in zip(res[j:], b)]
    return TruncSeriesZ(res)


def div(s: TruncSeriesZ, t: TruncSeriesZ) -> TruncSeriesZ:
    """Quotient r with r * t == s through the truncation degree.

    Forward substitution: r[n] = (s[n] - sum_{j>=1} t[j] r[n-j]) / t[0],
    restricted to the nonzero divisor terms, so a divisor with T terms
    costs O(N * T). The constant term of t must be +-1; quotients then
    stay integral with no divisibility checks needed.
    """
    _require_same_degree(s, t)
    t0 = t.coeffs[0]
    if t0 not in (1, -1):
        raise NonUnitDivisorError(f"divisor constant term must be +1 or -1, got {t0}")
    n = s.trunc_degree
    nz = [(j, c) for j, c in enumerate(t.coeffs) if c and j > 0]
    r = [0] * (n + 1)
    sc = s.coeffs
    for e in range(n + 1):
        acc = sc[e]
        for j, c in nz:
            if j > e:
                break
            acc -= c * r[e - j]
        r[e] = acc if t0 == 1 else -acc
    return TruncSeriesZ(r)


def eta_product(m: int, trunc_degree: int) -> TruncSeriesZ:
    """The product (q^m; q^m)_inf truncated at the given degree.

    Expanded through the pentagonal series
    sum_{j in Z} (-1)^j q^(m*j(3j-1)/2), so the coefficients lie in
    {-1, 0, 1} and construction costs O(sqrt(N/m)) updates.
    """
    if m < 1:
        raise ParameterError(f"eta product step must be >= 1, got {m}")
    if trunc_degree < 0:
        raise ParameterError("truncation degree must be nonnegative")
    coeffs = [0] * (trunc_degree + 1)
    coeffs[0] = 1
    j = 1
    while True:
        e1 = m * j * (3 * j - 1) // 2
        if e1 > trunc_degree:
            break
        sign = -1 if j % 2 else 1
        coeffs[e1] += sign
        e2 = m * j * (3 * j + 1) // 2
        if e2 <= trunc_degree:
            coeffs[e2] += sign
        j += 1
    return TruncSeriesZ(coeffs)


def pochhammer_neg(a: int, b: int, trunc_degree: int) -> TruncSeriesZ:
    """The product (-q^a; q^b)_inf = prod_{j>=0} (1 + q^(a+jb)), truncated.

    Factors whose lowest exponent exceeds the truncation degree are 1
    through that degree, so dropping them is exact.
    """
    if a < 1 or b < 1:
        raise ParameterError(f"offsets must be >= 1, got a={a}, b={b}")
    if trunc_degree < 0:
        raise ParameterError("truncation degree must be nonnegative")
    res = [0] * (trunc_degree + 1)
    res[0] = 1
    c = a
    while c <= trunc_degree:
        # multiply by (1 + q^c): new[n] = old[n] + old[n - c]
        res[c:] = [x + y for x, y in zip(res[c:], res)]
        c += b
    return TruncSeriesZ(res)


def theta_sum(k: int, i: int, trunc_degree: int) -> TruncSeriesZ:
    """Theta numerator of the singular overpartition generating function.

    sum_{n>=0} q^(k(n^2-n)/2 + in) + sum_{n>=1} q^(k(n^2+n)/2 - in),
    truncated. The coefficient of q^e counts the representations of e
    by the two exponent families; for i < k/2 every positive exponent
    occurs at most once, while i = k/2 makes the families coincide and
    each exponent is hit twice.
    """
    if not isinstance(k, int) or k < 3:
        raise ParameterError(f"modulus k must be an integer >= 3, got {k}")
    if not 1 <= i <= k // 2:
        raise ParameterError(f"residue i must satisfy 1 <= i <= floor(k/2), got {i}")
    if trunc_degree < 0:
        raise ParameterError("truncation degree must be nonnegative")
    coeffs = [0] * (trunc_degree + 1)
    n = 0
    while True:
        e = k * (n * n - n) // 2 + i * n
        if e > trunc_degree:
            break
        coeffs[e] += 1
        n += 1
    n = 1
    while True:
        e = k * (n * n + n) // 2 - i * n
        if e > trunc_degree:
            break
        coeffs[e] += 1
        n += 1
    return TruncSeriesZ(coeffs)


def generalized_pentagonals(bound: int, include_zero: bool = False) -> frozenset[int]:
    """All m(3m +- 1)/2 with m >= 1 up to the bound (optionally with 0)."""
    out = {0} if include_zero else set()
    m = 1
    while True:
        lo = m * (3 * m - 1) // 2
        if lo > bound:
            break
        out.add(lo)
        hi = m * (3 * m + 1) // 2
        if hi <= bound:
            out.add(hi)
        m += 1
    return frozenset(out)


def reduce_mod2(s: TruncSeriesZ) -> TruncSeriesF2:
    """Reduce every coefficient mod 2 into a packed parity series."""
    n = s.trunc_degree
    buf = bytearray(n // 8 + 1)
    for e, c in enumerate(s.coeffs):
        if c & 1:
            buf[e >> 3] |= 1 << (e & 7)
    return TruncSeriesF2(int.from_bytes(buf, "little"), n)


def _mul_bits(x: int, y: int) -> int:
    """Carryless (GF(2)) product of two bit-packed polynomials.

    Shift-XOR over the set bits of the sparser operand; each XOR is
    word-parallel on the underlying big integer.
    """
    if x.bit_count() > y.bit_count():
        x, y = y, x
    acc = 0
    while x:
        low = x & -x
        acc ^= y << (low.bit_length() - 1)
        x ^= low
    return acc


def mul_f2(s: TruncSeriesF2, t: TruncSeriesF2) -> TruncSeriesF2:
    """Parity-series product; equals reduce_mod2 of the integer product."""
    _require_same_degree(s, t)
    n = s.trunc_degree
    mask = (1 << (n + 1)) - 1
    return TruncSeriesF2(_mul_bits(s.bits, t.bits) & mask, n)


# Squaring over GF(2) spreads bit n to bit 2n; done bytewise via a table.
_SPREAD = []
for _byte in range(256):
    _v = 0
    for _i in range(8):
        if (_byte >> _i) & 1:
            _v |= 1 << (2 * _i)
    _SPREAD.append(_v.to_bytes(2, "little"))
del _byte, _v, _i


def _square_bits(x: int) -> int:
    nbytes = (x.bit_length() + 7) // 8
    if nbytes == 0:
        return 0
    xb = x.to_bytes(nbytes, "little")
    return int.from_bytes(b"".join(map(_SPREAD.__getitem__, xb)), "little")


def inv_f2(t: TruncSeriesF2) -> TruncSeriesF2:
    """Multiplicative inverse of a parity series with constant term 1.

    Newton lifting in characteristic 2: if t*r = 1 (mod q^m) then
    r' = t*r^2 satisfies t*r' = (t*r)^2 = 1 (mod q^(2m)), so the
    precision doubles per round using only squarings and one product.
    """
    if not t.bits & 1:
        raise NonUnitDivisorError("parity inverse needs constant term 1")
    n = t.trunc_degree
    r = 1
    prec = 1
    while prec < n + 1:
        prec = min(2 * prec, n + 1)
        mask = (1 << prec) - 1
        r = _mul_bits(t.bits & mask, _square_bits(r)) & mask
    return TruncSeriesF2(r, n)


def div_f2(s: TruncSeriesF2, t: TruncSeriesF2) -> TruncSeriesF2:
    """Parity-series quotient: s times the inverse of t."""
    _require_same_degree(s, t)
    return mul_f2(s, inv_f2(t))
