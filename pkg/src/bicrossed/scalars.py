"""Exact arithmetic in cyclotomic fields Q(zeta_N).

Elements are represented canonically as polynomials in zeta_N of degree
< deg(Phi_N), i.e. as residues in Q[x]/(Phi_N(x)) written in the power
basis 1, zeta, zeta^2, ...  Equality of canonical forms is equality in
the field, so == and hashing are exact.

The conductor N is part of the value.  Arithmetic between different
conductors raises ConductorMismatch; callers that need mixed conductors
embed into Q(zeta_lcm) first (see embed / unify).
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from .errors import ConductorMismatch, DivisionByZero, MalformedInput

Rational = Fraction


# ---------------------------------------------------------------------------
# integer / rational polynomial helpers (ascending coefficient lists)
# ---------------------------------------------------------------------------

def _int_poly_divmod(num: list[int], den: list[int]) -> tuple[list[int], list[int]]:
    """Exact division of integer polynomials; den must be monic."""
    num = list(num)
    deg_d = len(den) - 1
    if den[-1] != 1:
        raise ValueError("divisor must be monic")
    quot = [0] * max(len(num) - deg_d, 0)
    for i in range(len(num) - 1, deg_d - 1, -1):
        c = num[i]
        if c == 0:
            continue
        quot[i - deg_d] = c
        for j, d in enumerate(den):
            num[i - deg_d + j] -= c * d
    while num and num[-1] == 0:
        num.pop()
    return quot, num


@lru_cache(maxsize=None)
def cyclotomic_polynomial(N: int) -> tuple[int, ...]:
    """Coefficients of the N-th cyclotomic polynomial, ascending, monic.

    Computed by dividing x^N - 1 by the cyclotomic polynomials of all
    proper divisors of N.
    """
    if N < 1:
        raise ValueError(f"conductor must be >= 1, got {N}")
    poly = [-1] + [0] * (N - 1) + [1]  # x^N - 1
    for d in range(1, N):
        if N % d == 0:
            quot, rem = _int_poly_divmod(poly, list(cyclotomic_polynomial(d)))
            if rem:
                raise AssertionError(f"x^{N}-1 not divisible by Phi_{d}")
            poly = quot
    return tuple(poly)


@lru_cache(maxsize=None)
def _reduction_rows(N: int) -> tuple[tuple[Fraction, ...], ...]:
    """Canonical forms of x^(deg+j) mod Phi_N for j = 0..deg-2."""
    phi = cyclotomic_polynomial(N)
    deg = len(phi) - 1
    rows: list[tuple[Fraction, ...]] = []
    # x^deg = -(phi[0] + phi[1] x + ... + phi[deg-1] x^(deg-1))
    current = [Fraction(-c) for c in phi[:-1]]
    for _ in range(max(deg - 1, 0)):
        rows.append(tuple(current))
        # multiply by x, then fold the overflowing top coefficient back in
        top = current[-1]
        current = [Fraction(0)] + current[:-1]
        if top:
            for i in range(deg):
                current[i] -= top * phi[i]
    if deg >= 1:
        rows.append(tuple(current))
    return tuple(rows[: max(deg - 1, 1)]) if deg == 1 else tuple(rows)


def _reduce(N: int, coeffs: Sequence[Fraction]) -> tuple[Fraction, ...]:
    """Reduce an arbitrary-degree coefficient list mod Phi_N."""
    deg = len(cyclotomic_polynomial(N)) - 1
    rows = _reduction_rows(N)
    if len(coeffs) > deg + len(rows):
        # degree too high for the precomputed rows; fall back to long division
        phi = [Fraction(c) for c in cyclotomic_polynomial(N)]
        _, rem = _frac_poly_divmod([Fraction(c) for c in coeffs], phi)
        return tuple(rem + [Fraction(0)] * (deg - len(rem)))
    out = [Fraction(c) for c in coeffs[:deg]]
    out += [Fraction(0)] * (deg - len(out))
    for j, c in enumerate(coeffs[deg:]):
        if c:
            row = rows[j]
            for i in range(deg):
                out[i] += c * row[i]
    return tuple(out)


def _frac_poly_divmod(
    num: list[Fraction], den: list[Fraction]
) -> tuple[list[Fraction], list[Fraction]]:
    num = list(num)
    while den and den[-1] == 0:
        den = den[:-1]
    if not den:
        raise DivisionByZero("polynomial division by zero")
    deg_d = len(den) - 1
    lead = den[-1]
    quot = [Fraction(0)] * max(len(num) - deg_d, 0)
    for i in range(len(num) - 1, deg_d - 1, -1):
        c = num[i]
        if c == 0:
            continue
        q = c / lead
        quot[i - deg_d] = q
        for j, d in enumerate(den):
            num[i - deg_d + j] -= q * d
    while num and num[-1] == 0:
        num.pop()
    return quot, num


# ---------------------------------------------------------------------------
# field elements
# ---------------------------------------------------------------------------

class Cyclotomic:
    """An element of Q(zeta_N) in canonical power-basis form."""

    __slots__ = ("N", "coeffs")

    def __init__(self, N: int, coeffs: Iterable[Fraction | int]):
        deg = len(cyclotomic_polynomial(N)) - 1
        cs = [Fraction(c) for c in coeffs]
        if len(cs) > deg:
            cs = list(_reduce(N, cs))
        cs += [Fraction(0)] * (deg - len(cs))
        object.__setattr__(self, "N", N)
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):  # keep values immutable
        raise AttributeError("Cyclotomic values are immutable")

    # -- constructors -------------------------------------------------------

    @classmethod
    def from_rational(cls, q: Fraction | int, N: int = 1) -> "Cyclotomic":
        return cls(N, [Fraction(q)])

    @classmethod
    def zero(cls, N: int = 1) -> "Cyclotomic":
        return cls(N, [])

    @classmethod
    def one(cls, N: int = 1) -> "Cyclotomic":
        return cls(N, [Fraction(1)])

    # -- predicates ---------------------------------------------------------

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def __bool__(self) -> bool:
        return not self.is_zero()

    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coeffs[1:])

    def to_rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self!r} is not rational")
        return self.coeffs[0]

    # -- arithmetic ---------------------------------------------------------

    def _coerce(self, other) -> "Cyclotomic | None":
        if isinstance(other, Cyclotomic):
            if other.N != self.N:
                raise ConductorMismatch(
                    f"conductor mismatch: {self.N} vs {other.N}"
                )
            return other
        if isinstance(other, (int, Fraction)):
            return Cyclotomic.from_rational(other, self.N)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Cyclotomic(self.N, [a + b for a, b in zip(self.coeffs, o.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic(self.N, [-a for a in self.coeffs])

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Cyclotomic(self.N, [a - b for a, b in zip(self.coeffs, o.coeffs)])

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        prod = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        prod[i + j] += ai * bj
        return Cyclotomic(self.N, _reduce(self.N, prod))

    __rmul__ = __mul__

    def inverse(self) -> "Cyclotomic":
        """Multiplicative inverse via the extended Euclidean algorithm."""
        if self.is_zero():
            raise DivisionByZero(f"inverse of zero in Q(zeta_{self.N})")
        phi = [Fraction(c) for c in cyclotomic_polynomial(self.N)]
        # invariant: r0 = u0 * self (mod Phi), r1 = u1 * self (mod Phi)
        r0, r1 = phi, list(self.coeffs)
        u0, u1 = [Fraction(0)], [Fraction(1)]
        while True:
            while r1 and r1[-1] == 0:
                r1.pop()
            if len(r1) == 1:
                inv_c = Fraction(1) / r1[0]
                return Cyclotomic(self.N, [c * inv_c for c in u1])
            q, r = _frac_poly_divmod(r0, r1)
            # u_new = u0 - q * u1
            qu = [Fraction(0)] * (len(q) + len(u1) - 1)
            for i, qi in enumerate(q):
                if qi:
                    for j, uj in enumerate(u1):
                        qu[i + j] += qi * uj
            size = max(len(u0), len(qu))
            u_new = [
                (u0[k] if k < len(u0) else Fraction(0))
                - (qu[k] if k < len(qu) else Fraction(0))
                for k in range(size)
            ]
            r0, r1 = r1, r
            u0, u1 = u1, u_new

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.is_zero():
            raise DivisionByZero(f"division by zero in Q(zeta_{self.N})")
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        base = self
        if n < 0:
            base = self.inverse()
            n = -n
        result = Cyclotomic.one(self.N)
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- comparison / hashing ----------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.coeffs[0] == other
        if not isinstance(other, Cyclotomic):
            return NotImplemented
        return self.N == other.N and self.coeffs == other.coeffs

    def __hash__(self):
        if self.is_rational():
            return hash(self.coeffs[0])
        return hash((self.N, self.coeffs))

    def __repr__(self):
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
            elif i == 1:
                terms.append(f"{c}*z" if c != 1 else "z")
            else:
                terms.append(f"{c}*z^{i}" if c != 1 else f"z^{i}")
        body = " + ".join(terms) if terms else "0"
        return f"Cyc(N={self.N}: {body})"

    # -- serialization ------------------------------------------------------

    def to_json(self) -> dict:
        return {
            "N": self.N,
            "coeffs": [f"{c.numerator}/{c.denominator}" for c in self.coeffs],
        }

    @classmethod
    def from_json(cls, data: dict) -> "Cyclotomic":
        if not isinstance(data, dict) or "N" not in data or "coeffs" not in data:
            raise MalformedInput(f"not a field-element document: {data!r}")
        try:
            return cls(int(data["N"]), [Fraction(c) for c in data["coeffs"]])
        except (ValueError, TypeError, ZeroDivisionError) as exc:
            raise MalformedInput(f"bad field-element document: {exc}") from None


def root_of_unity(N: int, k: int) -> Cyclotomic:
    """zeta_N^k as a canonical element of Q(zeta_N)."""
    if N < 1:
        raise ValueError(f"conductor must be >= 1, got {N}")
    k %= N
    coeffs = [Fraction(0)] * k + [Fraction(1)]
    return Cyclotomic(N, coeffs)


def embed(a: Cyclotomic, M: int) -> Cyclotomic:
    """Embed Q(zeta_N) into Q(zeta_M) for N | M via zeta_N -> zeta_M^(M/N)."""
    if M % a.N != 0:
        raise ConductorMismatch(f"{a.N} does not divide {M}")
    step = M // a.N
    deg_m = len(cyclotomic_polynomial(M)) - 1
    out = [Fraction(0)] * max(deg_m, (len(a.coeffs) - 1) * step + 1)
    for i, c in enumerate(a.coeffs):
        if c:
            out[i * step] += c
    return Cyclotomic(M, out)


def unify(a: Cyclotomic, b: Cyclotomic) -> tuple[Cyclotomic, Cyclotomic]:
    """Embed both values into Q(zeta_lcm(Na, Nb))."""
    if a.N == b.N:
        return a, b
    g = _gcd(a.N, b.N)
    m = a.N // g * b.N
    return embed(a, m), embed(b, m)


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a
