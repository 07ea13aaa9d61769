"""Exact arithmetic in cyclotomic fields Q(zeta_L).

An :class:`ExactScalar` stores an element of Q(zeta_L) as its coordinates in
the power basis 1, z, ..., z^(phi(L)-1), reduced modulo the L-th cyclotomic
polynomial.  Order 1 is plain Q.  Mixed-order operations lift both operands
to Q(zeta_lcm) first.

Literal format::

    "3/4"                      rational (order 1)
    "1/2 - 3*z^1 @ 3"          element of Q(zeta_3)

"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from functools import lru_cache
from numbers import Rational
from typing import Sequence, Union

from .errors import InputError

ScalarLike = Union["ExactScalar", int, Fraction, str]


# -- number theory helpers ---------------------------------------------------

def _factorize(n: int) -> dict[int, int]:
    out: dict[int, int] = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


@lru_cache(maxsize=None)
def totient(n: int) -> int:
    result = n
    for p in _factorize(n):
        result = result // p * (p - 1)
    return result


@lru_cache(maxsize=None)
def mobius(n: int) -> int:
    f = _factorize(n)
    if any(e > 1 for e in f.values()):
        return 0
    return -1 if len(f) % 2 else 1


def _poly_divexact(num: list[int], den: list[int]) -> list[int]:
    # coefficient lists, lowest degree first; den monic
    num = list(num)
    dq = len(den) - 1
    quot = [0] * (len(num) - dq)
    for i in range(len(quot) - 1, -1, -1):
        c = num[i + dq]
        quot[i] = c
        if c:
            for j, d in enumerate(den):
                num[i + j] -= c * d
    if any(num):
        raise ArithmeticError("inexact polynomial division")
    return quot


@lru_cache(maxsize=None)
def cyclotomic_polynomial(L: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_L, lowest degree first."""
    if L < 1:
        raise InputError(f"cyclotomic order must be >= 1, got {L}")
    poly = [-1] + [0] * (L - 1) + [1]
    for d in range(1, L):
        if L % d == 0:
            poly = _poly_divexact(poly, list(cyclotomic_polynomial(d)))
    return tuple(poly)


@lru_cache(maxsize=None)
def _power_table(L: int) -> tuple[tuple[int, ...], ...]:
    """Row k holds the power-basis coordinates of z^k for 0 <= k < L."""
    phi = totient(L)
    cyc = cyclotomic_polynomial(L)
    rows = []
    cur = [1] + [0] * (phi - 1)
    for _ in range(L):
        rows.append(tuple(cur))
        lead = cur[-1]
        cur = [0] + cur[:-1]
        if lead:
            for j in range(phi):
                cur[j] -= lead * cyc[j]
    return tuple(rows)


@lru_cache(maxsize=None)
def _normalized_trace_of_power(L: int, k: int) -> Fraction:
    # Tr(z_L^k) / phi(L) = mu(m) / phi(m), m = L / gcd(k, L)
    m = L // math.gcd(k, L)
    return Fraction(mobius(m), totient(m))


@lru_cache(maxsize=None)
def _basis_traces(L: int) -> tuple[Fraction, ...]:
    return tuple(_normalized_trace_of_power(L, k) for k in range(totient(L)))


def _reduce(L: int, acc: Sequence[Fraction]) -> tuple[Fraction, ...]:
    """Map coefficients of z^0..z^(L-1) to canonical power-basis coordinates."""
    table = _power_table(L)
    phi = len(table[0])
    out = [Fraction(0)] * phi
    for k, c in enumerate(acc):
        if c:
            row = table[k]
            for j in range(phi):
                if row[j]:
                    out[j] += c * row[j]
    return tuple(out)


# -- the scalar type ---------------------------------------------------------

class ExactScalar:
    """Immutable element of Q(zeta_order)."""

    __slots__ = ("order", "coords", "_hash")

    def __init__(self, coords: Sequence[Union[int, Fraction]], order: int = 1):
        if order < 1:
            raise InputError(f"order must be >= 1, got {order}")
        phi = totient(order)
        if len(coords) != phi:
            raise InputError(f"Q(zeta_{order}) needs {phi} coordinates, got {len(coords)}")
        self.order = order
        self.coords = tuple(Fraction(c) for c in coords)
        self._hash = None

    # construction

    @classmethod
    def rational(cls, x: Union[int, Fraction]) -> ExactScalar:
        return cls((Fraction(x),), 1)

    @classmethod
    def _from_powers(cls, L: int, acc: Sequence[Fraction]) -> ExactScalar:
        obj = cls.__new__(cls)
        obj.order = L
        obj.coords = _reduce(L, acc)
        obj._hash = None
        return obj

    @classmethod
    def _raw(cls, L: int, coords: tuple[Fraction, ...]) -> ExactScalar:
        obj = cls.__new__(cls)
        obj.order = L
        obj.coords = coords
        obj._hash = None
        return obj

    # queries

    def is_zero(self) -> bool:
        return not any(self.coords)

    def __bool__(self) -> bool:
        return any(self.coords)

    def is_rational(self) -> bool:
        return not any(self.coords[1:])

    def to_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.coords[0]

    def normalized_trace(self) -> Fraction:
        """Trace to Q divided by the field degree; independent of the ambient order."""
        return sum((c * t for c, t in zip(self.coords, _basis_traces(self.order))), Fraction(0))

    # arithmetic

    def _pair(self, other) -> tuple[ExactScalar, ExactScalar]:
        if isinstance(other, str):
            raise TypeError("use parse_scalar for literals")
        other = as_scalar(other)
        if self.order == other.order:
            return self, other
        L = self.order * other.order // math.gcd(self.order, other.order)
        return lift_to_order(self, L), lift_to_order(other, L)

    def __add__(self, other):
        try:
            a, b = self._pair(other)
        except TypeError:
            return NotImplemented
        return ExactScalar._raw(a.order, tuple(x + y for x, y in zip(a.coords, b.coords)))

    __radd__ = __add__

    def __sub__(self, other):
        try:
            a, b = self._pair(other)
        except TypeError:
            return NotImplemented
        return ExactScalar._raw(a.order, tuple(x - y for x, y in zip(a.coords, b.coords)))

    def __rsub__(self, other):
        try:
            return as_scalar(other) - self
        except TypeError:
            return NotImplemented

    def __neg__(self):
        return ExactScalar._raw(self.order, tuple(-x for x in self.coords))

    def __pos__(self):
        return self

    def __mul__(self, other):
        try:
            a, b = self._pair(other)
        except TypeError:
            return NotImplemented
        L = a.order
        if L == 1 or L == 2:
            return ExactScalar._raw(L, (a.coords[0] * b.coords[0],))
        acc = [Fraction(0)] * L
        for i, x in enumerate(a.coords):
            if x:
                for j, y in enumerate(b.coords):
                    if y:
                        acc[(i + j) % L] += x * y
        return ExactScalar._from_powers(L, acc)

    __rmul__ = __mul__

    def inverse(self) -> ExactScalar:
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in Q(zeta)")
        L = self.order
        if len(self.coords) == 1:
            return ExactScalar._raw(L, (1 / self.coords[0],))
        # solve self * x = 1 via the multiplication matrix
        phi = len(self.coords)
        basis = [ExactScalar._raw(L, tuple(Fraction(int(i == j)) for j in range(phi))) for i in range(phi)]
        cols = [(self * b).coords for b in basis]
        aug = [[cols[j][i] for j in range(phi)] + [Fraction(int(i == 0))] for i in range(phi)]
        x = _solve(aug)
        return ExactScalar._raw(L, tuple(x))

    def __truediv__(self, other):
        try:
            a, b = self._pair(other)
        except TypeError:
            return NotImplemented
        return a * b.inverse()

    def __rtruediv__(self, other):
        try:
            return as_scalar(other) / self
        except TypeError:
            return NotImplemented

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        base = self if k >= 0 else self.inverse()
        k = abs(k)
        result = ExactScalar._raw(self.order, _one_coords(self.order))
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    # comparison

    def __eq__(self, other) -> bool:
        try:
            a, b = self._pair(other)
        except TypeError:
            return NotImplemented
        return a.coords == b.coords

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self.normalized_trace())
        return self._hash

    # text

    def __str__(self) -> str:
        return format_scalar(self)

    def __repr__(self) -> str:
        return f"ExactScalar({format_scalar(self)!r})"


def _one_coords(L: int) -> tuple[Fraction, ...]:
    return (Fraction(1),) + (Fraction(0),) * (totient(L) - 1)


def _solve(aug: list[list[Fraction]]) -> list[Fraction]:
    """Gauss-Jordan on an augmented square system with a unique solution."""
    n = len(aug)
    for col in range(n):
        piv = next(r for r in range(col, n) if aug[r][col])
        aug[col], aug[piv] = aug[piv], aug[col]
        p = aug[col][col]
        aug[col] = [v / p for v in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                f = aug[r][col]
                aug[r] = [v - f * w for v, w in zip(aug[r], aug[col])]
    return [aug[r][n] for r in range(n)]


ZERO = ExactScalar.rational(0)
ONE = ExactScalar.rational(1)


def as_scalar(x: ScalarLike) -> ExactScalar:
    """Coerce ints, Fractions and literals; floats are refused."""
    if isinstance(x, ExactScalar):
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(x, (int, Fraction)) or (isinstance(x, Rational) and not isinstance(x, float)):
        return ExactScalar._raw(1, (Fraction(x),))
    if isinstance(x, str):
        return parse_scalar(x)
    raise TypeError(f"cannot use {type(x).__name__} as an exact scalar")


def root_of_unity(L: int, k: int = 1) -> ExactScalar:
    """zeta_L^k = exp(2 pi i k / L) in canonical form."""
    if L < 1:
        raise InputError(f"order must be >= 1, got {L}")
    if L <= 2:
        # Q(zeta_2) = Q; keep such values rational
        return ExactScalar.rational(-1 if k % L else 1)
    acc = [Fraction(0)] * L
    acc[k % L] = Fraction(1)
    return ExactScalar._from_powers(L, acc)


def lift_to_order(a: ExactScalar, L: int) -> ExactScalar:
    """Re-express ``a`` inside Q(zeta_L); requires a.order | L."""
    if L < 1 or L % a.order:
        raise InputError(f"cannot lift an order-{a.order} scalar to order {L}")
    if L == a.order:
        return a
    step = L // a.order
    acc = [Fraction(0)] * L
    for k, c in enumerate(a.coords):
        if c:
            acc[(k * step) % L] += c
    return ExactScalar._from_powers(L, acc)


# -- literals ----------------------------------------------------------------

_RAT = re.compile(r"^[+-]?\d+(/\d+)?$")
_TERM = re.compile(
    r"\s*([+-])?\s*(?:(\d+(?:/\d+)?)\s*(?:\*\s*z(?:\^(\d+))?)?|z(?:\^(\d+))?)\s*"
)


def _parse_rational(text: str) -> Fraction:
    text = text.strip()
    if not _RAT.match(text):
        raise InputError(f"malformed rational literal {text!r}")
    value = Fraction(text)
    return value


def parse_scalar(text: str) -> ExactScalar:
    """Parse ``"p/q"`` or ``"<sum of c*z^k> @ L"``."""
    try:
        return _parse_scalar(text)
    except ZeroDivisionError:
        raise InputError(f"zero denominator in {text!r}") from None


def _parse_scalar(text: str) -> ExactScalar:
    if not isinstance(text, str):
        raise InputError(f"scalar literal must be a string, got {type(text).__name__}")
    body, sep, order_txt = text.partition("@")
    if not sep:
        return ExactScalar._raw(1, (_parse_rational(body),))
    order_txt = order_txt.strip()
    if not order_txt.isdigit() or int(order_txt) < 1:
        raise InputError(f"malformed cyclotomic order in {text!r}")
    L = int(order_txt)
    body = body.strip()
    if not body:
        raise InputError(f"empty cyclotomic literal {text!r}")
    acc = [Fraction(0)] * L
    pos = 0
    first = True
    while pos < len(body):
        m = _TERM.match(body, pos)
        if not m or m.end() == pos:
            raise InputError(f"malformed cyclotomic literal {text!r}")
        sign, coef, exp1, exp2 = m.groups()
        if sign is None and not first:
            raise InputError(f"missing operator in {text!r}")
        if coef is None:
            c = Fraction(1)
            k = int(exp2) if exp2 is not None else 1
        else:
            c = Fraction(coef)
            if "z" in m.group(0):
                k = int(exp1) if exp1 is not None else 1
            else:
                k = 0
        if sign == "-":
            c = -c
        acc[k % L] += c
        pos = m.end()
        first = False
    return ExactScalar._from_powers(L, acc)


def format_scalar(a: ExactScalar) -> str:
    if a.order == 1:
        return str(a.coords[0])
    parts: list[str] = []
    for k, c in enumerate(a.coords):
        if not c:
            continue
        mag = str(abs(c)) if k == 0 else f"{abs(c)}*z^{k}"
        if not parts:
            parts.append(mag if c > 0 else f"-{mag}")
        else:
            parts.append(f"+ {mag}" if c > 0 else f"- {mag}")
    return f"{' '.join(parts) or '0'} @ {a.order}"
