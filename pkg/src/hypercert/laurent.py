"""Sparse Laurent polynomials in eta_1..eta_t over cyclotomic scalars.

Also hosts the monomial-unit model ``h = c * eta^l`` together with the Borel
grouping check and monomial substitution.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

from .errors import InputError, VerificationError
from .matrix import check_square, determinant
from .scalar import ONE, ExactScalar, as_scalar, format_scalar, parse_scalar

Exponents = tuple[int, ...]


class LaurentPoly:
    """Immutable finitely supported map ``exponent vector -> nonzero scalar``."""

    __slots__ = ("dim", "terms")

    def __init__(self, dim: int, terms: Mapping[Sequence[int], object] | None = None):
        if dim < 0:
            raise InputError(f"negative dimension {dim}")
        self.dim = dim
        clean: dict[Exponents, ExactScalar] = {}
        for exps, coef in (terms or {}).items():
            exps = tuple(int(e) for e in exps)
            if len(exps) != dim:
                raise InputError(f"exponent vector {exps} does not have length {dim}")
            c = as_scalar(coef)
            if exps in clean:
                c = clean[exps] + c
            if c:
                clean[exps] = c
            else:
                clean.pop(exps, None)
        self.terms = clean

    @classmethod
    def _wrap(cls, dim: int, terms: dict[Exponents, ExactScalar]) -> LaurentPoly:
        obj = cls.__new__(cls)
        obj.dim = dim
        obj.terms = terms
        return obj

    # constructors

    @classmethod
    def zero(cls, dim: int) -> LaurentPoly:
        return cls._wrap(dim, {})

    @classmethod
    def constant(cls, c, dim: int) -> LaurentPoly:
        c = as_scalar(c)
        return cls._wrap(dim, {(0,) * dim: c} if c else {})

    @classmethod
    def monomial(cls, exps: Sequence[int], c=1) -> LaurentPoly:
        return cls(len(exps), {tuple(exps): c})

    @classmethod
    def variable(cls, j: int, dim: int) -> LaurentPoly:
        """eta_{j+1}, i.e. ``j`` is 0-based."""
        exps = [0] * dim
        exps[j] = 1
        return cls._wrap(dim, {tuple(exps): ONE})

    # queries

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def is_homogeneous(self, degree: int | None = None) -> bool:
        degrees = {sum(e) for e in self.terms}
        if degree is not None:
            return degrees <= {degree}
        return len(degrees) <= 1

    def has_negative_exponents(self) -> bool:
        return any(x < 0 for e in self.terms for x in e)

    def sorted_terms(self) -> list[tuple[Exponents, ExactScalar]]:
        return sorted(self.terms.items())

    # arithmetic

    def _coerce(self, other) -> LaurentPoly:
        if isinstance(other, LaurentPoly):
            if other.dim != self.dim:
                raise InputError(f"dimension mismatch: {self.dim} vs {other.dim}")
            return other
        if isinstance(other, str):
            raise TypeError("literal strings are not polynomials")
        return LaurentPoly.constant(as_scalar(other), self.dim)

    def __add__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        out = dict(self.terms)
        for e, c in other.terms.items():
            if e in out:
                s = out[e] + c
                if s:
                    out[e] = s
                else:
                    del out[e]
            else:
                out[e] = c
        return LaurentPoly._wrap(self.dim, out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._wrap(self.dim, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        if not isinstance(other, LaurentPoly):
            try:
                c = as_scalar(other) if not isinstance(other, str) else None
            except TypeError:
                return NotImplemented
            if c is None:
                return NotImplemented
            if not c:
                return LaurentPoly.zero(self.dim)
            return LaurentPoly._wrap(self.dim, {e: v * c for e, v in self.terms.items()})
        other = self._coerce(other)
        out: dict[Exponents, ExactScalar] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                v = c1 * c2
                if e in out:
                    v = out[e] + v
                    if v:
                        out[e] = v
                    else:
                        del out[e]
                elif v:
                    out[e] = v
        return LaurentPoly._wrap(self.dim, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            if len(self.terms) != 1:
                raise ValueError("only monomials are invertible in the Laurent ring")
            (e, c), = self.terms.items()
            return LaurentPoly._wrap(self.dim, {tuple(x * k for x in e): c ** k})
        result = LaurentPoly.constant(1, self.dim)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, LaurentPoly):
            return self.dim == other.dim and self.terms == other.terms
        try:
            return self.terms == self._coerce(other).terms
        except (TypeError, InputError):
            return NotImplemented

    __hash__ = None

    # evaluation

    def evaluate(self, point: Sequence) -> ExactScalar:
        if len(point) != self.dim:
            raise InputError(f"point has {len(point)} coordinates, polynomial has {self.dim} variables")
        pt = [as_scalar(x) for x in point]
        total = as_scalar(0)
        powers: dict[tuple[int, int], ExactScalar] = {}
        for e, c in self.terms.items():
            term = c
            for j, k in enumerate(e):
                if k == 0:
                    continue
                if k < 0 and not pt[j]:
                    raise ZeroDivisionError(f"negative power of variable {j + 1} at a zero coordinate")
                key = (j, k)
                if key not in powers:
                    powers[key] = pt[j] ** k
                term = term * powers[key]
            total = total + term
        return total

    def partial_evaluate(self, assignment: Mapping[int, object]) -> LaurentPoly:
        """Substitute scalar values for some variables (0-based); the others remain."""
        vals = {j: as_scalar(v) for j, v in assignment.items()}
        acc: dict[Exponents, ExactScalar] = {}
        for e, c in self.terms.items():
            new_e = list(e)
            term = c
            for j, v in vals.items():
                k = e[j]
                if k:
                    if k < 0 and not v:
                        raise ZeroDivisionError(f"negative power of variable {j + 1} at zero")
                    term = term * v ** k
                    new_e[j] = 0
            if term:
                key = tuple(new_e)
                acc[key] = acc[key] + term if key in acc else term
        return LaurentPoly(self.dim, acc)

    # text

    def to_text(self) -> str:
        """One ``"coef * e1 e2 ... et"`` line per term, lexicographic exponent order."""
        return "\n".join(
            f"{format_scalar(c)} * {' '.join(str(x) for x in e)}".rstrip()
            for e, c in self.sorted_terms()
        )

    @classmethod
    def from_text(cls, text: str, dim: int | None = None) -> LaurentPoly:
        terms: dict[Exponents, ExactScalar] = {}
        for line in text.splitlines():
            if not line.strip():
                continue
            coef, sep, exps = line.rpartition(" * ")
            if not sep:
                raise InputError(f"malformed polynomial term {line!r}")
            try:
                e = tuple(int(x) for x in exps.split())
            except ValueError:
                raise InputError(f"malformed exponents in {line!r}") from None
            if dim is None:
                dim = len(e)
            if len(e) != dim:
                raise InputError(f"term {line!r} has {len(e)} exponents, expected {dim}")
            if e in terms:
                raise InputError(f"repeated monomial in {line!r}")
            terms[e] = parse_scalar(coef)
        if dim is None:
            raise InputError("zero polynomial text needs an explicit dimension")
        return cls(dim, terms)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.sorted_terms():
            mono = "*".join(
                f"x{j + 1}" if k == 1 else f"x{j + 1}^{k}" for j, k in enumerate(e) if k
            )
            coef = format_scalar(c)
            if " " in coef:
                coef = f"({coef})"
            parts.append(f"{coef}*{mono}" if mono else coef)
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"LaurentPoly({self.dim}, {{{', '.join(f'{e}: {c!s}' for e, c in self.sorted_terms())}}})"


def poly_arith(p: LaurentPoly, q: LaurentPoly, op: str) -> LaurentPoly:
    if op == "add":
        return p + q
    if op == "sub":
        return p - q
    if op == "mul":
        return p * q
    raise InputError(f"unknown ring operation {op!r}")


def det_laurent(M: Sequence[Sequence[LaurentPoly]]) -> LaurentPoly:
    check_square(M)
    dims = {x.dim for row in M for x in row}
    if len(dims) != 1:
        raise InputError(f"matrix entries live in different rings: dims {sorted(dims)}")
    return determinant(M)


# -- monomial units ----------------------------------------------------------

@dataclass(frozen=True)
class MonomialUnit:
    """``constant * eta^exponents`` with a nonzero constant."""

    constant: ExactScalar
    exponents: Exponents

    def __post_init__(self):
        object.__setattr__(self, "constant", as_scalar(self.constant))
        object.__setattr__(self, "exponents", tuple(int(x) for x in self.exponents))
        if not self.constant:
            raise InputError("a monomial unit needs a nonzero constant")

    @property
    def dim(self) -> int:
        return len(self.exponents)

    def to_poly(self) -> LaurentPoly:
        return LaurentPoly._wrap(self.dim, {self.exponents: self.constant})

    def __mul__(self, other: MonomialUnit) -> MonomialUnit:
        return MonomialUnit(self.constant * other.constant,
                            tuple(a + b for a, b in zip(self.exponents, other.exponents)))

    def inverse(self) -> MonomialUnit:
        return MonomialUnit(self.constant.inverse(), tuple(-x for x in self.exponents))


@dataclass(frozen=True)
class BorelResult:
    is_zero: bool
    groups: tuple[tuple[int, ...], ...]  # indices sharing an exponent vector, lexicographic by exponent

    @property
    def has_singleton(self) -> bool:
        return any(len(g) == 1 for g in self.groups)


def borel_check(terms: Sequence[MonomialUnit]) -> BorelResult:
    """Decide whether sum(terms) vanishes by grouping on exponent vectors.

    The grouped verdict is cross-checked against the expanded Laurent sum, and a
    vanishing sum with a singleton group raises: that is the Borel lemma for
    explicit monomial units.
    """
    buckets: dict[Exponents, list[int]] = {}
    for i, u in enumerate(terms):
        buckets.setdefault(u.exponents, []).append(i)
    groups = tuple(tuple(buckets[e]) for e in sorted(buckets))
    grouped_zero = all(
        not sum((terms[i].constant for i in g), as_scalar(0)) for g in groups
    )
    if terms:
        dims = {u.dim for u in terms}
        if len(dims) != 1:
            raise InputError(f"monomial units of different dimensions {sorted(dims)}")
        total = LaurentPoly.zero(dims.pop())
        for u in terms:
            total = total + u.to_poly()
        poly_zero = total.is_zero()
    else:
        poly_zero = True
    if grouped_zero != poly_zero:
        raise VerificationError("group cancellation disagrees with the expanded sum")
    result = BorelResult(grouped_zero, groups)
    if result.is_zero and result.has_singleton:
        raise VerificationError("vanishing sum of units with an unmatched term")
    return result


def substitute_monomials(P: LaurentPoly, units: Sequence[MonomialUnit]) -> LaurentPoly:
    """Expand P(X_1..X_t) with X_j -> units[j]."""
    if len(units) != P.dim:
        raise InputError(f"P has {P.dim} variables but {len(units)} units were given")
    if not units:
        return LaurentPoly(0, P.terms)
    dims = {u.dim for u in units}
    if len(dims) != 1:
        raise InputError("units must share one exponent dimension")
    dim = dims.pop()
    acc: dict[Exponents, ExactScalar] = {}
    for e, c in P.terms.items():
        coef = c
        exps = [0] * dim
        for k, u in zip(e, units):
            if k:
                coef = coef * u.constant ** k
                for j, x in enumerate(u.exponents):
                    exps[j] += k * x
        key = tuple(exps)
        acc[key] = acc[key] + coef if key in acc else coef
    return LaurentPoly(dim, acc)


def linear_form(coeffs: Sequence, dim: int | None = None) -> LaurentPoly:
    """sum_j coeffs[j] * g_j as a polynomial in len(coeffs) variables."""
    dim = len(coeffs) if dim is None else dim
    terms = {}
    for j, c in enumerate(coeffs):
        e = [0] * dim
        e[j] = 1
        terms[tuple(e)] = c
    return LaurentPoly(dim, terms)


def det_poly_in_g(M: Sequence[Sequence[LaurentPoly]]) -> LaurentPoly:
    """Determinant of a matrix of linear forms in g_0..g_n; homogeneous of degree size."""
    n = check_square(M)
    for row in M:
        for x in row:
            if x.has_negative_exponents() or not x.is_homogeneous(1):
                raise InputError(f"entry {x} is not a linear form in the g variables")
    det = det_laurent(M)
    if not det.is_homogeneous(n):
        raise VerificationError(f"determinant is not homogeneous of degree {n}")
    return det

