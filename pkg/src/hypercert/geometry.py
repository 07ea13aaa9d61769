"""Hyperplane families in P^n with exact coefficients."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Optional, Sequence

from .errors import InputError, VerificationError
from .matrix import adjugate, determinant, matmul, square_minors, submatrix
from .scalar import ExactScalar, as_scalar, format_scalar, parse_scalar

Row = tuple[ExactScalar, ...]


def _scalar_from_json(x) -> ExactScalar:
    if isinstance(x, bool) or isinstance(x, float):
        raise InputError(f"inexact or non-numeric literal {x!r}; use integers or \"p/q\" strings")
    if isinstance(x, int):
        return as_scalar(x)
    if isinstance(x, str):
        return parse_scalar(x)
    raise InputError(f"unsupported scalar literal {x!r}")


@dataclass(frozen=True)
class HyperplaneFamily:
    """Rows (a_0, ..., a_n) of the defining linear forms, one per hyperplane."""

    n: int
    rows: tuple[Row, ...]

    def __post_init__(self):
        if not isinstance(self.n, int) or isinstance(self.n, bool) or self.n < 1:
            raise InputError(f"projective dimension must be a positive integer, got {self.n!r}")
        rows = tuple(tuple(as_scalar(x) for x in r) for r in self.rows)
        for i, r in enumerate(rows):
            if len(r) != self.n + 1:
                raise InputError(f"hyperplane {i} has {len(r)} coefficients, expected {self.n + 1}")
            if not any(r):
                raise InputError(f"hyperplane {i} has an all-zero coefficient row")
        object.__setattr__(self, "rows", rows)

    @property
    def q(self) -> int:
        return len(self.rows)

    def canonical(self) -> HyperplaneFamily:
        """Scale every row so its first nonzero entry is 1 (for I/O only)."""
        out = []
        for r in self.rows:
            lead = next(x for x in r if x)
            out.append(tuple(x / lead for x in r))
        return HyperplaneFamily(self.n, tuple(out))

    def permuted(self, perm: Sequence[int]) -> HyperplaneFamily:
        return HyperplaneFamily(self.n, tuple(self.rows[i] for i in perm))

    def scaled(self, factors: Sequence) -> HyperplaneFamily:
        return HyperplaneFamily(self.n, tuple(tuple(x * f for x in r) for r, f in zip(self.rows, factors)))

    def transformed(self, G: Sequence[Sequence]) -> HyperplaneFamily:
        """Coordinate change x = G y, i.e. every row r becomes r * G."""
        return HyperplaneFamily(self.n, tuple(tuple(r) for r in matmul(self.rows, G)))

    def to_json(self) -> dict:
        return {"n": self.n, "hyperplanes": [[format_scalar(x) for x in r] for r in self.rows]}

    @classmethod
    def from_json(cls, obj) -> HyperplaneFamily:
        if not isinstance(obj, dict) or "n" not in obj or "hyperplanes" not in obj:
            raise InputError('expected {"n": int, "hyperplanes": [[...], ...]}')
        hyps = obj["hyperplanes"]
        if not isinstance(hyps, list) or not all(isinstance(r, list) for r in hyps):
            raise InputError("hyperplanes must be a list of coefficient lists")
        return cls(obj["n"], tuple(tuple(_scalar_from_json(x) for x in r) for r in hyps))


@dataclass(frozen=True)
class GeneralPosition:
    ok: bool
    violating_subset: Optional[tuple[int, ...]] = None


def general_position(F: HyperplaneFamily) -> GeneralPosition:
    """Every (n+1)-subset of rows must have a nonzero determinant."""
    if F.q < F.n + 1:
        raise InputError(f"need at least n+1 = {F.n + 1} hyperplanes, got {F.q}")
    for subset in combinations(range(F.q), F.n + 1):
        if not determinant([F.rows[i] for i in subset]):
            return GeneralPosition(False, subset)
    return GeneralPosition(True)


def normalize_block(F: HyperplaneFamily, block: Sequence[int]) -> tuple[HyperplaneFamily, ExactScalar]:
    """Multiply every row by adj(M), M the block rows in the given order.

    Afterwards block row j equals det(M) * e_j, so the block hyperplanes are
    the coordinate hyperplanes.  Returns the new family and det(M).
    """
    block = list(block)
    if len(block) != F.n + 1 or len(set(block)) != len(block):
        raise InputError(f"a block needs {F.n + 1} distinct row indices, got {block}")
    if any(not 0 <= i < F.q for i in block):
        raise InputError(f"block index out of range: {block}")
    M = [F.rows[i] for i in block]
    det = determinant(M)
    if not det:
        raise InputError(f"block {block} is singular")
    adj = adjugate(M)
    out = HyperplaneFamily(F.n, tuple(tuple(r) for r in matmul(F.rows, adj)))
    for j, i in enumerate(block):
        for c, x in enumerate(out.rows[i]):
            if x != (det if c == j else 0):
                raise VerificationError(f"block row {i} did not become det * e_{j}")
    return out, det


def complement_minors_nonzero(F: HyperplaneFamily, block: Sequence[int]) -> bool:
    """After normalize_block, do all minors of the complement rows vanish nowhere?

    For a family in general position this always holds: each such minor is,
    up to a power of det(M), an (n+1)-minor of the original family.
    """
    G, _ = normalize_block(F, block)
    rest = [i for i in range(F.q) if i not in set(block)]
    sub = submatrix(G.rows, rest, range(F.n + 1))
    return all(v for _, _, v in square_minors(sub))
