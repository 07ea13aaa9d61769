"""Tuples in a torsion-free abelian group, modelled additively in Z^t.

The multiplicative class [h_i] = [eta_1^l(i,1) ... eta_t^l(i,t)] becomes the
integer vector l(i, .); products become sums and the unit element is the zero
vector.  Everything here is exact integer arithmetic.
"""

from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations, permutations
from typing import Optional, Sequence

from .errors import InputError, LemmaViolation, SizeLimitError

Vector = tuple[int, ...]
GroupTuple = tuple[Vector, ...]

MAX_Q = 12
MAX_T = 4


def as_group_tuple(A: Sequence[Sequence[int]]) -> GroupTuple:
    out = []
    for v in A:
        if isinstance(v, (str, bytes)) or not hasattr(v, "__iter__"):
            raise InputError(f"tuple element {v!r} is not an integer vector")
        row = []
        for x in v:
            if isinstance(x, bool) or not isinstance(x, int):
                raise InputError(f"exponent {x!r} is not an integer")
            row.append(x)
        out.append(tuple(row))
    if len({len(v) for v in out}) > 1:
        raise InputError("tuple elements have different lengths")
    return tuple(out)


def _dim(A: GroupTuple) -> int:
    return len(A[0]) if A else 0


def _add(u: Vector, v: Vector) -> Vector:
    return tuple(a + b for a, b in zip(u, v))


def _sub(u: Vector, v: Vector) -> Vector:
    return tuple(a - b for a, b in zip(u, v))


def _neg(u: Vector) -> Vector:
    return tuple(-a for a in u)


def _check_size(A: GroupTuple) -> None:
    if len(A) > MAX_Q or _dim(A) > MAX_T:
        raise SizeLimitError(
            f"enumeration limited to q <= {MAX_Q}, t <= {MAX_T} (got q={len(A)}, t={_dim(A)})"
        )


# -- normal forms ------------------------------------------------------------

def hermite_normal_form(rows: Sequence[Sequence[int]]) -> tuple[Vector, ...]:
    """Row-style Hermite normal form of the lattice spanned by ``rows``.

    Nonzero rows only; pivots positive, entries above each pivot reduced into
    [0, pivot).  Two generating sets span the same subgroup of Z^t iff their
    normal forms agree.
    """
    A = [list(r) for r in rows]
    m = len(A)
    ncols = len(A[0]) if A else 0
    r = 0
    for c in range(ncols):
        if r == m:
            break
        while True:
            live = [i for i in range(r, m) if A[i][c]]
            if not live:
                break
            piv = min(live, key=lambda i: abs(A[i][c]))
            A[r], A[piv] = A[piv], A[r]
            clean = True
            for i in range(r + 1, m):
                if A[i][c]:
                    f = A[i][c] // A[r][c]
                    A[i] = [x - f * y for x, y in zip(A[i], A[r])]
                    if A[i][c]:
                        clean = False
            if clean:
                break
        if A[r][c] == 0:
            continue
        if A[r][c] < 0:
            A[r] = [-x for x in A[r]]
        for i in range(r):
            f = A[i][c] // A[r][c]
            if f:
                A[i] = [x - f * y for x, y in zip(A[i], A[r])]
        r += 1
    return tuple(tuple(row) for row in A[:r])


def tuple_rank(A: Sequence[Sequence[int]]) -> int:
    """Rank of the subgroup generated by the tuple."""
    return len(hermite_normal_form(as_group_tuple(A)))


def same_subgroup(A: Sequence[Sequence[int]], B: Sequence[Sequence[int]],
                  shift: Sequence[int]) -> bool:
    """Do A and B generate the same subgroup, given A_i = shift + B_i and both contain 0?"""
    A, B = as_group_tuple(A), as_group_tuple(B)
    shift = tuple(shift)
    if len(A) != len(B) or (A and _dim(A) != _dim(B)) or (A and len(shift) != _dim(A)):
        raise InputError("tuples and shift must have matching shapes")
    if any(a != _add(shift, b) for a, b in zip(A, B)):
        raise InputError("A is not a uniform shift of B")
    zero = (0,) * len(shift)
    if zero not in A or zero not in B:
        raise InputError("both tuples must contain the unit element")
    return hermite_normal_form(A) == hermite_normal_form(B)


# -- property (P_{r,s}) ------------------------------------------------------

def _check_rs(q: int, r: int, s: int) -> None:
    if not (q >= r > s >= 1):
        raise InputError(f"need q >= r > s >= 1, got q={q}, r={r}, s={s}")


def _encode(A: GroupTuple, s: int) -> list[int]:
    # balanced mixed radix: sums of up to s encoded vectors stay injective
    bound = max((abs(x) for v in A for x in v), default=0)
    base = 2 * s * bound + 1
    return [sum(x * base ** j for j, x in enumerate(v)) for v in A]


def has_property(A: Sequence[Sequence[int]], r: int, s: int) -> bool:
    """Every r-subset: each s-subset sum is matched by a different s-subset sum."""
    A = as_group_tuple(A)
    _check_rs(len(A), r, s)
    _check_size(A)
    codes = _encode(A, s)
    for L in combinations(codes, r):
        counts = Counter(map(sum, combinations(L, s)))
        if 1 in counts.values():
            return False
    return True


def collapse_conclusion(A: Sequence[Sequence[int]], r: int, s: int) -> bool:
    """Some value is repeated at least q - r + 2 times."""
    A = as_group_tuple(A)
    q = len(A)
    _check_rs(q, r, s)
    return max(Counter(A).values()) >= q - r + 2


# -- classification of (P_{q,s}) tuples of maximal rank -----------------------

class Kind(str, enum.Enum):
    TYPE_A = "TypeA"
    TYPE_B = "TypeB"
    RANK_DEFICIT = "RankDeficit"
    NOT_APPLICABLE = "NotApplicable"


@dataclass(frozen=True)
class Classification:
    kind: Kind
    s: int
    k: int = 0
    breakpoints: tuple[int, ...] = ()
    basis: tuple[Vector, ...] = ()
    reindexing: tuple[int, ...] = ()
    shift: Optional[Vector] = None
    reason: str = field(default="", compare=False)

    def pattern(self) -> list[Vector]:
        return classification_pattern(self.kind, self.s, self.basis, self.breakpoints)

    def to_json(self) -> dict:
        return {
            "kind": self.kind.value,
            "s": self.s,
            "k": self.k,
            "breakpoints": list(self.breakpoints),
            "basis": [list(b) for b in self.basis],
            "reindexing": list(self.reindexing),
            "shift": list(self.shift) if self.shift is not None else None,
            "reason": self.reason,
        }

    @classmethod
    def from_json(cls, obj: dict) -> Classification:
        return cls(
            kind=Kind(obj["kind"]),
            s=int(obj["s"]),
            k=int(obj["k"]),
            breakpoints=tuple(obj["breakpoints"]),
            basis=tuple(tuple(b) for b in obj["basis"]),
            reindexing=tuple(obj["reindexing"]),
            shift=tuple(obj["shift"]) if obj.get("shift") is not None else None,
            reason=obj.get("reason", ""),
        )


def classification_pattern(kind: Kind, s: int, basis: Sequence[Vector],
                           breakpoints: Sequence[int]) -> list[Vector]:
    """The right-hand side of the (A) or (B) pattern as additive vectors."""
    if not basis:
        raise InputError("a pattern needs at least one basis element")
    zero = (0,) * len(basis[0])
    if kind is Kind.TYPE_A:
        out = [zero, zero]
        for b in basis:
            out += [b, b]
        return out
    if kind is Kind.TYPE_B:
        k = len(breakpoints)
        out = [zero] * (s + 1 - k) + list(basis)
        lo = 0
        for hi in breakpoints:
            block = zero
            for b in basis[lo:hi]:
                block = _add(block, b)
            out.append(_neg(block))
            lo = hi
        return out
    raise InputError(f"{kind.value} has no pattern")


def _assign(values: Sequence[Vector], pattern: Sequence[Vector]) -> Optional[tuple[int, ...]]:
    # smallest unused index per pattern slot: lexicographically least reindexing
    pool: dict[Vector, list[int]] = {}
    for i, v in enumerate(values):
        pool.setdefault(v, []).append(i)
    taken = {v: 0 for v in pool}
    out = []
    for p in pattern:
        if p not in pool or taken[p] >= len(pool[p]):
            return None
        out.append(pool[p][taken[p]])
        taken[p] += 1
    return tuple(out)


def _candidates(A: GroupTuple, s: int, lattice_hnf):
    """Yield every (kind, breakpoints, basis, shift) whose pattern matches A."""
    t = _dim(A)
    zero = (0,) * t
    spans: dict[frozenset, bool] = {}

    def spans_lattice(basis) -> bool:
        key = frozenset(basis)
        if key not in spans:
            spans[key] = hermite_normal_form(basis) == lattice_hnf
        return spans[key]

    for gamma in sorted(set(A)):
        shifted = [_sub(a, gamma) for a in A]
        counts = Counter(shifted)
        nonzero = sorted(v for v in counts if v != zero)
        # type (A): 1,1,b1,b1,...,b_{s-1},b_{s-1}
        if s % 2 == 1 and len(nonzero) == s - 1 and all(c == 2 for c in counts.values()) \
                and counts.get(zero) == 2 and spans_lattice(nonzero):
            for order in permutations(nonzero):
                yield Kind.TYPE_A, (), order, gamma
        # type (B): (s+1-k) units, the basis, then k inverted block products
        z = counts.get(zero, 0)
        k = s + 1 - z
        if not (0 <= k <= s - 1) or any(counts[v] != 1 for v in nonzero):
            continue
        if len(nonzero) != s - 1 + k:
            continue
        for order in permutations(nonzero, s - 1):
            rest = sorted(set(nonzero) - set(order))
            if not spans_lattice(order):
                continue
            for cuts in combinations(range(1, s), k):
                pat = classification_pattern(Kind.TYPE_B, s, order, cuts)
                if sorted(pat[2 * s - k:]) == rest:
                    yield Kind.TYPE_B, cuts, order, gamma


def classify(A: Sequence[Sequence[int]], s: int) -> Classification:
    """Put a (P_{q,s}) tuple containing the unit into normal form (A) or (B).

    Returns ``NotApplicable`` when the hypotheses fail and ``RankDeficit`` when
    the rank is below s - 1.  For rank s - 1 the returned witness is the
    candidate with the lexicographically smallest reindexing, then smallest
    basis, and it is re-verified before returning.  A tuple that meets the
    hypotheses but admits no witness raises :class:`LemmaViolation`.
    """
    A = as_group_tuple(A)
    q = len(A)
    _check_size(A)
    if not (2 <= s < q <= 2 * s):
        return Classification(Kind.NOT_APPLICABLE, s, reason=f"need 2 <= s < q <= 2s (q={q}, s={s})")
    zero = (0,) * _dim(A)
    if zero not in A:
        return Classification(Kind.NOT_APPLICABLE, s, reason="no element equals the unit")
    if not has_property(A, q, s):
        return Classification(Kind.NOT_APPLICABLE, s, reason=f"tuple lacks property P_{{{q},{s}}}")
    lattice = hermite_normal_form(A)
    rank = len(lattice)
    if rank < s - 1:
        return Classification(Kind.RANK_DEFICIT, s, reason=f"rank {rank} < s - 1 = {s - 1}")
    if rank > s - 1:
        raise LemmaViolation(f"rank {rank} exceeds s - 1 = {s - 1} for {A}")
    if q != 2 * s:
        raise LemmaViolation(f"rank s - 1 with q = {q} != 2s for {A}")

    best = None
    for kind, cuts, basis, gamma in _candidates(A, s, lattice):
        pattern = classification_pattern(kind, s, basis, cuts)
        reindex = _assign([_sub(a, gamma) for a in A], pattern)
        if reindex is None:
            continue
        key = (reindex, basis)
        if best is None or key < best[0]:
            best = (key, kind, cuts, basis, gamma)
    if best is None:
        raise LemmaViolation(f"no type (A)/(B) representation for {A} with s={s}")
    (reindex, basis), kind, cuts, _, gamma = best
    result = Classification(kind, s, len(cuts), tuple(cuts), tuple(basis), reindex, gamma)
    if not verify_classification(A, result):
        raise LemmaViolation(f"witness failed re-verification for {A}")
    return result


def verify_classification(A: Sequence[Sequence[int]], c: Classification) -> bool:
    """Re-substitute the witness: A[reindexing[p]] - shift must equal pattern[p]."""
    A = as_group_tuple(A)
    q, s = len(A), c.s
    if c.kind not in (Kind.TYPE_A, Kind.TYPE_B):
        return False
    if sorted(c.reindexing) != list(range(q)) or q != 2 * s or c.shift is None:
        return False
    if len(c.basis) != s - 1:
        return False
    if c.kind is Kind.TYPE_A and (s % 2 == 0 or c.k != 0 or c.breakpoints):
        return False
    if c.kind is Kind.TYPE_B:
        bp = list(c.breakpoints)
        if c.k != len(bp) or not 0 <= c.k <= s - 1:
            return False
        if bp != sorted(set(bp)) or (bp and not (1 <= bp[0] and bp[-1] <= s - 1)):
            return False
    if hermite_normal_form(c.basis) != hermite_normal_form(A):
        return False
    pattern = c.pattern()
    return all(_sub(A[i], c.shift) == p for i, p in zip(c.reindexing, pattern))

