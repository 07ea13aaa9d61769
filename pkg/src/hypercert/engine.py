"""Determinant identities behind the exceptional set V and the genericity check.

Conventions: matrix rows and hyperplanes are 0-based.  Column j of a
transformed family pairs with the block hyperplane that became the j-th
coordinate hyperplane; column 0 is the one whose unit is the constant 1.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from itertools import combinations, permutations
from math import comb, factorial
from typing import Iterator, Optional, Sequence

from .errors import InputError, VerificationError
from .geometry import HyperplaneFamily, general_position, normalize_block
from .laurent import LaurentPoly, MonomialUnit, det_laurent, det_poly_in_g
from .matrix import determinant, square_minors
from .scalar import ONE, ExactScalar, as_scalar, format_scalar, root_of_unity

ETA = 2  # specialization point eta_1 = ... = eta_n = 2


# -- determinants with shared coefficient rows ------------------------------

def shared_matrix(a: Sequence[Sequence], h: Sequence[MonomialUnit]) -> list[list[LaurentPoly]]:
    """Row i is (a_i0, ..., a_i,s-1, a_i0 h_i, ..., a_i,s-1 h_i)."""
    if len(a) != len(h) or len(a) % 2:
        raise InputError(f"need 2s rows and 2s units, got {len(a)} rows and {len(h)} units")
    s = len(a) // 2
    if any(len(row) != s for row in a):
        raise InputError(f"each coefficient row must have s = {s} entries")
    dims = {u.dim for u in h}
    if len(dims) != 1:
        raise InputError("all units must share one exponent dimension")
    dim = dims.pop()
    M = []
    for row, unit in zip(a, h):
        hp = unit.to_poly()
        consts = [LaurentPoly.constant(x, dim) for x in row]
        M.append(consts + [c * hp for c in consts])
    return M


def shared_determinant(a: Sequence[Sequence], h: Sequence[MonomialUnit]) -> LaurentPoly:
    return det_laurent(shared_matrix(a, h))


# -- shapes and the symbolic determinant -------------------------------------

@dataclass(frozen=True)
class FujimotoShape:
    t: int
    k: int
    breakpoints: tuple[int, ...]
    constants: tuple[ExactScalar, ...]

    def __post_init__(self):
        object.__setattr__(self, "breakpoints", tuple(self.breakpoints))
        object.__setattr__(self, "constants", tuple(as_scalar(c) for c in self.constants))
        t, k, bp = self.t, self.k, self.breakpoints
        if t < 1 or not 1 <= k <= t:
            raise InputError(f"need 1 <= k <= t, got t={t}, k={k}")
        if len(bp) != k:
            raise InputError(f"need k = {k} breakpoints, got {len(bp)}")
        if any(x >= y for x, y in zip(bp, bp[1:])) or bp[0] < 1 or bp[-1] > t:
            raise InputError(f"breakpoints must increase strictly within [1, {t}]: {bp}")
        if len(self.constants) != t + 1:
            raise InputError(f"need t + 1 = {t + 1} constants, got {len(self.constants)}")
        if not all(self.constants):
            raise InputError("constants must be nonzero")

    def block_exponents(self, i: int) -> tuple[int, ...]:
        """Exponent vector of eta-tilde_{i+1} (0-based row i < k)."""
        lo = self.breakpoints[i - 1] if i else 0
        hi = self.breakpoints[i]
        return tuple(1 if lo <= j < hi else 0 for j in range(self.t))

    def units(self) -> list[MonomialUnit]:
        """h_i = c_i / eta-tilde_i for i < k and h_i = c_i otherwise."""
        out = []
        for i, c in enumerate(self.constants):
            if i < self.k:
                out.append(MonomialUnit(c, tuple(-x for x in self.block_exponents(i))))
            else:
                out.append(MonomialUnit(c, (0,) * self.t))
        return out


def alpha_shape(t: int, powers: Sequence[int]) -> FujimotoShape:
    """k = 1, a_1 = t, constants xi^powers[i] with xi a primitive (t+1)-th root."""
    return FujimotoShape(t, 1, (t,), tuple(root_of_unity(t + 1, p) for p in powers))


def beta_shape(t: int) -> FujimotoShape:
    """k = t, a_i = i, constants (1, ..., 1, (-1)^t)."""
    return FujimotoShape(t, t, tuple(range(1, t + 1)), (ONE,) * t + (as_scalar((-1) ** t),))


def check_all_minors(a: Sequence[Sequence]) -> None:
    for rows, cols, v in square_minors(a):
        if not v:
            raise InputError(f"minor with rows {list(rows)} and columns {list(cols)} vanishes")


def fujimoto_matrix(shape: FujimotoShape, a: Sequence[Sequence]) -> list[list]:
    t = shape.t
    if len(a) != t + 1 or any(len(r) != t + 1 for r in a):
        raise InputError(f"coefficient matrix must be {t + 1}x{t + 1}")
    eta = [LaurentPoly.variable(j, t) for j in range(t)]
    M = []
    for i, (row, c) in enumerate(zip(a, shape.constants)):
        if i < shape.k:
            tilde = LaurentPoly.monomial(shape.block_exponents(i))
        else:
            tilde = LaurentPoly.constant(1, t)
        factors = [c - tilde] + [c - tilde * eta[j] for j in range(t)]
        M.append([f * x for f, x in zip(factors, row)])
    return M


def fujimoto_determinant(shape: FujimotoShape, a: Sequence[Sequence], check_minors: bool = True) -> LaurentPoly:
    a = [[as_scalar(x) for x in r] for r in a]
    if check_minors:
        check_all_minors(a)
    return det_laurent(fujimoto_matrix(shape, a))


@dataclass(frozen=True)
class Lemma41Result:
    vanishes: bool
    cases: tuple[str, ...]
    consistent: bool
    determinant: LaurentPoly = field(compare=False)


def _same_set(xs: Sequence[ExactScalar], ys: Sequence[ExactScalar]) -> bool:
    if len(xs) != len(ys):
        return False
    left = list(ys)
    for x in xs:
        for i, y in enumerate(left):
            if x == y:
                del left[i]
                break
        else:
            return False
    return True


def lemma41_cases(shape: FujimotoShape) -> tuple[str, ...]:
    t, k, c = shape.t, shape.k, shape.constants
    cases = []
    xi = root_of_unity(t + 1, 1)
    if k == 1 and c[0] == 1 and _same_set(c[1:], [xi ** m for m in range(1, t + 1)]):
        cases.append("alpha")
    if k == t and all(x == 1 for x in c[:t]) and c[t] == (-1) ** t:
        cases.append("beta")
    return tuple(cases)


def lemma41_forward_check(shape: FujimotoShape, a: Sequence[Sequence]) -> Lemma41Result:
    """Report whether the determinant vanishes and whether the constants fit (alpha)/(beta)."""
    det = fujimoto_determinant(shape, a)
    vanishes = det.is_zero()
    cases = lemma41_cases(shape)
    if vanishes:
        consistent = shape.breakpoints[-1] == shape.t and bool(cases)
    else:
        consistent = True
    return Lemma41Result(vanishes, cases, consistent, det)


def reduction_sign(t: int) -> int:
    return -1 if (t + 1) % 2 else 1


def reduce_block_determinant(shape: FujimotoShape, a: Sequence[Sequence],
                             block_units: Optional[Sequence[MonomialUnit]] = None,
                             clear_units: bool = True) -> LaurentPoly:
    """The 2(t+1) x 2(t+1) determinant with t+1 coordinate-hyperplane rows appended.

    Top rows carry ``a`` with the units of ``shape``; the appended rows are the
    identity with units (1, eta_1, ..., eta_t) unless ``block_units`` says
    otherwise.  With ``clear_units`` each top row is first multiplied by the
    inverse of its unit's monomial part (a unit of the Laurent ring), which
    makes the result exactly ``reduction_sign(t) * fujimoto_determinant``.
    """
    t = shape.t
    if len(a) != t + 1 or any(len(r) != t + 1 for r in a):
        raise InputError(f"coefficient matrix must be {t + 1}x{t + 1}")
    if block_units is None:
        block_units = [MonomialUnit(1, (0,) * t)] + [
            MonomialUnit(1, tuple(int(i == j) for i in range(t))) for j in range(t)
        ]
    if len(block_units) != t + 1 or any(u.dim != t for u in block_units):
        raise InputError("block units must be t + 1 units in t variables")
    identity = [[int(i == j) for j in range(t + 1)] for i in range(t + 1)]
    top_units = shape.units()
    M = shared_matrix(list(a) + identity, top_units + list(block_units))
    if clear_units:
        for i, u in enumerate(top_units):
            scale = LaurentPoly.monomial(tuple(-x for x in u.exponents))
            M[i] = [x * scale for x in M[i]]
    return det_laurent(M)


# -- the specialized polynomials P1 and P2 -----------------------------------

def build_P1(rows: Sequence[Sequence], powers: Sequence[int]):
    """Determinant of the k = 1 matrix at eta = 2.

    ``powers`` is a permutation of 0..n; row i receives the constant xi^powers[i]
    (xi = exp(2 pi i / (n+1))).  The row with power 0 is the special row whose
    factors are (1 - 2^n, 1 - 2^(n+1), ...).  Entries may be scalars or
    polynomials in indeterminate coefficients.
    """
    n = len(rows) - 1
    if sorted(powers) != list(range(n + 1)):
        raise InputError(f"powers must be a permutation of 0..{n}, got {list(powers)}")
    M = []
    for row, p in zip(rows, powers):
        if len(row) != n + 1:
            raise InputError(f"rows must have {n + 1} entries")
        if p == 0:
            f0, f1 = as_scalar(1 - ETA ** n), as_scalar(1 - ETA ** (n + 1))
        else:
            c = root_of_unity(n + 1, p)
            f0, f1 = c - 1, c - ETA
        M.append([row[0] * f0] + [x * f1 for x in row[1:]])
    return determinant(M)


def build_P2(rows: Sequence[Sequence], special: int):
    """Determinant of the k = t = n matrix at eta = 2; ``special`` gets (-1)^n."""
    n = len(rows) - 1
    if not 0 <= special <= n:
        raise InputError(f"special row {special} out of range")
    sign = (-1) ** n
    M = []
    for i, row in enumerate(rows):
        if len(row) != n + 1:
            raise InputError(f"rows must have {n + 1} entries")
        if i == special:
            f0, f1 = as_scalar(sign - 1), as_scalar(sign - ETA)
        else:
            f0, f1 = as_scalar(1 - ETA), as_scalar(1 - ETA * ETA)
        M.append([row[0] * f0] + [x * f1 for x in row[1:]])
    return determinant(M)


# -- enumeration of configurations -------------------------------------------

@dataclass(frozen=True)
class Configuration:
    """One determinant in the union defining V.

    ``columns[j]`` is the hyperplane turned into the j-th coordinate hyperplane;
    ``rows`` are the remaining hyperplanes in determinant order.  For P1,
    ``powers[i]`` is the xi-exponent of rows[i] (0 marks the special row); for
    P2 the special row is the last one.
    """

    polynomial: str
    columns: tuple[int, ...]
    rows: tuple[int, ...]
    powers: Optional[tuple[int, ...]] = None

    @property
    def special(self) -> int:
        if self.polynomial == "P1":
            return self.rows[self.powers.index(0)]
        return self.rows[-1]


def iter_configurations(n: int, mode: str = "paper", reference: bool = False) -> Iterator[Configuration]:
    """Deterministic enumeration: blocks, column-0 choice, special row, bijection.

    The reduced enumeration drops orderings that only permute determinant rows
    or the interchangeable columns 1..n, and at n = 1 drops P2 (it repeats P1
    with the other special row).  ``reference`` walks every permutation of the
    2n + 2 hyperplanes literally instead.
    """
    if mode not in ("paper", "symbolic"):
        raise InputError(f"unknown mode {mode!r}")
    q = 2 * n + 2
    if reference:
        for sigma in permutations(range(q)):
            rows, cols = sigma[:n + 1], sigma[n + 1:]
            yield Configuration("P1", cols, rows, tuple(range(n + 1)))
            yield Configuration("P2", cols, rows)
        return
    perms = list(permutations(range(1, n + 1)))
    for block in combinations(range(q), n + 1):
        complement = tuple(i for i in range(q) if i not in block)
        for col0 in block:
            cols = (col0,) + tuple(b for b in block if b != col0)
            for special in complement:
                others = tuple(i for i in complement if i != special)
                for perm in perms:
                    yield Configuration("P1", cols, (special,) + others, (0,) + perm)
                if n == 1:
                    continue
                if mode == "paper":
                    yield Configuration("P2", cols, others + (special,))
                else:
                    for order in permutations(others):
                        yield Configuration("P2", cols, order + (special,))


def configuration_count(n: int, mode: str = "paper", reference: bool = False) -> int:
    if reference:
        return 2 * factorial(2 * n + 2)
    per_special = factorial(n)
    if n >= 2:
        per_special += 1 if mode == "paper" else factorial(n)
    return comb(2 * n + 2, n + 1) * (n + 1) * (n + 1) * per_special


def configuration_value(F: HyperplaneFamily, config: Configuration, mode: str = "paper",
                        cache: Optional[dict] = None):
    """Evaluate one configuration: a scalar in paper mode, a Laurent polynomial in symbolic mode."""
    if cache is not None and config.columns in cache:
        G = cache[config.columns]
    else:
        G, _ = normalize_block(F, config.columns)
        if cache is not None:
            cache[config.columns] = G
    R = [G.rows[i] for i in config.rows]
    n = F.n
    if mode == "paper":
        if config.polynomial == "P1":
            return build_P1(R, config.powers)
        return build_P2(R, len(R) - 1)
    if config.polynomial == "P1":
        shape = alpha_shape(n, config.powers)
    else:
        shape = beta_shape(n)
    # general position already makes every minor of R nonzero
    return fujimoto_determinant(shape, R, check_minors=False)


# -- certificates ------------------------------------------------------------

class Verdict(str, enum.Enum):
    GENERIC = "Generic"
    NON_GENERIC = "NonGeneric"
    NOT_GENERAL_POSITION = "NotGeneralPosition"


@dataclass(frozen=True)
class GenericityCertificate:
    verdict: Verdict
    n: int
    mode: str
    configurations_checked: int
    witness: Optional[dict] = None
    enumeration: str = "reduced"

    def to_json(self) -> dict:
        return {
            "verdict": self.verdict.value,
            "n": self.n,
            "mode": self.mode,
            "enumeration": self.enumeration,
            "configurations_checked": self.configurations_checked,
            "witness": self.witness,
        }

    @classmethod
    def from_json(cls, obj: dict) -> GenericityCertificate:
        return cls(Verdict(obj["verdict"]), int(obj["n"]), obj["mode"],
                   int(obj["configurations_checked"]), obj.get("witness"),
                   obj.get("enumeration", "reduced"))


def _witness(config: Configuration, value, n: int) -> dict:
    w = {
        "polynomial": config.polynomial,
        "block": sorted(config.columns),
        "column0": config.columns[0],
        "columns": list(config.columns),
        "rows": list(config.rows),
        "special": config.special,
        "powers": list(config.powers) if config.powers is not None else None,
    }
    if config.polynomial == "P1":
        w["constants"] = [format_scalar(root_of_unity(n + 1, p)) for p in config.powers]
    else:
        w["constants"] = ["1"] * n + [str((-1) ** n)]
    w["value"] = format_scalar(value) if isinstance(value, ExactScalar) else str(value)
    return w


def witness_configuration(witness: dict) -> Configuration:
    powers = witness.get("powers")
    return Configuration(witness["polynomial"], tuple(witness["columns"]), tuple(witness["rows"]),
                         tuple(powers) if powers is not None else None)


def recompute_witness(F: HyperplaneFamily, witness: dict, mode: str = "paper"):
    return configuration_value(F, witness_configuration(witness), mode)


def genericity_check(F: HyperplaneFamily, mode: str = "paper", reference: bool = False) -> GenericityCertificate:
    """Decide whether the 2n+2 hyperplanes avoid every P1/P2 zero locus.

    Paper mode evaluates the eta = 2 determinants; symbolic mode asks whether
    the full Laurent determinant vanishes identically, which can only shrink
    the exceptional set.
    """
    n = F.n
    if F.q != 2 * n + 2:
        raise InputError(f"need 2n + 2 = {2 * n + 2} hyperplanes, got {F.q}")
    if mode not in ("paper", "symbolic"):
        raise InputError(f"unknown mode {mode!r}")
    enumeration = "reference" if reference else "reduced"
    gp = general_position(F)
    if not gp.ok:
        return GenericityCertificate(Verdict.NOT_GENERAL_POSITION, n, mode, 0,
                                     {"violating_subset": list(gp.violating_subset)}, enumeration)
    cache: dict = {}
    checked = 0
    for config in iter_configurations(n, mode, reference):
        value = configuration_value(F, config, mode, cache)
        checked += 1
        if not value:
            witness = _witness(config, value, n)
            if recompute_witness(F, witness, mode):
                raise VerificationError("witness does not recompute to zero")
            if mode == "symbolic" and configuration_value(F, config, "paper", cache):
                raise VerificationError("symbolic zero did not specialize to a zero at eta = 2")
            return GenericityCertificate(Verdict.NON_GENERIC, n, mode, checked, witness, enumeration)
    if checked != configuration_count(n, mode, reference):
        raise VerificationError("enumeration count mismatch")
    return GenericityCertificate(Verdict.GENERIC, n, mode, checked, None, enumeration)


# -- the pairing identity ----------------------------------------------------

def b_matrix(a: Sequence[Sequence], c: Sequence, g: Sequence) -> list[list]:
    """b^i_i = a_ii g_i - c_i sum_j a_ij g_j and b^i_j = a_ij g_i; row i of ``a`` is a^{i+1}."""
    size = len(a)
    B = []
    for i in range(size):
        total = a[i][0] * g[0]
        for j in range(1, size):
            total = total + a[i][j] * g[j]
        row = []
        for j in range(size):
            if j == i:
                row.append(a[i][i] * g[i] - c[i] * total)
            else:
                row.append(a[i][j] * g[i])
        B.append(row)
    return B


def unit_vector_value(a: Sequence[Sequence], c: Sequence, k: int):
    """(1 - c_k) a^{k+1}_k prod_{j != k} (-c_j a^{j+1}_k)."""
    out = (1 - c[k]) * a[k][k]
    for j in range(len(a)):
        if j != k:
            out = out * (-(c[j] * a[j][k]))
    return out


@dataclass(frozen=True)
class PairingResult:
    det_vanishes: bool
    forced_c: bool
    determinant: LaurentPoly = field(compare=False)
    unit_values: tuple[ExactScalar, ...] = field(compare=False, default=())


def pairing_identity_check(a: Sequence[Sequence], c: Sequence) -> PairingResult:
    a = [[as_scalar(x) for x in r] for r in a]
    c = [as_scalar(x) for x in c]
    size = len(a)
    if size < 2 or any(len(r) != size for r in a) or len(c) != size:
        raise InputError("need an (n+1)x(n+1) matrix and n+1 constants with n >= 1")
    if not all(c):
        raise InputError("constants must be nonzero")
    check_all_minors(a)
    g = [LaurentPoly.variable(j, size) for j in range(size)]
    det = det_poly_in_g(b_matrix(a, c, g))
    values = []
    for k in range(size):
        point = [int(j == k) for j in range(size)]
        got = det.evaluate(point)
        if got != unit_vector_value(a, c, k):
            raise VerificationError(f"unit-vector evaluation at e_{k} disagrees with the product formula")
        values.append(got)
    vanishes = det.is_zero()
    forced = (not vanishes) or (not any(values) and all(x == 1 for x in c))
    return PairingResult(vanishes, forced, det, tuple(values))

