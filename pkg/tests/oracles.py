"""Independent reference computations used to check the library.

Nothing here calls into hypercert's arithmetic beyond reading coordinates, so
agreement is evidence rather than tautology.
"""

import cmath
from collections import Counter
from fractions import Fraction
from itertools import combinations, permutations


def perm_sign(p):
    sign = 1
    p = list(p)
    for i in range(len(p)):
        while p[i] != i:
            j = p[i]
            p[i], p[j] = p[j], p[i]
            sign = -sign
    return sign


def leibniz_det(M):
    """Sum over all permutations; works for any ring supporting + - *."""
    n = len(M)
    total = None
    for p in permutations(range(n)):
        term = M[0][p[0]]
        for i in range(1, n):
            term = term * M[i][p[i]]
        if perm_sign(p) < 0:
            term = -term
        total = term if total is None else total + term
    return total


def row_expansion_det(M):
    """Recursive cofactor expansion along the first row."""
    n = len(M)
    if n == 1:
        return M[0][0]
    total = None
    for j in range(n):
        minor = [row[:j] + row[j + 1:] for row in M[1:]]
        term = M[0][j] * row_expansion_det(minor)
        if j % 2:
            term = -term
        total = term if total is None else total + term
    return total


def bareiss_rank(rows):
    """Rank over Q by fraction Gaussian elimination."""
    M = [[Fraction(x) for x in r] for r in rows]
    if not M:
        return 0
    rank, cols = 0, len(M[0])
    for c in range(cols):
        pivot = next((i for i in range(rank, len(M)) if M[i][c]), None)
        if pivot is None:
            continue
        M[rank], M[pivot] = M[pivot], M[rank]
        for i in range(len(M)):
            if i != rank and M[i][c]:
                f = M[i][c] / M[rank][c]
                M[i] = [x - f * y for x, y in zip(M[i], M[rank])]
        rank += 1
    return rank


def vec_sum(vs, dim):
    out = [0] * dim
    for v in vs:
        for i, x in enumerate(v):
            out[i] += x
    return tuple(out)


def property_by_definition(A, r, s):
    """Within any r of the elements, each s-fold sum equals some other s-fold sum."""
    dim = len(A[0])
    for idx in combinations(range(len(A)), r):
        subs = list(combinations(idx, s))
        sums = [vec_sum([A[i] for i in S], dim) for S in subs]
        for a, S in enumerate(subs):
            if not any(b != a and sums[b] == sums[a] for b in range(len(subs))):
                return False
    return True


def max_multiplicity(A):
    return max(Counter(map(tuple, A)).values())


def paper_pattern(kind, s, basis, breakpoints):
    """(A): 1,1,b1,b1,...; (B): (s+1-k) ones, the basis, inverted block products."""
    dim = len(basis[0])
    one = (0,) * dim
    if kind == "TypeA":
        out = [one, one]
        for b in basis:
            out += [tuple(b), tuple(b)]
        return out
    k = len(breakpoints)
    out = [one] * (s + 1 - k) + [tuple(b) for b in basis]
    edges = [0] + list(breakpoints)
    for lo, hi in zip(edges, edges[1:]):
        out.append(tuple(-x for x in vec_sum(basis[lo:hi], dim)))
    return out


def complex_value(x):
    """Numerical value of an ExactScalar: sum c_k exp(2 pi i k / L)."""
    L = x.order
    return sum(complex(float(c)) * cmath.exp(2j * cmath.pi * k / L) for k, c in enumerate(x.coords))


def p1_closed_form_n1(special, other):
    """n = 1 paper polynomial with the given special row: 3 (x0 y1 - 2 x1 y0)."""
    x0, x1 = special
    y0, y1 = other
    return 3 * (x0 * y1 - 2 * x1 * y0)


def adjugate_2x2(M):
    (a, b), (c, d) = M
    return [[d, -b], [-c, a]]
