"""Exact linear solving by fraction-free (Bareiss) elimination."""

from fractions import Fraction
from math import lcm

from .poly import MultiPoly, exact_divide
from .ratfunc import RationalFunction


class Inconsistent(ArithmeticError):
    """The system has no solution."""


class Underdetermined(ArithmeticError):
    """The system does not determine every unknown."""


def _is_poly_system(A, b):
    return any(isinstance(x, (MultiPoly, RationalFunction)) for row in A for x in row) or any(
        isinstance(x, (MultiPoly, RationalFunction)) for x in b
    )


def _exact(a, d):
    if isinstance(a, MultiPoly) or isinstance(d, MultiPoly):
        return exact_divide(MultiPoly.coerce(a), MultiPoly.coerce(d))
    q, r = divmod(a, d)
    if r:
        raise ArithmeticError("Bareiss division was not exact")
    return q


def _integral_rows(A, b):
    """Scale rows so every entry lies in the base ring (Z or Q[vars])."""
    rows = []
    poly = _is_poly_system(A, b)
    for row, rhs in zip(A, b):
        entries = list(row) + [rhs]
        if poly:
            dens = [x.den for x in entries if isinstance(x, RationalFunction) and x.den != 1]
            scale = MultiPoly.const(1)
            for d in dens:
                if not d.is_monomial():
                    scale = scale * d
                else:
                    scale = _monomial_lcm(scale, d)
            fr_lcm = 1
            for x in entries:
                if isinstance(x, Fraction):
                    fr_lcm = lcm(fr_lcm, x.denominator)
            conv = []
            for x in entries:
                v = RationalFunction.coerce(x) * scale * fr_lcm
                conv.append(v.as_poly())
            rows.append(conv)
        else:
            m = 1
            for x in entries:
                m = lcm(m, Fraction(x).denominator)
            rows.append([int(Fraction(x) * m) for x in entries])
    return rows, poly


def _monomial_lcm(a, b):
    from . import variables as V
    if a.is_monomial() and b.is_monomial():
        return MultiPoly({V.key_lcm(a.leading_key(), b.leading_key()): 1}, _trusted=True)
    return a * b


def solve_linear_exact(A, b):
    """Solve ``A x = b`` exactly.

    Entries may be ints/Fractions (solution in Fractions) or MultiPoly /
    RationalFunction values (solution as RationalFunction).  Overdetermined
    consistent systems are accepted.  The result is checked by substitution.
    """
    m = len(A)
    if m != len(b):
        raise ValueError("row count of A and length of b differ")
    n = len(A[0]) if m else 0
    rows, poly = _integral_rows(A, b)
    zero = MultiPoly() if poly else 0

    # forward elimination with row pivoting; columns without a pivot are skipped
    prev = MultiPoly.const(1) if poly else 1
    pivots = []
    r = 0
    for col in range(n):
        best = None
        for i in range(r, m):
            v = rows[i][col]
            if v:
                size = len(v) if poly else abs(v)
                if best is None or size < best[0]:
                    best = (size, i)
        if best is None:
            continue
        i = best[1]
        rows[r], rows[i] = rows[i], rows[r]
        pr = rows[r]
        pv = pr[col]
        for i in range(r + 1, m):
            row = rows[i]
            f = row[col]
            if not f:
                if pv != prev:
                    for j in range(col + 1, n + 1):
                        if row[j]:
                            row[j] = _exact(pv * row[j], prev)
                continue
            for j in range(col + 1, n + 1):
                row[j] = _exact(pv * row[j] - f * pr[j], prev)
            row[col] = zero
        prev = pv
        pivots.append(col)
        r += 1
    for i in range(r, m):
        if rows[i][n]:
            raise Inconsistent(f"row {i} reduces to 0 = {rows[i][n]}")
    if r < n:
        free = sorted(set(range(n)) - set(pivots))
        raise Underdetermined(f"unknowns {free} are not determined")

    # back substitution in the fraction field
    x = [None] * n
    for col in reversed(range(n)):
        row = rows[col]
        acc = row[n]
        if poly:
            acc = RationalFunction.coerce(acc)
            for j in range(col + 1, n):
                if row[j]:
                    acc = acc - x[j] * row[j]
            x[col] = acc / row[col]
        else:
            acc = Fraction(acc)
            for j in range(col + 1, n):
                if row[j]:
                    acc -= x[j] * row[j]
            x[col] = acc / row[col]

    for i in range(m):
        lhs = sum((A[i][j] * x[j] for j in range(n) if A[i][j]), zero if not poly else RationalFunction(0))
        if lhs != b[i]:
            raise Inconsistent(f"back-substitution check failed in row {i}")
    return x
