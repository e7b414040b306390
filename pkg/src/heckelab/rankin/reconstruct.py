"""Preimages under Omega_x ⊗ Omega_y by undetermined coefficients.

Every generator image is x0-homogeneous (T has degree 1, T1 and [p] degree 2),
so the X^d coefficient only involves monomials T^a T1^b [p]^c with
``a + 2b + 2c = d`` on each side.  The leading (x1, x2)-monomials of these
images are pairwise distinct with p-monomial coefficients, so restricting the
system to those rows gives a square triangular system.  We solve the x-side
first (right-hand sides are polynomials in y) and then each y-side; the full
system is then certified by applying Omega ⊗ Omega to the answer.
"""

from functools import lru_cache
from math import prod

from ..algebra import MultiPoly, RationalFunction, solve_linear_exact, var
from ..algebra import variables as V
from ..hecke import GENERATORS, generator_images, UnsupportedGenus
from .tensor import TensorHeckeElement, apply_tensor_omega


class NotInImage(ArithmeticError):
    """The target is not Omega ⊗ Omega of any tensor Hecke element."""


def candidates(genus, d):
    """Exponent tuples of T^a T1^b [p]^c (genus 2) or T^a [p]^c (genus 1) of x0-degree d."""
    if genus == 1:
        return [(d - 2 * c, c) for c in range(d // 2 + 1)]
    if genus == 2:
        return [(d - 2 * b - 2 * c, b, c) for b in range(d // 2 + 1) for c in range(d // 2 + 1 - b)]
    raise UnsupportedGenus(f"no reconstruction at genus {genus}")


@lru_cache(maxsize=None)
def _side_table(genus, d, side, normalization):
    """For each candidate: ({(x1..xn)-key: Laurent coefficient in p}, leading key)."""
    images = generator_images(genus, normalization, side)
    names = GENERATORS[genus]
    inner = [f"{side}{i}" for i in range(1, genus + 1)]
    x0 = f"{side}0"
    out = []
    for lam in candidates(genus, d):
        img = prod((images[n] ** e for n, e in zip(names, lam) if e), start=RationalFunction(1))
        table = {}
        for k, rest in img.num.split(inner).items():
            if rest.degree(x0) != d or rest.min_degree(x0) != d:
                raise ArithmeticError("generator image is not x0-homogeneous")
            table[k] = RationalFunction(rest.coefficient(x0, d), img.den)
        out.append((lam, table, max(table)))
    leads = [t[2] for t in out]
    if len(set(leads)) != len(leads):
        raise ArithmeticError("candidate images share a leading monomial")
    return tuple(sorted(out, key=lambda t: t[2]))


def _split_side(value, genus, side, d):
    """Split a RationalFunction by its (side)-variables; x0-degree must equal d."""
    inner = [f"{side}{i}" for i in range(genus + 1)]
    x0 = V.SHIFT[f"{side}0"]
    groups = {}
    for k, rest in value.num.split(inner).items():
        if (k >> x0) & V.MASK != d:
            raise NotInImage(f"{side}0-degree of a term differs from {d}")
        groups[k - (d << x0)] = RationalFunction(rest, value.den)
    return groups


def _solve_side(genus, d, side, target, normalization):
    """Solve sum_lam K_lam * Omega_side(gen^lam)/side0^d = target on the leading rows."""
    table = _side_table(genus, d, side, normalization)
    A = [[t.get(lead, 0) for _, t, _ in table] for _, _, lead in table]
    A = [[RationalFunction.coerce(a) if not isinstance(a, int) else a for a in row] for row in A]
    b = [target.get(lead, RationalFunction(0)) for _, _, lead in table]
    if not any(b):
        return {}
    sol = solve_linear_exact(A, b)
    return {lam: x for (lam, _, _), x in zip(table, sol) if x}


def reconstruct_preimage(c, d, genus, normalization="polynomial", verify=True):
    """The unique TensorHeckeElement whose image under Omega ⊗ Omega is ``c``.

    ``c`` must be x0- and y0-homogeneous of degree ``d``.  Raises NotInImage
    when the round trip leaves a residual or when a coefficient falls
    outside Z[p, 1/p].
    """
    c = RationalFunction.coerce(c)
    if not c:
        return TensorHeckeElement(genus, 0)
    if c.den.variables() not in ([], ["p"]) or not c.den.is_monomial():
        raise NotInImage("denominator is not a power of p")
    stage1 = _solve_side(genus, d, "x", _split_side(c, genus, "x", d), normalization)
    total = RationalFunction(0)
    for lam, F in stage1.items():
        F = RationalFunction.coerce(F)
        if not F.den.is_monomial():
            raise NotInImage(f"x-side coefficient of {lam} is not a Laurent polynomial in p")
        stage2 = _solve_side(genus, d, "y", _split_side(F, genus, "y", d), normalization)
        for mu, K in stage2.items():
            K = RationalFunction.coerce(K)
            if K.den.variables() not in ([], ["p"]) or not K.den.is_monomial():
                raise NotInImage(f"coefficient of {lam} ⊗ {mu} is not in Q[p, 1/p]")
            total = total + TensorHeckeElement.monomial(genus, lam, mu, K).value
    result = TensorHeckeElement(genus, total)
    if verify:
        back = apply_tensor_omega(result, normalization)
        if back != c:
            raise NotInImage(f"round trip leaves a residual at X-degree {d}")
        if not result.is_integral():
            raise NotInImage(f"coefficients at X-degree {d} are not in Z[p, 1/p]")
    return result


def reconstruct_series(coeffs, genus, normalization="polynomial", verify=True):
    """Reconstruct every X^d coefficient and assemble a polynomial in X."""
    X = var("X")
    total = RationalFunction(0)
    for d, c in enumerate(coeffs):
        if c:
            e = reconstruct_preimage(c, d, genus, normalization, verify)
            total = total + e.value * X ** d
    return TensorHeckeElement(genus, total)
