"""The GF(q)-valued Fourier transform on admissible groups.

ft(f)(alpha) = sum_x f(x) chi_alpha(x).  Transforms are direct O(|G|^2)
summations; the circle-exponent fast path for character values keeps the
constant small and correctness transparent.  Applying ft twice yields
(|G| mod p) * f(-alpha), so the transform is invertible with the scalar
inverse of |G| mod p.
"""

from __future__ import annotations

from .characters import ScalarFunction, char_exponent, exponent_matrix
from .errors import SpecMismatch
from .field import FieldElement
from .group import GroupSpec


def _transform(f: ScalarFunction, sign: int, scale_mod_p: int) -> ScalarFunction:
    spec = f.spec
    ctx = spec.ctx
    n_coords = ctx.width
    p = ctx.p
    q1 = ctx.q - 1
    exp, log, coeffs = ctx._exp, ctx._log, ctx._coeffs
    step = ctx._step
    s = ctx.circle_order
    codes = [v.code for v in f.values]
    mat = exponent_matrix(spec)
    elems = list(spec.elements()) if mat is None else None

    out = []
    for a_idx in range(spec.order):
        acc = [0] * n_coords
        row = mat[a_idx] if mat is not None else None
        for x_idx, c in enumerate(codes):
            if not c:
                continue
            if row is not None:
                k = row[x_idx]
            else:
                k = char_exponent(spec, elems[a_idx], elems[x_idx])
            prod = exp[(log[c] + (sign * k % s) * step) % q1]
            pc = coeffs[prod]
            for t in range(n_coords):
                acc[t] += pc[t]
        code = sum((acc[t] % p) * ctx._pw[t] for t in range(n_coords))
        if scale_mod_p != 1:
            code = ctx._mul_codes(code, scale_mod_p % p)
        out.append(FieldElement(ctx, code))
    return ScalarFunction(spec, tuple(out))


def ft(f: ScalarFunction) -> ScalarFunction:
    """Fourier transform: alpha -> sum_x f(x) chi_alpha(x)."""
    return _transform(f, 1, 1)


def inverse_ft(F: ScalarFunction) -> ScalarFunction:
    """Inverse transform: x -> (|G| mod p)^-1 sum_alpha F(alpha) conj(chi_alpha(x))."""
    return _transform(F, -1, F.spec.inv_order_mod_p)


def convolve(f: ScalarFunction, g: ScalarFunction) -> ScalarFunction:
    """(f * g)(alpha) = sum_x f(x) g(-x + alpha)."""
    if f.spec != g.spec:
        raise SpecMismatch("functions live on different groups")
    spec = f.spec
    ctx = spec.ctx
    elems = list(spec.elements())
    out = []
    for alpha in elems:
        acc = ctx.zero
        for x in elems:
            acc = acc + f.at(x) * g.at(spec.add(spec.neg(x), alpha))
        out.append(acc)
    return ScalarFunction(spec, tuple(out))


def plancherel_check(f: ScalarFunction, g: ScalarFunction) -> bool:
    """sum_x f(x) conj(g(x)) == (|G| mod p)^-1 sum_a ft(f)(a) conj(ft(g)(a)),
    with both sides computed independently."""
    if f.spec != g.spec:
        raise SpecMismatch("functions live on different groups")
    ctx = f.spec.ctx
    lhs = ctx.zero
    for a, b in zip(f.values, g.values):
        lhs = lhs + a * b.conjugate()
    rhs = ctx.zero
    for a, b in zip(ft(f).values, ft(g).values):
        rhs = rhs + a * b.conjugate()
    return lhs == rhs * ctx.from_int(f.spec.inv_order_mod_p)


def parseval_check(f: ScalarFunction) -> bool:
    """Energy identity: sum_x norm(f(x)) == (|G| mod p)^-1 sum_a norm(ft(f)(a)).

    For circle-valued f the spectral side additionally equals
    (|G| mod p)^2; that case is checked too.
    """
    spec = f.spec
    ctx = spec.ctx
    lhs = ctx.zero
    for v in f.values:
        lhs = lhs + v.norm()
    spectral = ctx.zero
    for v in ft(f).values:
        spectral = spectral + v.norm()
    if lhs != spectral * ctx.from_int(spec.inv_order_mod_p):
        return False
    if f.circle_witness() is None:
        c = ctx.from_int(spec.order_mod_p)
        if spectral != c * c:
            return False
    return True
