"""Exact arithmetic in GF(p^(2n)) with conjugation, norm, and the unit circle.

The degree-two extension GF(p^(2n)) over GF(p^n) behaves like the complex
numbers over the reals: raising to the p^n-th power is an involutive field
automorphism that plays the role of conjugation, x * conj(x) is a "norm"
landing in the subfield, and the elements of norm one form a cyclic unit
circle of order p^n + 1.

Elements are coefficient vectors over GF(p) in the power basis of a fixed
monic irreducible modulus polynomial.  Fields here are deliberately
desk-scale (q up to a few thousand), so construction builds full discrete
log / antilog tables once and every product afterwards is O(1).  A context
is immutable after construction and safe to share across workers.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Optional, Sequence

from .errors import (
    DegreeMismatch,
    DivisionByZero,
    InvalidDivisor,
    NonPrime,
    ReducibleModulus,
)


def _is_prime(m: int) -> bool:
    if m < 2:
        return False
    if m < 4:
        return True
    if m % 2 == 0:
        return False
    f = 3
    while f * f <= m:
        if m % f == 0:
            return False
        f += 2
    return True


def _prime_factors(m: int) -> list[int]:
    """Distinct prime factors of m, by trial division (desk-scale inputs)."""
    out = []
    f = 2
    while f * f <= m:
        if m % f == 0:
            out.append(f)
            while m % f == 0:
                m //= f
        f += 1 if f == 2 else 2
    if m > 1:
        out.append(m)
    return out


def _digits(code: int, p: int, width: int) -> tuple[int, ...]:
    out = []
    for _ in range(width):
        code, r = divmod(code, p)
        out.append(r)
    return tuple(out)


def _poly_rem(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    """Remainder of a modulo b over GF(p); b must have a nonzero lead."""
    a = [c % p for c in a]
    db = len(b) - 1
    inv_lead = pow(b[-1], -1, p)
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i]
        if c:
            k = c * inv_lead % p
            for j in range(db + 1):
                a[i - db + j] = (a[i - db + j] - k * b[j]) % p
    del a[db:]
    while len(a) < db:
        a.append(0)
    return a


def _poly_mul_mod(a: Sequence[int], b: Sequence[int], modulus: Sequence[int], p: int) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return _poly_rem(out, modulus, p)


def _poly_pow_mod(base: Sequence[int], e: int, modulus: Sequence[int], p: int) -> list[int]:
    result = [1] + [0] * (len(modulus) - 2)
    acc = list(base)
    while e:
        if e & 1:
            result = _poly_mul_mod(result, acc, modulus, p)
        acc = _poly_mul_mod(acc, acc, modulus, p)
        e >>= 1
    return result


def _is_irreducible(modulus: Sequence[int], p: int, half_degree: int) -> bool:
    # A reducible polynomial of degree 2n has a monic factor of degree <= n,
    # so trial division against every monic polynomial of degree 1..n decides.
    for deg in range(1, half_degree + 1):
        for low in range(p**deg):
            divisor = _digits(low, p, deg) + (1,)
            if not any(_poly_rem(modulus, divisor, p)):
                return False
    return True


class FieldElement:
    """An element of GF(p^(2n)), identified by the base-p encoding of its
    coefficient vector.  Immutable; arithmetic goes through the context's
    log/antilog tables."""

    __slots__ = ("ctx", "code")

    def __init__(self, ctx: "FieldContext", code: int):
        self.ctx = ctx
        self.code = code

    @property
    def coeffs(self) -> tuple[int, ...]:
        """Coefficient vector over GF(p), lowest degree first."""
        return self.ctx._coeffs[self.code]

    def is_zero(self) -> bool:
        return self.code == 0

    def _check_field(self, other: "FieldElement") -> None:
        if not isinstance(other, FieldElement) or self.ctx != other.ctx:
            raise ValueError("operands belong to different fields")

    def __add__(self, other: "FieldElement") -> "FieldElement":
        self._check_field(other)
        return FieldElement(self.ctx, self.ctx._add_codes(self.code, other.code))

    def __sub__(self, other: "FieldElement") -> "FieldElement":
        return self + (-other)

    def __neg__(self) -> "FieldElement":
        ctx = self.ctx
        coeffs = ctx._coeffs[self.code]
        return ctx.element([-c for c in coeffs])

    def __mul__(self, other: "FieldElement") -> "FieldElement":
        self._check_field(other)
        return FieldElement(self.ctx, self.ctx._mul_codes(self.code, other.code))

    def __truediv__(self, other: "FieldElement") -> "FieldElement":
        return self * other.inverse()

    def __pow__(self, e: int) -> "FieldElement":
        ctx = self.ctx
        if self.code == 0:
            if e > 0:
                return self
            if e == 0:
                return ctx.one
            raise DivisionByZero("0 has no inverse", witness=self.coeffs)
        k = ctx._log[self.code] * e % (ctx.q - 1)
        return FieldElement(ctx, ctx._exp[k])

    def inverse(self) -> "FieldElement":
        if self.code == 0:
            raise DivisionByZero("0 has no inverse", witness=self.coeffs)
        ctx = self.ctx
        return FieldElement(ctx, ctx._exp[-ctx._log[self.code] % (ctx.q - 1)])

    def conjugate(self) -> "FieldElement":
        """The involutive automorphism x -> x^(p^n) fixing GF(p^n)."""
        if self.code == 0:
            return self
        ctx = self.ctx
        return FieldElement(ctx, ctx._exp[ctx._log[self.code] * ctx.sqrt_q % (ctx.q - 1)])

    def norm(self) -> "FieldElement":
        """x * conj(x); lies in the subfield GF(p^n) and vanishes only at 0."""
        if self.code == 0:
            return self
        ctx = self.ctx
        return FieldElement(ctx, ctx._exp[ctx._log[self.code] * (ctx.sqrt_q + 1) % (ctx.q - 1)])

    def in_circle(self) -> bool:
        return self.norm().code == 1

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FieldElement):
            return NotImplemented
        return self.ctx == other.ctx and self.code == other.code

    def __hash__(self) -> int:
        return hash((self.ctx.p, self.ctx.n, self.ctx.modulus, self.code))

    def __str__(self) -> str:
        terms = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                head = "" if c == 1 else f"{c}*"
                terms.append(f"{head}x" if i == 1 else f"{head}x^{i}")
        return " + ".join(reversed(terms)) if terms else "0"

    def __repr__(self) -> str:
        return f"FieldElement({list(self.coeffs)}, q={self.ctx.q})"


class FieldContext:
    """The tower GF(p) < GF(p^n) < GF(q), q = p^(2n), with a validated
    modulus, a primitive element g, and the circle generator u.

    Construction verifies, exhaustively, that the modulus is irreducible,
    that g generates the full multiplicative group, and that u = g^((q-1)/s)
    has order exactly s = p^n + 1.
    """

    def __init__(self, p: int, n: int, modulus: Optional[Sequence[int]] = None):
        if not isinstance(p, int) or not _is_prime(p):
            raise NonPrime(f"p = {p} is not prime", witness=p)
        if not isinstance(n, int) or n < 1:
            raise ValueError(f"n must be a positive integer, got {n}")
        self.p = p
        self.n = n
        self.width = 2 * n
        self.q = p**self.width
        self.sqrt_q = p**n
        self.circle_order = self.sqrt_q + 1

        if modulus is None:
            self.modulus = self._select_modulus()
        else:
            mod = tuple(int(c) % p for c in modulus)
            if len(mod) != self.width + 1 or mod[-1] != 1:
                raise DegreeMismatch(
                    f"modulus must be monic of degree {self.width} over GF({p})",
                    witness=list(modulus),
                )
            if not _is_irreducible(mod, p, n):
                raise ReducibleModulus(
                    f"modulus {list(mod)} is reducible over GF({p})", witness=list(mod)
                )
            self.modulus = mod

        q = self.q
        self._pw = tuple(p**i for i in range(self.width))
        self._coeffs = [_digits(code, p, self.width) for code in range(q)]

        g_code = self._find_primitive()
        self._build_log_tables(g_code)
        self.g = FieldElement(self, g_code)

        # u = g^((q-1)/s) has order exactly s because g has order q-1.
        self._step = (q - 1) // self.circle_order
        u_code = self._exp[self._step]
        self.u = FieldElement(self, u_code)
        s = self.circle_order
        assert all(
            self._exp[self._step * (s // r) % (q - 1)] != 1 for r in _prime_factors(s)
        ), "circle generator order check failed"

        self._circle_pow = tuple(self._exp[k * self._step % (q - 1)] for k in range(s))
        self._circle_log = {code: k for k, code in enumerate(self._circle_pow)}

    # -- construction helpers -------------------------------------------------

    def _select_modulus(self) -> tuple[int, ...]:
        # Smallest monic irreducible of degree 2n, ordered by the base-p
        # value of the non-leading coefficients.
        for low in range(self.q):
            cand = _digits(low, self.p, self.width) + (1,)
            if _is_irreducible(cand, self.p, self.n):
                return cand
        raise ReducibleModulus(f"no irreducible polynomial found for p={self.p}, n={self.n}")

    def _find_primitive(self) -> int:
        q, p = self.q, self.p
        one = [1] + [0] * (self.width - 1)
        checks = [(q - 1) // r for r in _prime_factors(q - 1)]
        for code in range(2, q):
            cand = self._coeffs[code]
            if all(_poly_pow_mod(cand, e, self.modulus, p) != one for e in checks):
                return code
        raise ReducibleModulus("no primitive element found; modulus is not irreducible")

    def _build_log_tables(self, g_code: int) -> None:
        q, p = self.q, self.p
        exp = [1] * (q - 1)
        g = self._coeffs[g_code]
        cur = [1] + [0] * (self.width - 1)
        for i in range(1, q - 1):
            cur = _poly_mul_mod(cur, g, self.modulus, p)
            exp[i] = self._encode(cur)
        log = [-1] * q
        for i, code in enumerate(exp):
            log[code] = i
        assert log.count(-1) == 1, "primitive element does not generate GF(q)*"
        self._exp = tuple(exp)
        self._log = tuple(log)

    def _encode(self, coeffs: Sequence[int]) -> int:
        return sum(c * w for c, w in zip(coeffs, self._pw))

    # -- code-level arithmetic (internal fast paths) ---------------------------

    def _add_codes(self, a: int, b: int) -> int:
        ca, cb = self._coeffs[a], self._coeffs[b]
        p = self.p
        return sum(((x + y) % p) * w for x, y, w in zip(ca, cb, self._pw))

    def _mul_codes(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self._exp[(self._log[a] + self._log[b]) % (self.q - 1)]

    # -- public surface --------------------------------------------------------

    @property
    def zero(self) -> FieldElement:
        return FieldElement(self, 0)

    @property
    def one(self) -> FieldElement:
        return FieldElement(self, 1)

    def element(self, coeffs: Iterable[int]) -> FieldElement:
        """Build an element from its coefficient vector (reduced mod p)."""
        cs = [int(c) % self.p for c in coeffs]
        if len(cs) != self.width:
            raise DegreeMismatch(
                f"expected {self.width} coefficients, got {len(cs)}", witness=cs
            )
        return FieldElement(self, self._encode(cs))

    def from_int(self, k: int) -> FieldElement:
        """The scalar (k mod p) * 1, i.e. the image of k in GF(p) < GF(q)."""
        return FieldElement(self, k % self.p)

    def elements(self) -> Iterator[FieldElement]:
        return (FieldElement(self, code) for code in range(self.q))

    def circle(self) -> tuple[FieldElement, ...]:
        """All p^n + 1 elements of norm one, as successive powers of u."""
        return tuple(FieldElement(self, code) for code in self._circle_pow)

    def circle_subgroup_generator(self, d: int) -> FieldElement:
        """Generator u^(s/d) of the order-d subgroup of the circle."""
        s = self.circle_order
        if d < 1 or s % d:
            raise InvalidDivisor(f"{d} does not divide {s}", witness=d)
        return FieldElement(self, self._circle_pow[(s // d) % s])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FieldContext):
            return NotImplemented
        return (self.p, self.n, self.modulus) == (other.p, other.n, other.modulus)

    def __hash__(self) -> int:
        return hash((self.p, self.n, self.modulus))

    def __repr__(self) -> str:
        return f"FieldContext(p={self.p}, n={self.n}, modulus={list(self.modulus)})"


def make_context(p: int, n: int, modulus: Optional[Sequence[int]] = None) -> FieldContext:
    """Construct and validate a GF(p^(2n)) context.

    When ``modulus`` is omitted the smallest monic irreducible of degree 2n
    is selected (ordered by the base-p value of its coefficient vector), and
    the primitive element g is the smallest element of full order under the
    same ordering, so contexts are reproducible across runs.
    """
    return FieldContext(p, n, modulus)
