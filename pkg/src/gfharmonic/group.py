"""Finite Abelian groups of the admissible shape.

A group here is a product of cyclic factors Z_d, each repeated m times,
where every d divides the circle order p^n + 1 of the bound field context.
That divisibility is what lets the group embed into the field's unit
circle, and it forces |G| to be coprime to p.  Elements are flat tuples of
residues; the canonical enumeration order is mixed-radix with the first
factor most significant and the last coordinate varying fastest, and it is
the table order used by every function serialization.
"""

from __future__ import annotations

import itertools
from typing import Iterator, Sequence

from .errors import InadmissibleFactor, ShapeMismatch
from .field import FieldContext

GroupElement = tuple[int, ...]


class GroupSpec:
    """A validated product of cyclic factors bound to a field context."""

    def __init__(self, ctx: FieldContext, factors: Sequence[tuple[int, int]]):
        factors = tuple((int(d), int(m)) for d, m in factors)
        if not factors:
            raise ValueError("at least one factor is required")
        s = ctx.circle_order
        for d, m in factors:
            if m < 1:
                raise ValueError(f"factor multiplicity must be >= 1, got {m}")
            if d < 1 or s % d:
                raise InadmissibleFactor(
                    f"cyclic order {d} does not divide the circle order {s}", witness=d
                )
        self.ctx = ctx
        self.factors = factors
        self.dims: GroupElement = tuple(
            itertools.chain.from_iterable([d] * m for d, m in factors)
        )
        self.order = 1
        for d in self.dims:
            self.order *= d
        # |G| is coprime to p because every d divides p^n + 1.
        self.order_mod_p = self.order % ctx.p
        self.inv_order_mod_p = pow(self.order_mod_p, -1, ctx.p)

        strides = []
        acc = 1
        for d in reversed(self.dims):
            strides.append(acc)
            acc *= d
        self._strides = tuple(reversed(strides))
        # Exponent step of the circle generator per coordinate: a coordinate
        # with modulus d contributes multiples of s/d to character exponents.
        self.coord_steps = tuple(s // d for d in self.dims)
        self._char_exp_matrix: tuple[tuple[int, ...], ...] | None = None

    def validate_element(self, x: Sequence[int]) -> GroupElement:
        if len(x) != len(self.dims):
            raise ShapeMismatch(
                f"expected {len(self.dims)} coordinates, got {len(x)}", witness=list(x)
            )
        return tuple(int(c) % d for c, d in zip(x, self.dims))

    def zero(self) -> GroupElement:
        return (0,) * len(self.dims)

    def add(self, a: Sequence[int], b: Sequence[int]) -> GroupElement:
        a = self.validate_element(a)
        b = self.validate_element(b)
        return tuple((x + y) % d for x, y, d in zip(a, b, self.dims))

    def neg(self, a: Sequence[int]) -> GroupElement:
        a = self.validate_element(a)
        return tuple((-x) % d for x, d in zip(a, self.dims))

    def elements(self) -> Iterator[GroupElement]:
        """All elements in canonical mixed-radix order."""
        return itertools.product(*(range(d) for d in self.dims))

    def index_of(self, x: Sequence[int]) -> int:
        x = self.validate_element(x)
        return sum(c * s for c, s in zip(x, self._strides))

    def element_at(self, index: int) -> GroupElement:
        out = []
        for s, d in zip(self._strides, self.dims):
            c, index = divmod(index, s)
            out.append(c % d)
        return tuple(out)

    def factor_dot(self, alpha: Sequence[int], x: Sequence[int]) -> list[int]:
        """Per-factor dot products: for factor i, sum(alpha_j * x_j) mod d_i
        over that factor's coordinates.  Symmetric and bilinear."""
        alpha = self.validate_element(alpha)
        x = self.validate_element(x)
        out = []
        off = 0
        for d, m in self.factors:
            out.append(sum(alpha[off + j] * x[off + j] for j in range(m)) % d)
            off += m
        return out

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GroupSpec):
            return NotImplemented
        return self.ctx == other.ctx and self.factors == other.factors

    def __hash__(self) -> int:
        return hash((self.ctx, self.factors))

    def __repr__(self) -> str:
        desc = " x ".join(f"Z_{d}^{m}" if m > 1 else f"Z_{d}" for d, m in self.factors)
        return f"GroupSpec({desc} over GF({self.ctx.q}))"


def make_group(ctx: FieldContext, factors: Sequence[tuple[int, int]]) -> GroupSpec:
    """Validate and build a group spec; each cyclic order must divide p^n + 1."""
    return GroupSpec(ctx, factors)
