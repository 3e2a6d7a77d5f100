"""Vector-valued tables G -> GF(q)^l and their bentness.

GF(q)^l carries the Hermitian dot product sum_i x_i * conj(y_i); its
"hypersphere" is the set of vectors of self-product one (which, unlike the
complex case, misses some nonzero vectors and is exactly why the
dot product is only a pairing).  The transform sends alpha to
sum_x chi_alpha(x) f(x) and works coordinatewise like the scalar one; the
derivative in direction alpha is the scalar table
x -> <f(alpha + x), f(x)>, and bentness asks every transformed vector to
have self-product |G| mod p.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .bent import BentReport
from .characters import ScalarFunction, character_value
from .errors import (
    DimensionMismatch,
    IndexOutOfRange,
    NotOnHypersphere,
    SpecMismatch,
)
from .field import FieldElement
from .group import GroupElement, GroupSpec

FieldVector = tuple[FieldElement, ...]


def hermitian_dot(x: Sequence[FieldElement], y: Sequence[FieldElement]) -> FieldElement:
    """sum_i x_i * conj(y_i); linear in x, conjugate-symmetric."""
    if len(x) != len(y) or not x:
        raise DimensionMismatch(f"dimensions {len(x)} and {len(y)} differ or are zero")
    acc = x[0] * y[0].conjugate()
    for a, b in zip(x[1:], y[1:]):
        acc = acc + a * b.conjugate()
    return acc


def norm_l(x: Sequence[FieldElement]) -> FieldElement:
    """Self dot product; always lies in the subfield GF(p^n)."""
    return hermitian_dot(x, x)


def on_hypersphere(x: Sequence[FieldElement]) -> bool:
    return norm_l(x).code == 1


@dataclass(frozen=True)
class VectorFunction:
    """A total table G -> GF(q)^l in canonical element order."""

    spec: GroupSpec
    dim: int
    values: tuple[FieldVector, ...]

    def __post_init__(self):
        if self.dim < 1:
            raise DimensionMismatch(f"dimension must be >= 1, got {self.dim}")
        if len(self.values) != self.spec.order:
            raise SpecMismatch(
                f"table has {len(self.values)} entries, group has {self.spec.order}"
            )
        for vec in self.values:
            if len(vec) != self.dim:
                raise DimensionMismatch(
                    f"vector of length {len(vec)} in a dimension-{self.dim} table"
                )
            for v in vec:
                if v.ctx != self.spec.ctx:
                    raise SpecMismatch("vector entry lies outside the spec's field")

    def at(self, x: Sequence[int]) -> FieldVector:
        return self.values[self.spec.index_of(x)]

    def hypersphere_witness(self) -> GroupElement | None:
        for i, vec in enumerate(self.values):
            if not on_hypersphere(vec):
                return self.spec.element_at(i)
        return None

    @classmethod
    def from_values(
        cls, spec: GroupSpec, dim: int, values: Sequence[Sequence[FieldElement]]
    ) -> "VectorFunction":
        return cls(spec, dim, tuple(tuple(vec) for vec in values))

    @classmethod
    def from_scalar(cls, f: ScalarFunction, dim: int, slot: int = 0) -> "VectorFunction":
        """Zero-pad a scalar table into coordinate ``slot`` of a dim-vector table."""
        if not 0 <= slot < dim:
            raise IndexOutOfRange(f"slot {slot} outside dimension {dim}", witness=slot)
        zero = f.spec.ctx.zero
        values = tuple(
            tuple(v if i == slot else zero for i in range(dim)) for v in f.values
        )
        return cls(f.spec, dim, values)


def coordinate_function(f: VectorFunction, e: int) -> ScalarFunction:
    """Projection onto the e-th canonical basis vector."""
    if not 0 <= e < f.dim:
        raise IndexOutOfRange(f"basis index {e} outside dimension {f.dim}", witness=e)
    return ScalarFunction(f.spec, tuple(vec[e] for vec in f.values))


def md_ft(f: VectorFunction) -> VectorFunction:
    """alpha -> sum_x chi_alpha(x) f(x), computed directly on vectors."""
    spec = f.spec
    ctx = spec.ctx
    out = []
    for alpha in spec.elements():
        acc = [ctx.zero] * f.dim
        for x in spec.elements():
            chi = character_value(spec, alpha, x)
            vec = f.at(x)
            for i in range(f.dim):
                acc[i] = acc[i] + chi * vec[i]
        out.append(tuple(acc))
    return VectorFunction(spec, f.dim, tuple(out))


def md_inverse_ft(F: VectorFunction) -> VectorFunction:
    """x -> (|G| mod p)^-1 sum_alpha conj(chi_alpha(x)) F(alpha)."""
    spec = F.spec
    ctx = spec.ctx
    scale = ctx.from_int(spec.inv_order_mod_p)
    out = []
    for x in spec.elements():
        acc = [ctx.zero] * F.dim
        for alpha in spec.elements():
            chi = character_value(spec, alpha, x).conjugate()
            vec = F.at(alpha)
            for i in range(F.dim):
                acc[i] = acc[i] + chi * vec[i]
        out.append(tuple(scale * v for v in acc))
    return VectorFunction(spec, F.dim, tuple(out))


def vector_convolve(f: VectorFunction, g: VectorFunction) -> ScalarFunction:
    """(f * g)(alpha) = sum_x <g(alpha + x), f(x)>; scalar-valued."""
    if f.spec != g.spec:
        raise SpecMismatch("functions live on different groups")
    if f.dim != g.dim:
        raise DimensionMismatch(f"dimensions {f.dim} and {g.dim} differ")
    spec = f.spec
    ctx = spec.ctx
    out = []
    for alpha in spec.elements():
        acc = ctx.zero
        for x in spec.elements():
            acc = acc + hermitian_dot(g.at(spec.add(alpha, x)), f.at(x))
        out.append(acc)
    return ScalarFunction(spec, tuple(out))


def md_derivative(f: VectorFunction, alpha: Sequence[int]) -> ScalarFunction:
    """x -> <f(alpha + x), f(x)>, the orthogonality defect along alpha."""
    spec = f.spec
    values = tuple(
        hermitian_dot(f.at(spec.add(alpha, x)), f.at(x)) for x in spec.elements()
    )
    return ScalarFunction(spec, values)


def _require_hypersphere(f: VectorFunction) -> None:
    witness = f.hypersphere_witness()
    if witness is not None:
        raise NotOnHypersphere(
            f"value at {list(witness)} has self-product != 1", witness=witness
        )


def is_md_bent(f: VectorFunction) -> BentReport:
    """Bentness by definition: norm_l(md_ft(f)(alpha)) == |G| mod p for all alpha."""
    _require_hypersphere(f)
    spec = f.spec
    target = spec.ctx.from_int(spec.order_mod_p)
    norms = tuple(norm_l(vec) for vec in md_ft(f).values)
    failing = tuple(spec.element_at(i) for i, v in enumerate(norms) if v != target)
    return BentReport(not failing, norms, failing)


def is_md_bent_derivative(f: VectorFunction) -> BentReport:
    """Bentness by the derivative criterion: sum_x <f(alpha+x), f(x)> = 0
    for every nonzero alpha.  Norm table reported via ft of the
    autocorrelation, independent of the spectral route."""
    from .fourier import ft

    _require_hypersphere(f)
    spec = f.spec
    ctx = spec.ctx
    ac = []
    for alpha in spec.elements():
        acc = ctx.zero
        for x in spec.elements():
            acc = acc + hermitian_dot(f.at(spec.add(alpha, x)), f.at(x))
        ac.append(acc)
    failing = tuple(
        spec.element_at(i) for i, v in enumerate(ac) if i and v != ctx.zero
    )
    norms = ft(ScalarFunction(spec, tuple(ac))).values
    return BentReport(not failing, norms, failing)
