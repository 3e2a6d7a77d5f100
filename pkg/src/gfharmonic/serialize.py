"""JSON encodings for contexts, groups, and function tables.

Field elements serialize as coefficient arrays, lowest degree first.
Function tables are listed in the group's canonical element order.  The
writers are deterministic (fixed key order, compact separators), so any
artifact round-trips bit for bit through its reader.
"""

from __future__ import annotations

import json
from typing import Any, Sequence

from .characters import ScalarFunction
from .classical import ExponentFunction
from .errors import MalformedInput
from .field import FieldContext, FieldElement, make_context
from .group import GroupSpec, make_group
from .vectorial import VectorFunction

SCHEMA_VERSION = 1


def dumps(obj: Any) -> str:
    return json.dumps(obj, separators=(",", ":"))


def _expect_mapping(obj: Any, what: str) -> dict:
    if not isinstance(obj, dict):
        raise MalformedInput(f"{what} must be a JSON object, got {type(obj).__name__}")
    return obj


def _expect_int_list(obj: Any, what: str) -> list[int]:
    if not isinstance(obj, list) or not all(isinstance(v, int) for v in obj):
        raise MalformedInput(f"{what} must be an array of integers")
    return obj


# -- context ------------------------------------------------------------------


def context_to_obj(ctx: FieldContext) -> dict:
    return {"p": ctx.p, "n": ctx.n, "modulus": list(ctx.modulus)}


def context_from_obj(obj: Any) -> FieldContext:
    obj = _expect_mapping(obj, "context")
    if "p" not in obj or "n" not in obj:
        raise MalformedInput("context requires 'p' and 'n'")
    modulus = obj.get("modulus")
    if modulus is not None:
        modulus = _expect_int_list(modulus, "context.modulus")
    return make_context(int(obj["p"]), int(obj["n"]), modulus)


# -- group ---------------------------------------------------------------------


def group_to_obj(spec: GroupSpec) -> dict:
    return {"factors": [{"d": d, "m": m} for d, m in spec.factors]}


def group_from_obj(ctx: FieldContext, obj: Any) -> GroupSpec:
    obj = _expect_mapping(obj, "group")
    factors = obj.get("factors")
    if not isinstance(factors, list) or not factors:
        raise MalformedInput("group requires a nonempty 'factors' array")
    pairs = []
    for f in factors:
        f = _expect_mapping(f, "group factor")
        if "d" not in f or "m" not in f:
            raise MalformedInput("each group factor requires 'd' and 'm'")
        pairs.append((int(f["d"]), int(f["m"])))
    return make_group(ctx, pairs)


def group_file_to_obj(spec: GroupSpec) -> dict:
    return {"context": context_to_obj(spec.ctx), "group": group_to_obj(spec)}


def group_from_file_obj(obj: Any) -> GroupSpec:
    obj = _expect_mapping(obj, "group file")
    ctx = context_from_obj(obj.get("context"))
    return group_from_obj(ctx, obj.get("group"))


# -- elements -------------------------------------------------------------------


def element_to_obj(v: FieldElement) -> list[int]:
    return list(v.coeffs)


def element_from_obj(ctx: FieldContext, obj: Any) -> FieldElement:
    return ctx.element(_expect_int_list(obj, "field element"))


def group_element_to_obj(x: Sequence[int]) -> list[int]:
    return list(x)


# -- scalar functions -------------------------------------------------------------


def scalar_function_to_obj(f: ScalarFunction) -> dict:
    return {
        "context": context_to_obj(f.spec.ctx),
        "group": group_to_obj(f.spec),
        "values": [element_to_obj(v) for v in f.values],
    }


def scalar_function_from_obj(obj: Any) -> ScalarFunction:
    obj = _expect_mapping(obj, "function")
    spec = group_from_file_obj(obj)
    values = obj.get("values")
    if not isinstance(values, list):
        raise MalformedInput("function requires a 'values' array")
    ctx = spec.ctx
    return ScalarFunction(spec, tuple(element_from_obj(ctx, v) for v in values))


# -- exponent functions ------------------------------------------------------------


def exponent_function_to_obj(ef: ExponentFunction) -> dict:
    return {
        "context": context_to_obj(ef.spec.ctx),
        "group": group_to_obj(ef.spec),
        "m": ef.m,
        "exponents": list(ef.exponents),
    }


def exponent_function_from_obj(obj: Any) -> ExponentFunction:
    obj = _expect_mapping(obj, "exponent function")
    spec = group_from_file_obj(obj)
    if "m" not in obj:
        raise MalformedInput("exponent function requires 'm'")
    exponents = _expect_int_list(obj.get("exponents"), "exponents")
    return ExponentFunction(spec, int(obj["m"]), tuple(exponents))


# -- vector functions ----------------------------------------------------------------


def vector_function_to_obj(f: VectorFunction) -> dict:
    return {
        "context": context_to_obj(f.spec.ctx),
        "group": group_to_obj(f.spec),
        "l": f.dim,
        "values": [[element_to_obj(v) for v in vec] for vec in f.values],
    }


def vector_function_from_obj(obj: Any) -> VectorFunction:
    obj = _expect_mapping(obj, "vector function")
    spec = group_from_file_obj(obj)
    if "l" not in obj:
        raise MalformedInput("vector function requires 'l'")
    dim = int(obj["l"])
    values = obj.get("values")
    if not isinstance(values, list):
        raise MalformedInput("vector function requires a 'values' array")
    ctx = spec.ctx
    vecs = []
    for vec in values:
        if not isinstance(vec, list):
            raise MalformedInput("each vector value must be an array of elements")
        vecs.append(tuple(element_from_obj(ctx, v) for v in vec))
    return VectorFunction(spec, dim, tuple(vecs))


# -- files -------------------------------------------------------------------------


def read_json(path: str) -> Any:
    with open(path, "r", encoding="utf-8") as fh:
        try:
            return json.load(fh)
        except json.JSONDecodeError as exc:
            raise MalformedInput(f"{path}: {exc}") from exc


def write_json(path: str, obj: Any) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps(obj))
        fh.write("\n")
