"""Fixed JSON views of the domain objects, and strict parsers back.

Fields that scale like the square of the branch-curve degree (everything in
a discriminant profile except the multiple and 3m+1) are serialized as
decimal strings; consumers limited to double-width floats would otherwise
silently round them.  All other fields are plain JSON integers.  Parsers are
strict and raise :class:`SchemaMismatch` on any shape or type drift.
"""

from __future__ import annotations

from typing import Any, Mapping

from .covers import CoverType, DerivedParams, SurfaceInvariants
from .discriminant import ArgumentStep, DiscriminantProfile, ZariskiCertificate
from .errors import SchemaMismatch
from .search import CataneseTuple
from .topology import HomeoClassKey, TupleVerdict

_PROFILE_BIG_FIELDS = ("deg_f", "deg_b", "half_deg", "genus", "cusps", "nodes")


def cover_type_to_json(t: CoverType) -> dict[str, int]:
    return {"a": t.a, "b": t.b, "m2": t.m2, "n2": t.n2}


def key_to_json(key: HomeoClassKey) -> dict[str, int]:
    return {"kk": key.kk, "chi": key.chi}


def params_to_json(p: DerivedParams) -> dict[str, int]:
    return {"u": p.u, "v": p.v, "w": p.w, "z": p.z}


def invariants_to_json(t: CoverType, p: DerivedParams, inv: SurfaceInvariants) -> dict[str, Any]:
    return {
        "type": cover_type_to_json(t),
        "params": params_to_json(p),
        "kk": inv.kk,
        "chi": inv.chi,
        "euler": inv.euler,
        "sigma": inv.sigma,
        "b2": inv.b2,
        "b_plus": inv.b_plus,
        "b_minus": inv.b_minus,
        "p_g": inv.p_g,
        "r": inv.r,
    }


def profile_to_json(profile: DiscriminantProfile) -> dict[str, Any]:
    payload: dict[str, Any] = {"mult": profile.mult, "ram_mult": profile.ram_mult}
    for field in _PROFILE_BIG_FIELDS:
        payload[field] = str(getattr(profile, field))
    return payload


def tuple_to_json(t: CataneseTuple) -> dict[str, Any]:
    return {
        "key": key_to_json(t.key),
        "members": [cover_type_to_json(m) for m in t.members],
        "indices": list(t.indices),
    }


def verdict_to_json(verdict: TupleVerdict) -> dict[str, Any]:
    return {
        "is_catanese": verdict.is_catanese,
        "shared_key": key_to_json(verdict.shared_key) if verdict.shared_key else None,
        "indices": list(verdict.indices),
        "failures": list(verdict.failures),
    }


def certificate_to_json(cert: ZariskiCertificate) -> dict[str, Any]:
    return {
        "members": [cover_type_to_json(m) for m in cert.members],
        "shared": key_to_json(cert.shared),
        "indices": list(cert.indices),
        "profiles": [profile_to_json(p) for p in cert.profiles],
        "argument": [
            {"step": s.step, "name": s.name, "statement": s.statement}
            for s in cert.argument
        ],
    }


def _require_mapping(value: Any, where: str) -> Mapping[str, Any]:
    if not isinstance(value, Mapping):
        raise SchemaMismatch(f"{where}: expected an object, got {type(value).__name__}")
    return value


def _int_field(obj: Mapping[str, Any], field: str, where: str) -> int:
    value = obj.get(field)
    if isinstance(value, bool) or not isinstance(value, int):
        raise SchemaMismatch(f"{where}: field {field!r} must be an integer, got {value!r}")
    return value


def _big_field(obj: Mapping[str, Any], field: str, where: str) -> int:
    value = obj.get(field)
    if not isinstance(value, str):
        raise SchemaMismatch(f"{where}: field {field!r} must be a decimal string, got {value!r}")
    try:
        return int(value, 10)
    except ValueError as exc:
        raise SchemaMismatch(f"{where}: field {field!r} is not a decimal string: {value!r}") from exc


def _str_field(obj: Mapping[str, Any], field: str, where: str) -> str:
    value = obj.get(field)
    if not isinstance(value, str):
        raise SchemaMismatch(f"{where}: field {field!r} must be a string, got {value!r}")
    return value


def _list_field(obj: Mapping[str, Any], field: str, where: str) -> list[Any]:
    value = obj.get(field)
    if not isinstance(value, list):
        raise SchemaMismatch(f"{where}: field {field!r} must be an array, got {value!r}")
    return value


def cover_type_from_json(payload: Any, where: str = "type") -> CoverType:
    obj = _require_mapping(payload, where)
    return CoverType(*(_int_field(obj, f, where) for f in ("a", "b", "m2", "n2")))


def key_from_json(payload: Any, where: str = "key") -> HomeoClassKey:
    obj = _require_mapping(payload, where)
    return HomeoClassKey(_int_field(obj, "kk", where), _int_field(obj, "chi", where))


def profile_from_json(payload: Any, where: str = "profile") -> DiscriminantProfile:
    obj = _require_mapping(payload, where)
    big = {f: _big_field(obj, f, where) for f in _PROFILE_BIG_FIELDS}
    return DiscriminantProfile(
        mult=_int_field(obj, "mult", where),
        ram_mult=_int_field(obj, "ram_mult", where),
        **big,
    )


def _indices_from_json(obj: Mapping[str, Any], where: str) -> tuple[int, ...]:
    indices = []
    for i, value in enumerate(_list_field(obj, "indices", where)):
        if isinstance(value, bool) or not isinstance(value, int):
            raise SchemaMismatch(f"{where}: indices[{i}] must be an integer, got {value!r}")
        indices.append(value)
    return tuple(indices)


def tuple_from_json(payload: Any, where: str = "tuple") -> CataneseTuple:
    obj = _require_mapping(payload, where)
    members = tuple(
        cover_type_from_json(m, f"{where}.members[{i}]")
        for i, m in enumerate(_list_field(obj, "members", where))
    )
    return CataneseTuple(
        key=key_from_json(obj.get("key"), f"{where}.key"),
        members=members,
        indices=_indices_from_json(obj, where),
    )


def certificate_from_json(payload: Any, where: str = "certificate") -> ZariskiCertificate:
    obj = _require_mapping(payload, where)
    members = tuple(
        cover_type_from_json(m, f"{where}.members[{i}]")
        for i, m in enumerate(_list_field(obj, "members", where))
    )
    profiles = tuple(
        profile_from_json(p, f"{where}.profiles[{i}]")
        for i, p in enumerate(_list_field(obj, "profiles", where))
    )
    argument = []
    for i, raw in enumerate(_list_field(obj, "argument", where)):
        step_where = f"{where}.argument[{i}]"
        step = _require_mapping(raw, step_where)
        argument.append(
            ArgumentStep(
                step=_int_field(step, "step", step_where),
                name=_str_field(step, "name", step_where),
                statement=_str_field(step, "statement", step_where),
            )
        )
    return ZariskiCertificate(
        members=members,
        shared=key_from_json(obj.get("shared"), f"{where}.shared"),
        indices=_indices_from_json(obj, where),
        profiles=profiles,
        argument=tuple(argument),
    )
