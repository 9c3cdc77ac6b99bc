"""Catalog entries: canonical serialization and batch generation.

A catalog is a deterministic list of entries, each recording the inputs
and outputs of one library computation.  Serialization is canonical --
keys sorted, rationals in reduced "p/q" string form, fixed separators --
so re-serializing a parsed entry is byte-identical and re-running a
generation with the same parameters yields a byte-identical file.

Value encoding inside the ``inputs``/``outputs`` maps:

* int  <-> JSON number (floats are rejected on parse);
* Fraction <-> JSON string "p/q" (or "p"), reduced;
* bool <-> JSON true/false;
* any other string stays a string, provided it cannot be mistaken for a
  rational (the serializer enforces this).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Iterable, Mapping

from .bounds import bound_report, enumerate_admissible_c3
from .chow import _RATIONAL_RE, ChernClasses, chern_to_character, parse_rational, rational_str
from .errors import DomainError, InadmissibleParameterError
from .monads import monad_shape, partition_types
from .resolutions import (
    admissible_s,
    c3_of,
    presentation_report,
    resolution_shapes,
    verify_resolution_chern,
)

SCHEMA_VERSION = 1

KINDS = ("bound", "resolution", "monad", "stratum")


@dataclass(frozen=True)
class CatalogEntry:
    """One computed record: a kind tag plus input and output maps."""

    kind: str
    inputs: Mapping[str, Any]
    outputs: Mapping[str, Any]
    schema_version: int = SCHEMA_VERSION

    def __post_init__(self) -> None:
        if self.kind not in KINDS:
            raise InadmissibleParameterError(
                f"kind must be one of {KINDS}, got {self.kind!r}"
            )
        object.__setattr__(self, "inputs", dict(self.inputs))
        object.__setattr__(self, "outputs", dict(self.outputs))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CatalogEntry):
            return NotImplemented
        return (
            self.kind == other.kind
            and self.schema_version == other.schema_version
            and _map_key(self.inputs) == _map_key(other.inputs)
            and _map_key(self.outputs) == _map_key(other.outputs)
        )


def _map_key(mapping: Mapping[str, Any]) -> tuple:
    # Fraction(3) == 3 would blur the int/rational distinction; key on the
    # serialized form instead so equality matches byte-level identity.
    return tuple(sorted((k, _encode_value(v)) for k, v in mapping.items()))


def _encode_value(value: Any) -> Any:
    if isinstance(value, bool):
        return value
    if isinstance(value, int):
        return value
    if isinstance(value, Fraction):
        return rational_str(value)
    if isinstance(value, str):
        if _RATIONAL_RE.match(value.strip()):
            raise DomainError(
                f"string value {value!r} would be parsed back as a rational"
            )
        return value
    raise DomainError(f"unsupported catalog value {value!r}")


def _decode_value(value: Any) -> Any:
    if isinstance(value, bool):
        return value
    if isinstance(value, int):
        return value
    if isinstance(value, float):
        raise DomainError(f"floating point value {value!r} is not allowed in catalogs")
    if isinstance(value, str):
        if _RATIONAL_RE.match(value.strip()):
            return parse_rational(value)
        return value
    raise DomainError(f"unsupported catalog value {value!r}")


def entry_to_jsonable(entry: CatalogEntry) -> dict:
    return {
        "kind": entry.kind,
        "inputs": {k: _encode_value(v) for k, v in sorted(entry.inputs.items())},
        "outputs": {k: _encode_value(v) for k, v in sorted(entry.outputs.items())},
        "schema_version": entry.schema_version,
    }


def entry_from_jsonable(data: Mapping[str, Any]) -> CatalogEntry:
    return CatalogEntry(
        kind=data["kind"],
        inputs={k: _decode_value(v) for k, v in data["inputs"].items()},
        outputs={k: _decode_value(v) for k, v in data["outputs"].items()},
        schema_version=int(data["schema_version"]),
    )


def serialize_entry(entry: CatalogEntry) -> str:
    """Canonical single-line JSON for one entry."""
    return json.dumps(entry_to_jsonable(entry), sort_keys=True, separators=(",", ":"))


def parse_entry(text: str) -> CatalogEntry:
    return entry_from_jsonable(json.loads(text))


def serialize_catalog(entries: Iterable[CatalogEntry]) -> str:
    """Canonical catalog document: sorted entries, stable layout."""
    ordered = sorted(entries, key=serialize_entry)
    doc = {
        "entries": [entry_to_jsonable(e) for e in ordered],
        "schema_version": SCHEMA_VERSION,
    }
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def parse_catalog(text: str) -> list[CatalogEntry]:
    doc = json.loads(text)
    return [entry_from_jsonable(e) for e in doc["entries"]]


def diff_catalogs(
    a: Iterable[CatalogEntry], b: Iterable[CatalogEntry]
) -> dict[str, list[CatalogEntry]]:
    """Set difference of two catalogs, in both directions."""
    a_keys = {serialize_entry(e): e for e in a}
    b_keys = {serialize_entry(e): e for e in b}
    return {
        "only_in_a": [a_keys[k] for k in sorted(a_keys.keys() - b_keys.keys())],
        "only_in_b": [b_keys[k] for k in sorted(b_keys.keys() - a_keys.keys())],
    }


def bounds_catalog(r: int, c1: int, c2_range: range) -> list[CatalogEntry]:
    """One "bound" entry per c2: the ch_3 bound and the admissible c3 interval."""
    entries = []
    for c2 in c2_range:
        ch2 = Fraction(c1 * c1 - 2 * c2, 2)
        report = bound_report(r, c1, ch2)
        c3_min, c3_max = enumerate_admissible_c3(r, c1, c2)
        entries.append(
            CatalogEntry(
                kind="bound",
                inputs={"rank": r, "c1": c1, "c2": c2},
                outputs={
                    "ch2": ch2,
                    "ch3_bound": report.ch3_bound,
                    "euler_bound": report.euler_bound,
                    "q": report.q,
                    "c3_min": c3_min,
                    "c3_max": c3_max,
                },
            )
        )
    return entries


def resolutions_catalog(c2_range: range) -> list[CatalogEntry]:
    """One "resolution" entry per admissible (c2, s)."""
    entries = []
    for c2 in c2_range:
        for s in admissible_s(c2):
            r_minus1, r_0 = resolution_shapes(c2, s)
            report = presentation_report(c2, s)
            entries.append(
                CatalogEntry(
                    kind="resolution",
                    inputs={"c2": c2, "s": s},
                    outputs={
                        "c3": c3_of(c2, s),
                        "r_minus1": str(r_minus1),
                        "r0": str(r_0),
                        "chern_consistent": verify_resolution_chern(c2, s),
                        "dim_hom": report.dim_hom,
                        "dim_pv": report.dim_pv,
                        "dim_g": report.dim_g,
                    },
                )
            )
    return entries


def monads_catalog(r_max: int, charge_range: range) -> list[CatalogEntry]:
    """One "monad" entry per normalized (r, d) and integer charge."""
    entries = []
    for r in range(1, r_max + 1):
        for d in range(-r + 1, 1):
            for c in charge_range:
                if c < 0 or d + c < 0:
                    continue
                ch2 = -Fraction(c) - Fraction(d, 2)
                shape = monad_shape(r, d, ch2)
                entries.append(
                    CatalogEntry(
                        kind="monad",
                        inputs={"rank": r, "degree": d, "charge": c},
                        outputs={
                            "ch2": ch2,
                            "v": shape.v,
                            "w": shape.w,
                            "u": shape.u,
                        },
                    )
                )
    return entries


def strata_catalog(c2_range: range, l_range: range) -> list[CatalogEntry]:
    """One "stratum" entry per (c2, s, c3, partition type of length l).

    The stratum labels combine the admissible P^3 Chern data with the
    length-l partition types of the zero-dimensional quotient; ch_3 of the
    reflexive part and the ambient presentation dimensions are recorded.
    """
    entries = []
    for c2 in c2_range:
        for s in admissible_s(c2):
            c3 = c3_of(c2, s)
            character = chern_to_character(ChernClasses(2, -1, c2, c3), 3)
            report = presentation_report(c2, s)
            for l in l_range:
                if l < 0:
                    raise InadmissibleParameterError("length range must be >= 0")
                for ptype in partition_types(l):
                    entries.append(
                        CatalogEntry(
                            kind="stratum",
                            inputs={
                                "c2": c2,
                                "s": s,
                                "l": l,
                                "partition": str(ptype),
                            },
                            outputs={
                                "c3": c3,
                                "ch2": character.ch2,
                                "ch3": character.ch3,
                                "dim_hom": report.dim_hom,
                                "dim_pv": report.dim_pv,
                                "dim_g": report.dim_g,
                            },
                        )
                    )
    return entries
