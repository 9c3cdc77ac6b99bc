"""Command line front end for the chowkit library.

Results go to standard output as JSON (default) or RFC-4180-style CSV
(``--format csv``); logs and usage messages go to standard error.  Exit
codes: 0 on success, 2 on usage errors (unknown subcommand, malformed
numbers, missing flags), 1 on domain errors, which are reported as a
machine-readable ``{"error": {...}}`` object.  ``catalog diff`` exits 0
when the catalogs are identical and 1 otherwise, like classic diff.

All rationals are printed as reduced "p/q" strings; no floating point is
ever emitted, so byte-identical output for identical invocations is
guaranteed.
"""

from __future__ import annotations

import argparse
import csv
import json
import re
import sys
from fractions import Fraction

from . import catalog as cat
from .bounds import (
    BoundReport,
    bound_report,
    ch3_bound,
    enumerate_admissible_c3,
)
from .chow import (
    ChernCharacter,
    ChernClasses,
    character_to_chern,
    chern_to_character,
    euler_characteristic,
    parse_rational,
    pushforward_from_hyperplane,
    rational_str,
    restrict_to_hyperplane,
    todd,
)
from .errors import DomainError
from .monads import monad_shape, partition_types
from .resolutions import (
    admissible_s,
    c3_of,
    presentation_report,
    resolution_shapes,
    verify_resolution_chern,
)
from .splitting import SplittingType, enumerate_splitting_types, splitting_radius

EXIT_OK = 0
EXIT_DOMAIN_ERROR = 1
EXIT_USAGE_ERROR = 2


class UsageError(Exception):
    """Bad invocation detected after argparse (e.g. missing range)."""


# Tokens like "-9/2" or "-1,0,-2" are values, not flags; none of our options
# use a single dash, so widening argparse's negative-number heuristic is safe.
_NEGATIVE_VALUE = re.compile(r"^-\d+([/,.]?[-\d,./]*)?$")


def _allow_negative_values(parser: argparse.ArgumentParser) -> argparse.ArgumentParser:
    parser._negative_number_matcher = _NEGATIVE_VALUE
    return parser


# ---------------------------------------------------------------------------
# argument conversion


def _rational(text: str) -> Fraction:
    return parse_rational(text)


def _int_list(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError:
        raise ValueError(f"not a comma-separated integer list: {text!r}")


def _components(text: str) -> tuple[Fraction, ...]:
    return tuple(parse_rational(part) for part in text.split(","))


def _int_range(text: str) -> range:
    """Parse "a..b" (inclusive) or a single "a" into a range."""
    if ".." in text:
        lo_text, hi_text = text.split("..", 1)
        lo, hi = int(lo_text), int(hi_text)
    else:
        lo = hi = int(text)
    if hi < lo:
        raise ValueError(f"empty range: {text!r}")
    return range(lo, hi + 1)


def _character(components: tuple[Fraction, ...]) -> ChernCharacter:
    if len(components) not in (3, 4):
        raise UsageError(
            f"--character needs 3 (P^2) or 4 (P^3) components, got {len(components)}"
        )
    return ChernCharacter(len(components) - 1, components)


# ---------------------------------------------------------------------------
# payload encoding


def _jsonable(value):
    if isinstance(value, bool) or isinstance(value, int) or value is None:
        return value
    if isinstance(value, Fraction):
        return rational_str(value)
    if isinstance(value, str):
        return value
    if isinstance(value, cat.CatalogEntry):
        return cat.entry_to_jsonable(value)
    if isinstance(value, dict):
        return {k: _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    return str(value)


def _flatten(value, prefix: str, into: dict) -> None:
    if isinstance(value, dict):
        for k, v in sorted(value.items()):
            _flatten(v, f"{prefix}.{k}" if prefix else str(k), into)
    elif isinstance(value, list):
        for i, v in enumerate(value):
            _flatten(v, f"{prefix}.{i}", into)
    else:
        into[prefix] = "" if value is None else json.dumps(value) if isinstance(value, bool) else str(value)


def _emit_csv(payload: dict, stream) -> None:
    writer = csv.writer(stream, lineterminator="\n")
    entries = payload.get("entries")
    if isinstance(entries, list) and entries and all(isinstance(e, dict) for e in entries):
        flat_rows = []
        for entry in entries:
            flat: dict = {}
            _flatten(entry, "", flat)
            flat_rows.append(flat)
        columns = sorted(set().union(*(row.keys() for row in flat_rows)))
        writer.writerow(columns)
        for row in flat_rows:
            writer.writerow([row.get(col, "") for col in columns])
        return
    flat = {}
    _flatten(payload, "", flat)
    writer.writerow(["key", "value"])
    for key in sorted(flat):
        writer.writerow([key, flat[key]])


def _emit(payload: dict, fmt: str, stream) -> None:
    payload = _jsonable(payload)
    if fmt == "csv":
        _emit_csv(payload, stream)
    else:
        json.dump(payload, stream, sort_keys=True, indent=2)
        stream.write("\n")


def _shape_payload(shape) -> list[list[int]]:
    return [[t, e] for t, e in shape.summands]


def _report_payload(report: BoundReport) -> dict:
    payload = {
        "rank": report.rank,
        "c1": report.c1,
        "ch2": report.ch2,
        "splitting_radius": report.splitting_radius,
        "q": report.q,
        "q_int": report.q_int,
        "h_bounds": list(report.h_bounds),
        "euler_bound": report.euler_bound,
        "ch3_bound": report.ch3_bound,
        "literal_mode": report.literal_mode,
        "splitting_type": (
            None if report.splitting_type is None else list(report.splitting_type.entries)
        ),
    }
    return payload


# ---------------------------------------------------------------------------
# subcommand handlers; each returns (exit_code, payload or None)


def _cmd_todd(args) -> tuple[int, dict]:
    cls = todd(args.dim)
    return EXIT_OK, {"dim": args.dim, "components": list(cls.components)}


def _cmd_chern(args) -> tuple[int, dict]:
    if (args.classes is None) == (args.character is None):
        raise UsageError("give exactly one of --classes or --character")
    if args.classes is not None:
        values = args.classes
        if len(values) == 4:
            classes = ChernClasses(values[0], values[1], values[2], values[3])
        elif len(values) == 3:
            classes = ChernClasses(values[0], values[1], values[2])
        else:
            raise UsageError(
                "--classes needs rank,c1,c2 on P^2 or rank,c1,c2,c3 on P^3"
            )
        character = chern_to_character(classes, args.dim)
        return EXIT_OK, {
            "dim": args.dim,
            "classes": _classes_payload(classes),
            "character": list(character.components),
        }
    character = _character(args.character)
    if character.ambient_dim != args.dim:
        raise UsageError(
            f"--character has {character.ambient_dim + 1} components "
            f"but --dim is {args.dim}"
        )
    classes = character_to_chern(character)
    return EXIT_OK, {
        "dim": args.dim,
        "character": list(character.components),
        "classes": _classes_payload(classes),
    }


def _classes_payload(classes: ChernClasses) -> dict:
    payload = {"rank": classes.rank, "c1": classes.c1, "c2": classes.c2}
    if classes.c3 is not None:
        payload["c3"] = classes.c3
    return payload


def _cmd_euler(args) -> tuple[int, dict]:
    character = _character(args.character)
    return EXIT_OK, {
        "dim": character.ambient_dim,
        "character": list(character.components),
        "euler": euler_characteristic(character),
    }


def _cmd_restrict(args) -> tuple[int, dict]:
    character = _character(args.character)
    restricted = restrict_to_hyperplane(character)
    pushed = pushforward_from_hyperplane(character)
    return EXIT_OK, {
        "character": list(character.components),
        "restricted": list(restricted.components),
        "pushforward": list(pushed.components),
    }


def _cmd_bound(args) -> tuple[int, dict]:
    b = SplittingType(args.b) if args.b is not None else None
    report = bound_report(args.rank, args.c1, args.ch2, b=b, literal_mode=args.literal)
    return EXIT_OK, _report_payload(report)


def _cmd_enumerate_c3(args) -> tuple[int, dict]:
    c3_min, c3_max = enumerate_admissible_c3(args.rank, args.c1, args.c2)
    ch2 = Fraction(args.c1 * args.c1 - 2 * args.c2, 2)
    return EXIT_OK, {
        "rank": args.rank,
        "c1": args.c1,
        "c2": args.c2,
        "ch2": ch2,
        "ch3_bound": ch3_bound(args.rank, args.c1, ch2),
        "c3_min": c3_min,
        "c3_max": c3_max,
        "count": c3_max - c3_min + 1,
    }


def _cmd_splitting_types(args) -> tuple[int, dict]:
    types = enumerate_splitting_types(args.rank, args.c1, args.reflexive_gap)
    return EXIT_OK, {
        "rank": args.rank,
        "c1": args.c1,
        "reflexive_gap": args.reflexive_gap,
        "radius": splitting_radius(args.rank, args.c1),
        "count": len(types),
        "types": [list(t.entries) for t in types],
    }


def _cmd_resolution(args) -> tuple[int, dict]:
    r_minus1, r_0 = resolution_shapes(args.c2, args.s)
    report = presentation_report(args.c2, args.s)
    payload = {
        "c2": args.c2,
        "s": args.s,
        "c3": c3_of(args.c2, args.s),
        "r_minus1": _shape_payload(r_minus1),
        "r0": _shape_payload(r_0),
        "display": f"0 -> {r_minus1} -> {r_0} -> F -> 0",
        "dim_hom": report.dim_hom,
        "dim_pv": report.dim_pv,
        "dim_g": report.dim_g,
    }
    if args.verify:
        payload["chern_consistent"] = verify_resolution_chern(args.c2, args.s)
    return EXIT_OK, payload


def _cmd_monad(args) -> tuple[int, dict]:
    shape = monad_shape(args.rank, args.degree, args.ch2)
    return EXIT_OK, {
        "rank": args.rank,
        "degree": args.degree,
        "ch2": args.ch2,
        "charge": shape.u,
        "left": _shape_payload(shape.left),
        "middle": _shape_payload(shape.middle),
        "right": _shape_payload(shape.right),
        "exponents": {"v": shape.v, "w": shape.w, "u": shape.u},
        "display": str(shape),
    }


def _cmd_partitions(args) -> tuple[int, dict]:
    types = partition_types(args.total)
    return EXIT_OK, {
        "total": args.total,
        "count": len(types),
        "types": [str(t) for t in types],
    }


def _write_or_print(entries, args) -> tuple[int, dict | None]:
    document = cat.serialize_catalog(entries)
    if args.output is not None:
        try:
            with open(args.output, "w", encoding="utf-8") as handle:
                handle.write(document)
        except OSError as exc:
            raise DomainError(f"cannot write catalog to {args.output!r}: {exc}")
        return EXIT_OK, {"path": args.output, "entries": len(entries)}
    if args.format == "csv":
        return EXIT_OK, {"entries": [cat.entry_to_jsonable(e) for e in entries]}
    sys.stdout.write(document)
    return EXIT_OK, None


def _require_range(args, name: str) -> range:
    value = getattr(args, name)
    if value is None:
        raise UsageError(f"--{name} range is required (flag or config file)")
    return value


def _cmd_catalog_strata(args) -> tuple[int, dict | None]:
    entries = cat.strata_catalog(_require_range(args, "c2"), _require_range(args, "l"))
    return _write_or_print(entries, args)


def _cmd_catalog_bounds(args) -> tuple[int, dict | None]:
    entries = cat.bounds_catalog(args.rank, args.c1, _require_range(args, "c2"))
    return _write_or_print(entries, args)


def _cmd_catalog_resolutions(args) -> tuple[int, dict | None]:
    entries = cat.resolutions_catalog(_require_range(args, "c2"))
    return _write_or_print(entries, args)


def _cmd_catalog_monads(args) -> tuple[int, dict | None]:
    if args.rank_max is None:
        raise UsageError("--rank-max is required (flag or config file)")
    entries = cat.monads_catalog(args.rank_max, _require_range(args, "charge"))
    return _write_or_print(entries, args)


def _cmd_diff(args) -> tuple[int, dict]:
    catalogs = []
    for path in (args.catalog_a, args.catalog_b):
        try:
            with open(path, "r", encoding="utf-8") as handle:
                catalogs.append(cat.parse_catalog(handle.read()))
        except OSError as exc:
            raise DomainError(f"cannot read catalog {path!r}: {exc}")
        except (json.JSONDecodeError, KeyError) as exc:
            raise DomainError(f"malformed catalog {path!r}: {exc}")
    delta = cat.diff_catalogs(catalogs[0], catalogs[1])
    identical = not delta["only_in_a"] and not delta["only_in_b"]
    payload = {
        "identical": identical,
        "only_in_a": delta["only_in_a"],
        "only_in_b": delta["only_in_b"],
    }
    return (EXIT_OK if identical else EXIT_DOMAIN_ERROR), payload


# ---------------------------------------------------------------------------
# parser assembly


def build_parser() -> argparse.ArgumentParser:
    parser = _allow_negative_values(
        argparse.ArgumentParser(
            prog="chowkit",
            description="Exact Chern-character calculator and enumeration toolkit "
            "for sheaf invariants on P^2 and P^3.",
        )
    )
    parser.add_argument(
        "--format", choices=("json", "csv"), default=None,
        help="output format on stdout (default json)",
    )
    parser.add_argument(
        "--config", default=None, metavar="FILE",
        help="key=value file presetting grid ranges; flags override it",
    )
    subparsers = parser.add_subparsers(dest="command", required=True,
                                       metavar="SUBCOMMAND")

    def sub(name: str, **kwargs) -> argparse.ArgumentParser:
        return _allow_negative_values(subparsers.add_parser(name, **kwargs))

    p = sub("todd", help="Todd class of P^2 or P^3")
    p.add_argument("--dim", type=int, required=True)
    p.set_defaults(handler=_cmd_todd)

    p = sub("chern", help="convert between Chern classes and characters")
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--classes", type=_int_list, default=None,
                   metavar="R,C1,C2[,C3]")
    p.add_argument("--character", type=_components, default=None,
                   metavar="CH0,CH1,...")
    p.set_defaults(handler=_cmd_chern)

    p = sub("euler", help="Riemann-Roch Euler characteristic")
    p.add_argument("--character", type=_components, required=True,
                   metavar="CH0,CH1,...")
    p.set_defaults(handler=_cmd_euler)

    p = sub("restrict", help="restrict a P^3 character to a hyperplane")
    p.add_argument("--character", type=_components, required=True,
                   metavar="CH0,CH1,CH2,CH3")
    p.set_defaults(handler=_cmd_restrict)

    p = sub("bound", help="cohomology / Euler / ch_3 bound report")
    p.add_argument("--rank", type=int, required=True)
    p.add_argument("--c1", type=int, required=True)
    p.add_argument("--ch2", type=_rational, required=True)
    p.add_argument("--b", type=_int_list, default=None, metavar="B1,B2,...",
                   help="splitting type; omitted = worst case")
    p.add_argument("--literal", action="store_true",
                   help="reproduce raw formulas without clamping at 0")
    p.set_defaults(handler=_cmd_bound)

    p = sub("enumerate-c3", help="admissible c_3 interval under the ch_3 bound")
    p.add_argument("--rank", type=int, required=True)
    p.add_argument("--c1", type=int, required=True)
    p.add_argument("--c2", type=int, required=True)
    p.set_defaults(handler=_cmd_enumerate_c3)

    p = sub("splitting-types", help="enumerate splitting types in the magnitude box")
    p.add_argument("--rank", type=int, required=True)
    p.add_argument("--c1", type=int, required=True)
    p.add_argument("--reflexive-gap", action=argparse.BooleanOptionalAction,
                   default=True, help="apply the gap <= 2 filter")
    p.set_defaults(handler=_cmd_splitting_types)

    p = sub("resolution", help="two-term resolution shapes for (c2, s)")
    p.add_argument("--c2", type=int, required=True)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--verify", action="store_true",
                   help="also check the Chern-character identity")
    p.set_defaults(handler=_cmd_resolution)

    p = sub("monad", help="linear monad shape for (rank, degree, ch2)")
    p.add_argument("--rank", type=int, required=True)
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--ch2", type=_rational, required=True)
    p.set_defaults(handler=_cmd_monad)

    p = sub("partitions", help="partition types of a given total length")
    p.add_argument("--total", type=int, required=True)
    p.set_defaults(handler=_cmd_partitions)

    p = sub("catalog", help="batch generation and comparison of catalogs")
    catalog_sub = p.add_subparsers(dest="catalog_command", required=True,
                                   metavar="KIND")

    c = _allow_negative_values(catalog_sub.add_parser("strata", help="stratum labels over a (c2, l) grid"))
    c.add_argument("--c2", type=_int_range, default=None, metavar="A..B")
    c.add_argument("--l", type=_int_range, default=None, metavar="A..B")
    c.add_argument("--output", default=None, metavar="FILE")
    c.set_defaults(handler=_cmd_catalog_strata)

    c = _allow_negative_values(catalog_sub.add_parser("bounds", help="ch_3 bounds and c3 intervals over a c2 grid"))
    c.add_argument("--rank", type=int, default=2)
    c.add_argument("--c1", type=int, default=-1)
    c.add_argument("--c2", type=_int_range, default=None, metavar="A..B")
    c.add_argument("--output", default=None, metavar="FILE")
    c.set_defaults(handler=_cmd_catalog_bounds)

    c = _allow_negative_values(catalog_sub.add_parser("resolutions", help="resolution shapes over a c2 grid"))
    c.add_argument("--c2", type=_int_range, default=None, metavar="A..B")
    c.add_argument("--output", default=None, metavar="FILE")
    c.set_defaults(handler=_cmd_catalog_resolutions)

    c = _allow_negative_values(catalog_sub.add_parser("monads", help="monad shapes over normalized data"))
    c.add_argument("--rank-max", type=int, default=None)
    c.add_argument("--charge", type=_int_range, default=None, metavar="A..B")
    c.add_argument("--output", default=None, metavar="FILE")
    c.set_defaults(handler=_cmd_catalog_monads)

    c = _allow_negative_values(catalog_sub.add_parser("diff", help="compare two catalog files"))
    c.add_argument("catalog_a")
    c.add_argument("catalog_b")
    c.set_defaults(handler=_cmd_diff)

    p = sub("diff", help="compare two catalog files")
    p.add_argument("catalog_a")
    p.add_argument("catalog_b")
    p.set_defaults(handler=_cmd_diff)

    return parser


def _read_config(path: str) -> dict[str, str]:
    try:
        with open(path, "r", encoding="utf-8") as handle:
            lines = handle.readlines()
    except OSError as exc:
        raise UsageError(f"cannot read config {path!r}: {exc}")
    config = {}
    for line in lines:
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise UsageError(f"malformed config line: {line!r}")
        key, value = line.split("=", 1)
        config[key.strip()] = value.strip()
    return config


_CONFIG_RANGE_KEYS = ("c2", "l", "charge")


def _apply_config(args: argparse.Namespace) -> None:
    if args.config is None:
        if args.format is None:
            args.format = "json"
        return
    config = _read_config(args.config)
    for key in _CONFIG_RANGE_KEYS:
        if getattr(args, key, "absent") is None and key in config:
            try:
                setattr(args, key, _int_range(config[key]))
            except ValueError as exc:
                raise UsageError(f"bad config value for {key}: {exc}")
    if getattr(args, "rank_max", "absent") is None and "rank-max" in config:
        try:
            args.rank_max = int(config["rank-max"])
        except ValueError as exc:
            raise UsageError(f"bad config value for rank-max: {exc}")
    if args.format is None:
        fmt = config.get("format", "json")
        if fmt not in ("json", "csv"):
            raise UsageError(f"bad config format {fmt!r}")
        args.format = fmt


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse already reported to stderr
        code = exc.code
        return code if isinstance(code, int) else EXIT_USAGE_ERROR
    try:
        _apply_config(args)
        code, payload = args.handler(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE_ERROR
    except DomainError as exc:
        _emit(
            {"error": {"type": type(exc).__name__, "message": str(exc)}},
            args.format or "json",
            sys.stdout,
        )
        return EXIT_DOMAIN_ERROR
    if payload is not None:
        _emit(payload, args.format, sys.stdout)
    return code


def entry_point() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    entry_point()
