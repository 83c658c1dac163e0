"""JSON interchange for block, group and Brauer-tree records."""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Union

import jsonschema

from .brauer_tree import BrauerTree, InvalidTreeError, validate_tree
from .model import BlockRecord, GroupRecord, validate, validate_group
from .tame import FAMILY_IDS, TameFamilySpec, admissibility_problems

_POS_INT = {"type": "integer", "minimum": 1}
_META = {
    "provenance": {"type": "string", "minLength": 1},
    "expected": {
        "type": "object",
        "additionalProperties": {"enum": ["pass", "fail"]},
    },
}

BLOCK_SCHEMA = {
    "type": "object",
    "required": ["name", "p", "defect_group_order", "brauer_degrees"],
    "properties": {
        "name": {"type": "string"},
        "p": _POS_INT,
        "defect_group_order": _POS_INT,
        "brauer_degrees": {"type": "array", "items": _POS_INT, "minItems": 1},
        "ordinary_degrees": {"type": "array", "items": _POS_INT, "minItems": 1},
        "cartan": {
            "type": "array",
            "minItems": 1,
            "items": {"type": "array", "items": {"type": "integer"}},
        },
        "decomposition": {
            "type": "array",
            "minItems": 1,
            "items": {"type": "array", "items": {"type": "integer", "minimum": 0}},
        },
        "group_p_part": _POS_INT,
        "group_order": _POS_INT,
        **_META,
    },
    "additionalProperties": False,
}

GROUP_SCHEMA = {
    "type": "object",
    "required": ["name", "p", "group_order", "blocks"],
    "properties": {
        "name": {"type": "string"},
        "p": _POS_INT,
        "group_order": _POS_INT,
        "blocks": {"type": "array", "items": BLOCK_SCHEMA},
        **_META,
    },
    "additionalProperties": False,
}

TREE_SCHEMA = {
    "type": "object",
    "required": ["vertices", "edges"],
    "properties": {
        "vertices": {"type": "array", "items": {"type": "string"}, "minItems": 2},
        "edges": {
            "type": "array",
            "minItems": 1,
            "items": {
                "type": "array",
                "items": {"type": "string"},
                "minItems": 2,
                "maxItems": 2,
            },
        },
        "exceptional": {"type": "string"},
        "multiplicity": _POS_INT,
        "brauer_degrees": {"type": "array", "items": _POS_INT, "minItems": 1},
        "p": _POS_INT,
        "name": {"type": "string"},
        **_META,
    },
    "additionalProperties": False,
}


TAME_SCHEMA = {
    "type": "object",
    "required": ["family", "parameters", "defect_group_order"],
    "properties": {
        "name": {"type": "string"},
        "family": {"enum": list(FAMILY_IDS)},
        "parameters": {"type": "object", "additionalProperties": {"type": "integer"}},
        "defect_group_order": _POS_INT,
        **_META,
    },
    "additionalProperties": False,
}


class DataError(ValueError):
    """Malformed or invalid input; ``diagnostics`` holds one line per problem."""

    def __init__(self, diagnostics: list[str]):
        super().__init__("\n".join(diagnostics))
        self.diagnostics = diagnostics


Record = Union[BlockRecord, GroupRecord, BrauerTree, TameFamilySpec]


@dataclass(frozen=True)
class CorpusEntry:
    """A record plus where it comes from and which checks are known to fail."""

    record: Record
    provenance: str = ""
    expected: dict = field(default_factory=dict)
    brauer_degrees: tuple[int, ...] | None = None  # trees only
    p: int | None = None  # trees only

    name: str = ""

    def __post_init__(self) -> None:
        if not self.name:
            object.__setattr__(self, "name", getattr(self.record, "name", "") or _default_name(self.record))


def _default_name(record) -> str:
    if isinstance(record, TameFamilySpec):
        return record.label()
    return "brauer tree"


def block_from_dict(d: dict) -> BlockRecord:
    return BlockRecord(
        d["name"],
        d["p"],
        d["defect_group_order"],
        tuple(d["brauer_degrees"]),
        ordinary_degrees=tuple(d["ordinary_degrees"]) if "ordinary_degrees" in d else None,
        cartan=d.get("cartan"),
        decomposition=d.get("decomposition"),
        group_p_part=d.get("group_p_part"),
        group_order=d.get("group_order"),
    )


def block_to_dict(b: BlockRecord) -> dict:
    out = {
        "name": b.name,
        "p": b.p,
        "defect_group_order": b.defect_group_order,
        "brauer_degrees": list(b.brauer_degrees),
    }
    if b.ordinary_degrees is not None:
        out["ordinary_degrees"] = list(b.ordinary_degrees)
    if b.cartan is not None:
        out["cartan"] = b.cartan.to_lists()
    if b.decomposition is not None:
        out["decomposition"] = [list(r) for r in b.decomposition]
    if b.group_p_part is not None:
        out["group_p_part"] = b.group_p_part
    if b.group_order is not None:
        out["group_order"] = b.group_order
    return out


def group_from_dict(d: dict) -> GroupRecord:
    return GroupRecord(d["name"], d["p"], d["group_order"], tuple(block_from_dict(b) for b in d["blocks"]))


def group_to_dict(g: GroupRecord) -> dict:
    return {
        "name": g.name,
        "p": g.p,
        "group_order": g.group_order,
        "blocks": [block_to_dict(b) for b in g.blocks],
    }


def record_to_dict(record: Record) -> dict:
    if isinstance(record, GroupRecord):
        return group_to_dict(record)
    if isinstance(record, BrauerTree):
        return record.to_dict()
    if isinstance(record, TameFamilySpec):
        return {
            "family": record.family_id,
            "parameters": dict(record.parameters),
            "defect_group_order": record.defect_group_order,
        }
    return block_to_dict(record)


def dumps_record(record: Record) -> str:
    return json.dumps(record_to_dict(record), indent=2) + "\n"


def _line_of(text: str, path) -> int | None:
    """Best-effort source line for a JSON path: the first occurrence of its last key."""
    keys = [p for p in path if isinstance(p, str)]
    if not keys:
        return 1
    m = re.search(r'"' + re.escape(keys[-1]) + r'"\s*:', text)
    return text.count("\n", 0, m.start()) + 1 if m else None


def _schema_errors(data, schema, text: str, source: str) -> list[str]:
    out = []
    validator = jsonschema.Draft7Validator(schema)
    for err in sorted(validator.iter_errors(data), key=lambda e: list(map(str, e.path))):
        where = "/".join(str(p) for p in err.absolute_path) or "<root>"
        line = _line_of(text, list(err.absolute_path))
        loc = f"{source}:{line}" if line else source
        out.append(f"{loc}: schema violation at {where}: {err.message}")
    return out


def parse_entry(text: str, source: str = "<input>") -> CorpusEntry:
    """Parse, schema-check and validate one JSON record."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DataError([f"{source}:{exc.lineno}:{exc.colno}: malformed JSON: {exc.msg}"]) from None
    if not isinstance(data, dict):
        raise DataError([f"{source}:1: top-level JSON value must be an object"])
    if "edges" in data:
        schema = TREE_SCHEMA
    elif "family" in data:
        schema = TAME_SCHEMA
    elif "blocks" in data:
        schema = GROUP_SCHEMA
    else:
        schema = BLOCK_SCHEMA
    errors = _schema_errors(data, schema, text, source)
    if errors:
        raise DataError(errors)
    meta = {"provenance": data.get("provenance", ""), "expected": dict(data.get("expected", {}))}
    if schema is TAME_SCHEMA:
        spec = TameFamilySpec(data["family"], data["parameters"], data["defect_group_order"])
        problems = admissibility_problems(spec)
        if problems:
            raise DataError([f"{source}: inadmissible parameters: {msg}" for msg in problems])
        return CorpusEntry(spec, name=data.get("name", ""), **meta)
    if schema is TREE_SCHEMA:
        try:
            tree = BrauerTree.from_dict(data)
        except InvalidTreeError as exc:
            raise DataError([f"{source}: invalid tree: {exc}"]) from None
        degrees = tuple(data["brauer_degrees"]) if "brauer_degrees" in data else None
        if degrees is not None and len(degrees) != tree.e:
            raise DataError([f"{source}: {len(degrees)} brauer_degrees for {tree.e} edges"])
        problems = validate_tree(tree, data.get("p"))
        if problems:
            raise DataError([f"{source}: invalid tree: {msg}" for msg in problems])
        return CorpusEntry(tree, brauer_degrees=degrees, p=data.get("p"), name=data.get("name", ""), **meta)
    try:
        record = group_from_dict(data) if schema is GROUP_SCHEMA else block_from_dict(data)
    except (TypeError, ValueError) as exc:
        raise DataError([f"{source}: {exc}"]) from None
    problems = validate_group(record) if isinstance(record, GroupRecord) else validate(record)
    if problems:
        raise DataError([f"{source}: invalid record {record.name!r}: {msg}" for msg in problems])
    return CorpusEntry(record, **meta)


def load_entry(path: str | Path) -> CorpusEntry:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise DataError([f"{path}: cannot read: {exc.strerror}"]) from None
    return parse_entry(text, str(path))


def corpus_dir() -> Path:
    return Path(str(resources.files("blockverify") / "corpus"))


def corpus_paths() -> list[Path]:
    return sorted(corpus_dir().glob("*.json"))


def load_corpus() -> dict[str, CorpusEntry]:
    """Bundled entries keyed by file stem, e.g. ``"s10_p2"``."""
    return {p.stem: load_entry(p) for p in corpus_paths()}
