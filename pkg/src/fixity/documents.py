"""
JSON documents: representation input files and analysis reports.

Rationals are written as decimal strings so no reader needs wide integers.
Output is deterministic, so export -> import -> export is byte-identical.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Any

import jsonschema

from .cyclo import CycloMatrix, CyclotomicNumber, totient
from .topology import PropagationReport

SCHEMA_VERSION = 1

_RATIONAL = {
    "type": "array",
    "items": {"type": "string", "pattern": r"^-?[0-9]+$"},
    "minItems": 2,
    "maxItems": 2,
}

REP_INPUT_SCHEMA = {
    "type": "object",
    "required": ["schema", "conductor", "degree", "generators"],
    "additionalProperties": False,
    "properties": {
        "schema": {"const": SCHEMA_VERSION},
        "label": {"type": "string"},
        "conductor": {"type": "integer", "minimum": 1},
        "degree": {"type": "integer", "minimum": 1},
        "generators": {
            "type": "array",
            "minItems": 1,
            "items": {
                "type": "array",
                "items": {"type": "array", "items": {"type": "array", "items": _RATIONAL}},
            },
        },
    },
}


class SchemaError(ValueError):
    pass


def dumps(doc: Any) -> str:
    return json.dumps(doc, sort_keys=True, separators=(",", ":"), ensure_ascii=False) + "\n"


@dataclass
class RepInput:
    conductor: int
    degree: int
    generators: list[CycloMatrix]
    label: str = ""

    def to_json(self) -> dict:
        gens = []
        for mat in self.generators:
            mat = mat.embed(self.conductor)
            gens.append([
                [[[str(Fraction(c).numerator), str(Fraction(c).denominator)] for c in x.coords]
                 for x in mat.row(i)]
                for i in range(mat.rows)
            ])
        doc = {"schema": SCHEMA_VERSION, "conductor": self.conductor, "degree": self.degree, "generators": gens}
        if self.label:
            doc["label"] = self.label
        return doc

    def dumps(self) -> str:
        return dumps(self.to_json())


def _parse_rational(pair: list[str], where: str) -> Fraction:
    num, den = int(pair[0]), int(pair[1])
    if den == 0:
        raise SchemaError(f"{where}: zero denominator")
    return Fraction(num, den)


def rep_input_from_json(doc: Any) -> RepInput:
    try:
        jsonschema.validate(doc, REP_INPUT_SCHEMA)
    except jsonschema.ValidationError as exc:
        path = "/".join(str(p) for p in exc.absolute_path)
        raise SchemaError(f"at {path or '<root>'}: {exc.message}") from None
    m, n = doc["conductor"], doc["degree"]
    phi = totient(m)
    mats = []
    for g, rows in enumerate(doc["generators"]):
        if len(rows) != n or any(len(r) != n for r in rows):
            raise SchemaError(f"generator {g}: expected a {n}x{n} matrix")
        entries = []
        for i, row in enumerate(rows):
            for j, coords in enumerate(row):
                where = f"generator {g}, entry ({i},{j})"
                if len(coords) != phi:
                    raise SchemaError(f"{where}: expected {phi} coordinates for conductor {m}, got {len(coords)}")
                entries.append(CyclotomicNumber.from_coords([_parse_rational(c, where) for c in coords], m))
        mats.append(CycloMatrix(n, n, m, entries))
    return RepInput(m, n, mats, doc.get("label", ""))


def load_rep_input(path: str) -> RepInput:
    try:
        with open(path, encoding="utf-8") as fh:
            doc = json.load(fh)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"{path}: line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    return rep_input_from_json(doc)


@dataclass
class AnalysisDocument:
    label: str
    order: int
    degree: int
    conductor: int
    fixity: int
    witness: int | None
    fixity_note: str
    ranks: dict[str, int]
    tower: list[int]
    crosschecks: list[dict] = field(default_factory=list)
    propagation: list[PropagationReport] = field(default_factory=list)
    audited: bool = False

    def to_json(self) -> dict:
        doc = asdict(self)
        doc["propagation"] = [r.to_json() for r in self.propagation]
        doc["schema"] = SCHEMA_VERSION
        return doc

    @classmethod
    def from_json(cls, doc: dict) -> "AnalysisDocument":
        doc = dict(doc)
        if doc.pop("schema", None) != SCHEMA_VERSION:
            raise SchemaError("unsupported analysis schema version")
        doc["propagation"] = [PropagationReport.from_json(r) for r in doc["propagation"]]
        return cls(**doc)

    def dumps(self) -> str:
        return dumps(self.to_json())
