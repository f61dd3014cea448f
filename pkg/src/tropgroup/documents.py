"""JSON input documents.

    {
      "kind": "matrix" | "matrix_list" | "group_sample" | "wreath_list",
      "dimension": n,
      "matrices" | "generators" | "elements": [...],
      "options": {"assume_group": bool, "closure_cap": int}
    }

Entries are strings ("-inf", "3", "-5/2") or bare JSON integers. Output always
uses the string form, so ``parse(serialize(doc)) == doc``.
"""

import json
from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path
from typing import Any

from .errors import DimensionMismatch, NotMonomial, ParseError
from .matrices import TropMatrix
from .semiring import NEG_INF, Scalar, parse_scalar
from .wreath import WreathElement


class DocumentKind(Enum):
    MATRIX = "matrix"
    MATRIX_LIST = "matrix_list"
    GROUP_SAMPLE = "group_sample"
    WREATH_LIST = "wreath_list"


# Payload keys each kind accepts; the first is used when building documents in code.
PAYLOAD_KEYS = {
    DocumentKind.MATRIX: ("matrices",),
    DocumentKind.MATRIX_LIST: ("matrices", "generators"),
    DocumentKind.GROUP_SAMPLE: ("elements",),
    DocumentKind.WREATH_LIST: ("elements",),
}


@dataclass(frozen=True)
class DocumentOptions:
    assume_group: bool | None = None
    closure_cap: int | None = None

    def to_dict(self) -> dict[str, Any]:
        out: dict[str, Any] = {}
        if self.assume_group is not None:
            out["assume_group"] = self.assume_group
        if self.closure_cap is not None:
            out["closure_cap"] = self.closure_cap
        return out


@dataclass(frozen=True)
class InputDocument:
    kind: DocumentKind
    dimension: int | None
    matrices: tuple[TropMatrix, ...] = ()
    wreath: tuple[WreathElement, ...] = ()
    options: DocumentOptions = field(default_factory=DocumentOptions)
    payload_key: str = ""

    def __post_init__(self):
        if not self.payload_key:
            object.__setattr__(self, "payload_key", PAYLOAD_KEYS[self.kind][0])

    def to_dict(self) -> dict[str, Any]:
        out: dict[str, Any] = {"kind": self.kind.value}
        if self.dimension is not None:
            out["dimension"] = self.dimension
        if self.kind is DocumentKind.WREATH_LIST:
            out[self.payload_key] = [w.to_dict() for w in self.wreath]
        else:
            out[self.payload_key] = [m.to_text() for m in self.matrices]
        out["options"] = self.options.to_dict()
        return out


# ---------------------------------------------------------------------------
# Parsing
# ---------------------------------------------------------------------------

def _entry(value: Any, where: str) -> Scalar:
    if isinstance(value, bool):
        raise ParseError(f"{where}: booleans are not entries", witnesses={"at": where})
    if isinstance(value, int):
        return parse_scalar(str(value))
    if isinstance(value, str):
        try:
            return parse_scalar(value)
        except ParseError as e:
            raise ParseError(f"{where}: {e}", witnesses={"at": where, **e.witnesses})
    raise ParseError(
        f"{where}: entry must be a string like \"-5/2\" or an integer, got {type(value).__name__}",
        witnesses={"at": where},
    )


def _matrix(raw: Any, where: str) -> TropMatrix:
    if not isinstance(raw, list) or not raw or not all(isinstance(r, list) and r for r in raw):
        raise ParseError(f"{where}: matrix must be a nonempty list of nonempty rows", witnesses={"at": where})
    width = len(raw[0])
    for i, r in enumerate(raw, start=1):
        if len(r) != width:
            raise ParseError(
                f"{where}: ragged rows (row {i} has {len(r)} entries, row 1 has {width})",
                witnesses={"at": where, "row": i},
            )
    return TropMatrix.from_rows([[_entry(x, f"{where}[{i}][{j}]") for j, x in enumerate(r, start=1)]
                                 for i, r in enumerate(raw, start=1)])


def _wreath(raw: Any, where: str) -> WreathElement:
    if not isinstance(raw, dict) or set(raw) != {"sigma", "d"}:
        raise ParseError(f"{where}: wreath element must be {{\"sigma\": [...], \"d\": [...]}}", witnesses={"at": where})
    sigma, d = raw["sigma"], raw["d"]
    if not isinstance(sigma, list) or not all(isinstance(s, int) and not isinstance(s, bool) for s in sigma):
        raise ParseError(f"{where}: sigma must be a list of integers", witnesses={"at": where})
    if not isinstance(d, list):
        raise ParseError(f"{where}: d must be a list of entries", witnesses={"at": where})
    weights = [_entry(x, f"{where}.d[{j}]") for j, x in enumerate(d, start=1)]
    if any(w is NEG_INF for w in weights):
        raise ParseError(f"{where}: wreath weights must be finite", witnesses={"at": where})
    try:
        return WreathElement(tuple(sigma), tuple(weights))
    except (NotMonomial, DimensionMismatch) as e:
        raise ParseError(f"{where}: {e}", witnesses={"at": where})


def _options(raw: Any) -> DocumentOptions:
    if raw is None:
        return DocumentOptions()
    if not isinstance(raw, dict):
        raise ParseError("options must be an object")
    unknown = set(raw) - {"assume_group", "closure_cap"}
    if unknown:
        raise ParseError(f"unknown options: {sorted(unknown)}", witnesses={"options": sorted(unknown)})
    assume = raw.get("assume_group")
    if assume is not None and not isinstance(assume, bool):
        raise ParseError("options.assume_group must be true or false")
    cap = raw.get("closure_cap")
    if cap is not None and (isinstance(cap, bool) or not isinstance(cap, int) or cap < 1):
        raise ParseError("options.closure_cap must be a positive integer")
    return DocumentOptions(assume, cap)


def document_from_dict(data: Any) -> InputDocument:
    if not isinstance(data, dict):
        raise ParseError("document must be a JSON object")
    try:
        kind = DocumentKind(data.get("kind"))
    except ValueError:
        raise ParseError(
            f"unknown document kind {data.get('kind')!r}",
            witnesses={"kind": data.get("kind"), "expected": [k.value for k in DocumentKind]},
        )

    keys = [k for k in PAYLOAD_KEYS[kind] if k in data]
    if len(keys) != 1:
        raise ParseError(
            f"{kind.value} document needs exactly one of {list(PAYLOAD_KEYS[kind])}",
            witnesses={"kind": kind.value},
        )
    key = keys[0]
    extra = set(data) - {"kind", "dimension", "options", key}
    if extra:
        raise ParseError(f"unexpected keys: {sorted(extra)}", witnesses={"keys": sorted(extra)})

    dimension = data.get("dimension")
    if dimension is not None and (isinstance(dimension, bool) or not isinstance(dimension, int) or dimension < 1):
        raise ParseError("dimension must be a positive integer")
    if dimension is None and kind in (DocumentKind.GROUP_SAMPLE, DocumentKind.WREATH_LIST):
        raise ParseError(f"{kind.value} document needs a dimension")

    payload = data[key]
    if not isinstance(payload, list) or not payload:
        raise ParseError(f"{key} must be a nonempty list", witnesses={"key": key})
    options = _options(data.get("options"))

    if kind is DocumentKind.WREATH_LIST:
        wreath = tuple(_wreath(raw, f"{key}[{k}]") for k, raw in enumerate(payload, start=1))
        for k, w in enumerate(wreath, start=1):
            if w.n != dimension:
                raise ParseError(f"{key}[{k}] has degree {w.n}, document dimension is {dimension}",
                                 witnesses={"index": k})
        return InputDocument(kind, dimension, wreath=wreath, options=options, payload_key=key)

    matrices = tuple(_matrix(raw, f"{key}[{k}]") for k, raw in enumerate(payload, start=1))
    if kind is DocumentKind.MATRIX and len(matrices) != 1:
        raise ParseError("matrix document holds exactly one matrix", witnesses={"count": len(matrices)})
    if dimension is not None:
        for k, m in enumerate(matrices, start=1):
            if m.shape != (dimension, dimension):
                raise ParseError(
                    f"{key}[{k}] is {m.rows}x{m.cols}, document dimension is {dimension}",
                    witnesses={"index": k, "shape": [m.rows, m.cols]},
                )
    return InputDocument(kind, dimension, matrices=matrices, options=options, payload_key=key)


def parse_document(text: str) -> InputDocument:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"invalid JSON: {e}", witnesses={"line": e.lineno, "column": e.colno})
    return document_from_dict(data)


def load_document(path: Path) -> InputDocument:
    try:
        text = path.read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as e:
        raise ParseError(f"cannot read {path}: {e}", witnesses={"path": str(path)})
    return parse_document(text)


def serialize_document(doc: InputDocument, indent: int = 2) -> str:
    return json.dumps(doc.to_dict(), indent=indent) + "\n"
