"""JSON documents for every object kind, plus DOT export.

Each document is a single JSON object with a ``kind`` field, emitted on one
line with sorted keys so identical values always produce identical bytes.
"""

from __future__ import annotations

import json
import warnings
from typing import Any

from .coding import PolymatroidMapping, VectorLinearCode
from .constructor import ChoiceScript
from .ff import FqMatrix
from .matroid import Matroid
from .network import Network, NetworkError, validate
from .polymatroid import RankTable, check_rank_axioms
from .representation import Representation

KINDS = ("polymatroid", "matroid", "representation", "network", "code", "mapping", "script")


class FormatError(ValueError):
    """Malformed document: bad JSON, unknown kind, or a missing/ill-shaped field."""


class AxiomWarning(UserWarning):
    """A parsed rank table does not satisfy the polymatroid axioms."""


def _dumps(obj: dict) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n"


def _field(doc: dict, name: str, kind: type | tuple[type, ...]) -> Any:
    if name not in doc:
        raise FormatError(f"{doc.get('kind', 'document')}: missing field '{name}'")
    value = doc[name]
    if not isinstance(value, kind) or isinstance(value, bool):
        raise FormatError(f"{doc.get('kind', 'document')}: field '{name}' has type {type(value).__name__}")
    return value


def _ints(value: Any, where: str) -> list[int]:
    if not isinstance(value, list) or not all(isinstance(x, int) and not isinstance(x, bool) for x in value):
        raise FormatError(f"{where}: expected a list of integers")
    return value


def _choices(value: Any, where: str) -> list[tuple[int, list[int]]]:
    if not isinstance(value, list):
        raise FormatError(f"{where}: expected a list of [i, [u...]] pairs")
    out = []
    for j, pair in enumerate(value):
        if not (isinstance(pair, list) and len(pair) == 2 and isinstance(pair[0], int)):
            raise FormatError(f"{where}[{j}]: expected [i, [u...]]")
        out.append((pair[0], _ints(pair[1], f"{where}[{j}][1]")))
    return out


# -- emit ----------------------------------------------------------------------

def emit(obj: Any) -> str:
    """Serialize any supported value to its one-line document."""
    if isinstance(obj, RankTable):
        return _dumps({"kind": "polymatroid", "n": obj.n, "rank": [int(x) for x in obj.values]})
    if isinstance(obj, Matroid):
        if obj.presentation == "rank":
            return _dumps({"kind": "matroid", "n": obj.n, "rank": [int(x) for x in obj.rank.values]})
        sets = [list(s) for s in obj.independent_sets()]
        return _dumps({"kind": "matroid", "n": obj.n, "independent": sets})
    if isinstance(obj, Representation):
        mats = [[list(c) for c in m.columns()] for m in obj.matrices]
        return _dumps({"kind": "representation", "q": obj.field.p, "rows": obj.rows, "matrices": mats})
    if isinstance(obj, Network):
        return _dumps({
            "kind": "network",
            "nodes": list(obj.nodes),
            "inputs": [{"edge": s.edge, "head": s.head, "msg": s.msg} for s in obj.inputs],
            "edges": [{"id": e.id, "tail": e.tail, "head": e.head} for e in obj.edges],
            "demands": [{"node": d.node, "msg": d.msg} for d in obj.demands],
        })
    if isinstance(obj, VectorLinearCode):
        enc = {str(e): list(m.entries) for e, m in obj.encodings.items()}
        return _dumps({"kind": "code", "q": obj.field.p, "k": obj.k, "m": obj.m, "encodings": enc})
    if isinstance(obj, PolymatroidMapping):
        return _dumps({"kind": "mapping", "f": {str(e): i for e, i in obj.f.items()}})
    if isinstance(obj, ChoiceScript):
        return _dumps({
            "kind": "script",
            "step1": list(obj.step1),
            "step2": [[i, list(u)] for i, u in obj.step2],
            "step3": [[i, list(u)] for i, u in obj.step3],
        })
    raise TypeError(f"cannot serialize {type(obj).__name__}")


# -- parse ---------------------------------------------------------------------

def load_document(text: str) -> dict:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"line {exc.lineno} column {exc.colno}: {exc.msg}") from None
    if not isinstance(doc, dict):
        raise FormatError("document must be a JSON object")
    kind = doc.get("kind")
    if kind not in KINDS:
        raise FormatError(f"unknown kind {kind!r}; expected one of {', '.join(KINDS)}")
    return doc


def parse(text: str, expect: str | None = None, *, check: bool = True) -> Any:
    """Parse a document, checking its kind against ``expect`` when given.

    Networks are validated unless ``check`` is false (an invalid network is
    an error, raised as :class:`NetworkError`); rank tables failing the
    axioms only trigger an :class:`AxiomWarning`.
    """
    doc = load_document(text)
    if expect is not None and doc["kind"] != expect:
        raise FormatError(f"expected a {expect} document, got {doc['kind']}")
    if doc["kind"] == "network":
        return _parse_network(doc, check)
    return _PARSERS[doc["kind"]](doc)


def _parse_polymatroid(doc: dict) -> RankTable:
    n = _field(doc, "n", int)
    rank = _ints(_field(doc, "rank", list), "polymatroid.rank")
    if len(rank) != 1 << n:
        raise FormatError(f"polymatroid.rank: expected {1 << n} entries for n={n}, got {len(rank)}")
    t = RankTable(n, rank)
    verdict = check_rank_axioms(t)
    if not verdict:
        warnings.warn(f"rank table fails the polymatroid axioms: {verdict}", AxiomWarning, stacklevel=3)
    return t


def _parse_matroid(doc: dict) -> Matroid:
    n = _field(doc, "n", int)
    if "rank" in doc:
        rank = _ints(doc["rank"], "matroid.rank")
        if len(rank) != 1 << n:
            raise FormatError(f"matroid.rank: expected {1 << n} entries for n={n}")
        return Matroid(n, rank=RankTable(n, rank))
    sets = _field(doc, "independent", list)
    return Matroid(n, independent=[_ints(s, f"matroid.independent[{j}]") for j, s in enumerate(sets)])


def _parse_representation(doc: dict) -> Representation:
    q = _field(doc, "q", int)
    rows = _field(doc, "rows", int)
    mats = []
    for j, cols in enumerate(_field(doc, "matrices", list)):
        if not isinstance(cols, list):
            raise FormatError(f"representation.matrices[{j}]: expected a list of columns")
        for c, col in enumerate(cols):
            if len(_ints(col, f"representation.matrices[{j}][{c}]")) != rows:
                raise FormatError(f"representation.matrices[{j}][{c}]: column length {len(col)} != rows {rows}")
        mats.append(FqMatrix.from_columns(cols, rows))
    try:
        return Representation(q, mats, rows)
    except ValueError as exc:
        raise FormatError(f"representation: {exc}") from None


def _parse_network(doc: dict, check: bool = True) -> Network:
    try:
        net = Network(
            _field(doc, "nodes", list),
            [(s["edge"], s["head"], s["msg"]) for s in _field(doc, "inputs", list)],
            [(e["id"], e["tail"], e["head"]) for e in _field(doc, "edges", list)],
            [(d["node"], d["msg"]) for d in _field(doc, "demands", list)],
        )
    except (KeyError, TypeError) as exc:
        raise FormatError(f"network: malformed entry ({exc})") from None
    verdict = validate(net) if check else None
    if verdict is not None and not verdict:
        raise NetworkError(f"invalid network: {verdict}")
    return net


def _parse_code(doc: dict) -> VectorLinearCode:
    q, k, m = (_field(doc, x, int) for x in ("q", "k", "m"))
    enc = {}
    for key, entries in _field(doc, "encodings", dict).items():
        vals = _ints(entries, f"code.encodings[{key}]")
        if len(vals) != m * k * k:
            raise FormatError(f"code.encodings[{key}]: expected {m * k * k} entries, got {len(vals)}")
        enc[int(key)] = FqMatrix(m * k, k, tuple(vals))
    return VectorLinearCode(q, k, m, enc)


def _parse_mapping(doc: dict) -> PolymatroidMapping:
    f = _field(doc, "f", dict)
    if not all(isinstance(v, int) for v in f.values()):
        raise FormatError("mapping.f: values must be integers")
    return PolymatroidMapping({int(k): v for k, v in f.items()})


def _parse_script(doc: dict) -> ChoiceScript:
    return ChoiceScript(
        _ints(_field(doc, "step1", list), "script.step1"),
        _choices(doc.get("step2", []), "script.step2"),
        _choices(doc.get("step3", []), "script.step3"),
    )


_PARSERS = {
    "polymatroid": _parse_polymatroid,
    "matroid": _parse_matroid,
    "representation": _parse_representation,
    "network": _parse_network,
    "code": _parse_code,
    "mapping": _parse_mapping,
    "script": _parse_script,
}


# -- DOT -----------------------------------------------------------------------

def _quote(s: str) -> str:
    return '"' + str(s).replace("\\", "\\\\").replace('"', '\\"').replace("\n", "\\n") + '"'


def _column_summary(m: FqMatrix) -> str:
    return " ".join("".join(str(x) for x in col) for col in m.columns())


def export_dot(net: Network, code: VectorLinearCode | None = None) -> str:
    """DOT digraph of ``net``.

    Every input edge is drawn from a box labelled with its message; sinks
    are labelled with the messages they demand. With a code, each edge is
    annotated with the columns of its global encoding matrix.
    """
    if not net.nodes and not net.inputs:
        return "digraph {}\n"
    lines = ["digraph {", "  rankdir=TB;"]
    for s in sorted(net.inputs, key=lambda s: s.msg):
        lines.append(f"  {_quote(f'x{s.msg}')} [shape=box, label={_quote(f'x{s.msg}')}];")
    for v in net.nodes:
        wants = net.demands_at(v)
        if wants:
            label = f"{v}\ndemands " + ",".join(f"x{j}" for j in wants)
            lines.append(f"  {_quote(v)} [shape=doublecircle, label={_quote(label)}];")
        else:
            lines.append(f"  {_quote(v)} [shape=circle];")

    def attrs(eid: int) -> str:
        parts = [f"label={_quote(str(eid) if code is None else f'{eid}: ' + _column_summary(code[eid]))}"]
        return " [" + ", ".join(parts) + "]"

    for s in sorted(net.inputs, key=lambda s: s.msg):
        lines.append(f"  {_quote(f'x{s.msg}')} -> {_quote(s.head)}{attrs(s.edge)};")
    for e in net.edges:
        lines.append(f"  {_quote(e.tail)} -> {_quote(e.head)}{attrs(e.id)};")
    lines.append("}")
    return "\n".join(lines) + "\n"


__all__ = [
    "AxiomWarning",
    "FormatError",
    "KINDS",
    "emit",
    "export_dot",
    "load_document",
    "parse",
]
