"""
JSON and table serialization of workbench values

JSON is the interchange format: terms are written in canonical order, so
equal values serialize to identical bytes. The table format renders
monomials as p[3,1] with exact rational coefficients.
"""
import json
import logging
from fractions import Fraction
from typing import Any, Dict, List, Optional, Union

from tabulate import tabulate

from ..core.errors import SerializationError
from ..core.models import RationalDoc, parse_document
from ..exactsym.character import VirtualCharacter
from ..exactsym.partitions import format_partition, sort_key
from ..exactsym.series import QSeries
from ..exactsym.symfunc import SymFunc
from ..graphzoo.graph import StableGraph
from ..hlaurent.laurent import HLaurent, TruncationSpec
from ..hlaurent.modular import StableCharTable

logger = logging.getLogger(__name__)

FORMATS = ("json", "table")

Value = Union[SymFunc, VirtualCharacter, HLaurent, QSeries, StableCharTable, StableGraph]


def _rational(value: Fraction) -> str:
    value = Fraction(value)
    return str(value.numerator) if value.denominator == 1 else f"{value.numerator}/{value.denominator}"


def _half(exp2: int) -> str:
    return str(exp2 // 2) if exp2 % 2 == 0 else f"{exp2}/2"


# -- value -> document ----------------------------------------------------------


def symfunc_to_doc(f: SymFunc) -> Dict[str, Any]:
    return {
        "max_weight": f.max_weight,
        "terms": [{"partition": list(p), **RationalDoc.encode(c)} for p, c in f.items()],
    }


def character_to_doc(chi: VirtualCharacter) -> Dict[str, Any]:
    return {
        "n": chi.n,
        "values": [{"cycle_type": list(tau), **RationalDoc.encode(chi.values[tau])}
                   for tau in sorted(chi.values, key=sort_key)],
    }


def hlaurent_to_doc(f: HLaurent) -> Dict[str, Any]:
    trunc = {"max_weight": f.trunc.max_weight, "hexp_min_x2": f.trunc.hexp_min_x2}
    if f.trunc.max_q_weight is not None:
        trunc["max_q_weight"] = f.trunc.max_q_weight
    if f.trunc.hexp_max_x2 is not None:
        trunc["hexp_max_x2"] = f.trunc.hexp_max_x2
    return {
        "trunc": trunc,
        "terms": [{"hexp_x2": h2, "p": list(p), "q": list(q), **RationalDoc.encode(c)}
                  for (h2, p, q), c in f.items()],
    }


def qseries_to_doc(s: QSeries) -> Dict[str, Any]:
    doc: Dict[str, Any] = {"var": "hbar", "half_exponents": True, "prec_x2": s.prec2}
    if s.aux is not None:
        doc["aux"] = s.aux
        doc["aux_max"] = s.aux_max
    doc["terms"] = [{"exp_x2": e, "deg": d, **RationalDoc.encode(c)} for (e, d), c in s.items()]
    return doc


def table_to_doc(table: StableCharTable) -> Dict[str, Any]:
    return {
        "entries": [{"g": g, "n": n, "character": character_to_doc(table.entries[(g, n)])}
                    for g, n in sorted(table.entries)],
    }


def to_document(value: Value) -> Dict[str, Any]:
    """Document (plain JSON data) of a value"""
    if isinstance(value, SymFunc):
        return symfunc_to_doc(value)
    if isinstance(value, VirtualCharacter):
        return character_to_doc(value)
    if isinstance(value, HLaurent):
        return hlaurent_to_doc(value)
    if isinstance(value, QSeries):
        return qseries_to_doc(value)
    if isinstance(value, StableCharTable):
        return table_to_doc(value)
    if isinstance(value, StableGraph):
        return value.to_dict()
    raise SerializationError(f"Cannot serialize values of type {type(value).__name__}")


# -- document -> value ----------------------------------------------------------


def detect_kind(data: Any) -> str:
    """Guess the document kind from its top-level keys"""
    if not isinstance(data, dict):
        raise SerializationError("A document must be a JSON object")
    if "trunc" in data:
        return "hlaurent"
    if "var" in data or "half_exponents" in data:
        return "qseries"
    if "entries" in data:
        return "table"
    if "involution" in data:
        return "graph"
    if "values" in data and "n" in data:
        return "character"
    if "max_weight" in data:
        return "symfunc"
    raise SerializationError("Cannot tell the document kind from its keys")


def from_document(data: Any, kind: Optional[str] = None) -> Value:
    """
    Build a value from decoded JSON

    Args:
        data: decoded JSON document
        kind: document kind; detected from the keys when omitted

    Raises:
        SerializationError: schema violations, reported with their path
    """
    kind = kind or detect_kind(data)
    doc = parse_document(kind, data)
    try:
        if kind == "symfunc":
            return SymFunc(_accumulate((tuple(t.partition), t.value) for t in doc.terms), doc.max_weight)
        if kind == "character":
            return _character(doc)
        if kind == "hlaurent":
            trunc = TruncationSpec(**doc.trunc.model_dump())
            return HLaurent(_accumulate(((t.hexp_x2, tuple(t.p), tuple(t.q)), t.value) for t in doc.terms), trunc)
        if kind == "qseries":
            return QSeries(_accumulate(((t.exp_x2, t.deg), t.value) for t in doc.terms),
                           doc.prec_x2, doc.aux, doc.aux_max)
        if kind == "table":
            return StableCharTable({(e.g, e.n): _character(e.character) for e in doc.entries})
        return StableGraph.from_dict(doc.model_dump(exclude_none=True))
    except SerializationError:
        raise
    except ValueError as exc:
        raise SerializationError(str(exc))


def _accumulate(pairs) -> Dict:
    out: Dict = {}
    for key, value in pairs:
        out[key] = out.get(key, Fraction(0)) + value
    return out


def _character(doc) -> VirtualCharacter:
    return VirtualCharacter(doc.n, _accumulate((tuple(v.cycle_type), v.value) for v in doc.values))


# -- bytes ----------------------------------------------------------------------


def _rows(value: Value) -> (List[str], List[List[str]]):
    if isinstance(value, SymFunc):
        return ["weight", "monomial", "coefficient"], [
            [str(sum(p)), format_partition(p), _rational(c)] for p, c in value.items()]
    if isinstance(value, VirtualCharacter):
        return ["cycle type", "value"], [
            [format_partition(tau).replace("p", "", 1), _rational(value.values[tau])]
            for tau in sorted(value.values, key=sort_key)]
    if isinstance(value, HLaurent):
        return ["hbar power", "p", "q", "coefficient"], [
            [_half(h2), format_partition(p), format_partition(q).replace("p", "q", 1) if q else "",
             _rational(c)] for (h2, p, q), c in value.items()]
    if isinstance(value, QSeries):
        if value.aux is None:
            return ["hbar power", "coefficient"], [[_half(e), _rational(c)] for (e, _), c in value.items()]
        return ["hbar power", value.aux, "coefficient"], [
            [_half(e), str(d), _rational(c)] for (e, d), c in value.items()]
    if isinstance(value, StableCharTable):
        rows = []
        for g, n in sorted(value.entries):
            chi = value.entries[(g, n)]
            for tau in sorted(chi.values, key=sort_key):
                rows.append([str(g), str(n), format_partition(tau).replace("p", "", 1),
                             _rational(chi.values[tau])])
        return ["g", "n", "cycle type", "value"], rows
    if isinstance(value, StableGraph):
        return ["property", "value"], [
            ["vertices", str(value.num_vertices)], ["edges", str(len(value.edges))],
            ["legs", str(value.n)], ["genus", str(value.total_genus)],
            ["euler weight", str(value.euler_weight)], ["tree", str(value.is_tree())]]
    raise SerializationError(f"Cannot tabulate values of type {type(value).__name__}")


def render_table(headers: List[str], rows: List[List[str]]) -> str:
    return tabulate(rows, headers=headers, tablefmt="grid", disable_numparse=True)


def serialize(value: Value, fmt: str = "json") -> bytes:
    """
    Serialize a value

    Args:
        value: any workbench value
        fmt: "json" or "table"

    Returns:
        UTF-8 bytes ending with a newline
    """
    if fmt not in FORMATS:
        raise SerializationError(f"Unknown format '{fmt}', expected one of {FORMATS}")
    if fmt == "json":
        text = json.dumps(to_document(value), indent=2)
    else:
        text = render_table(*_rows(value))
    return (text + "\n").encode("utf-8")


def deserialize(raw: Union[bytes, str], kind: Optional[str] = None) -> Value:
    """Parse JSON bytes into a value"""
    if isinstance(raw, bytes):
        raw = raw.decode("utf-8")
    try:
        data = json.loads(raw)
    except json.JSONDecodeError as exc:
        raise SerializationError(f"Invalid JSON: {exc.msg} at line {exc.lineno}")
    return from_document(data, kind)
