"""
Tests for JSON documents and table rendering
"""
import json
from fractions import Fraction

import pytest

from src.cli.serialize import deserialize, detect_kind, from_document, serialize, to_document
from src.core.errors import SerializationError
from src.core.models import schema_for
from src.exactsym import QSeries, SymFunc, VirtualCharacter, h
from src.graphzoo import corolla
from src.hlaurent import HLaurent, StableCharTable, TruncationSpec


class TestJson:
    def test_symfunc_document(self):
        doc = to_document(h(2, 2))
        assert doc == {
            "max_weight": 2,
            "terms": [
                {"partition": [1, 1], "num": "1", "den": "2"},
                {"partition": [2], "num": "1", "den": "2"},
            ],
        }

    def test_canonical_bytes(self):
        raw = json.dumps({"max_weight": 3, "terms": [
            {"partition": [3], "num": "2"},
            {"partition": [1], "num": "-1", "den": "3"},
        ]})
        value = deserialize(raw)
        assert value == SymFunc({(3,): 2, (1,): Fraction(-1, 3)}, 3)
        first = serialize(value)
        assert serialize(deserialize(first)) == first
        assert json.loads(first)["terms"][0]["partition"] == [1]

    def test_duplicate_terms_are_summed(self):
        value = from_document({"max_weight": 2, "terms": [
            {"partition": [2], "num": "1"}, {"partition": [2], "num": "1", "den": "2"}]})
        assert value == SymFunc({(2,): Fraction(3, 2)}, 2)

    def test_unsorted_partition_reports_path(self):
        with pytest.raises(SerializationError) as info:
            from_document({"max_weight": 4, "terms": [{"partition": [1, 3], "num": "1"}]}, "symfunc")
        assert info.value.path == ["terms", 0, "partition"]

    def test_bad_rational_reports_path(self):
        with pytest.raises(SerializationError) as info:
            from_document({"max_weight": 4, "terms": [{"partition": [1], "num": "1", "den": "0"}]})
        assert info.value.path == ["terms", 0, "den"]

    def test_invalid_json(self):
        with pytest.raises(SerializationError):
            deserialize(b"{not json")

    def test_hlaurent_round_trip(self):
        f = HLaurent({(-2, (3,), ()): Fraction(1, 3), (1, (1,), ()): 2},
                     TruncationSpec(max_weight=4, hexp_min_x2=-2))
        assert deserialize(serialize(f)) == f

    def test_table_and_graph_documents(self):
        table = StableCharTable({(0, 3): VirtualCharacter.trivial(3), (1, 1): VirtualCharacter.trivial(1)})
        assert deserialize(serialize(table)) == table
        G = corolla(1, 2)
        assert deserialize(serialize(G), "graph") == G

    @pytest.mark.parametrize("doc,kind", [
        ({"trunc": {"max_weight": 1}, "terms": []}, "hlaurent"),
        ({"var": "hbar", "terms": []}, "qseries"),
        ({"entries": []}, "table"),
        ({"flags": 1, "involution": [0], "vertex_of": [0], "genus": [1]}, "graph"),
        ({"n": 2, "values": []}, "character"),
        ({"max_weight": 1, "terms": []}, "symfunc"),
    ])
    def test_kind_detection(self, doc, kind):
        assert detect_kind(doc) == kind

    def test_schema_lists_rational_fields(self):
        schema = schema_for("symfunc")
        assert "max_weight" in schema["properties"]
        with pytest.raises(SerializationError):
            schema_for("matrix")


class TestTable:
    def test_monomials_rendered_with_brackets(self):
        text = serialize(SymFunc({(3, 1): Fraction(-2, 3)}, 4), "table").decode()
        assert "p[3,1]" in text
        assert "-2/3" in text

    def test_half_integer_hbar_powers(self):
        text = serialize(QSeries({(3, 0): 1, (2, 0): 5}), "table").decode()
        assert "3/2" in text
        assert "hbar power" in text

    def test_unknown_format(self):
        with pytest.raises(SerializationError):
            serialize(h(2, 2), "yaml")
