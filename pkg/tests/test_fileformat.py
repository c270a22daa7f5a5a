"""Instance documents: parsing, validation errors, round trips."""

import json
import pytest

from menulearn import ParseError, UnknownNameError, dump_document, load_document, loads


MINIMAL = {
    "states": ["w1"],
    "prizes": ["a", "b"],
    "utility": {"a": "1", "b": "0"},
}


def doc(**overrides):
    data = {key: json.loads(json.dumps(value)) for key, value in MINIMAL.items()}
    data.update(overrides)
    return data


class TestParsing:
    def test_minimal_document(self):
        ws = load_document(doc())
        assert ws.instance.states == ("w1",)
        assert ws.instance.utility_of("a") == 1

    def test_malformed_rational(self):
        with pytest.raises(ParseError, match="malformed rational"):
            load_document(doc(utility={"a": "1/0", "b": "0"}))

    def test_float_rejected(self):
        with pytest.raises(ParseError):
            load_document(doc(utility={"a": 0.5, "b": "0"}))

    def test_missing_section(self):
        bad = doc()
        del bad["prizes"]
        with pytest.raises(ParseError, match="missing the required section"):
            load_document(bad)

    def test_act_must_cover_all_states(self):
        bad = doc(
            states=["w1", "w2"],
            menus={"m": [{"w1": {"a": "1"}}]},
        )
        with pytest.raises(ParseError, match="missing states"):
            load_document(bad)

    def test_unknown_prize_in_lottery(self):
        bad = doc(menus={"m": [{"w1": {"zzz": "1"}}]})
        with pytest.raises(ParseError, match="unknown prizes"):
            load_document(bad)

    def test_posterior_over_unknown_state(self):
        bad = doc(info_structures={"pi": [{"posterior": {"nope": "1"}, "weight": "1"}]})
        with pytest.raises(ParseError, match="unknown states"):
            load_document(bad)

    def test_credal_set_requires_known_structures(self):
        bad = doc(credal_sets={"c": ["ghost"]})
        with pytest.raises(ParseError, match="unknown information structure"):
            load_document(bad)

    def test_collection_accepts_names_and_inline_members(self, example1):
        data = dump_document(example1)
        ws = load_document(data)
        assert set(ws.collections) == {"split", "hull"}
        assert len(ws.collection("split")) == 2

    def test_constant_utility_is_a_parse_error(self):
        with pytest.raises(ParseError, match="invalid instance"):
            load_document(doc(utility={"a": "2", "b": "2"}))

    def test_invalid_json_text(self):
        with pytest.raises(ParseError, match="invalid JSON"):
            loads("{not json")


class TestRoundTrip:
    def test_examples_round_trip(self, example1, example2):
        for workspace in (example1, example2):
            reloaded = load_document(dump_document(workspace))
            assert reloaded.instance == workspace.instance
            assert reloaded.menus == workspace.menus
            assert reloaded.info_structures == workspace.info_structures
            assert reloaded.credal_sets == workspace.credal_sets
            assert reloaded.collections == workspace.collections

    def test_serialized_rationals_are_strings(self, example1):
        data = dump_document(example1)
        assert data["utility"]["win"] == "3"
        text = json.dumps(data)
        assert "0.5" not in text  # no decimal leakage anywhere

    def test_lookup_errors(self, example1):
        with pytest.raises(UnknownNameError):
            example1.menu("missing")
        with pytest.raises(UnknownNameError):
            example1.collection("missing")
