"""Model file loading, validation diagnostics, and print/reload round trips."""

from pathlib import Path

import pytest

import rankrev as rr
from rankrev import ParseError, format_model, load_model, parse_model, resolve_proposition

FIXTURE = Path(__file__).parent / "data" / "fixture.bel"


def test_load_fixture():
    mf = load_model(str(FIXTURE))
    assert mf.universe.worlds == ("AB", "Ab", "aB", "ab")
    assert mf.props["A"] == mf.universe.prop("AB", "Ab")
    assert mf.props["notA"] == mf.universe.prop("aB", "ab")
    assert mf.rpms["r1"] == rr.RankedModel.from_labels(mf.universe, ["aB"], ["AB", "Ab", "ab"])
    assert mf.rpms["r2"].blocks[2] == mf.universe.prop("ab")
    assert mf.rpms["r3"].blocks[0] == mf.props["A"]
    assert mf.ocfs["k1"] == rr.OCF.from_map(
        mf.universe, {"AB": 1, "Ab": 1, "aB": 0, "ab": 2})


def test_explicit_worlds():
    mf = parse_model(
        "atoms P Q\n"
        "world both { P=true Q=true }\n"
        "world neither { P=false Q=false }\n"
        "prop yes = P & Q\n"
    )
    assert mf.universe.worlds == ("both", "neither")
    assert mf.props["yes"] == mf.universe.prop("both")


def test_explicit_set_prop_and_empty_set():
    mf = parse_model("atoms A\nworlds auto\nprop none = { }\nprop all = { A a }\n")
    assert mf.props["none"].is_empty
    assert mf.props["all"].is_full


def _error_of(text):
    with pytest.raises(ParseError) as exc:
        parse_model(text)
    return exc.value


def test_overlapping_blocks_name_partition_and_line():
    err = _error_of("atoms A B\nworlds auto\nrpm bad = [AB Ab] [Ab aB ab]\n")
    assert "not a partition" in str(err)
    assert err.line == 3


def test_non_normalized_ocf():
    err = _error_of("atoms A\nworlds auto\nocf k = { A:1 a:2 }\n")
    assert "not normalized" in str(err)
    assert err.line == 3


def test_duplicate_names():
    assert "duplicate" in str(_error_of("atoms A\nworlds auto\nprop p = A\nprop p = ~A\n"))
    assert "duplicate" in str(_error_of(
        "atoms A\nworlds auto\nrpm r = [A a]\nrpm r = [a A]\n"))
    assert "already declared" in str(_error_of("atoms A B\natoms C\nworlds auto\n"))


def test_unknown_references():
    assert "unknown world" in str(_error_of("atoms A\nworlds auto\nprop p = { Z }\n"))
    assert "unknown world" in str(_error_of("atoms A\nworlds auto\nocf k = { A:0 Z:1 }\n"))
    assert "unknown atom" in str(_error_of("atoms A\nworlds auto\nprop p = A & B\n"))


def test_declaration_order_enforced():
    assert "atoms" in str(_error_of("worlds auto\n"))
    assert "no worlds declared" in str(_error_of("atoms A\nprop p = A\n"))
    assert "precede" in str(_error_of(
        "atoms A\nworlds auto\nprop p = A\nworld x { A=true }\n"))
    assert "already" in str(_error_of("atoms A\nworlds auto\nworlds auto\n"))


def test_world_line_diagnostics():
    assert "missing value" in str(_error_of("atoms A B\nworld w { A=true }\n"))
    assert "bad truth value" in str(_error_of("atoms A\nworld w { A=yes }\nprop p = A\n"))
    assert "unknown atom" in str(_error_of("atoms A\nworld w { B=true }\nprop p = A\n"))


def test_no_worlds_at_all():
    assert "no worlds" in str(_error_of("atoms A B\n"))
    assert "no worlds" in str(_error_of(""))


def test_missing_file():
    with pytest.raises(rr.InputError):
        load_model("/nonexistent/path.bel")


def test_comments_and_blank_lines():
    mf = parse_model("# header\n\natoms A  # trailing\nworlds auto\n\nprop p = A # tail\n")
    assert mf.props["p"] == mf.universe.prop("A")


def test_expression_error_carries_file_position():
    err = _error_of("atoms A\nworlds auto\nprop p = A &\n")
    assert err.line == 3


def test_format_round_trip():
    original = load_model(str(FIXTURE))
    text = format_model(original)
    reloaded = parse_model(text)
    assert reloaded.universe == original.universe
    assert reloaded.props == original.props
    assert reloaded.rpms == original.rpms
    assert reloaded.ocfs == original.ocfs
    # printing the reloaded file reproduces the same text exactly
    assert format_model(reloaded) == text


def test_resolve_proposition():
    mf = load_model(str(FIXTURE))
    assert resolve_proposition(mf, "A") == mf.props["A"]
    assert resolve_proposition(mf, "A | ~A").is_full
    with pytest.raises(ParseError):
        resolve_proposition(mf, "A & Z")
