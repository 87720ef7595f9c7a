import json

import pytest

import starxor


def test_formula_values():
    assert starxor.predicted_complexity(2, 2) == 9
    assert starxor.count_rtf(3, 3) == 128
    assert starxor.count_rtf_pinned(4, 4) == 593


def test_monster_and_stx():
    first, second, labels = starxor.monster2(2, [1], 2, [0])
    assert first.letter_count == 16
    assert labels[0] == "([0 0],[0 0])"
    s = starxor.stx(first, second)
    assert starxor.minimal_state_count(s) == 8
    assert starxor.minimized_stx_size(first, second) == 8


def test_witness_and_report():
    first, second, labels = starxor.witness_pair(3, 3)
    assert len(labels) == 17
    assert len(starxor.sigma_prime_names(3, 3)) == 17
    report = starxor.cmd_sc(3, 3, "witness")
    assert report["measured"] == 66
    assert report["verdict"] in {"pass", "fail", "skipped"}


def test_dfa_round_trip():
    a = starxor.Dfa(2, 2, 0, [1], [1, 0, 0, 1], ["a", "b"])
    assert a.accepts([0])
    assert not a.accepts([0, 0])
    assert starxor.Dfa.from_json(a.to_json()) == a
    assert starxor.is_equivalent(a, starxor.minimize(a))
    with pytest.raises(ValueError):
        starxor.Dfa.from_json("{")


def test_tableaux():
    # rows {0,1} and {1}: three corners of the 2x2 rectangle
    assert starxor.has_right_triangle(2, 2, 0b1011)
    assert starxor.saturate(2, 2, 0b1011) == 0b1111


def test_figures_and_exports():
    assert starxor.cmd_verify_figures()["verdict"] == "pass"
    rows = starxor.render_export("alpha", "csv").strip().splitlines()
    assert len(rows) == 26
    assert json.loads(starxor.render_export("witness", "json", 2, 2))["first"]["state_count"] == 2


def test_caps_raise():
    with pytest.raises(starxor.ResourceLimitError):
        starxor.monster2(5, [4], 5, [0])
