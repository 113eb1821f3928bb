"""Brute-force reference implementations: definitional goldens and guards."""

import ast
import pathlib

import pytest

from richlab.oracle import (
    OracleLimitError,
    oracle_closure,
    oracle_complete_returns,
    oracle_defect,
    oracle_factor_set,
    oracle_is_rich,
    oracle_lpp,
    oracle_lppp,
    oracle_lpps,
    oracle_lps,
    oracle_palindrome_set,
    oracle_switch_pairs,
    oracle_switches,
)
from richlab.words import Word

W = Word.parse

W37 = W("2110112333211011454110116110116778776")
WG = W("5112211311001131133114111146")


def test_palindrome_set_goldens():
    assert oracle_palindrome_set(Word("")) == frozenset([Word("")])
    got = {u.text for u in oracle_palindrome_set(W("0110"))}
    assert got == {"", "0", "1", "11", "0110"}
    # non-rich length-8 word: strictly fewer than 9 distinct palindromes
    assert len(oracle_palindrome_set(W("00110100"))) < 9
    assert len(oracle_palindrome_set(W37)) == len(W37) + 1


def test_factor_set_golden():
    got = {u.text for u in oracle_factor_set(W("0110100"), 3)}
    assert got == {"011", "110", "101", "010", "100"}
    assert oracle_factor_set(W("01"), 0) == frozenset([Word("")])


def test_richness_and_defect_goldens():
    assert oracle_is_rich(W("1100100010011001010"))
    assert not oracle_is_rich(W("00110100"))
    assert oracle_defect(Word("")) == 0
    assert oracle_defect(W("00110100")) >= 1


def test_switches_golden():
    got = {rec.word.text for rec in oracle_switches(WG, 8)}
    assert got == {"51122113", "31133114", "14111146"}
    assert {rec.word.text for rec in oracle_switches(W37, 7)} == {
        "2110114", "4110116",
    }
    assert oracle_switches(W37, 2) == frozenset()


def test_switch_pairs_golden():
    pairs = {(p.core.text, p.letter) for p in oracle_switch_pairs(WG, 8)}
    assert pairs == {
        ("112211", 3), ("112211", 5),
        ("113311", 3), ("113311", 4),
        ("411114", 1), ("411114", 6),
    }


def test_complete_returns_goldens():
    got = oracle_complete_returns(W("321234321252126"), W("212"))
    assert W("212343212") in got
    assert oracle_complete_returns(W("00"), W("0")) == frozenset([W("00")])
    assert oracle_complete_returns(W("0110"), W("01")) == frozenset()


def test_lps_family_goldens():
    assert oracle_lps(W("0110100")) == W("00")
    assert oracle_lpp(W("1232")) == W("1")
    assert oracle_lpps(W("112211")) == W("11")
    assert oracle_lppp(W("112211")) == W("11")
    assert oracle_lpps(W("5")) == Word("", 6)


def test_closure_goldens():
    assert oracle_closure(W("011")) == W("0110")
    assert oracle_closure(W("12321")) == W("12321")


def test_length_cap_honours_environment(monkeypatch):
    monkeypatch.setenv("RICHLAB_MAX_WORD_LEN", "4")
    with pytest.raises(OracleLimitError):
        oracle_palindrome_set(W("00000"))
    oracle_palindrome_set(W("0000"))  # at the cap: allowed
    monkeypatch.setenv("RICHLAB_MAX_WORD_LEN", "not-a-number")
    oracle_palindrome_set(W("00000"))  # unparseable: default cap applies


def test_oracle_module_is_independent_of_fast_paths():
    # the reference side must not import the code it is checking
    src = pathlib.Path("src/richlab/oracle.py").read_text()
    names = set()
    for node in ast.walk(ast.parse(src)):
        if isinstance(node, ast.ImportFrom) and node.level:
            names.add(node.module)
        elif isinstance(node, ast.Import):
            names.update(alias.name for alias in node.names)
    assert names & {"paltree", "structures", "enumeration", "bounds"} == set()
    assert "words" in names and "records" in names
