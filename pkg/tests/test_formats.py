import pytest

from bckcodes import BCKFunction, BlockCode, derived_order, poset_to_bck
from bckcodes.catalog import (
    BCK5_CHAIN_DIAMOND,
    BCK5_TWO_CHAINS,
    FOUR_ELEMENT_POSET,
    LINEAR_CODE_4,
    TWO_CHAINS_POSET,
)
from bckcodes.formats import (
    FormatError,
    dump_algebra,
    dump_code,
    dump_poset,
    parse_algebra,
    parse_code,
    parse_poset,
)


def test_algebra_file(data):
    af = parse_algebra((data / "bck5_chain_diamond.alg").read_text())
    assert af.table == BCK5_CHAIN_DIAMOND
    assert af.function is None and af.A is None
    af = parse_algebra((data / "bck5_two_chains.alg").read_text())
    assert af.table == BCK5_TWO_CHAINS
    assert af.function == BCKFunction.identity(5)


def test_algebra_round_trip():
    text = dump_algebra(BCK5_TWO_CHAINS, BCKFunction([0, 0, 3]), A=[3, 4], B=[1], comments=["hi"])
    af = parse_algebra(text)
    assert af.table == BCK5_TWO_CHAINS
    assert af.function.values == (0, 0, 3)
    assert af.A == (3, 4) and af.B == (1,)


def test_algebra_sets_accept_display_labels():
    af = parse_algebra("algebra 2\n0 0\n1 0\nA w2\nB θ\n")
    assert af.A == (1,) and af.B == (0,)


@pytest.mark.parametrize(
    "text, line",
    [
        ("", None),
        ("poset 2\n", 1),
        ("algebra 2\n0 0\n1 2\n", 3),
        ("algebra 2\n0 0\n1\n", 3),
        ("algebra 2\n0 0\n1 x\n", 3),
        ("algebra 2\n0 0\n", None),
        ("# c\nalgebra 2\n0 0\n1 0\nmap 0 2\n", 5),
        ("algebra 2\n0 0\n1 0\nbogus\n", 4),
        ("algebra 2\n0 0\n1 0\nA w9\n", 4),
    ],
)
def test_algebra_errors_carry_line_numbers(text, line):
    with pytest.raises(FormatError) as err:
        parse_algebra(text)
    assert err.value.line == line


def test_poset_formats(data):
    p = parse_poset((data / "chain_diamond.poset").read_text())
    assert p == derived_order(BCK5_CHAIN_DIAMOND)
    assert parse_poset((data / "two_chains.poset").read_text()) == TWO_CHAINS_POSET
    q = parse_poset((data / "four_element.poset").read_text())
    assert q == FOUR_ELEMENT_POSET and q.labels == ("A", "B", "C", "D")


def test_poset_round_trip():
    for p in (TWO_CHAINS_POSET, FOUR_ELEMENT_POSET):
        assert parse_poset(dump_poset(p)) == p
        assert parse_poset(dump_poset(p)).labels == p.labels


@pytest.mark.parametrize(
    "text",
    [
        "poset 2\nmatrix\n11\n",
        "poset 2\nmatrix\n11\n11\n",
        "poset 2\nrows\n",
        "poset 2\ncovers\n0 5\n",
        "poset 2\ncovers\n0 1\n1 0\n",
        "poset 2\nlabels a\nmatrix\n10\n01\n",
    ],
)
def test_poset_errors(text):
    with pytest.raises(FormatError):
        parse_poset(text)


def test_code_format(data):
    c = parse_code((data / "linear4.code").read_text())
    assert c == LINEAR_CODE_4
    assert parse_code(dump_code(c)) == c
    assert parse_code("# only a comment\n\n") == BlockCode([])
    assert parse_code("01  # trailing\n10\n").strings() == ["01", "10"]
    with pytest.raises(FormatError) as err:
        parse_code("01\n011\n")
    assert err.value.line == 2
    with pytest.raises(FormatError):
        parse_code("0a\n")


def test_bck_of_poset_round_trips_through_text():
    t = poset_to_bck(TWO_CHAINS_POSET)
    assert parse_algebra(dump_algebra(t)).table == t
