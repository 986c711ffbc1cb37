"""Acceptance criteria, one check each.

Every check prints a ``PASS``/``FAIL`` line. Run under pytest, or directly
with ``python tests/test_acceptance.py`` for the summary alone.
"""
import io
import sys
import tempfile
import timeit
from contextlib import redirect_stderr, redirect_stdout
from itertools import combinations
from pathlib import Path

import numpy as np
import pytest

ROOT = Path(__file__).resolve().parents[1]
if __name__ == "__main__":
    sys.path.insert(0, str(ROOT / "src"))

from bckcodes import (  # noqa: E402
    BCKFunction,
    BlockCode,
    Codeword,
    all_posets,
    certify_group,
    code_to_bck,
    derived_order,
    generate_code,
    hamming_distance,
    leq_c,
    lex_sort,
    min_distance,
    minimum,
    poset_to_bck,
    poset_to_code,
    recover_code,
    verify_bci,
    verify_bck,
    verify_closed_right_ideal,
    xor_group,
)
from bckcodes.catalog import BCK5_CHAIN_DIAMOND, BCK5_TWO_CHAINS, LINEAR_CODE_4  # noqa: E402
from bckcodes.cli import main  # noqa: E402
from bckcodes.formats import parse_algebra, parse_code, parse_poset  # noqa: E402
from bckcodes.poset import Poset  # noqa: E402

DATA = ROOT / "tests" / "data"

CHAIN_DIAMOND_WORDS = ["11111", "01111", "00101", "00011", "00001"]
TWO_CHAINS_WORDS = ["11111", "01010", "00101", "00010", "00001"]
FOUR_ELEMENT_WORDS = ["1000", "1100", "1110", "1101"]

# group table printed with labels θ, A, B, C
XOR_TABLE_LABELS = """
θ A B C
A θ C B
B C θ A
C B A θ
"""

EXTENDED_MATRIX_ROWS = """
111111111 010000011 001000010 000100001 000010000
000001000 000000100 000000010 000000001
""".split()

# reconstructed algebra printed with labels θ, w2..w9
RECONSTRUCTED_LABELS = """
θ  θ  θ  θ  θ  θ  θ  θ  θ
w2 θ  w2 w2 w2 w2 w2 θ  θ
w3 w3 θ  w3 w3 w3 w3 θ  w3
w4 w4 w4 θ  w4 w4 w4 w4 θ
w5 w5 w5 w5 θ  w5 w5 w5 w5
w6 w6 w6 w6 w6 θ  w6 w6 w6
w7 w7 w7 w7 w7 w7 θ  w7 w7
w8 w8 w8 w8 w8 w8 w8 θ  w8
w9 w9 w9 w9 w9 w9 w9 w9 θ
"""


def cli(*argv):
    out, err = io.StringIO(), io.StringIO()
    with redirect_stdout(out), redirect_stderr(err):
        status = main([str(a) for a in argv])
    return status, out.getvalue()


def _labels(text):
    return [line.split() for line in text.strip().splitlines()]


def criterion_01():
    """code from the chain-diamond algebra, identity BCK-function, < 1 ms"""
    status, out = cli("algebra-to-code", "--identity", DATA / "bck5_chain_diamond.alg")
    assert status == 0 and out.split() == CHAIN_DIAMOND_WORDS
    f = BCKFunction.identity(5)
    best = min(timeit.repeat(lambda: generate_code(BCK5_CHAIN_DIAMOND, f), number=20, repeat=10)) / 20
    assert best < 1e-3, f"{best * 1e3:.3f} ms"


def criterion_02():
    """code from the two-chains algebra"""
    status, out = cli("algebra-to-code", "--identity", DATA / "bck5_two_chains.alg")
    assert status == 0 and out.split() == TWO_CHAINS_WORDS


def criterion_03():
    """poset-to-code on the three cut-table posets"""
    for fname, words in [
        ("chain_diamond.poset", CHAIN_DIAMOND_WORDS),
        ("two_chains.poset", TWO_CHAINS_WORDS),
        ("four_element.poset", FOUR_ELEMENT_WORDS),
    ]:
        status, out = cli("poset-to-code", DATA / fname)
        assert status == 0 and out.split() == words, fname


def criterion_04():
    """algebra code equals poset code for every labeled poset with minimum, n <= 5"""
    checked = 0
    for n in range(1, 6):
        for p in all_posets(n):
            theta = minimum(p)
            if theta is None:
                continue
            # poset_to_bck moves the minimum to index 0
            order = [theta] + [i for i in range(n) if i != theta]
            moved = Poset(p.leq[np.ix_(order, order)])
            t = poset_to_bck(p)
            assert verify_bck(t).is_bck
            assert generate_code(t, BCKFunction.identity(n)) == poset_to_code(moved)
            checked += 1
    assert checked == 1 + 2 * 1 + 3 * 3 + 4 * 19 + 5 * 219
    chain_p = parse_poset((DATA / "chain_diamond.poset").read_text())
    chains_p = parse_poset((DATA / "two_chains.poset").read_text())
    assert poset_to_code(chain_p) == generate_code(BCK5_CHAIN_DIAMOND)
    assert poset_to_code(chains_p) == generate_code(BCK5_TWO_CHAINS)
    assert poset_to_code(chain_p).strings() == CHAIN_DIAMOND_WORDS
    assert poset_to_code(chains_p).strings() == TWO_CHAINS_WORDS


def criterion_05():
    """XOR group table, abelian group, BCI but not BCK"""
    status, out = cli("code-group", DATA / "linear4.code")
    assert status == 0
    t = parse_algebra(out).table
    names = ["θ", "A", "B", "C"]
    assert [[names[t.mul(x, y)] for y in range(4)] for x in range(4)] == _labels(XOR_TABLE_LABELS)
    assert t == xor_group(LINEAR_CODE_4)
    assert certify_group(t).is_abelian_group
    assert verify_bci(t).is_bci
    report = verify_bck(t)
    assert not report.is_bck and list(report.failures()) == ["BCK-5"]


def criterion_06():
    """extended matrix, bit for bit"""
    status, out = cli("extended-matrix", DATA / "linear4.code")
    assert status == 0 and out.split() == EXTENDED_MATRIX_ROWS


def criterion_07():
    """reconstructed Cayley table, entry for entry"""
    status, out = cli("code-to-bck", DATA / "linear4.code")
    assert status == 0
    t = parse_algebra(out).table
    label = lambda i: "θ" if i == 0 else f"w{i + 1}"
    assert [[label(t.mul(x, y)) for y in range(9)] for x in range(9)] == _labels(RECONSTRUCTED_LABELS)


def _saved(text):
    tmp = tempfile.NamedTemporaryFile("w", suffix=".alg", encoding="utf-8", delete=False)
    with tmp:
        tmp.write(text)
    return Path(tmp.name)


def criterion_08():
    """recovery with A = w6..w9, B = w2..w5"""
    status, out = cli("code-to-bck", DATA / "linear4.code")
    # drop the A/B lines so the sets come only from the command line
    path = _saved("\n".join(l for l in out.splitlines() if not l.startswith(("A ", "B "))))
    try:
        status, out = cli("recover", path, "--A", "w6,w7,w8,w9", "--B", "w2,w3,w4,w5")
    finally:
        path.unlink()
    assert status == 0
    assert out.split() == ["0011", "0010", "0001", "0000"]
    assert parse_code(out).as_set() == LINEAR_CODE_4.as_set()


def criterion_09():
    """closed right ideal, plus exhaustive sweep over codes with m, q <= 3"""
    status, out = cli("code-to-bck", DATA / "linear4.code")
    path = _saved(out)
    try:
        status, out = cli("check-ideal", path, "--subset", "θ,w6,w7,w8,w9")
    finally:
        path.unlink()
    assert status == 0 and "closed ideal: true" in out
    swept = 0
    for q in range(1, 4):
        space = [format(i, f"0{q}b") for i in range(2**q)]
        for m in range(1, 4):
            for words in combinations(space, m):
                c = BlockCode(words)
                t, A, B = code_to_bck(c)
                assert verify_bck(t).is_bck
                assert recover_code(t, A, B) == lex_sort(c, descending=True)
                assert verify_closed_right_ideal(t, m, q)
                swept += 1
    assert swept == (2 + 1) + (4 + 6 + 4) + (8 + 28 + 56)


def criterion_10():
    """Boolean ring verdicts"""
    status, out = cli("boolean-ring", DATA / "linear4.code")
    assert status == 0
    assert out.splitlines() == ["Q={∅,{4},{3},{3,4}}", "subring=true"]
    status, out = cli("boolean-ring", DATA / "even3.code")
    lines = out.splitlines()
    assert status == 1 and lines[1] == "subring=false"
    assert "∩" in lines[2] and "{1,2} ∩ {1,3} = {1}" in lines[2]


def criterion_11():
    """minimum distance 1 for both algebra codes"""
    for fname in ("chain_diamond.code", "two_chains.code"):
        status, out = cli("min-distance", DATA / fname)
        assert status == 0 and out.splitlines()[0] == "1"
    assert min_distance(BlockCode(CHAIN_DIAMOND_WORDS)) == 1
    assert min_distance(BlockCode(TWO_CHAINS_WORDS)) == 1


def _constructed_tables():
    yield BCK5_CHAIN_DIAMOND
    yield BCK5_TWO_CHAINS
    for n in range(1, 6):
        for p in all_posets(n):
            if minimum(p) is not None:
                yield poset_to_bck(p)
    for q in range(1, 4):
        words = [format(i, f"0{q}b") for i in range(2**q)]
        for m in range(1, 4):
            for combo in combinations(words, m):
                yield code_to_bck(BlockCode(combo)).table


def criterion_12():
    """metric, codeword-order and derived-order property suites"""
    rng = np.random.default_rng(20261014)
    for _ in range(1000):
        n = int(rng.integers(1, 17))
        u, v, w = (Codeword(rng.integers(0, 2, n)) for _ in range(3))
        d = hamming_distance
        assert (d(u, v) == 0) == (u == v)
        assert d(u, v) == d(v, u)
        assert d(u, w) <= d(u, v) + d(v, w)
    for _ in range(200):
        n = int(rng.integers(1, 7))
        k = int(rng.integers(1, min(2**n, 12) + 1))
        picks = rng.choice(2**n, size=k, replace=False)
        ws = [Codeword(format(int(i), f"0{n}b")) for i in picks]
        for a in ws:
            assert leq_c(a, a)
            for b in ws:
                if a != b:
                    assert not (leq_c(a, b) and leq_c(b, a))
                for c in ws:
                    if leq_c(a, b) and leq_c(b, c):
                        assert leq_c(a, c)
    for t in _constructed_tables():
        assert verify_bck(t).is_bck
        rel = derived_order(t).leq
        n = t.n
        assert rel.diagonal().all()
        assert not (rel & rel.T & ~np.eye(n, dtype=bool)).any()
        assert not (rel[:, :, None] & rel[None, :, :] & ~rel[:, None, :]).any()
        assert rel[0].all()


CRITERIA = [globals()[f"criterion_{i:02d}"] for i in range(1, 13)]


def _run(check):
    try:
        check()
    except AssertionError as exc:
        return False, str(exc)
    return True, ""


@pytest.mark.parametrize("check", CRITERIA, ids=lambda f: f.__name__)
def test_criterion(check, capsys):
    ok, detail = _run(check)
    with capsys.disabled():
        print(f"\n{'PASS' if ok else 'FAIL'} {check.__name__[-2:]}: {check.__doc__}" + (f" [{detail}]" if detail else ""))
    assert ok, detail


if __name__ == "__main__":
    failed = 0
    for check in CRITERIA:
        ok, detail = _run(check)
        failed += not ok
        print(f"{'PASS' if ok else 'FAIL'} {check.__name__[-2:]}: {check.__doc__}" + (f" [{detail}]" if detail else ""))
    sys.exit(1 if failed else 0)
