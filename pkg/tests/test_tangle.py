from pathlib import Path

import pytest

from hennings.tangle import (
    TangleSemanticError,
    TangleSyntaxError,
    borromean,
    connected_sum,
    curl,
    from_morse,
    juxtapose,
    linking_matrix,
    parse,
    print_tangle,
    trefoil_framed,
    trivial,
    unknot_framed,
    with_framings,
    zero_framed,
)

CORPUS = Path(__file__).resolve().parent.parent / "corpus"


def builders():
    return [
        trivial(1),
        trivial(3),
        curl(1),
        curl(-1, "left"),
        unknot_framed(4),
        unknot_framed(-2),
        borromean(),
        trefoil_framed(1),
        connected_sum(unknot_framed(2), trefoil_framed(-1)),
        with_framings(borromean(), [1, -1, 2]),
    ]


def test_parse_trivial():
    d = parse("tangle s3 { component: [] }")
    assert d.ncomponents == 1 and d.components == ((),)
    assert linking_matrix(d) == [[0]]


def test_parse_positive_curl():
    d = parse("tangle c {\n  component: [U+a, minLR, maxRL, O+a]\n}\n")
    assert linking_matrix(d) == [[1]]


def test_unpaired_crossing():
    with pytest.raises(TangleSemanticError):
        parse("tangle x { component: [O+a] }")


def test_sign_mismatch():
    with pytest.raises(TangleSemanticError):
        parse("tangle x {\n component: [O+a, U-a]\n}")


def test_syntax_error_position():
    with pytest.raises(TangleSyntaxError) as exc:
        parse("tangle x {\n  component: [O+a, Q+b]\n}")
    assert exc.value.line == 2
    assert exc.value.col == 20


def test_missing_brace():
    with pytest.raises(TangleSyntaxError):
        parse("tangle x {\n component: []\n")


@pytest.mark.parametrize("d", builders(), ids=lambda d: d.name)
def test_print_parse_roundtrip(d):
    assert parse(print_tangle(d)) == d


@pytest.mark.parametrize("k", range(-4, 5))
def test_unknot_framing(k):
    assert linking_matrix(unknot_framed(k)) == [[k]]


def test_linking_matrices():
    assert linking_matrix(borromean()) == [[0] * 3 for _ in range(3)]
    assert linking_matrix(trefoil_framed(1)) == [[1]]
    assert linking_matrix(trefoil_framed(-1)) == [[-1]]
    clasp = from_morse([("cap", 0), ("cap", 1), ("x", 2, "R"), ("x", 1, "L")])
    L = linking_matrix(clasp)
    assert L[0][1] == L[1][0] and abs(L[0][1]) == 1


def test_linking_matrix_ignores_ids():
    d = borromean()
    ids = {c: f"z{c}" for c in d.crossings()}
    assert linking_matrix(d.relabel(ids)) == linking_matrix(d)


def test_connected_sum_block_diagonal():
    a, b = with_framings(borromean(), [1, 1, 1]), unknot_framed(-3)
    L = linking_matrix(connected_sum(a, b))
    assert L == [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, -3]]


def test_zero_framed():
    d0, f = zero_framed(trefoil_framed(2))
    assert f == [2]
    assert linking_matrix(d0) == [[0]]


def test_juxtapose_keeps_ids_apart():
    d = juxtapose(curl(1), curl(1))
    assert len(d.crossings()) == 2


def test_corpus_files_parse():
    files = sorted(CORPUS.glob("*.tangle"))
    assert files
    for f in files:
        d = parse(f.read_text())
        assert print_tangle(d) == f.read_text()
