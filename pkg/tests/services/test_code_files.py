import pytest

from app.algebra.finite_field import as_ints
from app.core.errors import CodeFileError, TripleViolation
from app.schemes.classical import one_time_pad_scheme
from app.services.code_files import (
    classical_from_text,
    classical_to_text,
    format_matrix,
    parse_matrix,
    read_classical,
    read_triple,
    triple_from_text,
    triple_to_text,
    write_triple,
)

TERNARY_FILE = """\
# doubly-extended RS example
params 3 4 2 2
advance 1 2
C_S
q 3 rows 0 cols 8
C_R
q 3 rows 2 cols 8
1 1 1 0 | 0 0 0 0
0 0 0 0 | 1 1 1 0
"""


def test_format_matrix_marks_the_halves():
    text = format_matrix(3, [[1, 2, 0, 1]], symplectic=True)
    assert text == "q 3 rows 1 cols 4\n1 2 | 0 1"


def test_parse_matrix():
    order, rows = parse_matrix("q 5 rows 2 cols 3\n1 2 3\n4 0 1\n")
    assert order == 5
    assert rows.tolist() == [[1, 2, 3], [4, 0, 1]]


@pytest.mark.parametrize(
    "text, message",
    [
        ("q 3 rows 1\n1 2\n", "expected 'q <q> rows <r> cols <c>'"),
        ("q 3 rows 1 cols 2\n1\n", "1 entries, expected 2"),
        ("q 3 rows 1 cols 2\n1 3\n", "entries must lie in 0..2"),
        ("q 3 rows 1 cols 2\n1 x\n", "expected integers"),
        ("q 3 rows 2 cols 2\n1 0\n", "unexpected end of file"),
        ("q 3 rows 1 cols 2\n1 0\n2 2\n", "trailing content"),
    ],
)
def test_parse_matrix_errors(text, message):
    with pytest.raises(CodeFileError, match=message):
        parse_matrix(text)


def test_errors_carry_line_numbers():
    with pytest.raises(CodeFileError, match="line 3"):
        parse_matrix("# header\nq 3 rows 1 cols 2\n1 7\n")


def test_triple_without_c_max_is_completed(ternary_triple):
    loaded = triple_from_text(TERNARY_FILE)
    assert loaded.completed_c_max
    assert loaded.advance_set == (1, 2)
    assert (loaded.triple.n, loaded.triple.k, loaded.triple.s) == (4, 2, 2)
    assert loaded.triple.c_max == ternary_triple.c_max


def test_triple_text_round_trip(ternary_triple):
    text = triple_to_text(ternary_triple, (1, 2))
    loaded = triple_from_text(text)
    assert not loaded.completed_c_max
    assert loaded.triple.c_max == ternary_triple.c_max
    assert loaded.triple.c_r == ternary_triple.c_r
    assert "advance 1 2" in text


def test_triple_file_errors():
    with pytest.raises(CodeFileError, match="expected 'params q n k s'"):
        triple_from_text("params 3 4 2\n")
    with pytest.raises(CodeFileError, match="missing C_R block"):
        triple_from_text("params 3 4 2 2\nC_S\nq 3 rows 0 cols 8\n")
    with pytest.raises(CodeFileError, match="unknown block"):
        triple_from_text("params 3 4 2 2\nC_X\nq 3 rows 0 cols 8\n")
    with pytest.raises(CodeFileError, match="expected 2n = 8"):
        triple_from_text("params 3 4 2 2\nC_S\nq 3 rows 0 cols 6\nC_R\nq 3 rows 0 cols 6\n")
    with pytest.raises(CodeFileError, match="over GF\\(2\\)"):
        triple_from_text("params 3 4 2 2\nC_S\nq 2 rows 0 cols 8\n")


def test_triple_file_with_wrong_dimensions_is_a_triple_violation():
    text = TERNARY_FILE.replace("params 3 4 2 2", "params 3 4 1 2")
    with pytest.raises(TripleViolation):
        triple_from_text(text)


def test_classical_round_trip():
    pad = one_time_pad_scheme()
    scheme = classical_from_text(classical_to_text(pad))
    assert scheme.k == 1
    assert scheme.c1 == pad.c1
    assert as_ints(scheme.c2.basis).tolist() == [[1, 1]]


def test_classical_file_errors():
    with pytest.raises(CodeFileError, match="expected 'classical q n'"):
        classical_from_text("params 2 2\n")
    with pytest.raises(CodeFileError, match="missing C2 block"):
        classical_from_text("classical 2 2\nC1\nq 2 rows 1 cols 2\n1 0\n")


def test_files_on_disk(tmp_path, ternary_triple):
    path = tmp_path / "ternary.txt"
    write_triple(path, ternary_triple, (1, 2))
    assert read_triple(path).advance_set == (1, 2)
    classical = tmp_path / "pad.txt"
    classical.write_text(classical_to_text(one_time_pad_scheme()), encoding="utf-8")
    assert read_classical(classical).n == 2
    with pytest.raises(CodeFileError, match="cannot read"):
        read_triple(tmp_path / "missing.txt")
