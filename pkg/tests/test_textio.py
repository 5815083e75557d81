import pytest
from hypothesis import given, strategies as st

from latpoly.hollowlab import CATALOG_MATRICES, catalog
from latpoly.textio import (ParseError, PolytopeDocument, parse_document, parse_documents,
                            polytope_from_record, polytope_record)

M9_TEXT = """M9
-1 2 0 0 1
0 0 -1 2 1
0 0 0 0 3
"""


def test_parse_catalog_matrix_verbatim():
    doc = parse_document(M9_TEXT)
    assert doc.name == "M9"
    assert doc.matrix == CATALOG_MATRICES["M9"]
    assert doc.polytope() == catalog("M9")


def test_roundtrip_bytes():
    assert parse_document(M9_TEXT).format() == M9_TEXT
    anon = "0 1 0\n0 0 1\n"
    assert parse_document(anon).format() == anon


def test_multiple_blocks_and_comments():
    text = "# two polytopes\nA\n0 1\n\n# second\n0 2\n0 0\n"
    docs = parse_documents(text)
    assert [d.name for d in docs] == ["A", None]
    assert docs[1].matrix == ((0, 2), (0, 0))


def test_json_record_line():
    rec = '{"family":"reeve","vertices":[[0,0,0],[0,1,0],[1,0,0],[1,1,3]]}'
    P = parse_document(rec).polytope()
    assert len(P.vertices) == 4 and P.ambient_dim == 3


def test_errors_have_position():
    with pytest.raises(ParseError) as e:
        parse_document("0 1\n0 x\n")
    assert (e.value.line, e.value.column) == (2, 3)
    with pytest.raises(ParseError) as e:
        parse_document("0 1 2\n0 1\n")
    assert e.value.line == 2
    with pytest.raises(ParseError):
        parse_document("")
    with pytest.raises(ParseError):
        parse_document("lonely\n")
    with pytest.raises(ParseError):
        parse_document('{"vertices": 3}')


def test_record_roundtrip():
    P = catalog("M12")
    assert polytope_from_record(polytope_record(P, name="M12")) == P


matrices = st.integers(1, 4).flatmap(
    lambda r: st.integers(1, 6).flatmap(
        lambda c: st.lists(st.tuples(*[st.integers(-99, 99)] * c), min_size=r, max_size=r)))


@given(matrices, st.one_of(st.none(), st.from_regex(r"[A-Za-z_][A-Za-z0-9_]{0,8}",
                                                     fullmatch=True)))
def test_format_parse_roundtrip(rows, name):
    doc = PolytopeDocument(name, tuple(rows))
    text = doc.format()
    again = parse_document(text)
    assert again == doc and again.format() == text
