import pytest

from finito import (
    CycleError,
    DuplicateCoverError,
    FinitePoset,
    ParseError,
    emit,
    parse_poset,
    sphere_model,
)
from finito.fileio import parse_map
from finito.models import enumerate_posets


def test_parse_singleton():
    doc = parse_poset("x\n")
    assert doc.labels == ("x",) and doc.covers == ()
    assert doc.to_poset().n == 1


def test_parse_paper_example():
    doc = parse_poset("d < b\nb < a\nc < a\n")
    assert doc.labels == ("d", "b", "a", "c")
    p = doc.to_poset()
    assert p.n == 4 and p.height == 3
    assert p.min_open(doc.labels.index("b")) == {
        doc.labels.index("b"),
        doc.labels.index("d"),
    }


def test_parse_comments_isolated_and_base():
    doc = parse_poset("# two pieces\nx < y\nz  # isolated\n@base z\n")
    assert doc.labels == ("x", "y", "z")
    assert doc.base == 2
    assert len(doc.to_poset().connected_components()) == 2


def test_parse_errors():
    with pytest.raises(ParseError, match="line 1"):
        parse_poset("a <\n")
    with pytest.raises(ParseError):
        parse_poset("a < b < c\n")
    with pytest.raises(ParseError):
        parse_poset("@root x\n")
    with pytest.raises(ParseError):
        parse_poset("a.b\n")
    with pytest.raises(ParseError):
        parse_poset("a < a\n")
    with pytest.raises(ParseError):
        parse_poset("")
    with pytest.raises(ParseError, match="never declared"):
        parse_poset("a < b\n@base q\n")
    with pytest.raises(CycleError):
        parse_poset("a < b\nb < c\nc < a\n")


def test_parse_duplicate_cover_warns():
    with pytest.warns(DuplicateCoverError):
        doc = parse_poset("a < b\na < b\n")
    assert doc.covers == ((0, 1),)


def test_emit_singleton():
    p = FinitePoset.antichain(1)
    assert emit(p) == "0\n"
    labeled = FinitePoset((1,), labels=("x",))
    assert emit(labeled) == "x\n"


def test_emit_round_trip_enumerated():
    for k in range(1, 7):
        for p in enumerate_posets(k):
            names = tuple(f"p{i}" for i in range(p.n))
            labeled = FinitePoset(p.up, names)
            doc = parse_poset(emit(labeled))
            assert sorted(doc.labels) == sorted(names)
            assert doc.to_poset().is_homeomorphic(p)


def test_emit_base_round_trip():
    p = FinitePoset((1,), labels=("x",))
    doc = parse_poset(emit(p, base=0))
    assert doc.base == 0


def test_emit_rejects_bad_labels():
    p = FinitePoset((1,), labels=("not ok",))
    with pytest.raises(ValueError):
        emit(p)


def test_emit_dot_golden(ss0):
    dot = emit(ss0, "dot")
    assert dot == (
        "digraph poset {\n"
        "  rankdir=BT;\n"
        "  node [shape=plaintext];\n"
        '  { rank=same; "0"; "1"; }\n'
        '  { rank=same; "2"; "3"; }\n'
        '  "0" -> "2";\n'
        '  "0" -> "3";\n'
        '  "1" -> "2";\n'
        '  "1" -> "3";\n'
        "}\n"
    )


def test_emit_json_schema(ss0):
    import json

    doc = json.loads(emit(ss0, "json"))
    assert doc == {
        "labels": ["0", "1", "2", "3"],
        "covers": [["0", "2"], ["0", "3"], ["1", "2"], ["1", "3"]],
        "base": None,
    }


def test_emit_faces(ss0):
    assert emit(ss0, "faces") == "0\n1\n2\n3\n0 2\n0 3\n1 2\n1 3\n"


def test_emit_unknown_format(ss0):
    with pytest.raises(ValueError):
        emit(ss0, "yaml")


def test_emit_sphere_parses_back():
    p = sphere_model(2)
    doc = parse_poset(emit(p))
    assert doc.to_poset().is_homeomorphic(p)


def test_parse_map():
    src = parse_poset("a < b\nc\n")
    dst = parse_poset("x < y\n")
    mapping = parse_map("a -> x\nb -> y\nc -> x\n", src, dst)
    assert mapping == [0, 1, 0]
    with pytest.raises(ParseError):
        parse_map("a -> x\nb -> y\n", src, dst)  # c unmapped
    with pytest.raises(ParseError):
        parse_map("a -> x\na -> y\nb -> y\nc -> x\n", src, dst)
    with pytest.raises(ParseError):
        parse_map("a -> q\nb -> y\nc -> x\n", src, dst)
