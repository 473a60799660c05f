import pytest
from hypothesis import given

from mcalp.core import McaClause, McaProgram, McAtom, McLiteral
from mcalp.errors import ParseError
from mcalp.interop import CaAtom, CaClause, CaProgram, DisjunctiveClause, NormalClause
from mcalp.textio import dialect_of, parse, parse_ca, parse_dlp, parse_lp, parse_mca, serialize

from .strategies import ca_programs, dlp_programs, mca_programs, normal_programs

S = frozenset
EXAMPLE_TEXT = "1 {p, q} :- not 1 {q}.\n"


def test_parse_mca_example():
    assert parse_mca(EXAMPLE_TEXT) == McaProgram(
        [McaClause(McAtom(1, S("pq")), (McLiteral(McAtom(1, S("q")), True),))]
    )
    assert serialize(parse_mca(EXAMPLE_TEXT)) == EXAMPLE_TEXT


def test_parse_mca_constraints_and_comments():
    text = "% facts\n1 {a}.  % trailing\r\n:- 1 {a}, not 1 {c}.\n0 {}.\n.\n"
    p = parse_mca(text)
    assert [r.is_constraint for r in p] == [False, True, False, True]
    assert p.clauses[2].head == McAtom(0, S())
    assert serialize(p) == "1 {a}.\n:- 1 {a}, not 1 {c}.\n0 {}.\n.\n"


def test_parse_ca():
    assert parse_ca("1 {a, b} 1.").clauses[0] == CaClause(CaAtom(1, 1, S("ab")))
    p = parse_ca("{a, b} :- 2 {c, d}, {e} 0.")
    assert p.clauses[0].head == CaAtom(0, 2, S("ab"))
    assert p.clauses[0].body == (CaAtom(2, 2, S("cd")), CaAtom(0, 0, S("e")))
    assert serialize(p) == "{a, b} :- 2 {c, d}, {e} 0.\n"


def test_ca_trivial_bounds_are_omitted():
    assert str(CaAtom(0, 2, S("ab"))) == "{a, b}"
    assert str(CaAtom(1, 1, S("a"))) == "1 {a}"
    assert str(CaAtom(0, 0, S("b"))) == "{b} 0"
    assert str(McAtom(0, S())) == "0 {}"


def test_parse_lp_and_dlp():
    assert parse_lp("c :- a, not b.").clauses[0] == NormalClause("c", S("a"), S("b"))
    assert parse_dlp("p | q :- not r.").clauses[0] == DisjunctiveClause(("p", "q"), S(), S("r"))
    assert serialize(parse_lp("c :- b, a, not d.\nf.")) == "c :- a, b, not d.\nf.\n"


def test_dialect_of():
    assert dialect_of("x/prog.dlp") == "dlp"
    assert dialect_of("prog.txt") is None
    with pytest.raises(ValueError):
        parse("", "asp")


MALFORMED = [
    ("mca", "2 {a}.", 1, 1),
    ("mca", "1 {p, q} :- not 1 {q}", 1, 22),
    ("mca", "{a}.", 1, 1),
    ("mca", "1 {a, } .", 1, 7),
    ("mca", "1 {a} :- .", 1, 10),
    ("mca", "1 {a} :- not {b}.", 1, 14),
    ("mca", "1 {a}.\n1 {b} :- 2 {c}.", 2, 10),
    ("mca", "1 {A}.", 1, 4),
    ("mca", "1 {a} :- 1 {b} 1 {c}.", 1, 16),
    ("mca", "% comment\n  1 {a} # x.", 2, 9),
    ("mca", "1 {a} 1.", 1, 7),
    ("ca", "2 {a, b} 1.", 1, 1),
    ("ca", "1 a.", 1, 3),
    ("ca", "{a} :- {b", 1, 10),
    ("lp", "c :- a, not.", 1, 12),
    ("lp", "c :- a b.", 1, 8),
    ("lp", "not :- a.", 1, 1),
    ("dlp", "p | :- a.", 1, 5),
    ("dlp", "p | q :- r", 1, 11),
    ("dlp", "p ; q.", 1, 3),
]


@pytest.mark.parametrize("dialect, text, line, column", MALFORMED)
def test_parse_error_positions(dialect, text, line, column):
    with pytest.raises(ParseError) as info:
        parse(text, dialect)
    assert (info.value.line, info.value.column) == (line, column)
    lines = text.split("\n")
    assert 1 <= line <= len(lines) and 1 <= column <= len(lines[line - 1]) + 1


@given(mca_programs())
def test_mca_round_trip(p):
    text = serialize(p)
    assert parse_mca(text) == p
    assert serialize(parse_mca(text)) == text


@given(ca_programs)
def test_ca_round_trip(p):
    assert parse_ca(serialize(p)) == p


@given(normal_programs)
def test_lp_round_trip(p):
    assert parse_lp(serialize(p)) == p


@given(dlp_programs)
def test_dlp_round_trip(p):
    assert parse_dlp(serialize(p)) == p
