from hypothesis import strategies as st

from mcalp.core import McaClause, McaProgram, McAtom, McLiteral
from mcalp.interop import (
    CaAtom,
    CaClause,
    CaProgram,
    DisjunctiveClause,
    DisjunctiveProgram,
    NormalClause,
    NormalProgram,
)

ATOMS = ("a", "b", "c", "d", "e")
atom_names = st.sampled_from(ATOMS)
atom_sets = st.frozensets(atom_names, max_size=3)
interpretations = st.frozensets(atom_names)


@st.composite
def mc_atoms(draw):
    aset = draw(atom_sets)
    return McAtom(draw(st.integers(0, len(aset))), aset)


@st.composite
def mca_clauses(draw, horn=False, constraints=True):
    head = draw(st.none() | mc_atoms()) if constraints else draw(mc_atoms())
    negative = st.just(False) if horn else st.booleans()
    body = draw(st.lists(st.builds(McLiteral, mc_atoms(), negative), max_size=3))
    return McaClause(head, tuple(body))


def mca_programs(horn=False, constraints=True, max_size=5):
    return st.lists(mca_clauses(horn, constraints), max_size=max_size).map(McaProgram)


@st.composite
def ca_atoms(draw):
    aset = draw(atom_sets)
    lower = draw(st.integers(0, len(aset)))
    return CaAtom(lower, draw(st.integers(lower, len(aset))), aset)


ca_programs = st.lists(
    st.builds(CaClause, ca_atoms(), st.lists(ca_atoms(), max_size=3).map(tuple)), max_size=5
).map(CaProgram)

normal_programs = st.lists(
    st.builds(NormalClause, atom_names, atom_sets, atom_sets), max_size=6
).map(NormalProgram)

dlp_programs = st.lists(
    st.builds(
        DisjunctiveClause,
        st.lists(atom_names, min_size=1, max_size=3, unique=True).map(tuple),
        atom_sets,
        atom_sets,
    ),
    max_size=4,
).map(DisjunctiveProgram)
