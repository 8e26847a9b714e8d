"""Chord diagrams, tête-à-tête twists and the fundamental groups of their open books."""

from .diagram import ChordDiagram, VertexCycles, from_pairs, parse
from .factory import (
    delete_neighbour_chords,
    elementary,
    parallel_duplicate,
    random_diagram,
    random_symmetric,
    torus_knot,
)
from .fundgroup import GroupPresentation, open_book_presentation, to_gap_text
from .grouptools import (
    AbelianGroupInvariants,
    EnumerationResult,
    abelianize,
    homology_of_open_book,
    smith_normal_form,
    todd_coxeter,
)
from .twist import TatTwist, edge_orbits, new_twist, order, parse_twist, power, vertex_permutation

__version__ = "0.1.0"
