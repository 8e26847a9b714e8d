import random

import pytest

from tatwist import TatTwist, elementary, open_book_presentation, to_gap_text
from tatwist.factory import random_symmetric
from tatwist.fundgroup import GroupPresentation, boundary_relators, mapping_relators
from tatwist.twist import power

E33 = elementary(3, 3)


def cyclic_forms(word):
    return {word[k:] + word[:k] for k in range(len(word))}


def same_up_to_rotation(ours, theirs):
    pool = [cyclic_forms(w) for w in theirs]
    for w in ours:
        hit = next((k for k, forms in enumerate(pool) if w in forms), None)
        if hit is None:
            return False
        pool.pop(hit)
    return not pool


# generator indices for E_{3,3}: g0, g1, g2, om
C0, C1, C2, OM = 0, 1, 2, 3
TREFOIL_RB = [((C1, 1), (C2, -1), (C0, -1)), ((C0, 1), (C1, -1), (C2, 1), (OM, 1))]
# "c0 = c1" means c0 c1^-1, "c2 = c0^-1 om^-1" means c2 (c0^-1 om^-1)^-1 = c2 om c0
TREFOIL_RM_EQUATIONS = [((C0, 1), (C1, -1)), ((C1, 1), (C2, -1)), ((C2, 1), (OM, 1), (C0, 1))]


def inverse(word):
    return tuple((g, -e) for g, e in reversed(word))


def test_trefoil_generators():
    p = open_book_presentation(TatTwist(E33, 1))
    assert p.generators == ("g0", "g1", "g2", "om")


def test_trefoil_boundary_relators():
    assert same_up_to_rotation(boundary_relators(TatTwist(E33, 1)), TREFOIL_RB)


def test_trefoil_mapping_relators():
    ours = mapping_relators(TatTwist(E33, 1))
    # a relator and its inverse express the same equation
    normalized = [w if any(w in cyclic_forms(x) for x in TREFOIL_RM_EQUATIONS) else inverse(w) for w in ours]
    assert same_up_to_rotation(normalized, TREFOIL_RM_EQUATIONS)


def test_trefoil_third_mapping_relator_exact():
    assert mapping_relators(TatTwist(E33, 1))[2] == ((C0, -1), (OM, -1), (C2, -1))


def test_identity_twist_mapping_relators():
    for d in (E33, elementary(5, 3), elementary(4, 4)):
        gens = [i for i, j in enumerate(d.pairing) if i < j]
        rels = mapping_relators(TatTwist(d, 0))
        assert rels == [((k, 1), (k, -1)) for k in range(len(gens))]


def random_twists(count, seed=0):
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        n = rng.randint(1, 10)
        divisors = [x for x in range(1, 2 * n + 1) if (2 * n) % x == 0]
        l = rng.choice(divisors)
        d = random_symmetric(n, l, rng.randrange(10**9))
        out.append(TatTwist(d, l * rng.randint(-3, 3)))
    return out


@pytest.mark.parametrize("t", random_twists(60), ids=str)
def test_presentation_invariants(t):
    p = open_book_presentation(t)
    v = t.diagram.vertex_count()
    assert len(p.relators) == v + t.n
    assert p.rank == t.n + 1
    rb = p.relators[:v]
    om = p.rank - 1
    assert sum(e for w in rb for g, e in w if g == om) == 1
    for k in range(t.n):
        assert sum(e for w in rb for g, e in w if g == k) == 0


@pytest.mark.parametrize("t", random_twists(20, seed=5), ids=str)
def test_full_turn_shifts_omega_exponents(t):
    m = t.diagram.num_endpoints
    base = mapping_relators(t)
    for k in (1, 2, -1):
        shifted = mapping_relators(TatTwist(t.diagram, t.walk_length + k * m))

        def omega_profile(w):
            om = t.n
            return [e for g, e in w if g == om]

        def chords_only(w):
            return [(g, e) for g, e in w if g != t.n]

        for w0, w1 in zip(base, shifted):
            assert chords_only(w0) == chords_only(w1)
            # leading om power grows by k, trailing om^-1 power by k
            lead0 = w0[0][1] if w0[0][0] == t.n else 0
            lead1 = w1[0][1] if w1[0][0] == t.n else 0
            assert lead1 - lead0 == k
            assert sum(omega_profile(w1)) == sum(omega_profile(w0))


def test_gap_text_trefoil():
    text = to_gap_text(open_book_presentation(TatTwist(E33, 1)))
    assert text == (
        'F := FreeGroup("g0","g1","g2","om");\n'
        "g0 := F.1;\n"
        "g1 := F.2;\n"
        "g2 := F.3;\n"
        "om := F.4;\n"
        "rels := [ g0^-1*g1*g2^-1, g1^-1*g2*om*g0, g1*g0^-1, g2*g1^-1, g0^-1*om^-1*g2^-1 ];\n"
        "G := F / rels;\n"
    )
    rel_line = [ln for ln in text.splitlines() if ln.startswith("rels")][0]
    assert rel_line.count(",") == 4


def test_gap_text_trivial():
    text = to_gap_text(GroupPresentation((), ()))
    assert text == "F := FreeGroup(0);\nrels := [ ];\nG := F / rels;\n"


def test_gap_text_powers():
    p = GroupPresentation(("g0", "om"), (((0, 2), (1, -3)), ()))
    assert "rels := [ g0^2*om^-3, One(F) ];" in to_gap_text(p)


def test_presentation_array_validation():
    with pytest.raises(ValueError):
        GroupPresentation(("a", "a"), ())
    with pytest.raises(ValueError):
        GroupPresentation(("a",), (((1, 1),),))
    with pytest.raises(ValueError):
        GroupPresentation(("a",), (((0, 0),),))


def test_negative_walk_length_floor_counters():
    t = power(TatTwist(E33, 1), -1)
    rels = mapping_relators(t)
    # chord {0,3}: 0-1 = -1 -> endpoint 5 after one backwards turn, 3-1 = 2 -> no turn
    assert rels[0] == ((3, -1), (2, -1), (0, -1))
