import itertools

import pytest

from rainbow_list import constructions as cons
from rainbow_list import families as fam
from rainbow_list.csp import Budget
from rainbow_list.graph import GraphError
from rainbow_list.lists import ListAssignment, random_lists
from rainbow_list.rainbow import Property, check_property


def test_universal_vertex_on_wheels():
    for n in range(4, 13):
        g = fam.wheel(n)
        for s in range(20):
            c = cons.universal_vertex_colouring(g, n, random_lists(g.m, 3, s))
            assert check_property(g, c, Property.RAINBOW) is None


def test_universal_vertex_needs_a_hub():
    with pytest.raises(GraphError):
        cons.universal_vertex_colouring(fam.cycle(5), 0, ListAssignment.constant(5, 3))


def test_cycle_colourings():
    c6 = cons.cycle_list_colouring(6, ListAssignment.of([[1, 2, 3]] * 6))
    assert all(c6[i] == c6[i + 3] for i in range(3))
    c4 = cons.cycle_list_colouring(4, ListAssignment.of([[1, 2]] * 4))
    assert c4[0] == c4[2] and c4[1] == c4[3] and c4[0] != c4[1]
    for s in range(200):
        c = cons.cycle_list_colouring(5, random_lists(5, 3, s))
        assert check_property(fam.cycle(5), c, Property.STRONG) is None
    for n in (7, 8, 9):
        for s in range(20):
            L = random_lists(n, (n + 1) // 2, s)
            c = cons.cycle_list_colouring(n, L)
            assert all(c[e] in L.lists[e] for e in range(n))
    with pytest.raises(GraphError):
        cons.cycle_list_colouring(7, ListAssignment.constant(7, 3))


def test_kmn_vectors():
    for s in range(30):
        t = cons.kmn_src_colouring(2, 9, random_lists(18, 3, s))
        assert t.distinct() and t.diagonal_ok()
        assert check_property(fam.kmn(2, 9), t.colouring(), Property.STRONG) is None
    t = cons.kmn_rc4_colouring(2, 10, random_lists(20, 4, 1))
    assert check_property(fam.kmn(2, 10), t.colouring(), Property.RAINBOW) is None
    with pytest.raises(GraphError):
        cons.kmn_rc4_colouring(2, 9, random_lists(18, 4, 1))
    with pytest.raises(GraphError):
        cons.kmn_src_colouring(1, 3, random_lists(3, 3, 1))


@pytest.mark.parametrize("n,m,want", [(9, 2, 3), (10, 2, 4), (27, 3, 3), (28, 3, 4), (1, 5, 1), (8, 3, 2)])
def test_int_root_ceil(n, m, want):
    assert cons.int_root_ceil(n, m) == want


def test_balanced_bipartition():
    assert cons.balanced_bipartition((1, 1, 2)) == ((0, 1), (2,))
    assert cons.balanced_bipartition((1, 1, 1)) == ((0,), (1, 2))
    assert cons.balanced_bipartition((2, 2, 3)) == ((2,), (0, 1))


def test_multipartite_modes():
    g = fam.multipartite(1, 1, 5)
    for s in range(30):
        c = cons.multipartite_colouring((1, 1, 5), random_lists(g.m, 3, s), mode="rc")
        assert check_property(g, c, Property.RAINBOW) is None
    g = fam.multipartite(1, 2, 2)
    c = cons.multipartite_colouring((1, 2, 2), random_lists(g.m, 2, 0), mode="src")
    assert check_property(g, c, Property.STRONG) is None


def test_lemma41_bad_lists_by_brute_force():
    """All 2^12 choices from the product lists fail to be strongly rainbow connected."""
    g, L = cons.lemma41_bad_lists(3)
    assert g.m == 12
    for c in itertools.product(*L.as_lists()):
        assert check_property(g, c, Property.STRONG) is not None


def test_lemma41_colouring_with_bigger_lists():
    g, _ = cons.lemma41_bad_lists(3)
    for s in range(20):
        c = cons.lemma41_colouring(3, g, random_lists(g.m, 3, s))
        assert check_property(g, c, Property.STRONG) is None


def test_lemma42_colouring():
    g = fam.lemma42(3)
    for s in range(50):
        c = cons.lemma42_colouring(g, random_lists(g.m, 2, s))
        assert check_property(g, c, Property.RAINBOW) is None


def test_wheel_closed_form_and_upper():
    assert [cons.wheel_srcl_closed_form(n) for n in (7, 9, 12)] == [3, 4, 5]
    for n in (7, 8, 9):
        assert cons.srcl_wheel_upper(n, Budget(10**7)).hi <= 3
    res = cons.srcl_wheel_upper(12, Budget(10**7))
    assert res.lo <= res.hi <= 5


def test_postcondition_failure_is_loud(monkeypatch):
    monkeypatch.setattr(cons, "_antipodal_colouring", lambda r, lists: [lst[0] for lst in lists])
    with pytest.raises(cons.PostconditionFailed):
        cons.cycle_list_colouring(6, ListAssignment.of([[1, 2, 3]] * 6))
