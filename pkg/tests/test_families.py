import pytest

from rainbow_list import families as fam
from rainbow_list.families import FamilySpec, build_family
from rainbow_list.graph import GraphError, bridges, diameter, is_isomorphic, line_graph, max_cut_components


@pytest.mark.parametrize("p,q", [(1, 1), (2, 1), (3, 2), (4, 4)])
def test_gpq_counts(p, q):
    g = fam.gpq(p, q)
    assert (g.n, g.m) == (p + q + 3, 2 * (p + q) + 1)


@pytest.mark.parametrize("p,q,r", [(1, 1, 1), (2, 1, 1), (2, 2, 2)])
def test_gpqr_counts(p, q, r):
    g = fam.gpqr(p, q, r)
    assert (g.n, g.m) == (p + q + r + 4, 2 * (p + q + r) + 3)


def test_base_members():
    assert is_isomorphic(fam.gpq(1, 1), fam.cycle(5))
    assert is_isomorphic(fam.gpqr(1, 1, 1), fam.g7())
    g7 = fam.g7()
    assert (g7.n, g7.m) == (7, 9)


def test_comp_sq_cycle_seven_is_a_cycle():
    assert is_isomorphic(fam.comp_sq_cycle(7), fam.cycle(7))
    g = fam.comp_sq_cycle(9)
    assert all(g.degree(v) == 4 for v in range(9))


def test_lemma41_counts():
    g = fam.lemma41(3)
    assert (g.n, g.m) == (7, 12)


def test_pair_src_and_lemma42_shapes():
    g = fam.lemma42(3)
    assert g.n == 1 + 2 + 4 and g.universal_vertices() == [0] or len(g.universal_vertices()) == 1
    h = fam.pair_src_h(2, 3)
    assert h.n == 2 and h.m == 1


def test_lemma43_pendant_bridges():
    g = fam.lemma43(3, 2, 2)
    bs = bridges(g)
    assert len(bs) == 3
    for e in bs:
        u, v = g.edges[e]
        assert min(g.degree(u), g.degree(v)) == 1


def test_simple_family_facts():
    assert len(bridges(fam.star(5))) == 5
    assert max_cut_components(fam.star(5))[1] == 5
    assert not bridges(fam.cycle(6)) and max_cut_components(fam.cycle(6)) is None
    assert diameter(fam.petersen()) == 2
    assert diameter(fam.cycle(8)) == 4
    assert diameter(fam.path(5)) == 4
    assert not is_isomorphic(fam.cycle(6), fam.cycle(7))
    assert not is_isomorphic(fam.petersen(), fam.kmn(5, 5))


def test_line_graph_examples():
    assert line_graph(fam.path(3)).m == 1
    assert line_graph(fam.star(4)).is_complete()
    assert is_isomorphic(line_graph(fam.cycle(6)), fam.cycle(6))


@pytest.mark.parametrize("name,params", [("cycle", (2,)), ("wheel", (2,)), ("kmn", (3, 2)), ("kmn", (0, 2)),
                                         ("multipartite", (3,)), ("gpq", (1, 2)), ("gpqr", (1, 2, 1)),
                                         ("comp-sq-cycle", (6,)), ("lemma41", (1,)), ("lemma43", (2, 3, 2))])
def test_domain_errors(name, params):
    with pytest.raises(GraphError):
        build_family(FamilySpec(name, params))


def test_unknown_family():
    with pytest.raises(GraphError, match="unknown family"):
        build_family("nope", 3)


def test_duplicate_degree2():
    c5 = fam.cycle(5)
    for v in range(5):
        assert is_isomorphic(fam.duplicate_degree2(c5, v), fam.gpq(2, 1))
    g = fam.gpq(2, 1)
    u = next(v for v in range(g.n) if g.degree(v) == 2 and any(g.degree(w) > 2 for w in g.adj[v])
             and is_isomorphic(fam.duplicate_degree2(g, v), fam.gpq(3, 1)))
    assert g.degree(u) == 2
    assert c5.n == 5  # original untouched
    with pytest.raises(GraphError, match="degree"):
        fam.duplicate_degree2(fam.complete(4), 0)


def test_enumerate_family_small():
    assert len(fam.enumerate_family_G(5)) == 1
    members = fam.enumerate_family_G(7)
    # p+q+3 <= 7 also admits G_{3,1} and G_{2,2}
    assert len(members) == 5
    for want in (fam.gpq(1, 1), fam.gpq(2, 1), fam.gpq(3, 1), fam.gpq(2, 2), fam.g7()):
        assert sum(is_isomorphic(want, g) for g in members) == 1
    assert any(is_isomorphic(fam.petersen(), g) for g in fam.enumerate_family_G(10))


def test_enumerate_family_members_are_extremal():
    for g in fam.enumerate_family_G(12):
        assert diameter(g) == 2 and not g.universal_vertices() and g.m == 2 * g.n - 5
