import itertools
import random

import networkx as nx
import pytest

from conftest import random_connected, to_nx
from rainbow_list import families as fam
from rainbow_list.csp import Budget, ConstraintSearch, geodesics, short_paths


def brute(n, groups, domains):
    for c in itertools.product(*domains):
        if all(any(len({c[i] for i in t}) == len(t) for t in grp) for grp in groups):
            return True
    return False


def random_instance(rng):
    n = rng.randint(2, 7)
    groups = []
    for _ in range(rng.randint(1, 6)):
        groups.append([tuple(rng.sample(range(n), rng.randint(2, min(3, n)))) for _ in range(rng.randint(1, 3))])
    return n, groups


def test_palette_search_matches_brute_force():
    rng = random.Random(21)
    for _ in range(300):
        n, groups = random_instance(rng)
        r = rng.randint(1, 3)
        out = ConstraintSearch(n, groups, r=r).run()
        assert out.found == brute(n, groups, [range(r)] * n)
        if out.found:
            c = out.colouring
            assert all(any(len({c[i] for i in t}) == len(t) for t in grp) for grp in groups)


def test_domain_search_matches_brute_force():
    rng = random.Random(22)
    for _ in range(300):
        n, groups = random_instance(rng)
        domains = [rng.sample(range(5), rng.randint(1, 2)) for _ in range(n)]
        out = ConstraintSearch(n, groups, domains=domains).run()
        assert out.found == brute(n, groups, domains)
        if out.found:
            assert all(out.colouring[i] in domains[i] for i in range(n))


def test_parallel_agrees():
    rng = random.Random(23)
    for _ in range(20):
        n, groups = random_instance(rng)
        s = ConstraintSearch(n, groups, r=2)
        assert s.run().found == s.run_parallel(None, 2).found


def test_budget_exceeded():
    from rainbow_list.exact import build_search
    from rainbow_list.rainbow import Property
    out = build_search(fam.petersen(), Property.STRONG, 3).run(Budget(10))
    assert out.status == "exceeded"


def test_constructor_contracts():
    with pytest.raises(ValueError):
        ConstraintSearch(2, [], r=2, domains=[[0], [1]])
    with pytest.raises(ValueError):
        ConstraintSearch(2, [], r=2, order=[0, 0])
    with pytest.raises(ValueError):
        Budget(0)


def test_path_enumerators_match_networkx():
    rng = random.Random(24)
    for _ in range(40):
        g = random_connected(rng.randint(3, 8), 0.3, rng)
        h = to_nx(g)
        u, v = rng.sample(range(g.n), 2)
        want = {tuple(g.edge_id(a, b) for a, b in zip(p, p[1:])) for p in nx.all_shortest_paths(h, u, v)}
        assert set(geodesics(g, u, v)) == want
        k = rng.randint(1, g.n - 1)
        want = {tuple(g.edge_id(a, b) for a, b in zip(p, p[1:])) for p in nx.all_simple_paths(h, u, v, cutoff=k)}
        assert set(short_paths(g, u, v, k, 10**6)) == want
