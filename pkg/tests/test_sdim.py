"""The dimension engine: definitional checks, both computation paths,
group dispatch, constructive witnesses, and the n-2 classification."""

import itertools
import random

import pytest

from powersdim import (DiameterTooLarge, Disconnected, EmptyFamily, Graph, Method,
                       OracleCapExceeded, alpha_p, build_group, classify_n_minus_2,
                       clique_witness_alpha_p, clique_witness_cyclic, element_order,
                       factorize, is_strong_resolving_set, maximal_cyclic_subgroups,
                       omega_reduced_group, power_graph, reduced_graph, sdim_group,
                       sdim_oracle, sdim_via_reduction, sigma_of,
                       strong_resolving_graph)

from helpers import (brute_is_strong_resolving, brute_sdim, is_clique,
                     pairwise_distinct_closed_neighborhoods, random_diameter2_graph)


def complete_graph(n):
    return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def path_graph(n):
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


# ---------------------------------------------------------------------------
# is_strong_resolving_set


def test_srs_complete_graph():
    k3 = complete_graph(3)
    assert is_strong_resolving_set(k3, [0, 1])
    assert is_strong_resolving_set(k3, [1, 2])
    assert not is_strong_resolving_set(k3, [0])
    assert is_strong_resolving_set(k3, [0, 1, 2])


def test_srs_rejects_disconnected_and_bad_vertices():
    with pytest.raises(Disconnected):
        is_strong_resolving_set(Graph(2), [0])
    with pytest.raises(ValueError):
        is_strong_resolving_set(complete_graph(3), [7])


def test_srs_z6_exhaustive():
    g = power_graph(build_group("Z6"))
    value, witness = brute_sdim(g)
    assert value == 4
    assert is_strong_resolving_set(g, witness)
    # no 3-element set works, and in particular the complement of the
    # non-clique {0, 2, 3} cannot resolve the pair (2, 3)
    for subset in itertools.combinations(range(6), 3):
        assert not is_strong_resolving_set(g, subset)
    assert not is_strong_resolving_set(g, [1, 4, 5])
    # complements of 2-cliques of non-twins do work
    assert is_strong_resolving_set(g, [1, 3, 4, 5])   # complement of {0, 2}
    assert is_strong_resolving_set(g, [1, 2, 4, 5])   # complement of {0, 3}


def test_srs_agrees_with_independent_check():
    rng = random.Random(23)
    for _ in range(25):
        g = random_diameter2_graph(rng, rng.randint(1, 8))
        for _ in range(12):
            subset = [v for v in range(g.n) if rng.random() < 0.5]
            assert is_strong_resolving_set(g, subset) == brute_is_strong_resolving(g, subset)


# ---------------------------------------------------------------------------
# strong_resolving_graph


def test_srg_complete():
    assert strong_resolving_graph(complete_graph(4)) == complete_graph(4)


def test_srg_path3_single_endpoint_edge():
    srg = strong_resolving_graph(path_graph(3))
    assert list(srg.edges()) == [(0, 2)]


def test_srg_z6_contains_distance2_pairs():
    srg = strong_resolving_graph(power_graph(build_group("Z6")))
    assert srg.has_edge(2, 3)
    assert srg.has_edge(3, 4)


# ---------------------------------------------------------------------------
# Oracle


def test_oracle_complete_graph():
    res = sdim_oracle(complete_graph(7))
    assert res.value == 6
    assert res.method is Method.GENERIC_ORACLE
    assert res.verified and len(res.witness) == 6


def test_oracle_power_graphs():
    assert sdim_oracle(power_graph(build_group("Z12"))).value == 9
    assert sdim_oracle(power_graph(build_group("A4"))).value == 10


def test_oracle_matches_exhaustive_search():
    rng = random.Random(31)
    for _ in range(15):
        g = random_diameter2_graph(rng, rng.randint(1, 7))
        assert sdim_oracle(g).value == brute_sdim(g)[0]


def test_oracle_cap():
    with pytest.raises(OracleCapExceeded):
        sdim_oracle(complete_graph(12), oracle_cap=10)
    with pytest.raises(Disconnected):
        sdim_oracle(Graph(3))


# ---------------------------------------------------------------------------
# Reduction


def test_reduction_klein_group():
    res = sdim_via_reduction(power_graph(build_group("E2^2")))
    assert res.value == 2 and res.omega_reduced == 2
    assert res.verified and len(res.witness) == 2


def test_reduction_complete_graph():
    res = sdim_via_reduction(complete_graph(6))
    assert res.value == 5 and res.omega_reduced == 1


def test_reduction_single_vertex():
    res = sdim_via_reduction(Graph(1))
    assert res.value == 0 and res.witness == []


def test_reduction_rejects_large_diameter():
    with pytest.raises(DiameterTooLarge):
        sdim_via_reduction(path_graph(4))


def test_reduction_equals_oracle_on_random_diameter2_graphs():
    rng = random.Random(47)
    for _ in range(50):
        g = random_diameter2_graph(rng, rng.randint(1, 12))
        red = sdim_via_reduction(g)
        assert red.value == sdim_oracle(g).value
        assert red.verified


def test_prop_complement_clique_iff_srs_small():
    # diameter <= 2: S strong resolving iff complement is a clique of
    # pairwise non-twin vertices; both directions, all subsets
    rng = random.Random(53)
    for _ in range(8):
        g = random_diameter2_graph(rng, rng.randint(1, 7))
        for size in range(g.n + 1):
            for subset in itertools.combinations(range(g.n), size):
                comp = [v for v in range(g.n) if v not in subset]
                expected = is_clique(g, comp) and \
                    pairwise_distinct_closed_neighborhoods(g, comp)
                assert is_strong_resolving_set(g, subset) == expected


# ---------------------------------------------------------------------------
# Group dispatch


def test_omega_reduced_group_values():
    assert omega_reduced_group(build_group("Z12")) == 3
    assert omega_reduced_group(build_group("Q8")) == 2
    assert omega_reduced_group(build_group("D12")) == 3  # sigma_6 + 1
    assert omega_reduced_group(build_group("A4")) == 2


def test_sdim_group_methods_and_values():
    cases = [
        ("Z8", 7, Method.CLOSED_FORM_CYCLIC_PRIME_POWER),
        ("Z12", 9, Method.CLOSED_FORM_CYCLIC),
        ("D12", 9, Method.CLOSED_FORM_DIHEDRAL),
        ("Q12", 9, Method.CLOSED_FORM_QUATERNION),
        ("E3^2", 7, Method.CLOSED_FORM_ELEMENTARY_ABELIAN),
        ("Ab[2,4]", 5, Method.CLOSED_FORM_P_GROUP),
        ("Ab[2,6]", 9, Method.CLOSED_FORM_ABELIAN),
        ("A4", 10, Method.GROUP_THEOREM),
        ("Z3xQ8", 20, Method.GROUP_THEOREM),
    ]
    for spec, value, method in cases:
        res = sdim_group(build_group(spec))
        assert (res.value, res.method) == (value, method), spec
        assert res.verified and len(res.witness) == value
        assert res.value == build_group(spec).n - res.omega_reduced


def test_sdim_group_trivial_group():
    res = sdim_group(build_group("Z1"))
    assert res.value == 0 and res.witness == []


def test_closed_form_tag_matches_closed_form_field():
    for spec in ["Z8", "D12", "Q8", "E2^3", "Ab[2,4]", "Ab[2,6]"]:
        res = sdim_group(build_group(spec))
        assert res.closed_form is res.method
    res = sdim_group(build_group("S4"))
    assert res.closed_form is None and res.method is Method.GROUP_THEOREM


def test_cayley_file_input_dispatches_structurally(tmp_path):
    # a cyclic group loaded from a file still hits the cyclic closed form
    path = tmp_path / "z6.txt"
    n = 6
    path.write_text("6\n" + "\n".join(
        " ".join(str((i + j) % n) for j in range(n)) for i in range(n)) + "\n")
    res = sdim_group(build_group(f"cayley:{path}"))
    assert res.method is Method.CLOSED_FORM_CYCLIC
    assert res.value == 4


# ---------------------------------------------------------------------------
# Constructive witnesses


def test_clique_witness_cyclic_examples():
    assert clique_witness_cyclic(12) == ([3, 6, 12], [4, 2, 1])
    assert clique_witness_cyclic(30) == ([5, 15, 30], [6, 2, 1])
    orders, elements = clique_witness_cyclic(7)
    assert orders == [7] and elements == [1]
    with pytest.raises(ValueError):
        clique_witness_cyclic(1)


def test_clique_witness_cyclic_is_nontwin_clique():
    for n in [6, 12, 30, 36, 60]:
        grp = build_group(f"Z{n}")
        g = power_graph(grp)
        orders, elements = clique_witness_cyclic(n)
        assert len(elements) == sigma_of(n)
        assert [element_order(grp, e) for e in elements] == orders
        assert all(b % a == 0 for a, b in zip(orders, orders[1:]))
        assert is_clique(g, elements)
        assert pairwise_distinct_closed_neighborhoods(g, elements)


def test_clique_witness_alpha_p_examples():
    assert len(clique_witness_alpha_p(build_group("Q8"), 2)) == 2
    w = clique_witness_alpha_p(build_group("A4"), 3)
    assert len(w) == 2 and 0 in w  # includes the identity because lambda = 0
    assert len(clique_witness_alpha_p(build_group("E3^2"), 3)) == 2
    with pytest.raises(EmptyFamily):
        clique_witness_alpha_p(build_group("Z12"), 2)
    with pytest.raises(EmptyFamily):
        clique_witness_alpha_p(build_group("Q8"), 3)


def test_clique_witness_alpha_p_properties():
    for spec in ["Q8", "Q16", "A4", "S4", "D8", "D12", "Ab[2,8]", "Ab[4,4]", "A5"]:
        grp = build_group(spec)
        g = power_graph(grp)
        fam = maximal_cyclic_subgroups(grp)
        for p, _ in factorize(grp.n).factors:
            if not fam.by_prime.get(p):
                continue
            witness = clique_witness_alpha_p(grp, p)
            assert len(witness) == alpha_p(grp, p)
            assert is_clique(g, witness)
            assert pairwise_distinct_closed_neighborhoods(g, witness)


# ---------------------------------------------------------------------------
# Classification


def test_classify_examples():
    assert classify_n_minus_2(build_group("Z15")) == (True, "cyclic-of-order-pq")
    assert classify_n_minus_2(build_group("Q16")) == (True, "generalized-quaternion-2-group")
    assert classify_n_minus_2(build_group("A4")) == (True, "cp-group-trivial-intersections")
    assert classify_n_minus_2(build_group("Ab[2,4]")) == (False, None)
    assert classify_n_minus_2(build_group("Z9")) == (False, None)
    assert classify_n_minus_2(build_group("Z12")) == (False, None)


def test_classify_q8_is_quaternion_not_cp_class():
    hit, label = classify_n_minus_2(build_group("Q8"))
    assert hit and label == "generalized-quaternion-2-group"


def test_extremal_n_minus_1_iff_cyclic_prime_power():
    for spec, expect in [("Z8", True), ("Z16", True), ("Z5", True), ("Z6", False),
                         ("Q8", False), ("E2^2", False), ("D8", False)]:
        g = build_group(spec)
        assert (sdim_group(g).value == g.n - 1) == expect
