import itertools
import json

import pytest

from qaff.chevalley import chevalley_root_set
from qaff.neighborhoods import (
    curve_neighborhood,
    gw_invariant,
    moment_graph_slice,
    neighborhood_by_search,
    qbruhat_chains,
    qbruhat_covers,
    z_components,
)
from qaff.weyl import affine_weyl


def test_sl2_degree_c_neighborhood_of_identity():
    # the degree-(1,1) neighborhood of the identity point is the pair of
    # length-two elements, not a single component
    W = affine_weyl("A", 1)
    comps = curve_neighborhood(W, W.identity, (1, 1))
    assert {W.format(w) for w in comps} == {"s0s1", "s1s0"}


def test_simple_degree_neighborhoods_are_reflections():
    # degree alpha^vee moves w to the Hecke product w * s_alpha; when the
    # lengths add, that is the plain product w s_alpha
    W = affine_weyl("A", 2)
    crs = chevalley_root_set("A", 2)
    for ws in W.enumerate_up_to(3).values():
        for w in ws:
            for cr in crs:
                s = W.reflection(cr.root)
                comps = curve_neighborhood(W, w, cr.coroot)
                assert comps == [W.hecke_product(w, s)]
                plain = W.multiply(w, s)
                if W.length(plain) == W.length(w) + cr.reflection_length:
                    assert comps == [plain]


@pytest.mark.parametrize("lt", ["A1", "A2", "B2"])
def test_two_oracles_agree(lt):
    W = affine_weyl(lt[0], int(lt[1]))
    degrees = [
        d
        for d in itertools.product(range(2), repeat=W.n + 1)
        if 0 < sum(d) <= 2
    ]
    for ws in W.enumerate_up_to(2).values():
        for w in ws:
            for d in degrees:
                assert curve_neighborhood(W, w, d) == neighborhood_by_search(W, w, d)


def test_z_components_identity_degree_zero():
    W = affine_weyl("A", 1)
    assert z_components(W, (0,) * (W.n + 1)) == [W.identity]


def test_neighborhood_components_incomparable():
    W = affine_weyl("A", 1)
    comps = curve_neighborhood(W, W.identity, (1, 1))
    for a, b in itertools.permutations(comps, 2):
        assert not W.bruhat_leq(a, b)


class TestGW:
    def test_degree_mismatch_is_zero(self):
        W = affine_weyl("A", 1)
        u = W.from_word([0])
        assert gw_invariant(W, 1, u, W.identity, (1, 1)) == 0

    def test_simple_quantum_coefficient(self):
        # the q_0 eps_e term of Lambda_0(eps_{s0}) has coefficient 1;
        # Lambda_1 carries no quantum term there since <lambda_1, alpha_0^vee> = 0
        W = affine_weyl("A", 1)
        u = W.from_word([0])
        assert gw_invariant(W, 0, u, W.identity, (1, 0)) == 1
        assert gw_invariant(W, 1, u, W.identity, (1, 0)) == 0

    def test_against_lambda_operator(self):
        # every q^d coefficient of Lambda_i(eps_u) is a GW number
        from qaff.affine import affine_coh

        H = affine_coh("A", 2, 6)
        W = H.W
        for ws in W.enumerate_up_to(2).values():
            for u in ws:
                for i in range(3):
                    img = H.lambda_op(i, H.basis(u))
                    for w, poly in img.terms.items():
                        for exps, coeff in poly.terms.items():
                            if all(e == 0 for e in exps):
                                continue
                            assert coeff == gw_invariant(W, i, u, w, exps)


class TestCovers:
    def test_cover_lengths(self):
        W = affine_weyl("B", 2)
        u = W.from_word([0, 1])
        from qaff.roots import coroot_ht

        for c in qbruhat_covers(W, u):
            if c.is_quantum:
                assert W.length(c.target) == 2 + 1 - 2 * coroot_ht(c.q_deg)
            else:
                assert W.length(c.target) == 3

    def test_chain_kinds_partition(self):
        # s0s1 -> s0 -> e, both steps quantum; the two roots are non-orthogonal
        W = affine_weyl("A", 1)
        chains = qbruhat_chains(W, W.from_word([0, 1]), W.identity, (1, 1))
        assert len(chains) == 1
        assert chains[0].kind == "qq''"
        assert chains[0].first.is_quantum and chains[0].second.is_quantum

    def test_mixed_chains(self):
        W = affine_weyl("A", 2)
        v = W.from_word([1])
        chains = qbruhat_chains(W, W.identity, v, (1, 0, 1))
        for c in chains:
            assert c.kind in ("1q", "q1", "qq'", "qq''")
            assert c.degree == (1, 0, 1)


def test_moment_graph_slice_shapes():
    W = affine_weyl("A", 1)
    g = moment_graph_slice(W, 3)
    lengths = sorted(W.length(w) for w in g.vertices)
    assert lengths == [0, 1, 1, 2, 2, 3, 3]
    for a, b, root, coroot in g.edges:
        assert W.length(a) < W.length(b)
        assert W.multiply(a, W.reflection(root)) == b
        assert coroot == W.ard.coroot(root)
    dot = g.to_dot()
    assert dot.startswith("digraph") or dot.startswith("graph")
    payload = g.to_json_obj()
    json.dumps(payload)  # must be serializable
    assert payload["vertices"] and payload["edges"]
