import itertools
import random

import pytest

from krpoly import KRParams, TensorElement, enumerate_crystal, is_classical_hw, tensor
from krpoly.graph import build_graph
from krpoly.verify import signature_e, signature_f, signature_word, string_eps, string_phi

from conftest import all_params, cell, pair, product_elements


P11 = KRParams(1, 1, 1)
P13 = KRParams(1, 1, 3)


def test_mixed_rank_rejected():
    with pytest.raises(ValueError):
        tensor(cell(1, 1, 0), enumerate_crystal(KRParams(2, 1, 1))[0])


def test_lowering_examples_from_the_eight_element_product():
    x = pair(cell(1, 1, 0), cell(1, 3, 0))
    assert x.f(1) == pair(cell(1, 1, 0), cell(1, 3, 1))
    y = pair(cell(1, 1, 1), cell(1, 3, 3))
    assert y.f(0) == pair(cell(1, 1, 1), cell(1, 3, 2))


def test_raising_examples():
    x = pair(cell(1, 1, 0), cell(1, 3, 1))
    assert x.e(1) == pair(cell(1, 1, 0), cell(1, 3, 0))
    hw = pair(cell(1, 1, 1), cell(1, 3, 0))
    assert is_classical_hw(hw)
    assert hw.e(1) is None


def test_statistics_fold():
    x = pair(cell(1, 1, 0), cell(1, 3, 0))
    assert x.phi(1) == 4  # max{1, 1 + 3 - 0}
    assert x.eps(1) == 0
    assert sum(x.affine_weight().pairings) == 0


def test_partial_inverse_and_weight_sum():
    for x in product_elements(P11, P13):
        for l in (0, 1):
            fx = x.f(l)
            if fx is not None:
                assert fx.e(l) == x
            ex = x.e(l)
            if ex is not None:
                assert ex.f(l) == x
        assert x.classical_weight() == tuple(
            a + b
            for a, b in zip(
                x.factors[0].classical_weight(), x.factors[1].classical_weight()
            )
        )


def test_signature_rule_matches_recursive_rule_pairs():
    for params1 in all_params(2, 2):
        for params2 in all_params(2, 2):
            for x in product_elements(params1, params2):
                for l in range(3):
                    word = signature_word(x, l)
                    assert x.phi(l) == sum(1 for w in word if w[0] == "+")
                    assert x.eps(l) == sum(1 for w in word if w[0] == "-")
                    assert x.f(l) == signature_f(x, l)
                    assert x.e(l) == signature_e(x, l)


def test_signature_rule_matches_recursive_rule_triples():
    crystal = enumerate_crystal(KRParams(2, 1, 1))
    for factors in itertools.product(crystal, repeat=3):
        x = TensorElement(factors)
        for l in range(3):
            assert x.f(l) == signature_f(x, l)
            assert x.e(l) == signature_e(x, l)
            word = signature_word(x, l)
            assert x.phi(l) == sum(1 for w in word if w[0] == "+")
            assert x.eps(l) == sum(1 for w in word if w[0] == "-")


def test_tensor_string_statistics_by_walking():
    rng = random.Random(11)
    elements = product_elements(KRParams(2, 1, 2), KRParams(2, 2, 1))
    for x in rng.sample(elements, min(20, len(elements))):
        for l in range(3):
            assert x.phi(l) == string_phi(x, l)
            assert x.eps(l) == string_eps(x, l)


def test_product_of_kr_crystals_is_connected_all_colors():
    for params1 in all_params(2, 2):
        for params2 in all_params(2, 2):
            graph = build_graph(product_elements(params1, params2), range(3))
            assert graph.is_connected()


def test_classical_components_have_one_hw_element_each():
    elements = product_elements(KRParams(2, 1, 2), KRParams(2, 1, 1))
    graph = build_graph(elements, range(1, 3))
    for comp in graph.component_indices():
        hw = [i for i in comp if is_classical_hw(graph.vertices[i])]
        assert len(hw) == 1
