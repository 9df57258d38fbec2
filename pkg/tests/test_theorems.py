import pytest

from hyperforge import factory
from hyperforge.theorems import (TheoremResult, composition_theorem, congruence_theorems,
                                 fuzzy_theorems, verify_theorems)

from helpers import structure


@pytest.mark.parametrize("name", ["b_mod_k4_n2", "b_mod_k3_n3", "fiber_bool_m2_n2",
                                  "tupleset_k3_m3_n2", "lift_z4"])
def test_verify_theorems_on_named_structures(name):
    S = dict(factory.corpus(random_count=0))[name]
    results = verify_theorems(S)
    assert all(r.holds for r in results), [r.to_json() for r in results if not r.holds]
    assert {r.theorem for r in results} >= {"double_quotient", "homomorphism_composition",
                                            "two_valued_left_hyperideal"}


def test_vacuous_quotient_claim_on_non_semihyperring():
    S = structure(2, 2, 2, lambda x, y: (1 - x,), lambda x, y: 0)
    by_name = {r.theorem: r for r in congruence_theorems(S)}
    claim = by_name["strongly_regular_quotient"]
    assert claim.holds and claim.checked == 0 and claim.note.startswith("vacuous")


def test_composition_limit():
    S = factory.b_construction(3, 2)
    assert composition_theorem(S, limit=5).checked <= 5


def test_fuzzy_theorems_count_cases():
    S = factory.b_construction(3, 2)
    level, two = fuzzy_theorems(S)
    assert level.holds and two.holds and level.checked == 7 * 3


def test_result_json():
    r = TheoremResult("x", False, 3, {"a": 1})
    assert r.to_json() == {"theorem": "x", "holds": False, "checked": 3, "detail": {"a": 1}}
