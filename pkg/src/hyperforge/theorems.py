"""Property suite running the structural theorems on one structure.

Each entry of :func:`verify_theorems` checks one claim exhaustively on the
given structure and reports how many instances it examined.  Claims whose
hypothesis requires an (m,n)-semihyperring are reported as vacuous when the
structure is not one.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from . import axioms, congruence, fuzzy, ideals, morphisms
from .core import Structure, members

TWO_VALUED_GRADES = ((Fraction(1), Fraction(0)),
                     (Fraction(2, 3), Fraction(1, 3)),
                     (Fraction(1, 2), Fraction(1, 4)))


@dataclass(frozen=True)
class TheoremResult:
    theorem: str
    holds: bool
    checked: int
    detail: Optional[dict] = None
    note: Optional[str] = None

    def to_json(self) -> dict:
        out = {"theorem": self.theorem, "holds": self.holds, "checked": self.checked}
        if self.detail is not None:
            out["detail"] = self.detail
        if self.note is not None:
            out["note"] = self.note
        return out


def left_ideals_are_subrings(S: Structure) -> TheoremResult:
    lefts = ideals.enumerate_hyperideals(S, "left")
    for rep in lefts:
        if not ideals.is_sub_semihyperring(S, rep.subset):
            return TheoremResult("left_hyperideal_is_sub_semihyperring", False, len(lefts),
                                 {"subset": list(members(rep.subset))})
    return TheoremResult("left_hyperideal_is_sub_semihyperring", True, len(lefts))


def congruence_theorems(S: Structure, congs=None) -> list[TheoremResult]:
    congs = congruence.enumerate_congruences(S) if congs is None else congs
    semiring = axioms.check_mn_semihyperring(S).holds
    results = []

    def first_failure(name, fn, items):
        for item in items:
            ok = fn(item)
            if not ok:
                detail = {"relation": item.to_json()} if hasattr(item, "to_json") else {
                    "pair": [r.to_json() for r in item]}
                return TheoremResult(name, False, len(items), detail)
        return TheoremResult(name, True, len(items))

    results.append(first_failure(
        "translation_lemma", lambda r: congruence.check_translation_lemma(S, r).holds, congs))
    results.append(first_failure(
        "mixed_congruence", lambda r: congruence.check_mixed_congruence(S, r).holds, congs))

    def onto_hom(rel):
        nat = congruence.natural_map(S, rel)
        return morphisms.is_homomorphism(nat) and set(nat.image) == set(range(nat.target.k))

    results.append(first_failure("natural_map_onto_homomorphism", onto_hom, congs))

    strong = [r for r in congs if congruence.is_strongly_regular(S, r)]
    if semiring:
        results.append(first_failure(
            "strongly_regular_quotient",
            lambda r: axioms.check_mn_semihyperring(congruence.quotient(S, r)).holds, strong))
    else:
        results.append(TheoremResult("strongly_regular_quotient", True, 0,
                                     note="vacuous: structure is not an (m,n)-semihyperring"))

    nested = [(s, r) for s in congs for r in congs if r.refines(s)]

    def double_quotient(pair):
        sigma, rho = pair
        outer = congruence.relation_quotient(sigma, rho, S)
        inner = congruence.quotient(S, rho)
        return (congruence.is_congruence(inner, outer).holds
                and congruence.check_double_quotient_iso(S, sigma, rho))

    results.append(first_failure("double_quotient", double_quotient, nested))
    return results


def composition_theorem(S: Structure, limit: int = 400) -> TheoremResult:
    endos = morphisms.enumerate_homomorphisms(S, S, "all")
    pairs = list(itertools.islice(itertools.product(endos, repeat=2), limit))
    for a, b in pairs:
        if not morphisms.is_homomorphism(morphisms.compose(a, b)):
            return TheoremResult("homomorphism_composition", False, len(pairs),
                                 {"first": a.to_json(), "second": b.to_json()})
    return TheoremResult("homomorphism_composition", True, len(pairs))


def fuzzy_theorems(S: Structure) -> list[TheoremResult]:
    checked = 0
    level_bad = two_bad = None
    for I in range(1, 1 << S.k):
        left = ideals.is_left_hyperideal(S, I)
        for s, t in TWO_VALUED_GRADES:
            mu = fuzzy.two_valued_fuzzy(I, s, t, S.k)
            checked += 1
            if two_bad is None and fuzzy.is_fuzzy_left_hyperideal(S, mu).holds != left:
                two_bad = {"subset": list(members(I)), "s": str(s), "t": str(t)}
            if level_bad is None and not fuzzy.check_level_theorem(S, mu):
                level_bad = {"grades": mu.to_json()}
    return [
        TheoremResult("fuzzy_level_subsets", level_bad is None, checked, level_bad),
        TheoremResult("two_valued_left_hyperideal", two_bad is None, checked, two_bad),
    ]


def fuzzy_to_crisp(S: Structure) -> TheoremResult:
    F = fuzzy.FuzzyHyperStructure.from_structure(S, Fraction(1, 2), Fraction(1, 2))
    G = fuzzy.FuzzyHyperStructure.from_structure(S)
    endos = morphisms.enumerate_homomorphisms(S, S, "all")
    checked = 0
    for h in endos:
        if fuzzy.is_fuzzy_homomorphism(F, G, h):
            checked += 1
            if not fuzzy.check_fuzzy_to_crisp_hom(F, G, h):
                return TheoremResult("fuzzy_to_crisp_homomorphism", False, checked,
                                     {"map": h.to_json()})
    return TheoremResult("fuzzy_to_crisp_homomorphism", True, checked)


def verify_theorems(S: Structure) -> list[TheoremResult]:
    return [left_ideals_are_subrings(S), *congruence_theorems(S), composition_theorem(S),
            *fuzzy_theorems(S), fuzzy_to_crisp(S)]
