"""Acceptance criteria, one test per criterion.

Each test prints a single ``PASS``/``FAIL`` line with the measured numbers.
Run standalone with ``python3 tests/test_acceptance.py`` or through pytest.
"""

import io
import itertools
import random
import sys
import time
from fractions import Fraction
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from hyperforge import axioms, congruence, factory, fuzzy, ideals, morphisms  # noqa: E402
from hyperforge.cli import main as cli_main  # noqa: E402
from hyperforge.core import HyperOpTable, Structure, full_mask, members  # noqa: E402
from hyperforge.serialize import dumps_structure, save_structure  # noqa: E402

import oracles  # noqa: E402
from regen_golden import GOLDEN, golden_structures  # noqa: E402

TWO_VALUED = ((Fraction(1), Fraction(0)), (Fraction(2, 3), Fraction(1, 3)),
              (Fraction(1, 2), Fraction(1, 4)))


def corpus_k4():
    return [(name, S) for name, S in factory.corpus(max_k=4) if S.k <= 4]


# -- criteria -----------------------------------------------------------------

def criterion_1():
    S = factory.b_construction(5, 3)
    start = time.perf_counter()
    verdict = axioms.check_mn_semihyperring(S)
    elapsed = time.perf_counter() - start
    ok = verdict.holds and elapsed < 1.0
    return ok, f"b_construction(5,3) holds={verdict.holds} in {elapsed:.3f}s (limit 1s)"


def criterion_2():
    rng = random.Random(20240)
    pairs = [
        (axioms.check_m_ary_semihypergroup, oracles.semihypergroup),
        (axioms.check_n_ary_semigroup, oracles.semigroup),
        (axioms.check_distributive, oracles.distributive),
        (axioms.check_weak_distributive, lambda S: oracles.distributive(S, weak=True)),
        (axioms.check_mn_semihyperring, oracles.semihyperring),
    ]
    count = disagreements = 0
    for i in range(520):
        k, m, n = rng.randint(1, 3), rng.randint(2, 3), rng.randint(2, 3)
        density = Fraction(rng.randint(1, 4), 4)
        S = factory.random_structure(rng.getrandbits(64), k, m, n, density)
        count += 1
        for checker, oracle in pairs:
            disagreements += checker(S).holds != oracle(S)
        disagreements += (set(oracles.hyperadditive_identities(S))
                          != set(members(axioms.find_hyperadditive_identities(S))))
    ok = count >= 500 and disagreements == 0
    return ok, f"{count} random structures, {disagreements} disagreements"


def criterion_3():
    structures = subsets = violations = 0
    for _, S in corpus_k4():
        structures += 1
        for mask in range(1, 1 << S.k):
            subsets += 1
            if ideals.is_left_hyperideal(S, mask) and not ideals.is_sub_semihyperring(S, mask):
                violations += 1
    return violations == 0, (f"{structures} structures, {subsets} subsets, "
                             f"{violations} violations")


def criterion_4():
    congs = strong = failures = 0
    for _, S in corpus_k4():
        semiring = axioms.check_mn_semihyperring(S).holds
        for rel in congruence.enumerate_congruences(S):
            congs += 1
            ok = (congruence.check_translation_lemma(S, rel).holds
                  and congruence.check_mixed_congruence(S, rel).holds)
            nat = congruence.natural_map(S, rel)
            ok &= morphisms.is_homomorphism(nat) and set(nat.image) == set(range(rel.count))
            if semiring and congruence.is_strongly_regular(S, rel):
                strong += 1
                ok &= axioms.check_mn_semihyperring(congruence.quotient(S, rel)).holds
            failures += not ok
    return failures == 0, (f"{congs} congruences, {strong} strongly regular on "
                           f"semihyperrings, {failures} failures")


def criterion_5():
    start = time.perf_counter()
    pairs = failures = 0
    for _, S in corpus_k4():
        congs = congruence.enumerate_congruences(S)
        for sigma in congs:
            for rho in congs:
                if not rho.refines(sigma):
                    continue
                pairs += 1
                outer = congruence.relation_quotient(sigma, rho, S)
                inner = congruence.quotient(S, rho)
                ok = (congruence.is_congruence(inner, outer).holds
                      and congruence.check_double_quotient_iso(S, sigma, rho))
                failures += not ok
    elapsed = time.perf_counter() - start
    ok = failures == 0 and elapsed < 30
    return ok, f"{pairs} nested pairs, {failures} failures in {elapsed:.1f}s (limit 30s)"


def criterion_6():
    rng = random.Random(6)
    by_arity = {}
    for _, S in corpus_k4():
        by_arity.setdefault((S.m, S.n), []).append(S)
    sampled = failures = 0
    attempts = 0
    while sampled < 250 and attempts < 20000:
        attempts += 1
        group = rng.choice(list(by_arity.values()))
        A, B, C = (rng.choice(group) for _ in range(3))
        ab = morphisms.enumerate_homomorphisms(A, B)
        bc = morphisms.enumerate_homomorphisms(B, C)
        if not ab or not bc:
            continue
        first, second = rng.choice(ab), rng.choice(bc)
        sampled += 1
        composite = morphisms.compose(first, second)
        failures += not (morphisms.is_homomorphism(composite)
                         and oracles.homomorphism(A, C, composite.image))
    ok = sampled >= 200 and failures == 0
    return ok, f"{sampled} composable pairs, {failures} failures"


def criterion_7():
    rng = random.Random(7)
    corpus = corpus_k4()
    pairs = failures = 0
    for _ in range(600):
        _, S = rng.choice(corpus)
        grades = tuple(Fraction(rng.randint(0, d), d)
                       for d in (rng.randint(1, 6) for _ in range(S.k)))
        pairs += 1
        failures += not fuzzy.check_level_theorem(S, fuzzy.FuzzySubset(grades))
    two_cases = two_failures = lefts = 0
    for _, S in corpus:
        for mask in range(1, 1 << S.k):
            left = ideals.is_left_hyperideal(S, mask)
            lefts += left
            for s, t in TWO_VALUED:
                mu = fuzzy.two_valued_fuzzy(mask, s, t, S.k)
                two_cases += 1
                two_failures += fuzzy.is_fuzzy_left_hyperideal(S, mu).holds != left
    ok = pairs >= 500 and failures == 0 and two_failures == 0
    return ok, (f"{pairs} random (structure, mu) pairs with {failures} failures; "
                f"{two_cases} two-valued cases over {lefts} left hyperideals with "
                f"{two_failures} failures")


def _graded(rng, S):
    mu_f = []
    for e in S.f.table:
        dist = {z: Fraction(rng.randint(1, 6), 6) for z in members(e)}
        mu_f.append(dist)
    mu_g = [{z: Fraction(rng.randint(1, 6), 6)} for z in S.g.table]
    return fuzzy.FuzzyHyperStructure(S.k, S.m, S.n, tuple(mu_f), tuple(mu_g))


def criterion_8():
    rng = random.Random(8)
    verified = failures = 0
    for _, S in factory.verified_corpus(max_k=4):
        src = _graded(rng, S)
        targets = [fuzzy.FuzzyHyperStructure.from_structure(S),
                   _graded(rng, S),
                   fuzzy.FuzzyHyperStructure.from_structure(
                       Structure(HyperOpTable(S.m, S.k, (full_mask(S.k),) * S.k ** S.m), S.g))]
        for tgt in targets:
            for image in itertools.product(range(S.k), repeat=S.k):
                if fuzzy.is_fuzzy_homomorphism(src, tgt, image):
                    verified += 1
                    failures += not fuzzy.check_fuzzy_to_crisp_hom(src, tgt, image)
    ok = verified > 0 and failures == 0
    return ok, f"{verified} verified fuzzy homomorphisms, {failures} failures"


def criterion_9():
    models = factory.search_models(2, 2, 2, ["weak-dist", "!dist"])
    if not models:
        return False, "no weak-distributive, non-distributive model at k=2"
    S = models[0]
    golden = (GOLDEN / "weak_not_distributive_k2.json").read_text()
    ok = (axioms.check_weak_distributive(S).holds
          and not axioms.check_distributive(S).holds
          and golden == dumps_structure(S) + "\n")
    return ok, f"{len(models)} canonical models, first matches committed golden: {ok}"


def _cli(argv):
    out, err = io.StringIO(), io.StringIO()
    code = cli_main(argv, stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def criterion_10(tmp_dir):
    b5 = tmp_dir / "b5.json"
    mod4 = tmp_dir / "mod4.json"
    save_structure(factory.b_construction(5, 3), b5)
    save_structure(factory.b_construction(4, 2), mod4)
    invocations = [
        ["check", str(b5)],
        ["ideals", str(mod4), "--kind", "left"],
        ["congruences", str(mod4), "--verify-theorems"],
        ["homs", "--from", str(mod4), "--to", str(mod4)],
        ["gen", "random", "--seed", "42", "--k", "3"],
        ["search", "--k", "2", "--axioms", "weak-dist,!dist"],
    ]
    unstable = []
    for argv in invocations:
        runs = {_cli(["--jobs", str(jobs), *argv]) for jobs in (1, 2, 4)}
        runs.add(_cli(argv))
        if len(runs) != 1:
            unstable.append(argv[0])
    mismatched = [name for name, S in golden_structures().items()
                  if (GOLDEN / f"{name}.json").read_text() != dumps_structure(S) + "\n"]
    ok = not unstable and not mismatched
    return ok, (f"{len(invocations)} invocations x 4 job settings, unstable: {unstable}; "
                f"{len(golden_structures())} golden files, mismatched: {mismatched}")


# -- pytest wrappers -------------------------------------------------------------

def report(capsys, number, result):
    ok, detail = result
    with capsys.disabled():
        print(f"\n[criterion {number}] {'PASS' if ok else 'FAIL'}: {detail}")
    assert ok, detail


@pytest.mark.parametrize("number", range(1, 10))
def test_criterion(number, capsys):
    report(capsys, number, globals()[f"criterion_{number}"]())


def test_criterion_10(capsys, tmp_path):
    report(capsys, 10, criterion_10(tmp_path))


if __name__ == "__main__":
    import tempfile
    failed = 0
    for number in range(1, 11):
        if number == 10:
            with tempfile.TemporaryDirectory() as tmp:
                ok, detail = criterion_10(Path(tmp))
        else:
            ok, detail = globals()[f"criterion_{number}"]()
        failed += not ok
        print(f"[criterion {number}] {'PASS' if ok else 'FAIL'}: {detail}")
    sys.exit(1 if failed else 0)
