import itertools
from collections import defaultdict

import pytest

from bergeham import lemmas as lm
from bergeham.lemmas import HypothesisViolated, LemmaInstance


def subsets(hi):
    items = range(1, hi + 1)
    for k in range(len(items) + 1):
        yield from (frozenset(c) for c in itertools.combinations(items, k))


def python_instances(lemma, s, q):
    if lemma == "verc2" or lemma == "ver_new":
        for A, B in itertools.product(subsets(s), repeat=2):
            yield LemmaInstance(s, q, A=A, B=B)
    elif lemma == "indep2":
        for I, E in itertools.product(subsets(s), subsets(s - 1)):
            yield LemmaInstance(s, q, I=I, Aprime=E)
    elif lemma == "ed_new":
        for A, B in itertools.product(subsets(s - 1), repeat=2):
            yield LemmaInstance(s, q, Aprime=A, Bprime=B)
    else:
        for A, B, F in itertools.product(subsets(s), subsets(s), subsets(s - 1)):
            yield LemmaInstance(s, q, A=A, B=B, F=F)


def python_exhaust(lemma, s_max, q_max):
    stats = defaultdict(lambda: [0, 0, 0, 0])
    total = 0
    for s in range(2, s_max + 1):
        for q in lm.q_range(lemma, q_max):
            for inst in python_instances(lemma, s, q):
                try:
                    verdict = lm.CHECKS[lemma](inst)
                except HypothesisViolated:
                    continue
                total += 1
                for c in verdict.checks:
                    row = stats[c.part]
                    row[0] += 1
                    row[1] += not c.holds
                    row[2] += c.tight
                    row[3] += c.characterized is False
    return total, dict(stats)


@pytest.mark.parametrize("lemma, s_max", [("verc2", 7), ("indep2", 7), ("ver_new", 7), ("ed_new", 7), ("consecpath2", 6)])
def test_kernel_matches_python_enumeration(lemma, s_max):
    total, stats = python_exhaust(lemma, s_max, 3)
    rep = lm.exhaust_lemma(lemma, s_max, 3)
    assert rep.instances == total
    for p in rep.parts:
        assert [p.tested, p.violations, p.tight, p.characterization_failures] == stats.get(p.part, [0, 0, 0, 0])


# -- worked instances --------------------------------------------------------------


def test_verc2_examples():
    v = lm.check_verc2(LemmaInstance(3, 2, A={1}, B={1, 3}))
    assert v.holds and v.checks[0].rhs == 3 and v.checks[0].tight
    v = lm.check_verc2(LemmaInstance(5, 2, A={1, 3}, B={1, 3, 5}))
    assert v.holds and v.checks[0].rhs == 5
    with pytest.raises(HypothesisViolated):
        lm.check_verc2(LemmaInstance(5, 2, A={1, 3}, B={1}))


def test_verc2_q1_counterexamples_by_hand():
    # all hypotheses hold, yet the bounds fail; arithmetic is done here without the checker
    s, A, B = 5, {1, 3, 5}, {1, 2, 3, 4, 5}
    assert 2 * len(A) + len(B - A) - 2 == 6 > s
    v = lm.check_verc2(LemmaInstance(s, 1, A=A, B=B))
    assert not v.holds and v.checks[0].part == "(ii) q=1"
    s, A, B = 3, {2}, {1, 3}
    assert 2 * len(A) + 2 * len(B - A) + 1 - 3 == 4 > s
    v = lm.check_verc2(LemmaInstance(s, 1, A=A, B=B))
    assert [c.holds for c in v.checks] == [True, False]


def test_verc2_holds_for_q_at_least_2():
    rep = lm.exhaust_lemma("verc2", 10, 4)
    assert rep.violations and all(v["q"] == 1 for v in rep.violations)
    assert rep.parts[0].violations == 0 and rep.parts[0].tested > 0


def test_indep2_examples():
    v = lm.check_indep2(LemmaInstance(5, 2, I={5}, Aprime={1}))
    assert v.holds and v.checks[0].rhs == 1 and v.checks[0].tight
    v = lm.check_indep2(LemmaInstance(6, 2, I={4, 6}, Aprime={1}))
    assert v.holds and v.checks[0].rhs == 2 and v.checks[0].tight
    with pytest.raises(HypothesisViolated):
        lm.check_indep2(LemmaInstance(4, 2, I={3}, Aprime={1}))


def test_edge_vertex_distance():
    assert lm.edge_vertex_distance(1, 3) == 1
    assert lm.edge_vertex_distance(1, 2) == 0
    assert lm.edge_vertex_distance(4, 1) == 3


def test_ver_new_examples():
    v = lm.check_ver_new(LemmaInstance(5, 2, A={1, 3, 5}, B={1, 3, 5}))
    c = v.checks[0]
    assert c.tight and c.characterized and v.holds
    v = lm.check_ver_new(LemmaInstance(4, 2, A={1}, B={1, 4}))
    c = v.checks[0]
    assert c.rhs == 3 and c.holds and not c.tight and c.characterized is None
    with pytest.raises(HypothesisViolated):
        lm.check_ver_new(LemmaInstance(3, 2, A={1}, B={2}))


def test_ed_new_examples():
    v = lm.check_ed_new(LemmaInstance(4, 2, Aprime={1, 3}, Bprime={1, 3}))
    c = v.checks[0]
    assert c.lhs == 3 and c.rhs == 3 and c.tight and c.characterized
    v = lm.check_ed_new(LemmaInstance(5, 2, Aprime={1}, Bprime={1, 4}))
    assert v.checks[0].lhs == 4 and v.checks[0].rhs == 3 and v.holds
    with pytest.raises(HypothesisViolated):
        lm.check_ed_new(LemmaInstance(5, 2, Aprime=set(), Bprime={1}))


def test_consecpath2_examples():
    v = lm.check_consecpath2(LemmaInstance(4, A={1, 4}, B={1, 4}, F={2}))
    assert v.checks[0].rhs == 4 and v.checks[0].tight and v.holds
    v = lm.check_consecpath2(LemmaInstance(5, A={1}, B={1, 3}, F=set()))
    assert v.checks[0].rhs == 3 and v.holds
    with pytest.raises(HypothesisViolated):
        lm.check_consecpath2(LemmaInstance(5, A={2}, B={2}, F={2}))


def test_out_of_range_positions():
    with pytest.raises(HypothesisViolated):
        lm.check_verc2(LemmaInstance(3, 2, A={1}, B={4}))
    with pytest.raises(HypothesisViolated):
        lm.check_ed_new(LemmaInstance(3, 2, Aprime={3}, Bprime={3}))


HYPOTHESIS_FLIPS = [
    # (satisfying instance, single-clause negation)
    ("verc2", LemmaInstance(5, 2, A={1}, B={1, 3}), LemmaInstance(5, 2, A={1, 2}, B={1, 4})),
    ("verc2", LemmaInstance(5, 2, A={1}, B={1, 3}), LemmaInstance(5, 2, A={1}, B={1})),
    ("verc2", LemmaInstance(5, 2, A={1}, B={1, 3}), LemmaInstance(5, 3, A={1}, B={1, 3})),
    ("indep2", LemmaInstance(6, 2, I={4, 6}, Aprime={1}), LemmaInstance(6, 2, I={4, 5}, Aprime={1})),
    ("indep2", LemmaInstance(6, 2, I={4, 6}, Aprime={1}), LemmaInstance(6, 2, I={4, 6}, Aprime={2})),
    ("ver_new", LemmaInstance(5, 2, A={1, 3}, B={3, 5}), LemmaInstance(5, 2, A={1, 3}, B={4})),
    ("ed_new", LemmaInstance(5, 2, Aprime={1, 3}, Bprime={3}), LemmaInstance(5, 2, Aprime={1, 3}, Bprime={2})),
    ("consecpath2", LemmaInstance(6, A={1}, B={4}, F={2}), LemmaInstance(6, A={1}, B={3}, F={2})),
    ("consecpath2", LemmaInstance(6, A={1}, B={4}, F={5}), LemmaInstance(6, A={1}, B={4}, F={3})),
]


@pytest.mark.parametrize("lemma, good, bad", HYPOTHESIS_FLIPS)
def test_hypothesis_predicates_flip(lemma, good, bad):
    lm.CHECKS[lemma](good)
    with pytest.raises(HypothesisViolated):
        lm.CHECKS[lemma](bad)


def test_small_s_reports_vacuity():
    rep = lm.exhaust_lemma("ver_new", 2, 4)
    d = rep.to_dict()
    assert d["vacuous"] == (rep.instances == 0)
    rep = lm.exhaust_lemma("ed_new", 2, 4)
    assert rep.instances == 3 and not rep.vacuous  # one per q in 2..4


def test_bad_arguments():
    with pytest.raises(ValueError):
        lm.exhaust_lemma("nope", 5)
    with pytest.raises(ValueError):
        lm.exhaust_lemma("ver_new", 1)
    with pytest.raises(ValueError):
        lm.exhaust_lemma("ver_new", lm.S_CAP + 1)


@pytest.mark.parametrize("lemma", ["indep2", "ver_new", "ed_new", "consecpath2"])
def test_sampling_beyond_cap_is_clean_and_seeded(lemma):
    q = 2
    a = lm.sample_lemma(lemma, 16, q, 3000, seed=4)
    b = lm.sample_lemma(lemma, 16, q, 3000, seed=4)
    assert a.ok and a.to_dict() == b.to_dict()
