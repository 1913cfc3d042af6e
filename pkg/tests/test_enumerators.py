"""Enumeration: specialized families, general search, oracle agreement."""

from math import comb

import pytest

from altcurves.dualgraph import SaddleChannel
from altcurves.enumerators import (
    EnumerationBudget,
    classify_family,
    enumerate_general,
    enumerate_genus2,
    enumerate_pppp,
    enumerate_psps_pairs,
    oracle_enumerate,
    puncture_class_representatives,
    saddle_pair_class_representatives,
)
from altcurves.errors import GuardAbort, TractabilityError
from altcurves.euler import budgets
from altcurves.words import (
    CurveWord,
    Letter,
    check_configuration,
    check_word,
    serialize_word,
)

from conftest import TORUS_NAMES, VALID_NAMES, load_dual

# class counts certified against oracle_enumerate(max_len=4) on every fixture
EXPECTED = {
    "borromean": (6, 3),
    "hopf": (1, 0),
    "k3_1": (3, 0),
    "k4_1": (5, 0),
    "k5_1": (10, 0),
    "k5_2": (8, 0),
    "k6_1": (12, 0),
    "k6_2": (10, 0),
    "k6_3": (9, 0),
    "k7_1": (21, 0),
    "k7_2": (17, 0),
    "k7_3": (15, 0),
    "k7_4": (13, 0),
    "k7_5": (13, 0),
    "k7_6": (12, 0),
    "k7_7": (11, 0),
}


def test_expected_covers_corpus():
    assert sorted(EXPECTED) == VALID_NAMES


def test_genus2_counts_frozen():
    for name, (pppp, psps) in EXPECTED.items():
        result = enumerate_genus2(load_dual(name))
        assert result.counts["pppp"] == pppp, name
        assert result.counts["psps_pair"] == psps, name
        assert result.counts["other"] == 0, name
        assert result.counts["total"] == pppp + psps, name


def test_torus_closures_choose_two_bigons():
    # on a (2,n) torus closure the classes pair up bigons: n choose 2
    for name, n in TORUS_NAMES.items():
        result = enumerate_pppp(load_dual(name))
        assert result.counts["pppp"] == comb(n, 2), name


def test_trefoil_pppp_words():
    result = enumerate_pppp(load_dual("k3_1"))
    words = sorted(serialize_word(c.words_plus[0]) for c in result.configurations)
    assert words == ["P1 P3 P6 P4", "P1 P4 P2 P5", "P2 P5 P3 P6"]


def test_borromean_psps_pairs_use_opposite_channels():
    result = enumerate_psps_pairs(load_dual("borromean"))
    assert result.counts["psps_pair"] == 3
    for cfg in result.configurations:
        w1, w2 = cfg.words_plus
        ch1 = {l.ref for l in w1.letters if l.kind == "S"}
        ch2 = {l.ref for l in w2.letters if l.kind == "S"}
        assert {c.crossing for c in ch1} == {c.crossing for c in ch2}
        assert len({c.crossing for c in ch1}) == 2
        flipped = {SaddleChannel(c.crossing, "B" if c.side == "A" else "A")
                   for c in ch1}
        assert ch2 == flipped


def test_emitted_configurations_are_clean():
    for name in ("k3_1", "borromean", "k6_3"):
        g = load_dual(name)
        result = enumerate_genus2(g)
        for cfg in result.configurations:
            for w in cfg.words_plus + cfg.words_minus:
                assert check_word(g, w) == []
            assert check_configuration(g, cfg, innermost_all=True) == []


def test_words_never_repeat_arcs_on_prime_diagrams():
    # two faces of a prime diagram never share two arcs, so the quotient by
    # "three shared punctures" is the identity on every valid fixture
    for name in VALID_NAMES:
        g = load_dual(name)
        result = enumerate_pppp(g)
        for cfg in result.configurations:
            arcs = [l.ref for l in cfg.words_plus[0].letters]
            assert len(set(arcs)) == 4, name


def _word(arcs):
    return CurveWord(tuple(Letter("P", a) for a in arcs), tuple(range(len(arcs))))


def test_puncture_quotient_merges_three_shared():
    w1 = _word([1, 2, 3, 4])
    w2 = _word([1, 2, 3, 5])  # shares 3 arcs with w1
    w3 = _word([1, 2, 6, 7])  # shares only 2
    reps = puncture_class_representatives([w1, w2, w3])
    assert len(reps) == 2
    w4 = _word([4, 3, 2, 1])  # same multiset as w1
    assert len(puncture_class_representatives([w1, w2, w3, w4])) == 2


def _pair(c1, s1, c2, s2):
    w = CurveWord(
        (Letter("P", 1), Letter("S", SaddleChannel(c1, s1)),
         Letter("P", 2), Letter("S", SaddleChannel(c2, s2))),
        (0, 1, 2, 3),
    )
    flip = {"A": "B", "B": "A"}
    partner = CurveWord(
        (Letter("P", 3), Letter("S", SaddleChannel(c1, flip[s1])),
         Letter("P", 4), Letter("S", SaddleChannel(c2, flip[s2]))),
        (4, 5, 6, 7),
    )
    return (w, partner)


def test_saddle_pair_quotient_merges_shared_channel_sets():
    p1 = _pair(1, "A", 2, "A")
    p2 = (p1[0], _pair(1, "A", 2, "A")[1].rotated(2))  # same channel sets
    p3 = _pair(1, "A", 3, "A")
    reps = saddle_pair_class_representatives([p1, p2, p3])
    assert len(reps) == 2


def test_general_matches_specialized_at_genus_two():
    for name in ("k3_1", "k4_1", "borromean"):
        g = load_dual(name)
        spec = enumerate_genus2(g)
        general = enumerate_general(g, budgets(2))
        spec_keys = {
            tuple(serialize_word(w) for w in cfg.words_plus)
            for cfg in spec.configurations
        }
        general_family_keys = {
            tuple(serialize_word(w) for w in cfg.words_plus)
            for cfg in general.configurations
            if classify_family(cfg) != "other"
        }
        assert spec_keys == general_family_keys, name
        assert general.counts["pppp"] == spec.counts["pppp"]
        assert general.counts["psps_pair"] == spec.counts["psps_pair"]


def test_general_pattern_restriction():
    g = load_dual("borromean")
    only_pppp = enumerate_general(g, budgets(2), patterns=("PPPP",))
    assert only_pppp.counts["pppp"] == 6
    assert only_pppp.counts["psps_pair"] == 0
    assert all(classify_family(c) == "pppp" for c in only_pppp.configurations)


def test_general_is_deterministic():
    g = load_dual("k5_2")
    runs = [enumerate_general(g, budgets(2)) for _ in range(2)]
    serial = [
        tuple(tuple(serialize_word(w) for w in cfg.words_plus)
              for cfg in r.configurations)
        for r in runs
    ]
    assert serial[0] == serial[1]


def test_genus3_runs_on_trefoil():
    g = load_dual("k3_1")
    result = enumerate_general(g, budgets(3))
    assert result.counts["total"] == 15
    assert result.counts["pppp"] == 3
    # the genus-2 families persist inside the genus-3 budget
    spec = enumerate_genus2(g)
    spec_keys = {
        tuple(serialize_word(w) for w in cfg.words_plus)
        for cfg in spec.configurations
    }
    gen_keys = {
        tuple(serialize_word(w) for w in cfg.words_plus)
        for cfg in result.configurations
    }
    assert spec_keys <= gen_keys


def test_guard_abort_carries_stats():
    g = load_dual("k3_1")
    with pytest.raises(GuardAbort) as err:
        enumerate_general(g, budgets(9), guard_cap=5000)
    assert err.value.cap == 5000
    assert err.value.visited > 5000
    assert "partial walks" in str(err.value)


def test_budget_fields():
    b = EnumerationBudget(2, 4, 2, 24, 2)
    assert (b.genus, b.max_punctures, b.max_curves,
            b.max_word_length, b.max_compressions) == (2, 4, 2, 24, 2)


def test_oracle_rejects_deep_scans():
    with pytest.raises(TractabilityError):
        oracle_enumerate(load_dual("k3_1"), 9)


def test_oracle_agreement_on_small_fixtures():
    for name in ("k3_1", "hopf", "borromean"):
        g = load_dual(name)
        oracle = oracle_enumerate(g, 4)
        spec = enumerate_genus2(g)
        o_pppp = [c.words_plus[0] for c in oracle.configurations
                  if classify_family(c) == "pppp"]
        o_pairs = [tuple(c.words_plus) for c in oracle.configurations
                   if classify_family(c) == "psps_pair"]
        reps_p = sorted(serialize_word(w)
                        for w in puncture_class_representatives(o_pppp))
        reps_s = sorted(tuple(map(serialize_word, p))
                        for p in saddle_pair_class_representatives(o_pairs))
        s_p = sorted(serialize_word(c.words_plus[0]) for c in spec.configurations
                     if classify_family(c) == "pppp")
        s_s = sorted(tuple(map(serialize_word, c.words_plus))
                     for c in spec.configurations
                     if classify_family(c) == "psps_pair")
        assert reps_p == s_p, name
        assert reps_s == s_s, name
