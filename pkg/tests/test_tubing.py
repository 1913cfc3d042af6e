"""Tubing enumeration and counting."""

from math import comb

import pytest

from altcurves.enumerators import classify_family, enumerate_genus2
from altcurves.tubing import (
    PunctureCircle,
    TubingPlan,
    circles_from_configuration,
    closed_surface_upper_bound,
    configuration_tubing_count,
    count_tubings,
    enumerate_circle_tubings,
    enumerate_tubings,
    noncrossing_matchings,
)

from conftest import load_dual


def _catalan(k):
    return comb(2 * k, k) // (k + 1)


def test_matchings_are_catalan_many():
    for k in range(7):
        matchings = list(noncrossing_matchings(tuple(range(2 * k))))
        assert len(matchings) == _catalan(k)
        assert len(set(matchings)) == len(matchings)


def test_matchings_never_cross():
    for matching in noncrossing_matchings(tuple(range(8))):
        for (a, b) in matching:
            for (c, d) in matching:
                if (a, b) == (c, d):
                    continue
                # crossing means exactly one endpoint falls strictly inside
                assert (a < c < b) == (a < d < b)


def test_circle_tubings_hit_central_binomial():
    for k in range(7):
        plans = enumerate_circle_tubings(2 * k)
        assert len(plans) == comb(2 * k, k), k
        assert len(set(plans)) == len(plans)
        assert count_tubings(k) == comb(2 * k, k)


def test_two_puncture_circle_has_two_routings():
    plans = enumerate_circle_tubings(2)
    assert plans == (TubingPlan(((0, 1, 0),)), TubingPlan(((0, 1, 1),)))


def test_odd_punctures_rejected():
    with pytest.raises(ValueError):
        enumerate_circle_tubings(3)
    with pytest.raises(ValueError):
        PunctureCircle("п", 5)
    with pytest.raises(ValueError):
        count_tubings(-1)


def test_joint_tubings_multiply():
    circles = (PunctureCircle("a", 2), PunctureCircle("b", 2))
    joint = enumerate_tubings(circles)
    assert len(joint) == 4
    assert all(len(plans) == 2 for plans in joint)


def test_configuration_counts():
    for cfg in enumerate_genus2(load_dual("borromean")).configurations:
        circles = circles_from_configuration(cfg)
        if classify_family(cfg) == "pppp":
            assert [c.punctures for c in circles] == [4]
            assert configuration_tubing_count(cfg) == 6
        else:
            assert [c.punctures for c in circles] == [2, 2]
            assert configuration_tubing_count(cfg) == 4


def test_closed_surface_upper_bound():
    assert closed_surface_upper_bound(1, 2) == comb(4, 2)
    assert closed_surface_upper_bound(54, 2) == 54 * 6
    assert closed_surface_upper_bound(1, 3) == comb(8, 4)
    with pytest.raises(ValueError):
        closed_surface_upper_bound(1, 1)
