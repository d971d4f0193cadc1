import math

import pytest

from circomp.verify import (
    PUBLISHED_72_CONNECTED,
    PUBLISHED_72_DISCONNECTED,
    SUITES,
    run_suites,
    suite_connectivity,
    suite_order_72,
)


def literal_gcd_connected(s):
    """Deliberately broken criterion: ignores the modulus when taking the gcd."""
    return math.gcd(*s.elements) == 1


class TestRunSuites:
    def test_small_universe_all_pass_in_registry_order(self):
        results = run_suites(max_n=6)
        assert [r.name for r in results] == [name for name, _, _ in SUITES]
        assert all(r.passed for r in results)
        assert all(r.checked > 0 for r in results)

    def test_workers_match_sequential(self):
        assert run_suites(max_n=4, workers=2) == run_suites(max_n=4)

    def test_rejects_bad_arguments(self):
        with pytest.raises(ValueError):
            run_suites(max_n=1)
        with pytest.raises(ValueError):
            run_suites(workers=0)


class TestFaultInjection:
    def test_broken_gcd_fails_naming_the_order_8_witness(self):
        result = suite_connectivity(max_n=8, min_n=8, connected_by_gcd=literal_gcd_connected)
        assert not result.passed
        assert "8: 0,3" in result.counterexample

    def test_broken_gcd_full_scan_hits_smaller_witnesses_first(self):
        # From n=1 the first refutation is {0} itself (element gcd 0);
        # starting at n=2 it is {0,2} in Z_3, which generates Z_3 despite
        # its element gcd of 2.
        result = suite_connectivity(max_n=12, connected_by_gcd=literal_gcd_connected)
        assert not result.passed
        assert "n=1, set 1: 0" in result.counterexample
        result = suite_connectivity(max_n=12, min_n=2, connected_by_gcd=literal_gcd_connected)
        assert not result.passed
        assert "3: 0,2" in result.counterexample


class TestOrder72:
    def test_self_consistent_and_flags_published_figures(self):
        result = suite_order_72()
        assert result.passed
        assert "2361183241400454481920" in result.detail
        assert "34368124928" in result.detail
        assert str(PUBLISHED_72_CONNECTED) in result.detail
        assert str(PUBLISHED_72_DISCONNECTED) in result.detail
