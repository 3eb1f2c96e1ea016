"""Weight-class prechecks, basis growth, fixture validation, and the search."""

import numpy as np
import pytest

from relrep import (BasisState, ExtensionRejected, GroupSpec,
                    SearchConfig, builtin_52_65, default_threshold, extend_basis,
                    hamming_weights, induced_partition, initial_state,
                    parse_bitstrings, precheck, search,
                    shipped_subgroup_bitstrings, span, sumset, validate_fixture,
                    verify_sumsets, weight_class)


def test_default_threshold_rule():
    assert default_threshold(10) == 6
    assert default_threshold(7) == 4
    assert default_threshold(13) == 8


def test_precheck_k10_t6_passes():
    report = precheck(10, 6)
    assert report.passed
    assert report.low_size == 847 and report.high_size == 176
    assert report.low_size + report.high_size + 1 == 1024
    assert [c.holds for c in report.checks] == [True, True, True]


def test_precheck_k10_t9_fails_on_sum_free_identity():
    # C is the single all-ones vector; C+C = {0} is nowhere near G minus C
    report = precheck(10, 9)
    assert not report.passed
    by_name = {c.name: c.holds for c in report.checks}
    assert by_name["X+X = G"] is True
    assert by_name["C+C = G minus C"] is False


def test_precheck_k7_values_frozen():
    # recorded once from the sumset computation itself
    assert precheck(7, 4).passed
    report = precheck(7, 3)
    assert not report.passed
    assert [c.holds for c in report.checks] == [False, True, False]


def test_precheck_k13_default_threshold_passes():
    assert precheck(13, 8).passed


def test_precheck_validation():
    with pytest.raises(ValueError):
        precheck(10, 0)
    with pytest.raises(ValueError):
        precheck(10, 10)


# -- extend_basis ------------------------------------------------------------------


def _fresh_state(k=10, t=6):
    group = GroupSpec.power(2, k)
    return initial_state(group, weight_class(group, 1, t))


def test_extend_accepts_singletons_and_rejects_repeats():
    state = _fresh_state()
    v = int("0000000001", 2)
    grown = extend_basis(state, v)
    assert isinstance(grown, BasisState)
    assert grown.order == 2 and grown.vectors == (v,)
    again = extend_basis(grown, v)
    assert isinstance(again, ExtensionRejected) and again.reason == "dependent"


def test_extend_rejects_vectors_leaving_the_shell():
    group = GroupSpec.power(2, 10)
    h = group.parse_element("1110000000")
    v = group.parse_element("0001111000")
    state = extend_basis(_fresh_state(), h)
    rejected = extend_basis(state, v)
    assert isinstance(rejected, ExtensionRejected)
    assert rejected.reason == "escapes_allowed"
    assert rejected.offending == h  # h + v has weight 7


def test_extend_raises_on_candidates_outside_the_shell():
    group = GroupSpec.power(2, 10)
    heavy = group.parse_element("1111111000")
    with pytest.raises(ValueError, match="outside"):
        extend_basis(_fresh_state(), heavy)


def test_span_doubles_and_stays_inside_shell():
    state = _fresh_state()
    weights = hamming_weights(10)
    rng = np.random.default_rng(0)
    low = weight_class(state.group, 1, 6)
    candidates = [int(v) for v in rng.permutation(low.indices())]
    for v in candidates:
        result = extend_basis(state, v)
        if isinstance(result, BasisState):
            assert result.order == 2 * state.order
            nonzero = result.span_set().indices()
            nonzero = nonzero[nonzero != 0]
            assert ((weights[nonzero] >= 1) & (weights[nonzero] <= 6)).all()
            state = result
        if state.order >= 32:
            break


# -- fixture validation ----------------------------------------------------------------


def test_shipped_fixture_passes_all_four_checks():
    result = validate_fixture(shipped_subgroup_bitstrings())
    assert result.element_count == 63
    assert result.weights_ok and not result.bad_weight_elements
    assert result.closure_ok and result.subgroup_order == 64
    assert result.verification.accepted
    assert result.classes_ok
    assert result.class_count == 16 and result.class_size == 64
    assert result.passed
    payload = result.to_dict()
    assert payload["verdict"] == "accept"


def test_repo_fixture_file_matches_package_data(fixtures_dir):
    from importlib import resources
    repo_text = (fixtures_dir / "h52_k10.txt").read_text()
    pkg_text = resources.files("relrep.data").joinpath("h52_k10.txt").read_text()
    assert repo_text == pkg_text


def test_dropping_an_element_breaks_closure():
    bits = shipped_subgroup_bitstrings()
    result = validate_fixture(bits[:-1])
    assert not result.closure_ok
    assert result.subgroup_order == 63  # 62 elements plus 0: not a 2-group order
    assert not result.passed


def test_flipping_a_bit_breaks_closure_and_verification():
    bits = shipped_subgroup_bitstrings()
    assert bits[0] == "0110000000"
    result = validate_fixture(["1110000000"] + bits[1:])
    assert result.weights_ok
    assert not result.closure_ok
    assert not result.verification.accepted
    assert result.classes_ok is False
    assert not result.passed


def test_fixture_parse_errors():
    with pytest.raises(ValueError, match="bitstring"):
        validate_fixture(["011000000"])  # nine characters
    with pytest.raises(ValueError, match="duplicate"):
        validate_fixture(["0110000000", "0110000000"])


def test_parse_bitstrings_handles_comments():
    values = parse_bitstrings(["# header", "  ", "0000000011  # two"], 10)
    assert values == [3]


# -- search ------------------------------------------------------------------------------


def test_search_target_two_is_immediate():
    out = search(SearchConfig(k=10, t=6, target_order=2, seed=0, restarts=1))
    assert out.reached_target and out.order == 2
    assert out.stopped_by == "target"
    assert len(out.basis) == 1


def test_search_seeded_with_fixture_reaches_64_and_accepts():
    initial = tuple(parse_bitstrings(shipped_subgroup_bitstrings(), 10))
    out = search(SearchConfig(k=10, target_order=64, seed=1, restarts=1,
                              initial_elements=initial))
    assert out.reached_target and out.order == 64
    assert out.report.accepted
    assert out.stats[0].reached_target


def test_search_is_deterministic():
    config = SearchConfig(k=10, seed=21, restarts=3)
    first = search(config)
    second = search(config)
    assert first.to_dict() == second.to_dict()
    assert first.basis == second.basis and first.order == second.order


def test_search_outcome_revalidates_independently():
    for config in (SearchConfig(k=10, seed=2, restarts=2),
                   SearchConfig(k=7, seed=3, restarts=3, backtrack=2),
                   SearchConfig(k=13, seed=4, restarts=1)):
        out = search(config)
        group = GroupSpec.power(2, config.k)
        t = config.resolved_t
        subgroup = span(group, out.basis)
        assert subgroup.order == out.order
        # closure, weight range, and the full sumset verdict, all recomputed
        assert sumset(subgroup.elements, subgroup.elements) == subgroup.elements
        weights = hamming_weights(config.k)
        nonzero = subgroup.elements.indices()
        nonzero = nonzero[nonzero != 0]
        assert ((weights[nonzero] >= 1) & (weights[nonzero] <= t)).all()
        fresh = verify_sumsets(builtin_52_65(),
                               induced_partition(group, subgroup.elements, t))
        assert fresh.accepted == out.report.accepted


def test_search_k7_runs_and_reports_without_success_claim():
    # open-ended attempt: only soundness and determinism are asserted
    config = SearchConfig(k=7, seed=5, restarts=6, backtrack=1)
    out = search(config)
    assert out.order >= 2
    assert out.restarts_run == 6
    assert search(config).to_dict() == out.to_dict()


def test_search_config_validation():
    with pytest.raises(ValueError, match="restart"):
        search(SearchConfig(k=10, restarts=0))
    with pytest.raises(ValueError, match="power of two"):
        SearchConfig(k=10, target_order=48).validated()
    with pytest.raises(ValueError, match="threshold"):
        SearchConfig(k=10, t=10).validated()
    with pytest.raises(ValueError, match="seed"):
        SearchConfig(k=10, seed=-1).validated()


def test_search_rejects_bad_initial_elements():
    group = GroupSpec.power(2, 10)
    clash = (group.parse_element("1110001000"),   # weight 4
             group.parse_element("0001110100"))   # weight 4, disjoint support
    with pytest.raises(ValueError, match="weight constraint"):
        search(SearchConfig(k=10, seed=0, restarts=1, initial_elements=clash))


def test_search_time_budget_stops():
    out = search(SearchConfig(k=10, seed=0, restarts=500, time_budget=0.0))
    assert out.stopped_by == "time"
    assert out.restarts_run <= 1
    assert out.report.verdict in ("accept", "reject")
