import pytest

from magiclab import (
    DomainError,
    PartiteSpec,
    build_complete_multipartite,
    label_bipartite,
    multipartite_distance_magic_check,
    partite_sums_check,
    theta_bipartite,
    verify_s_magic,
)


def test_formula_branches():
    assert theta_bipartite(2, 2).theta == 0
    assert theta_bipartite(2, 3).theta == 1
    assert theta_bipartite(2, 6).theta == 3  # deficit branch: ceil(12/4)
    assert theta_bipartite(2, 2).case_tag == "bipartite-0"
    assert theta_bipartite(2, 3).case_tag == "bipartite-1"
    assert theta_bipartite(2, 6).case_tag == "bipartite-deficit"


def test_formula_rejects_singleton_side():
    with pytest.raises(DomainError):
        theta_bipartite(1, 5)
    with pytest.raises(DomainError):
        theta_bipartite(3, 2)


def test_witnesses_verify_and_realize_eta():
    for n1, n2 in [(2, 2), (2, 3), (2, 6), (3, 8), (4, 7), (5, 5), (2, 9)]:
        res = theta_bipartite(n1, n2)
        lab = res.witness
        assert lab is not None and lab.eta == n1 + n2 + res.theta
        spec = PartiteSpec((n1, n2))
        assert partite_sums_check(spec, lab)
        assert verify_s_magic(build_complete_multipartite(spec), lab).is_magic


def test_label_k22_golden():
    lab = label_bipartite(2, 2, 4)
    assert sorted(lab.labels[:2]) == [1, 4]
    assert sorted(lab.labels[2:]) == [2, 3]


def test_label_parity_blocked_sets():
    # sum of 1..17 is odd, so K(8,9) cannot split it; one label steps up
    assert label_bipartite(8, 9, 17) is None
    lab = label_bipartite(8, 9, 18)
    assert lab.label_set == tuple(range(1, 17)) + (18,)
    assert sum(lab.labels[:8]) == sum(lab.labels[8:]) == 77

    assert label_bipartite(6, 7, 13) is None
    lab = label_bipartite(6, 7, 14)
    assert lab.label_set == tuple(range(1, 13)) + (14,)


def test_label_respects_budget():
    assert label_bipartite(2, 6, 10) is None  # needs top label 11
    assert label_bipartite(2, 6, 11) is not None
    assert label_bipartite(2, 6, 25).eta == 11  # minimal top label regardless


def test_label_singleton_side():
    lab = label_bipartite(1, 3, 6)
    assert sorted(lab.labels[1:]) == [1, 2, 3] and lab.labels[0] == 6
    assert label_bipartite(1, 1, 10) is None  # equal distinct labels impossible


def test_witnesses_beyond_the_lexmin_threshold():
    # large instances take the closed-form greedy split instead of the DP
    res = theta_bipartite(300, 400)
    assert res.theta == 0 and res.witness.eta == 700
    spec = PartiteSpec((300, 400))
    assert partite_sums_check(spec, res.witness)
    res = theta_bipartite(41, 60)  # near-balanced shape, one label stepped up
    assert res.witness.eta == 101 + res.theta
    assert partite_sums_check(PartiteSpec((41, 60)), res.witness)
    res = theta_bipartite(3, 300)  # deficit shape at scale
    assert res.theta == 14748 and res.witness.eta == 303 + res.theta


def test_zero_branch_agrees_with_characterization():
    for n1 in range(2, 7):
        for n2 in range(n1, 13 - n1):
            want_zero = theta_bipartite(n1, n2).theta == 0
            assert want_zero == multipartite_distance_magic_check((n1, n2))
