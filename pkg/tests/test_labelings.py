from fractions import Fraction
from itertools import islice, permutations

import pytest

from magiclab import (
    DomainError,
    Labeling,
    PartiteSpec,
    build_complete_multipartite,
    build_cycle,
    g_function,
    gap_lower_bound,
    label_tripartite,
    magic_constant_multipartite,
    multipartite_distance_magic_check,
    partite_sums_check,
    verify_s_magic,
    weight,
)


def test_weight_basics():
    g = build_complete_multipartite(PartiteSpec((3, 3)))
    identity = Labeling(tuple(range(1, 7)))
    assert weight(g, identity, 0) == 4 + 5 + 6
    lonely = build_complete_multipartite(PartiteSpec((1,)))
    assert weight(lonely, Labeling((1,)), 0) == 0


def test_weight_on_constructed_tripartite_witness():
    g = build_complete_multipartite(PartiteSpec((5, 6, 7)))
    lab = label_tripartite(5, 6, 7)
    assert all(weight(g, lab, u) == 114 for u in range(18))


def test_verify_reports_constant_and_violations():
    g = build_complete_multipartite(PartiteSpec((5, 6, 7)))
    report = verify_s_magic(g, label_tripartite(5, 6, 7))
    assert report.is_magic and report.constant == 114 and not report.violations

    edge = build_complete_multipartite(PartiteSpec((1, 1)))
    report = verify_s_magic(edge, Labeling((1, 2)))
    assert not report.is_magic and report.constant is None
    assert report.weights == (2, 1)


def test_no_cubic_bijection_is_magic():
    # odd-regular graphs admit no distance magic labeling at all
    g = build_complete_multipartite(PartiteSpec((3, 3)))
    for perm in permutations(range(1, 7)):
        assert not verify_s_magic(g, Labeling(perm)).is_magic


def test_partite_sums_check_examples():
    spec = PartiteSpec((2, 2))
    assert partite_sums_check(spec, Labeling((1, 4, 2, 3)))
    assert not partite_sums_check(spec, Labeling((1, 2, 3, 4)))
    tri = PartiteSpec((5, 6, 7))
    assert partite_sums_check(tri, label_tripartite(5, 6, 7))
    with pytest.raises(ValueError):
        partite_sums_check(tri, Labeling((1, 2, 3)))


def test_partite_sums_matches_verifier_on_small_graphs():
    # the two characterizations of magicness must agree on complete
    # multipartite graphs, singleton parts included (for two singleton
    # parts both sides are simply never satisfied); exhaustive for n <= 6,
    # sampled beyond
    specs = [(2, 2), (2, 3), (3, 3), (2, 2, 2), (2, 2, 3), (2, 3, 4), (3, 3, 3),
             (1, 2), (1, 3), (1, 1), (1, 1, 2), (1, 2, 3)]
    for sizes in specs:
        spec = PartiteSpec(sizes)
        g = build_complete_multipartite(spec)
        n = spec.n
        perms = permutations(range(1, n + 1))
        if n > 6:
            perms = islice(perms, 2000)
        for perm in perms:
            lab = Labeling(perm)
            assert verify_s_magic(g, lab).is_magic == partite_sums_check(spec, lab)


def test_g_function_values():
    assert g_function(20, 11, 17, 0) == 12
    assert g_function(13, 4, 11, 0) == -20
    for n, r in [(6, 3), (8, 3), (10, 4)]:
        assert g_function(n, r, r, 0) == Fraction(r * (n - r))
    with pytest.raises(DomainError):
        g_function(5, 0, 3, 0)
    with pytest.raises(DomainError):
        g_function(5, 3, 5, 0)


def test_g_function_is_affine_with_slope_delta():
    for n, delta, Delta in [(10, 3, 7), (13, 4, 11), (20, 11, 17)]:
        values = [g_function(n, delta, Delta, x) for x in (0, 1, 2)]
        assert values[1] - values[0] == delta
        assert values[2] - values[1] == delta


def test_gap_lower_bound():
    assert gap_lower_bound(build_complete_multipartite(PartiteSpec((2, 2, 9)))) == 5
    assert gap_lower_bound(build_cycle(5)) is None  # regular: no information
    assert gap_lower_bound(build_complete_multipartite(PartiteSpec((3, 8, 9)))) is None
    lonely = build_complete_multipartite(PartiteSpec((1,)))
    with pytest.raises(DomainError):
        gap_lower_bound(lonely)


def test_magic_constant():
    assert magic_constant_multipartite(PartiteSpec((5, 6, 7)), 171) == 114
    assert magic_constant_multipartite(PartiteSpec((3, 8, 9)), 231) == 154
    assert magic_constant_multipartite(PartiteSpec((1, 1)), 3) == Fraction(3, 2)
    with pytest.raises(DomainError):
        magic_constant_multipartite(PartiteSpec((4,)), 10)


def test_magic_constant_matches_witness_constants():
    for sizes in [(5, 6, 7), (3, 8, 9), (2, 2, 3)]:
        lab = label_tripartite(*sizes)
        spec = PartiteSpec(sizes)
        g = build_complete_multipartite(spec)
        report = verify_s_magic(g, lab)
        assert magic_constant_multipartite(spec, lab.total) == report.constant


def test_distance_magic_characterization():
    assert multipartite_distance_magic_check((5, 6, 7))
    assert not multipartite_distance_magic_check((3, 8, 9))
    assert multipartite_distance_magic_check((1, 2))  # the path on 3 vertices
    assert not multipartite_distance_magic_check((1, 1))
    assert multipartite_distance_magic_check((3, 4))
    with pytest.raises(DomainError):
        multipartite_distance_magic_check((2, 2, 2, 2, 2))


def test_labeling_json_roundtrip():
    lab = label_tripartite(3, 8, 9)
    again = Labeling.from_json(lab.to_json())
    assert again == lab
    assert lab.eta == 27 and lab.label_set[0] == 1
