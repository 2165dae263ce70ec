import pytest

from magiclab import (
    DECISION_TABLES,
    DomainError,
    build_complete_multipartite,
    build_cycle,
    disjoint_union,
    label_family_via_qmr,
    PartiteSpec,
    theta_K_ab,
    theta_lex_regular,
    theta_mC_lex,
    theta_mK_ab,
    verify_s_magic,
)

from conftest import check_decision_table_row, circulant, petersen


def test_theta_K_ab_examples():
    assert theta_K_ab(3, 2).theta == 1  # the 3-regular bipartite case
    assert theta_K_ab(2, 5).theta == 0
    open_case = theta_K_ab(5, 2)
    assert (open_case.lower, open_case.upper) == (1, None)
    with pytest.raises(DomainError):
        theta_K_ab(1, 4)


def test_theta_mK_ab_examples():
    assert theta_mK_ab(2, 3, 3).theta == 1
    assert theta_mK_ab(2, 3, 3).case_tag == "mKab-otherwise"
    assert theta_mK_ab(3, 3, 3).theta == 0
    assert theta_mK_ab(2, 2, 4).theta == 0
    with pytest.raises(DomainError):
        theta_mK_ab(1, 3, 3)


def test_theta_mC_lex_examples():
    assert theta_mC_lex(1, 3, 4).theta == 0
    assert theta_mC_lex(2, 3, 6).theta == 1
    assert theta_mC_lex(2, 3, 5).theta == 1


def test_theta_lex_regular_examples():
    assert theta_lex_regular(petersen(), 3).theta == 1
    assert theta_lex_regular(petersen(), 2).theta == 0
    four_regular_odd = circulant(7, (1, 2))
    assert theta_lex_regular(four_regular_odd, 3).theta == 0
    with pytest.raises(DomainError):
        theta_lex_regular(build_complete_multipartite(PartiteSpec((1, 2))), 3)


def test_theta_lex_unresolved_cells():
    res = theta_lex_regular(circulant(8, (1, 2)), 3)  # r=4, b=0 mod 4
    assert (res.lower, res.upper) == (0, 1)
    assert res.case_tag == "lex-unsolved"
    res = theta_lex_regular(build_cycle(8), 3)  # r=2, b=0 mod 4
    assert (res.lower, res.upper) == (0, 1)
    res = theta_lex_regular(build_cycle(6), 3)  # r=2, b=2 mod 4: solved
    assert res.theta == 1


def test_theta_lex_open_and_uncovered():
    matching = disjoint_union(1, build_complete_multipartite(PartiteSpec((1, 1))))
    res = theta_lex_regular(matching, 5)  # a=1 mod 4 with b=2: left open
    assert (res.lower, res.upper) == (1, None) and res.case_tag == "lex-open"
    res = theta_lex_regular(build_cycle(5), 1)  # identity blow-up: uncovered
    assert res.case_tag == "lex-a1-uncovered"
    edgeless = build_complete_multipartite(PartiteSpec((4,)))
    assert theta_lex_regular(edgeless, 3).theta == 0


def test_every_decision_table_cell():
    checked = 0
    for row in DECISION_TABLES:
        checked += check_decision_table_row(row)
    assert checked > 150


def test_family_witnesses():
    g, lab, constant = label_family_via_qmr("Kab", a=3, b=2)
    assert constant == 12 and verify_s_magic(g, lab).constant == 12

    g, lab, constant = label_family_via_qmr("mKab", m=2, a=3, b=3)
    sigma = 3 * (3 * 6 + 2) // 2  # column sum of QMR(3, 6)
    assert constant == sigma * 2
    assert verify_s_magic(g, lab).constant == constant

    g, lab, constant = label_family_via_qmr("lex", g=petersen(), a=3)
    assert constant == 144
    assert lab.eta == 31

    g, lab, constant = label_family_via_qmr("mClex", m=2, a=3, b=5)
    assert verify_s_magic(g, lab).is_magic
    assert constant == 2 * (3 * (3 * 10 + 2) // 2)


def test_family_witness_gate():
    with pytest.raises(DomainError):
        label_family_via_qmr("Kab", a=2, b=5)  # index 0: not on the QMR path
    with pytest.raises(DomainError):
        label_family_via_qmr("Kab", a=5, b=2)  # open cell
    with pytest.raises(DomainError):
        label_family_via_qmr("nope", a=1, b=1)


def test_family_values_match_the_oracle_on_small_instances():
    from magiclab import oracle_theta_general, oracle_theta_multipartite

    cases = [
        (theta_K_ab(2, 3), "K(2,2,2)"),
        (theta_K_ab(2, 4), "K(2,2,2,2)"),
        (theta_K_ab(3, 2), "K(3,3)"),
        (theta_mK_ab(2, 2, 2), "U(2,K(2,2))"),
        (theta_mC_lex(1, 2, 3), "LEX(C(3),E(2))"),
        (theta_lex_regular(build_cycle(4), 2), "LEX(C(4),E(2))"),
    ]
    from magiclab import parse_graph_spec

    for result, spec_text in cases:
        g = parse_graph_spec(spec_text)
        spec = g.partite_spec
        if spec is not None:
            oracle = oracle_theta_multipartite(spec, 2)
        else:
            oracle = oracle_theta_general(g, 2)
        assert oracle.theta == result.theta, spec_text


def test_table1_table2_rules_coincide_where_defined():
    # single-copy decisions agree with the multi-copy rule at m=1 except the
    # open K(a,2) cell, which the copy rule would call index 1
    for a in range(2, 8):
        for b in range(2, 8):
            single = theta_K_ab(a, b)
            copies_zero = a % 2 == 0 or (a * b) % 2 == 1
            if single.exact:
                assert (single.theta == 0) == copies_zero
            else:
                assert a % 4 == 1 and b == 2 and not copies_zero
