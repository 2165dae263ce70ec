"""Indices of uniform multipartite graphs and empty-graph blow-ups.

``K(a, b)`` here means the complete multipartite graph with ``b`` parts of
size ``a``.  The families covered are K(a,b), disjoint copies mK(a,b),
blown-up cycle copies m(C_b o E_a), and G o E_a for an arbitrary regular
graph G, where ``o E_a`` replaces each vertex by an independent layer of
``a`` vertices.

Whenever such a family member is not distance magic but a quasimagic
rectangle of matching shape exists, labeling each part/layer by one column
yields a constant-weight labeling with one skipped label, so the index is
exactly 1.  With column sum ``sigma`` the magic constants are
``sigma*(b-1)`` for (m)K(a,b), ``2*sigma`` for cycle blow-ups and
``r*sigma`` for an r-regular base graph.
"""

from __future__ import annotations

from .arrays import MagicArray, qmr
from .errors import DomainError, InternalInconsistencyError, SizeLimitError
from .graphs import (
    Graph,
    PartiteSpec,
    build_complete_multipartite,
    build_cycle,
    disjoint_union,
    lex_blowup,
)
from .labelings import Labeling, ThetaResult, verify_s_magic


def theta_K_ab(a: int, b: int) -> ThetaResult:
    """Index of K(a, b): 0 unless a is odd and b even; then 1, except that
    ``a = 1 (mod 4), b = 2`` is left open (no value is known)."""
    if a < 2 or b < 2:
        raise DomainError(f"need a, b >= 2, got ({a}, {b})")
    if a % 2 == 0 or b % 2 == 1:
        return ThetaResult(lower=0, upper=0, case_tag="Kab-dmg")
    if a % 4 == 1 and b == 2:
        return ThetaResult(lower=1, upper=None, case_tag="Kab-open")
    return ThetaResult(lower=1, upper=1, case_tag="Kab-qmr")


def theta_mK_ab(m: int, a: int, b: int) -> ThetaResult:
    """Index of m disjoint copies of K(a, b), for m >= 2."""
    if m < 2:
        raise DomainError(f"need m >= 2, got {m}")
    if a < 2 or b < 2:
        raise DomainError(f"need a, b >= 2, got ({a}, {b})")
    if a % 2 == 0 or (m * a * b) % 2 == 1:
        return ThetaResult(lower=0, upper=0, case_tag="mKab-dmg")
    return ThetaResult(lower=1, upper=1, case_tag="mKab-otherwise")


def theta_mC_lex(m: int, a: int, b: int) -> ThetaResult:
    """Index of m copies of the cycle blow-up C_b o E_a."""
    if m < 1:
        raise DomainError(f"need m >= 1, got {m}")
    if a < 2:
        raise DomainError(f"need a >= 2, got {a}")
    if b < 3:
        raise DomainError(f"need b >= 3, got {b}")
    if a % 2 == 0 or (m * a * b) % 2 == 1 or b % 4 == 0:
        return ThetaResult(lower=0, upper=0, case_tag="mClex-dmg")
    return ThetaResult(lower=1, upper=1, case_tag="mClex-otherwise")


def theta_lex_regular(g: Graph, a: int) -> ThetaResult:
    """Index of G o E_a for a regular graph G on b vertices.

    The open parameter cells are surfaced as explicit [0, 1] bounds (the
    column construction still caps the index at 1 for odd ``a``) rather
    than guessed.  ``a = 1`` leaves the graph unchanged, which none of the
    family results cover, so only the odd-regular parity bound is returned.
    """
    if a < 1:
        raise DomainError(f"need a >= 1, got {a}")
    if not g.is_regular:
        raise DomainError("base graph must be regular")
    r = g.max_degree
    b = g.vertex_count
    if r == 0:
        return ThetaResult(lower=0, upper=0, case_tag="lex-edgeless")
    if a == 1:
        if r % 2 == 1:
            return ThetaResult(lower=1, upper=None, case_tag="lex-a1-uncovered")
        return ThetaResult(lower=0, upper=None, case_tag="lex-a1-uncovered")
    if a % 2 == 0:
        return ThetaResult(lower=0, upper=0, case_tag="lex-dmg")
    if r % 2 == 1:
        if a % 4 == 1 and b == 2:
            return ThetaResult(lower=1, upper=None, case_tag="lex-open")
        return ThetaResult(lower=1, upper=1, case_tag="lex-qmr")
    if b % 2 == 1:
        return ThetaResult(lower=0, upper=0, case_tag="lex-dmg")
    if r % 4 == 2 and b % 4 == 2:
        return ThetaResult(lower=1, upper=1, case_tag="lex-qmr")
    return ThetaResult(lower=0, upper=1, case_tag="lex-unsolved")


# ---------------------------------------------------------------------------
# Column-based witness labelings


def _column_sets(arr: MagicArray) -> list[list[int]]:
    return [sorted(row[j] for row in arr.entries) for j in range(arr.cols)]


def _check_size(vertices: int, what: str):
    from .graphs import DEFAULT_MAX_VERTICES

    if vertices > DEFAULT_MAX_VERTICES:
        raise SizeLimitError(f"{what} has {vertices} vertices, cap is {DEFAULT_MAX_VERTICES}")


def _certify(graph: Graph, groups, columns, constant: int, what: str):
    labeling = Labeling.from_parts(groups, columns)
    report = verify_s_magic(graph, labeling)
    if not report.is_magic or report.constant != constant:
        raise InternalInconsistencyError(
            f"{what}: expected constant {constant}, verifier said "
            f"{report.constant if report.is_magic else 'not magic'}"
        )
    if labeling.eta != graph.vertex_count + 1:
        raise InternalInconsistencyError(
            f"{what}: top label {labeling.eta} is not vertex count + 1"
        )
    return labeling


def label_K_ab(a: int, b: int) -> tuple[Graph, Labeling, int]:
    result = theta_K_ab(a, b)
    if result.theta != 1:
        raise DomainError(f"K({a},{b}) is not on the column-labeling path")
    _check_size(a * b, f"K({a},{b})")
    arr = qmr(a, b)
    graph = build_complete_multipartite(PartiteSpec((a,) * b))
    constant = arr.sigma * (b - 1)
    labeling = _certify(graph, graph.parts, _column_sets(arr), constant, f"K({a},{b})")
    return graph, labeling, constant


def label_mK_ab(m: int, a: int, b: int) -> tuple[Graph, Labeling, int]:
    result = theta_mK_ab(m, a, b)
    if result.theta != 1:
        raise DomainError(f"{m}K({a},{b}) is not on the column-labeling path")
    _check_size(m * a * b, f"{m}K({a},{b})")
    arr = qmr(a, m * b)
    base = build_complete_multipartite(PartiteSpec((a,) * b))
    graph = disjoint_union(m, base)
    groups = [
        tuple(c * a * b + i * a + t for t in range(a))
        for c in range(m)
        for i in range(b)
    ]
    constant = arr.sigma * (b - 1)
    labeling = _certify(graph, groups, _column_sets(arr), constant, f"{m}K({a},{b})")
    return graph, labeling, constant


def label_mC_lex(m: int, a: int, b: int) -> tuple[Graph, Labeling, int]:
    result = theta_mC_lex(m, a, b)
    if result.theta != 1:
        raise DomainError(f"{m}(C_{b} o E_{a}) is not on the column-labeling path")
    _check_size(m * a * b, f"{m}(C_{b} o E_{a})")
    arr = qmr(a, m * b)
    graph = disjoint_union(m, lex_blowup(build_cycle(b), a))
    constant = 2 * arr.sigma
    labeling = _certify(
        graph, graph.layers, _column_sets(arr), constant, f"{m}(C_{b} o E_{a})"
    )
    return graph, labeling, constant


def label_lex_regular(g: Graph, a: int) -> tuple[Graph, Labeling, int]:
    result = theta_lex_regular(g, a)
    if result.theta != 1:
        raise DomainError("blow-up instance is not on the column-labeling path")
    _check_size(a * g.vertex_count, "the blow-up")
    arr = qmr(a, g.vertex_count)
    graph = lex_blowup(g, a)
    constant = g.max_degree * arr.sigma
    labeling = _certify(graph, graph.layers, _column_sets(arr), constant, "G o E_a")
    return graph, labeling, constant


def label_family_via_qmr(family: str, **params) -> tuple[Graph, Labeling, int]:
    """Dispatch to the column-labeling construction for one family.

    ``family`` is one of ``Kab``, ``mKab``, ``mClex``, ``lex``; raises
    ``DomainError`` when the instance's index is not 1 by the family rules.
    """
    builders = {
        "Kab": label_K_ab,
        "mKab": label_mK_ab,
        "mClex": label_mC_lex,
        "lex": label_lex_regular,
    }
    if family not in builders:
        raise DomainError(f"unknown family {family!r}")
    return builders[family](**params)


# ---------------------------------------------------------------------------
# Decision-table fixture

# Verdicts: "dmg" distance magic, "not" not distance magic, "open" unknown,
# "none" no such graph exists.  Condition strings: "odd", "even", "0mod4",
# "2mod4", "any".
DECISION_TABLES: tuple[dict, ...] = (
    # K(a, b)
    {"table": 1, "family": "Kab", "a": "even", "b": "odd", "verdict": "dmg"},
    {"table": 1, "family": "Kab", "a": "even", "b": "even", "verdict": "dmg"},
    {"table": 1, "family": "Kab", "a": "odd", "b": "odd", "verdict": "dmg"},
    {"table": 1, "family": "Kab", "a": "odd", "b": "even", "verdict": "not"},
    # mK(a, b), m > 1
    {"table": 2, "family": "mKab", "m": "odd", "a": "even", "b": "odd", "verdict": "dmg"},
    {"table": 2, "family": "mKab", "m": "odd", "a": "even", "b": "even", "verdict": "dmg"},
    {"table": 2, "family": "mKab", "m": "even", "a": "even", "b": "odd", "verdict": "dmg"},
    {"table": 2, "family": "mKab", "m": "even", "a": "even", "b": "even", "verdict": "dmg"},
    {"table": 2, "family": "mKab", "m": "odd", "a": "odd", "b": "odd", "verdict": "dmg"},
    {"table": 2, "family": "mKab", "m": "odd", "a": "odd", "b": "even", "verdict": "not"},
    {"table": 2, "family": "mKab", "m": "even", "a": "odd", "b": "odd", "verdict": "not"},
    {"table": 2, "family": "mKab", "m": "even", "a": "odd", "b": "even", "verdict": "not"},
    # m(C_b o E_a)
    {"table": 3, "family": "mClex", "m": "odd", "a": "even", "b": "even", "verdict": "dmg"},
    {"table": 3, "family": "mClex", "m": "odd", "a": "even", "b": "odd", "verdict": "dmg"},
    {"table": 3, "family": "mClex", "m": "even", "a": "even", "b": "even", "verdict": "dmg"},
    {"table": 3, "family": "mClex", "m": "even", "a": "even", "b": "odd", "verdict": "dmg"},
    {"table": 3, "family": "mClex", "m": "odd", "a": "odd", "b": "0mod4", "verdict": "dmg"},
    {"table": 3, "family": "mClex", "m": "odd", "a": "odd", "b": "2mod4", "verdict": "not"},
    {"table": 3, "family": "mClex", "m": "odd", "a": "odd", "b": "odd", "verdict": "dmg"},
    {"table": 3, "family": "mClex", "m": "even", "a": "odd", "b": "0mod4", "verdict": "dmg"},
    {"table": 3, "family": "mClex", "m": "even", "a": "odd", "b": "2mod4", "verdict": "not"},
    {"table": 3, "family": "mClex", "m": "even", "a": "odd", "b": "odd", "verdict": "not"},
    # G o E_a, G r-regular on b vertices
    {"table": 4, "family": "lex", "r": "0mod4", "a": "odd", "b": "0mod4", "verdict": "open"},
    {"table": 4, "family": "lex", "r": "0mod4", "a": "odd", "b": "2mod4", "verdict": "open"},
    {"table": 4, "family": "lex", "r": "0mod4", "a": "odd", "b": "odd", "verdict": "dmg"},
    {"table": 4, "family": "lex", "r": "2mod4", "a": "odd", "b": "0mod4", "verdict": "open"},
    {"table": 4, "family": "lex", "r": "2mod4", "a": "odd", "b": "2mod4", "verdict": "not"},
    {"table": 4, "family": "lex", "r": "2mod4", "a": "odd", "b": "odd", "verdict": "dmg"},
    {"table": 4, "family": "lex", "r": "odd", "a": "odd", "b": "0mod4", "verdict": "not"},
    {"table": 4, "family": "lex", "r": "odd", "a": "odd", "b": "2mod4", "verdict": "not"},
    {"table": 4, "family": "lex", "r": "odd", "a": "odd", "b": "odd", "verdict": "none"},
    {"table": 4, "family": "lex", "r": "even", "a": "even", "b": "any", "verdict": "dmg"},
    {"table": 4, "family": "lex", "r": "odd", "a": "even", "b": "even", "verdict": "dmg"},
    {"table": 4, "family": "lex", "r": "odd", "a": "even", "b": "odd", "verdict": "none"},
)
