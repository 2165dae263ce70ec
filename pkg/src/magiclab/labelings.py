"""Labelings, vertex weights, and the S-magic verifier.

A labeling assigns distinct positive integers (the label set S) bijectively
to the vertices.  It is S-magic when every vertex's neighbor-label sum is one
constant; for a complete multipartite graph that holds exactly when all
partite sets carry equal label sums, in which case the constant is
``alpha - alpha/r`` where ``alpha`` is the total label sum.

All arithmetic is exact: Python integers cannot overflow and rationals are
``fractions.Fraction``, so every certificate this module emits is bit-exact.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from math import ceil

from .errors import DomainError
from .graphs import Graph, PartiteSpec


@dataclass(frozen=True)
class Labeling:
    """Bijection from vertices ``0..n-1`` onto a set of distinct positive labels."""

    labels: tuple[int, ...]

    def __post_init__(self):
        if any(x < 1 for x in self.labels):
            raise ValueError("labels must be positive")
        if len(set(self.labels)) != len(self.labels):
            raise ValueError("labels must be distinct")

    @property
    def n(self) -> int:
        return len(self.labels)

    @property
    def label_set(self) -> tuple[int, ...]:
        return tuple(sorted(self.labels))

    @property
    def eta(self) -> int:
        return max(self.labels)

    @property
    def total(self) -> int:
        return sum(self.labels)

    def __getitem__(self, v: int) -> int:
        return self.labels[v]

    @classmethod
    def from_dict(cls, mapping: dict[int, int]) -> "Labeling":
        n = len(mapping)
        if set(mapping) != set(range(n)):
            raise ValueError("labeling must cover vertices 0..n-1 exactly")
        return cls(tuple(mapping[v] for v in range(n)))

    @classmethod
    def from_parts(cls, parts: list[list[int]] | tuple, label_sets) -> "Labeling":
        """Assemble a labeling from per-part label sets (sorted within a part)."""
        mapping: dict[int, int] = {}
        for part, labels in zip(parts, label_sets):
            for v, lab in zip(sorted(part), sorted(labels)):
                mapping[v] = lab
        return cls.from_dict(mapping)

    def to_json(self) -> str:
        payload = {"labels": {str(v): lab for v, lab in enumerate(self.labels)}}
        return json.dumps(payload, sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "Labeling":
        payload = json.loads(text)
        return cls.from_dict({int(v): int(lab) for v, lab in payload["labels"].items()})


@dataclass(frozen=True)
class VerifyReport:
    """Outcome of an S-magic check: all weights, the constant, the outliers."""

    is_magic: bool
    constant: int | None
    weights: tuple[int, ...]
    violations: tuple[tuple[int, int], ...]

    def to_json(self) -> str:
        payload = {
            "is_magic": self.is_magic,
            "constant": self.constant,
            "violations": [list(v) for v in self.violations],
        }
        return json.dumps(payload, sort_keys=True)


@dataclass(frozen=True)
class ThetaResult:
    """Distance magic index outcome: exact value or bounds, with provenance.

    ``upper is None`` encodes an infinite (unknown) upper bound.  For exact
    results the index is ``lower`` and any attached witness labeling realizes
    ``eta = n + lower``.
    """

    lower: int
    upper: int | None
    case_tag: str
    provenance: str = "theorem"
    witness: Labeling | None = None

    def __post_init__(self):
        if self.upper is not None and self.lower > self.upper:
            raise ValueError(f"lower {self.lower} exceeds upper {self.upper}")

    @property
    def exact(self) -> bool:
        return self.upper is not None and self.lower == self.upper

    @property
    def theta(self) -> int | None:
        return self.lower if self.exact else None

    def to_payload(self) -> dict:
        payload = {
            "case": self.case_tag,
            "exact": self.exact,
            "lower": self.lower,
            "upper": self.upper,
            "theta": self.theta,
            "provenance": self.provenance,
        }
        if self.witness is not None:
            payload["witness"] = {
                "labels": {str(v): lab for v, lab in enumerate(self.witness.labels)}
            }
        return payload


def weight(g: Graph, labeling: Labeling, u: int) -> int:
    """Sum of the labels on the neighbors of ``u`` (0 for an isolated vertex)."""
    if labeling.n != g.vertex_count:
        raise ValueError(
            f"labeling covers {labeling.n} vertices, graph has {g.vertex_count}"
        )
    return sum(labeling[v] for v in g.neighbors[u])


def verify_s_magic(g: Graph, labeling: Labeling) -> VerifyReport:
    """Check whether every vertex weight equals one constant.

    Violations are reported relative to the modal weight (ties broken toward
    the smaller weight) so a single mislabeled vertex shows up alone.
    """
    weights = tuple(weight(g, labeling, u) for u in range(g.vertex_count))
    counts = Counter(weights)
    mode = max(counts.items(), key=lambda kv: (kv[1], -kv[0]))[0]
    violations = tuple((u, w) for u, w in enumerate(weights) if w != mode)
    is_magic = not violations
    return VerifyReport(
        is_magic=is_magic,
        constant=mode if is_magic else None,
        weights=weights,
        violations=violations,
    )


def part_label_sets(spec: PartiteSpec, labeling: Labeling) -> list[list[int]]:
    """Labels per part for the canonical multipartite vertex layout."""
    if labeling.n != spec.n:
        raise ValueError(f"labeling covers {labeling.n} vertices, spec has {spec.n}")
    sets = []
    start = 0
    for size in spec.sizes:
        sets.append(sorted(labeling.labels[start:start + size]))
        start += size
    return sets

def partite_sums_check(spec: PartiteSpec, labeling: Labeling) -> bool:
    """True iff all partite sets carry equal label sums.

    On complete multipartite graphs this is equivalent to the S-magic
    property.  Note that two singleton parts can never pass (their labels
    would have to coincide), matching the fact that such graphs admit no
    S-magic labeling at all.
    """
    sums = [sum(s) for s in part_label_sets(spec, labeling)]
    return len(set(sums)) == 1


def g_function(n: int, delta: int, Delta: int, x: int) -> Fraction:
    """The gap polynomial ``(2*delta*(n+x) - delta^2 + delta - Delta*(Delta+1)) / 2``.

    Affine in ``x`` with slope ``delta``; a negative value at ``x = 0`` rules
    out a distance magic labeling.
    """
    if not 1 <= delta <= Delta <= n - 1:
        raise DomainError(f"need 1 <= delta <= Delta <= n-1, got ({n}, {delta}, {Delta})")
    return Fraction(2 * delta * (n + x) - delta * delta + delta - Delta * (Delta + 1), 2)


def gap_lower_bound(g: Graph) -> int | None:
    """Index lower bound ``ceil(|g(0)| / delta)`` when ``g(0) < 0``.

    Returns ``None`` when ``g(0) >= 0``: the gap polynomial then gives no
    information (in particular for every regular graph).  Graphs with an
    isolated vertex are rejected.
    """
    delta = g.min_degree
    if delta == 0:
        raise DomainError("graph has an isolated vertex")
    g0 = g_function(g.vertex_count, delta, g.max_degree, 0)
    if g0 >= 0:
        return None
    return ceil(Fraction(abs(g0), delta))


def magic_constant_multipartite(spec: PartiteSpec, alpha: int) -> Fraction:
    """Magic constant ``alpha * (r-1) / r`` of a complete r-partite graph.

    Every part sums to ``alpha/r``, so each weight is ``alpha - alpha/r``;
    a non-integer value certifies that no labeling with total ``alpha`` works.
    """
    if spec.r < 2:
        raise DomainError("need at least two parts")
    return Fraction(alpha * (spec.r - 1), spec.r)


def multipartite_distance_magic_check(sizes: tuple[int, ...]) -> bool:
    """Distance magic test for complete p-partite graphs, p in {2, 3, 4}.

    Conditions, for nondecreasing sizes with partial sums ``s_i`` and
    ``n = s_p``: second-smallest part has size >= 2; ``n(n+1) = 0 (mod 2p)``;
    and for each ``i``, the ``s_i`` largest of ``1..n`` sum to at least
    ``i/p`` of the total.  Kept deliberately independent of the zeta-sum
    reformulation used elsewhere so the two can cross-check each other.
    """
    p = len(sizes)
    if p not in (2, 3, 4):
        raise DomainError(f"characterization covers 2..4 parts, got {p}")
    if list(sizes) != sorted(sizes) or min(sizes) < 1:
        raise DomainError(f"sizes must be nondecreasing positives, got {sizes}")
    n = sum(sizes)
    if sizes[1] < 2:
        return False
    if (n * (n + 1)) % (2 * p) != 0:
        return False
    s_i = 0
    for i, size in enumerate(sizes, start=1):
        s_i += size
        top_sum = sum(n - j + 1 for j in range(1, s_i + 1))
        if 2 * p * top_sum < n * (n + 1) * i:
            return False
    return True
