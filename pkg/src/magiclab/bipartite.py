"""Distance magic index of complete bipartite graphs, with witness labelings.

For ``2 <= n1 <= n2`` and ``n = n1 + n2`` the index is

* 0 when ``n(n+1) >= 2*n2*(n2+1)`` and ``n = 0 or 3 (mod 4)``,
* 1 when that inequality holds and ``n = 1 or 2 (mod 4)``,
* ``ceil((2*n2*(n2+1) - n(n+1)) / (2*n1))`` otherwise.

The witness label sets realizing the first two branches are ``{1..n}`` and
``{1..n-1, n+1}``; the third branch keeps ``{1..n2}`` on the large side and
shifts a run of ``n1`` labels upward on the small side.  Every labeling this
module returns is re-checked for equal side sums before being handed out.
"""

from __future__ import annotations

from .errors import DomainError, InternalInconsistencyError
from .graphs import PartiteSpec
from .labelings import Labeling, ThetaResult, partite_sums_check

# Exact lexicographic-minimum splits are found by dynamic programming up to
# this many labels; larger instances use the closed-form greedy (still exact,
# different tie-break).
_LEXMIN_LIMIT = 64


def _ceil_div(p: int, q: int) -> int:
    return -((-p) // q)


def _tri(k: int) -> int:
    return k * (k + 1) // 2


def _theta_value(n1: int, n2: int) -> int | None:
    """Index of K(n1, n2) for any n1 <= n2; None when no labeling exists."""
    if n1 == 1:
        if n2 == 1:
            return None  # two singletons would need equal distinct labels
        return _tri(n2) - (n1 + n2)  # lone vertex's label must carry a full side sum
    n = n1 + n2
    lhs = n * (n + 1)
    rhs = 2 * n2 * (n2 + 1)
    if lhs >= rhs:
        return 0 if n % 4 in (0, 3) else 1
    return _ceil_div(rhs - lhs, 2 * n1)


def _interval_feasible(c: int, t: int, lo: int, hi: int) -> bool:
    """Can c distinct elements of {lo..hi} sum to t?  Interval subset sums
    fill the whole range between the extremes, so this is a bounds check."""
    width = hi - lo + 1
    if c < 0 or c > max(width, 0):
        return False
    if c == 0:
        return t == 0
    lo_sum = _tri(lo + c - 1) - _tri(lo - 1)
    hi_sum = _tri(hi) - _tri(hi - c)
    return lo_sum <= t <= hi_sum


def _greedy_side(pool: list[int], k: int, target: int) -> list[int] | None:
    """Top-heavy k-subset of ``pool`` summing to ``target``.

    Exact for pools shaped as one integer interval plus at most one extra
    element above it, which covers every large-scale call site.
    """
    pool = sorted(pool)
    lo = pool[0]
    run_hi = lo - 1
    split = 0
    for x in pool:
        if x == run_hi + 1:
            run_hi = x
            split += 1
        else:
            break
    extras = pool[split:]
    if len(extras) > 1:
        raise ValueError("greedy split supports at most one detached label")
    extra = extras[0] if extras else None

    def feasible(c, t, hi, with_extra):
        if _interval_feasible(c, t, lo, hi):
            return True
        if with_extra and c >= 1:
            return _interval_feasible(c - 1, t - extra, lo, hi)
        return False

    if not feasible(k, target, run_hi, extra is not None):
        return None
    chosen: list[int] = []
    slots, t = k, target
    if extra is not None:
        if slots and _interval_feasible(slots - 1, t - extra, lo, run_hi):
            chosen.append(extra)
            slots -= 1
            t -= extra
    for v in range(run_hi, lo - 1, -1):
        if slots == 0:
            break
        if _interval_feasible(slots - 1, t - v, lo, v - 1):
            chosen.append(v)
            slots -= 1
            t -= v
    if slots != 0 or t != 0:
        return None
    return sorted(chosen)


def _lexmin_side(pool: list[int], k: int, target: int) -> list[int] | None:
    """Lexicographically smallest k-subset of ``pool`` summing to ``target``."""
    pool = sorted(pool)
    m = len(pool)
    if k < 0 or k > m or target < 0:
        return None
    # masks[i][c] has bit t set iff some c-subset of pool[i:] sums to t
    masks = [[0] * (k + 1) for _ in range(m + 1)]
    masks[m][0] = 1
    for i in range(m - 1, -1, -1):
        x = pool[i]
        row, nxt = masks[i], masks[i + 1]
        row[0] = 1
        for c in range(1, k + 1):
            row[c] = nxt[c] | (nxt[c - 1] << x)
    if not (masks[0][k] >> target) & 1:
        return None
    side: list[int] = []
    need, t, i = k, target, 0
    while need:
        x = pool[i]
        if t >= x and (masks[i + 1][need - 1] >> (t - x)) & 1:
            side.append(x)
            need -= 1
            t -= x
        i += 1
    return side


def split_equal_sums(labels, n1: int) -> tuple[list[int], list[int]] | None:
    """Split a label set into sides of size ``n1`` and the rest, equal sums.

    Side 1 is the lexicographically smallest feasible choice at desk scale.
    """
    labels = sorted(labels)
    total = sum(labels)
    if total % 2:
        return None
    target = total // 2
    if len(labels) <= _LEXMIN_LIMIT:
        side1 = _lexmin_side(labels, n1, target)
    else:
        side1 = _greedy_side(labels, n1, target)
    if side1 is None:
        return None
    remaining = list(labels)
    for x in side1:
        remaining.remove(x)
    return side1, remaining


def _third_branch_sets(n1: int, n2: int) -> tuple[list[int], list[int]]:
    """Canonical label sets when the big side's floor exceeds half the total.

    Side 2 takes ``{1..n2}``; side 1 takes a run of ``n1`` labels shifted up
    until its sum reaches ``tri(n2)``, one label bumped to absorb the
    remainder.  The top label lands exactly at ``n + theta``.
    """
    n = n1 + n2
    deficit = 2 * _tri(n2) - _tri(n)  # side-2 sum minus the unshifted top run
    q, r = divmod(deficit, n1)
    if r == 0:
        side1 = list(range(n2 + q + 1, n + q + 1))
    else:
        side1 = [x for x in range(n2 + q + 1, n + q + 2) if x != n + q + 1 - r]
    return side1, list(range(1, n2 + 1))


def label_bipartite(n1: int, n2: int, target_max: int) -> Labeling | None:
    """S-magic labeling of K(n1, n2) using labels from ``{1..target_max}``.

    Returns a labeling of minimal top label when one fits the budget, else
    ``None``.  The minimal label sets ``{1..n}`` and ``{1..n-1, n+1}`` are
    reproduced exactly whenever they are the feasible optimum.
    """
    if not 1 <= n1 <= n2:
        raise DomainError(f"need 1 <= n1 <= n2, got ({n1}, {n2})")
    n = n1 + n2
    if target_max < n:
        return None
    theta = _theta_value(n1, n2)
    if theta is None or n + theta > target_max:
        return None
    eta = n + theta
    if n1 == 1:
        sides = ([_tri(n2)], list(range(1, n2 + 1)))
    elif n * (n + 1) >= 2 * n2 * (n2 + 1):
        if theta == 0:
            sides = split_equal_sums(range(1, n + 1), n1)
        else:
            sides = split_equal_sums(list(range(1, n)) + [n + 1], n1)
    else:
        sides = _third_branch_sets(n1, n2)
    if sides is None:
        raise InternalInconsistencyError(
            f"K({n1},{n2}): predicted index {theta} but split failed"
        )
    spec = PartiteSpec((n1, n2))
    parts = [list(range(n1)), list(range(n1, n))]
    labeling = Labeling.from_parts(parts, sides)
    if labeling.eta != eta or not partite_sums_check(spec, labeling):
        raise InternalInconsistencyError(
            f"K({n1},{n2}): constructed labeling failed verification"
        )
    return labeling


def theta_bipartite(n1: int, n2: int) -> ThetaResult:
    """Exact index of K(n1, n2) for ``2 <= n1 <= n2``, with witness."""
    if not 2 <= n1 <= n2:
        raise DomainError(f"formula needs 2 <= n1 <= n2, got ({n1}, {n2})")
    n = n1 + n2
    if n * (n + 1) >= 2 * n2 * (n2 + 1):
        tag = "bipartite-0" if n % 4 in (0, 3) else "bipartite-1"
    else:
        tag = "bipartite-deficit"
    theta = _theta_value(n1, n2)
    witness = label_bipartite(n1, n2, n + theta)
    return ThetaResult(lower=theta, upper=theta, case_tag=tag, witness=witness)
