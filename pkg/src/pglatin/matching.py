"""Maximum independent ones, maximum all-zero blocks, and the duality between them.

Works at desk scale; the deterministic augmenting-path search is plenty fast
for the matrix sizes this library handles.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .binmat import BinaryMatrix


def bipartite_matching(adjacency: Sequence[Sequence[int]], right_size: int) -> list[int]:
    """Maximum bipartite matching via augmenting paths.

    adjacency[i] lists the right-side vertices joined to left vertex i.
    Left vertices are processed in increasing order and neighbours in list
    order, so the result is deterministic. Returns the left-to-right
    assignment with -1 for unmatched left vertices.
    """
    n_left = len(adjacency)
    match_left = [-1] * n_left
    match_right = [-1] * right_size

    def augment(start: int) -> bool:
        seen = [False] * right_size
        came_from: dict[int, int] = {}
        stack = [start]
        iters = {start: iter(adjacency[start])}
        while stack:
            r = stack[-1]
            advanced = False
            for c in iters[r]:
                if seen[c]:
                    continue
                seen[c] = True
                came_from[c] = r
                owner = match_right[c]
                if owner < 0:
                    # free column found: flip the alternating path back to start
                    while True:
                        prev_owner = came_from[c]
                        next_c = match_left[prev_owner]
                        match_left[prev_owner] = c
                        match_right[c] = prev_owner
                        if prev_owner == start:
                            return True
                        c = next_c
                stack.append(owner)
                iters[owner] = iter(adjacency[owner])
                advanced = True
                break
            if not advanced:
                stack.pop()
        return False

    for r in range(n_left):
        augment(r)
    return match_left


def _ones_adjacency(f: BinaryMatrix) -> list[list[int]]:
    return [[c for c in range(f.cols) if f.data[r * f.cols + c]] for r in range(f.rows)]


@dataclass(frozen=True)
class MatchingWitness:
    """A set of 1-cells, no two sharing a row or a column."""

    size: int
    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        if self.size != len(self.pairs):
            raise ValueError("size disagrees with the number of pairs")
        rows = [r for r, _ in self.pairs]
        cols = [c for _, c in self.pairs]
        if len(set(rows)) != len(rows) or len(set(cols)) != len(cols):
            raise ValueError("witness pairs must use distinct rows and distinct columns")


@dataclass(frozen=True)
class ZeroBlockWitness:
    """Row and column selections whose crossing is entirely zero."""

    rows: tuple[int, ...]
    cols: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.rows or not self.cols:
            raise ValueError("zero block needs at least one row and one column")
        if len(set(self.rows)) != len(self.rows) or len(set(self.cols)) != len(self.cols):
            raise ValueError("row and column selections must be duplicate-free")

    @property
    def a(self) -> int:
        return len(self.rows)

    @property
    def b(self) -> int:
        return len(self.cols)

    @property
    def weight(self) -> int:
        return len(self.rows) + len(self.cols)


def max_independent_ones(f: BinaryMatrix) -> MatchingWitness:
    """Largest set of ones with no two in one row or column."""
    match_left = bipartite_matching(_ones_adjacency(f), f.cols)
    pairs = tuple((r, c) for r, c in enumerate(match_left) if c >= 0)
    return MatchingWitness(len(pairs), pairs)


def _independent_selection(
    adjacency: Sequence[Sequence[int]], n_cols: int, match_left: Sequence[int]
) -> tuple[list[int], list[int]]:
    """Largest row/column selection avoiding every edge, from a maximum matching.

    Classic cover construction: rows reachable from the unmatched ones by
    alternating paths, together with the columns no such path touches.
    """
    match_right = [-1] * n_cols
    for r, c in enumerate(match_left):
        if c >= 0:
            match_right[c] = r
    reach_rows = [match_left[r] < 0 for r in range(len(adjacency))]
    reach_cols = [False] * n_cols
    queue = [r for r in range(len(adjacency)) if reach_rows[r]]
    while queue:
        r = queue.pop()
        for c in adjacency[r]:
            if not reach_cols[c]:
                reach_cols[c] = True
                owner = match_right[c]
                if owner >= 0 and not reach_rows[owner]:
                    reach_rows[owner] = True
                    queue.append(owner)
    rows_in = [r for r, keep in enumerate(reach_rows) if keep]
    cols_in = [c for c in range(n_cols) if not reach_cols[c]]
    return rows_in, cols_in


def max_zero_submatrix(f: BinaryMatrix) -> ZeroBlockWitness | None:
    """A zero submatrix maximizing rows + cols, or None when f has no zero.

    Both selections must be nonempty. The unconstrained optimum rows + cols
    = m + n - (maximum matching on ones); when that optimum is achievable
    only one-sided, each zero cell is forced into the selection in turn and
    the remainder re-solved, which is exact for the two-sided maximum.
    """
    m, n = f.rows, f.cols
    if 0 not in f.data:
        return None
    adjacency = _ones_adjacency(f)
    match_left = bipartite_matching(adjacency, n)
    rows_in, cols_in = _independent_selection(adjacency, n, match_left)
    if rows_in and cols_in:
        return ZeroBlockWitness(tuple(rows_in), tuple(cols_in))

    best: ZeroBlockWitness | None = None
    for i in range(m):
        row = f.row(i)
        zero_cols = [c for c in range(n) if not row[c]]
        if not zero_cols:
            continue
        for j in zero_cols:
            cand_rows = [r for r in range(m) if r != i and not f.data[r * n + j]]
            cand_cols = [c for c in zero_cols if c != j]
            if best is not None and 2 + len(cand_rows) + len(cand_cols) <= best.weight:
                continue
            col_index = {c: k for k, c in enumerate(cand_cols)}
            sub_adj = [
                [col_index[c] for c in adjacency[r] if c in col_index] for r in cand_rows
            ]
            sub_match = bipartite_matching(sub_adj, len(cand_cols))
            sub_rows, sub_cols = _independent_selection(sub_adj, len(cand_cols), sub_match)
            rows_sel = tuple(sorted({i} | {cand_rows[r] for r in sub_rows}))
            cols_sel = tuple(sorted({j} | {cand_cols[c] for c in sub_cols}))
            candidate = ZeroBlockWitness(rows_sel, cols_sel)
            if best is None or candidate.weight > best.weight:
                best = candidate
    if best is None:
        raise RuntimeError("zero entries present but no zero block found")
    return best


@dataclass(frozen=True)
class Biconditional:
    lhs: bool
    rhs: bool

    @property
    def holds(self) -> bool:
        return self.lhs == self.rhs


@dataclass(frozen=True)
class DualityReport:
    """v, w, their witnesses, and the equivalences tying them together.

    dual_bound is m + n - v, the best row+column selection when one-sided
    picks are allowed; w_meets_bound records whether the two-sided w
    reaches it (None when the matrix has no zero at all).
    """

    rows: int
    cols: int
    v: int
    w: int
    v_witness: MatchingWitness
    w_witness: ZeroBlockWitness | None
    square_rule: Biconditional | None
    minmax_rule: Biconditional
    strict_rule: Biconditional
    dual_bound: int
    w_meets_bound: bool | None


def duality_report(f: BinaryMatrix) -> DualityReport:
    """Compute v and w and check the equivalences between them.

    For square matrices: v = n exactly when w <= n. In general: v equals
    min(m, n) exactly when w <= max(m, n), equivalently v falls short
    exactly when some zero block exceeds max(m, n). A violation would mean
    an implementation bug and raises RuntimeError.
    """
    m, n = f.rows, f.cols
    v_wit = max_independent_ones(f)
    w_wit = max_zero_submatrix(f)
    v = v_wit.size
    w = 0 if w_wit is None else w_wit.weight
    square_rule = Biconditional(v == n, w <= n) if m == n else None
    minmax_rule = Biconditional(v == min(m, n), w <= max(m, n))
    strict_rule = Biconditional(v < min(m, n), w > max(m, n))
    for name, rule in (("square", square_rule), ("minmax", minmax_rule), ("strict", strict_rule)):
        if rule is not None and not rule.holds:
            raise RuntimeError(f"duality {name} rule failed on {m}x{n} matrix: v={v}, w={w}")
    return DualityReport(
        rows=m,
        cols=n,
        v=v,
        w=w,
        v_witness=v_wit,
        w_witness=w_wit,
        square_rule=square_rule,
        minmax_rule=minmax_rule,
        strict_rule=strict_rule,
        dual_bound=m + n - v,
        w_meets_bound=None if w_wit is None else w == m + n - v,
    )


def decompose_regular(f: BinaryMatrix, k: int) -> list[BinaryMatrix]:
    """Split a k-regular square 0/1 matrix into k permutation matrices.

    Repeatedly extracts a perfect matching on the remaining ones and
    removes it; after step t the remainder is (k - t)-regular, so the next
    matching always exists.
    """
    if f.rows != f.cols:
        raise ValueError(f"matrix must be square, got {f.rows}x{f.cols}")
    if k < 1:
        raise ValueError(f"regularity degree must be positive, got {k}")
    if any(s != k for s in f.row_sums()) or any(s != k for s in f.col_sums()):
        raise ValueError(f"matrix is not {k}-regular")
    n = f.rows
    work = list(f.data)
    parts: list[BinaryMatrix] = []
    for _ in range(k):
        adjacency = [[c for c in range(n) if work[r * n + c]] for r in range(n)]
        match_left = bipartite_matching(adjacency, n)
        if any(c < 0 for c in match_left):
            raise RuntimeError("regular matrix lost its perfect matching; this cannot happen")
        data = [0] * (n * n)
        for r, c in enumerate(match_left):
            data[r * n + c] = 1
            work[r * n + c] = 0
        parts.append(BinaryMatrix(n, n, tuple(data)))
    if any(work):
        raise RuntimeError("decomposition left ones behind; this cannot happen")
    return parts
