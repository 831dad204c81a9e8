"""Brute-force reference implementations used to cross-check the library.

Everything here is deliberately naive and independent of the package
internals: subset enumeration and permutation backtracking only. Slow but
trustworthy at the sizes the tests use.
"""

from itertools import combinations, permutations


def brute_max_independent_ones(rows: int, cols: int, data) -> int:
    """Largest 1-selection with distinct rows and columns, by subset DP.

    Tracks every achievable set of used columns as a bitmask while sweeping
    the rows; fine up to about 8 columns.
    """
    masks = {0}
    for r in range(rows):
        row_cols = [c for c in range(cols) if data[r * cols + c]]
        extended = set(masks)
        for mask in masks:
            for c in row_cols:
                bit = 1 << c
                if not mask & bit:
                    extended.add(mask | bit)
        masks = extended
    return max(bin(mask).count("1") for mask in masks)


def brute_max_zero_weight(rows: int, cols: int, data) -> int:
    """Best rows + cols over all-zero submatrices with both sides nonempty.

    For a fixed column set the best row set is simply every row that is
    zero on all of those columns, so enumerating column sets is exhaustive.
    Returns 0 when the matrix has no zero entry.
    """
    best = 0
    for size in range(1, cols + 1):
        for col_set in combinations(range(cols), size):
            zero_rows = sum(
                1 for r in range(rows) if all(not data[r * cols + c] for c in col_set)
            )
            if zero_rows:
                best = max(best, zero_rows + size)
    return best


def unit_diagonal_squares(n: int) -> list[tuple[tuple[int, ...], ...]]:
    """Every n x n Latin square on 1..n whose diagonal is all ones.

    Row-by-row backtracking over full permutations; the counts are
    1, 2, 24, 1344 for n = 2..5.
    """
    results: list[tuple[tuple[int, ...], ...]] = []

    def extend(rows: list[tuple[int, ...]]) -> None:
        r = len(rows)
        if r == n:
            results.append(tuple(rows))
            return
        for perm in permutations(range(1, n + 1)):
            if perm[r] != 1:
                continue
            if any(perm[c] == prev[c] for prev in rows for c in range(n)):
                continue
            extend(rows + [perm])

    extend([])
    return results


def row_agreements(row_a, row_b) -> int:
    return sum(x == y for x, y in zip(row_a, row_b))
