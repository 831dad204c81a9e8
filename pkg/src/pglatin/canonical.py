"""Canonical block form of a plane incidence matrix and the square extraction.

For a plane of order n the incidence matrix (rows are lines, columns are
points) can be permuted into a fixed block layout over the partition
(n+1, n, ..., n) on both axes:

  * the corner block has ones exactly in its first row and first column,
  * the remaining top blocks are all-ones in the row matching their block
    index and zero elsewhere, the left blocks dually in one column,
  * every inner block is an n x n permutation matrix,
  * the first inner block row and the first inner block column consist of
    identity blocks,
  * within any later inner block row the blocks occupy pairwise disjoint
    positions and add up to the all-ones matrix, and dually for columns.

Row 0 of the input is taken as the first line; its points, the lines
through its lowest point, and all remaining free orderings are resolved by
lowest original index, after which the identity constraints pin down every
position inside the blocks. Re-running the procedure on its own output is
therefore the identity.

The later inner block rows encode unit-diagonal Latin squares: writing j
for the inner column in which a block holds a one at cell (r, c) yields
square entries, one square per block row, and those squares are mutually
projective. The reverse direction rebuilds the matrix from a complete set
of squares.
"""

from __future__ import annotations

from dataclasses import dataclass

from .binmat import (
    BinaryMatrix,
    BlockPartition,
    Permutation,
    assemble,
    block,
    is_permutation_matrix,
    permute,
)
from .geometry import plane_check
from .latin import LatinSquare, MplsSet, verify_mpls
from .planes import geometry_from_incidence


@dataclass(frozen=True)
class BlockForm:
    """A canonical matrix plus the partition and permutations that made it."""

    matrix: BinaryMatrix
    order: int
    partition: BlockPartition
    row_perm: Permutation
    col_perm: Permutation

    def block(self, i: int, j: int) -> BinaryMatrix:
        return block(self.matrix, self.partition, i, j)

    @property
    def side(self) -> int:
        return self.matrix.rows


def _block_partition(order: int) -> BlockPartition:
    sizes = [order + 1] + [order] * order
    return BlockPartition.from_sizes(sizes, sizes)


def canonicalize(m: BinaryMatrix) -> BlockForm:
    """Permute a plane incidence matrix into the canonical block layout.

    The input must be the incidence matrix of a projective plane; anything
    else is rejected. The returned permutations send input positions to
    canonical ones, so permute(m, row_perm, col_perm) reproduces the
    canonical matrix.
    """
    g = geometry_from_incidence(m)
    verdict = plane_check(g)
    if not (verdict.first_def and verdict.second_def):
        raise ValueError("input is not the incidence matrix of a projective plane")
    assert verdict.order is not None
    k = verdict.order
    n = m.rows
    line_sets = [set(line) for line in g.lines]

    line1_pts = list(g.lines[0])
    p1 = line1_pts[0]
    block1_rows = sorted(r for r in range(n) if p1 in line_sets[r])

    col_order = list(line1_pts)
    for line_row in block1_rows[1:]:
        col_order.extend(p for p in g.lines[line_row] if p != p1)

    row_order = list(block1_rows)
    in_block1 = set(block1_rows)
    for s in range(1, k + 1):
        ps = line1_pts[s]
        row_order.extend(
            r for r in range(n) if r not in in_block1 and ps in line_sets[r]
        )
    if len(col_order) != n or len(row_order) != n:
        raise RuntimeError("stage ordering lost indices; this cannot happen")

    # inner identity normalization: first reorder each inner column block so
    # the block in the first inner row becomes the identity, then reorder the
    # rows of the later inner row blocks against the first inner column block
    first_inner_rows = row_order[k + 1 : 2 * k + 1]
    for j in range(1, k + 1):
        start = k + 1 + (j - 1) * k
        segment = col_order[start : start + k]
        seg_set = set(segment)
        new_segment: list[int | None] = [None] * k
        for local, r in enumerate(first_inner_rows):
            hits = line_sets[r] & seg_set
            if len(hits) != 1:
                raise RuntimeError("inner block is not a permutation matrix; this cannot happen")
            new_segment[local] = hits.pop()
        col_order[start : start + k] = new_segment  # type: ignore[assignment]
    first_inner_cols = col_order[k + 1 : 2 * k + 1]
    for i in range(2, k + 1):
        start = k + 1 + (i - 1) * k
        segment = row_order[start : start + k]
        new_rows: list[int | None] = [None] * k
        for r in segment:
            hits = [local for local, c in enumerate(first_inner_cols) if c in line_sets[r]]
            if len(hits) != 1 or new_rows[hits[0]] is not None:
                raise RuntimeError("inner block is not a permutation matrix; this cannot happen")
            new_rows[hits[0]] = r
        row_order[start : start + k] = new_rows  # type: ignore[assignment]

    row_images = [0] * n
    for position, original in enumerate(row_order):
        row_images[original] = position
    col_images = [0] * n
    for position, original in enumerate(col_order):
        col_images[original] = position
    row_perm = Permutation(tuple(row_images))
    col_perm = Permutation(tuple(col_images))
    form = BlockForm(permute(m, row_perm, col_perm), k, _block_partition(k), row_perm, col_perm)
    report = verify_block_form(form)
    if not report.ok:
        raise RuntimeError(f"canonicalization produced an invalid block form: {report.first}")
    return form


@dataclass(frozen=True)
class BlockFormReport:
    violations: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return not self.violations

    @property
    def first(self) -> str | None:
        return self.violations[0] if self.violations else None


def verify_block_form(bf: BlockForm) -> BlockFormReport:
    """Check every structural rule of the canonical layout and list failures."""
    problems: list[str] = []
    k = bf.order
    n = k * k + k + 1
    if bf.matrix.rows != n or bf.matrix.cols != n:
        return BlockFormReport((f"matrix is {bf.matrix.rows}x{bf.matrix.cols}, expected {n}x{n}",))
    expected_cuts = _block_partition(k)
    if bf.partition != expected_cuts:
        return BlockFormReport(("partition does not match the (n+1, n, ..., n) layout",))

    corner = bf.block(0, 0)
    corner_want = tuple(
        1 if (r == 0 or c == 0) else 0 for r in range(k + 1) for c in range(k + 1)
    )
    if corner.data != corner_want:
        problems.append("corner block must have ones exactly in its first row and first column")
    for j in range(1, k + 1):
        top = bf.block(0, j)
        want = tuple(1 if r == j else 0 for r in range(k + 1) for _ in range(k))
        if top.data != want:
            problems.append(f"top block {j} must have ones exactly in row {j}")
    for i in range(1, k + 1):
        left = bf.block(i, 0)
        want = tuple(1 if c == i else 0 for _ in range(k) for c in range(k + 1))
        if left.data != want:
            problems.append(f"left block {i} must have ones exactly in column {i}")

    inner = {(i, j): bf.block(i, j) for i in range(1, k + 1) for j in range(1, k + 1)}
    identity = BinaryMatrix.identity(k)
    for (i, j), blk in inner.items():
        if not is_permutation_matrix(blk):
            problems.append(f"inner block ({i}, {j}) is not a permutation matrix")
    for j in range(1, k + 1):
        if inner[(1, j)] != identity:
            problems.append(f"inner block (1, {j}) must be the identity")
    for i in range(2, k + 1):
        if inner[(i, 1)] != identity:
            problems.append(f"inner block ({i}, 1) must be the identity")

    for i in range(2, k + 1):
        for idx in range(k * k):
            total = sum(inner[(i, j)].data[idx] for j in range(1, k + 1))
            if total != 1:
                r, c = divmod(idx, k)
                problems.append(
                    f"inner block row {i} covers cell ({r}, {c}) {total} times, expected once"
                )
                break
    for j in range(2, k + 1):
        for idx in range(k * k):
            total = sum(inner[(i, j)].data[idx] for i in range(1, k + 1))
            if total != 1:
                r, c = divmod(idx, k)
                problems.append(
                    f"inner block column {j} covers cell ({r}, {c}) {total} times, expected once"
                )
                break
    return BlockFormReport(tuple(problems))


def extract_mpls(bf: BlockForm) -> MplsSet:
    """Read the mutually projective squares out of a verified block form.

    Inner block row i (from the second onward) becomes one square: its
    entry at (r, c) is the inner column index of the block holding a one
    there. The identity blocks in the first inner column put ones on every
    diagonal.
    """
    report = verify_block_form(bf)
    if not report.ok:
        raise ValueError(f"block form violates the layout: {report.first}")
    k = bf.order
    squares = []
    for i in range(2, k + 1):
        cells = [[0] * k for _ in range(k)]
        for j in range(1, k + 1):
            blk = bf.block(i, j)
            for idx, value in enumerate(blk.data):
                if value:
                    r, c = divmod(idx, k)
                    cells[r][c] = j
        squares.append(LatinSquare.from_rows(cells))
    return MplsSet(k, tuple(squares))


def reconstruct(s: MplsSet) -> BinaryMatrix:
    """Rebuild the canonical incidence matrix from a complete square set.

    Inverse of extract_mpls: square entries turn back into the positions
    of ones inside the inner blocks, and the border blocks are fixed by
    the layout. The result is a plane incidence matrix of order s.order.
    """
    report = verify_mpls(s)
    if not report.is_complete:
        detail = report.violations[0] if report.violations else f"{len(s.squares)} squares, need {s.order - 1}"
        raise ValueError(f"reconstruction needs a complete set: {detail}")
    k = s.order
    corner = BinaryMatrix.from_rows(
        [[1] * (k + 1)] + [[1] + [0] * k for _ in range(k)]
    )
    top = [
        BinaryMatrix(k + 1, k, tuple(1 if r == j else 0 for r in range(k + 1) for _ in range(k)))
        for j in range(1, k + 1)
    ]
    left = [
        BinaryMatrix(k, k + 1, tuple(1 if c == i else 0 for _ in range(k) for c in range(k + 1)))
        for i in range(1, k + 1)
    ]
    identity = BinaryMatrix.identity(k)
    grid: list[list[BinaryMatrix]] = [[corner] + top]
    grid.append([left[0]] + [identity] * k)
    for i in range(2, k + 1):
        square = s.squares[i - 2]
        band: list[BinaryMatrix] = [left[i - 1]]
        for j in range(1, k + 1):
            data = tuple(
                1 if square.entries[r][c] == j else 0 for r in range(k) for c in range(k)
            )
            band.append(BinaryMatrix(k, k, data))
        grid.append(band)
    return assemble(grid)
