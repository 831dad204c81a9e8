"""Latin squares, mutual projectivity, transversals, and group-table coverage.

Two unit-diagonal squares of one order are projective when every row of one
meets every row of the other in exactly one column with an equal entry. A
set of pairwise projective unit-diagonal squares of order n can hold at
most n - 1 members; a set that reaches that bound is called complete.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Sequence

from .binmat import FormatError


@dataclass(frozen=True)
class LatinSquare:
    """An n x n grid where every row and column uses each of 1..n once."""

    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        n = len(self.entries)
        if n < 1:
            raise ValueError("need at least one row")
        expected = set(range(1, n + 1))
        for i, row in enumerate(self.entries):
            if len(row) != n:
                raise ValueError(f"row {i} has {len(row)} entries, expected {n}")
            if set(row) != expected:
                raise ValueError(f"row {i} is not a permutation of 1..{n}: {row!r}")
        for j in range(n):
            column = {row[j] for row in self.entries}
            if column != expected:
                raise ValueError(f"column {j} is not a permutation of 1..{n}")

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[int]]) -> LatinSquare:
        return cls(tuple(tuple(int(x) for x in row) for row in rows))

    @property
    def order(self) -> int:
        return len(self.entries)

    def __getitem__(self, key: tuple[int, int]) -> int:
        r, c = key
        return self.entries[r][c]

    @property
    def has_unit_diagonal(self) -> bool:
        return all(row[i] == 1 for i, row in enumerate(self.entries))

    def transpose(self) -> LatinSquare:
        n = self.order
        return LatinSquare(tuple(tuple(self.entries[r][c] for r in range(n)) for c in range(n)))


def cyclic_square(n: int) -> LatinSquare:
    """Row i is the cyclic shift (i, i+1, ...); doubles as the Z_n table."""
    return LatinSquare(tuple(tuple((i + j) % n + 1 for j in range(n)) for i in range(n)))


def random_latin_square(order: int, rng: random.Random) -> LatinSquare:
    """A random square built row by row with backtracking inside each row.

    Any valid prefix of rows extends to a full square, so backtracking
    never has to cross a row boundary.
    """
    if order < 1:
        raise ValueError(f"order must be positive, got {order}")
    col_used: list[set[int]] = [set() for _ in range(order)]
    rows: list[tuple[int, ...]] = []
    for _ in range(order):
        row = [0] * order
        row_used: set[int] = set()

        def place(c: int) -> bool:
            if c == order:
                return True
            candidates = [s for s in range(1, order + 1) if s not in row_used and s not in col_used[c]]
            rng.shuffle(candidates)
            for s in candidates:
                row[c] = s
                row_used.add(s)
                if place(c + 1):
                    return True
                row_used.discard(s)
            row[c] = 0
            return False

        if not place(0):
            raise RuntimeError("row extension failed; this cannot happen")
        for c, s in enumerate(row):
            col_used[c].add(s)
        rows.append(tuple(row))
    return LatinSquare(tuple(rows))


def _agreements(row_a: Sequence[int], row_b: Sequence[int]) -> int:
    return sum(x == y for x, y in zip(row_a, row_b))


def projective_pair(a: LatinSquare, b: LatinSquare) -> bool:
    """True when both squares have unit diagonals and any row of a shares
    exactly one position-with-equal-entry with any row of b."""
    if a.order != b.order:
        raise ValueError(f"orders differ: {a.order} vs {b.order}")
    if not a.has_unit_diagonal or not b.has_unit_diagonal:
        return False
    return all(
        _agreements(row_a, row_b) == 1 for row_a in a.entries for row_b in b.entries
    )


@dataclass(frozen=True)
class MplsSet:
    """A bundle of unit-diagonal squares of one order, at most order - 1 of them.

    Construction enforces the diagonal and size limits only; whether the
    members are actually pairwise projective is the job of verify_mpls.
    """

    order: int
    squares: tuple[LatinSquare, ...]

    def __post_init__(self) -> None:
        if self.order < 2:
            raise ValueError(f"order must be at least 2, got {self.order}")
        if len(self.squares) > self.order - 1:
            raise ValueError(
                f"at most {self.order - 1} squares of order {self.order} can be mutually "
                f"projective, got {len(self.squares)}"
            )
        for idx, sq in enumerate(self.squares):
            if sq.order != self.order:
                raise ValueError(f"square {idx} has order {sq.order}, expected {self.order}")
            if not sq.has_unit_diagonal:
                raise ValueError(f"square {idx} does not have an all-ones diagonal")


@dataclass(frozen=True)
class MplsReport:
    is_mpls: bool
    is_complete: bool
    violations: tuple[str, ...]


def verify_mpls(s: MplsSet) -> MplsReport:
    """Check pairwise projectivity; completeness additionally needs order - 1 members."""
    violations: list[str] = []
    for i, j in combinations(range(len(s.squares)), 2):
        a, b = s.squares[i], s.squares[j]
        for ra, row_a in enumerate(a.entries):
            for rb, row_b in enumerate(b.entries):
                agree = _agreements(row_a, row_b)
                if agree != 1:
                    violations.append(
                        f"squares {i} and {j}: rows {ra} and {rb} agree in {agree} columns, expected 1"
                    )
    is_mpls = not violations
    return MplsReport(is_mpls, is_mpls and len(s.squares) == s.order - 1, tuple(violations))


def pair_coverage(s: MplsSet, i: int, j: int) -> bool:
    """Do the rows of a complete set hit every ordered symbol pair at columns (i, j)?

    Reading off (row[i], row[j]) for each of the order*(order-1) rows in the
    set must produce every ordered pair of distinct symbols exactly once.
    """
    if i == j:
        raise ValueError("column indices must differ")
    for c in (i, j):
        if not 0 <= c < s.order:
            raise ValueError(f"column {c} outside 0..{s.order - 1}")
    report = verify_mpls(s)
    if not report.is_complete:
        raise ValueError("pair coverage is defined for complete sets only")
    seen: set[tuple[int, int]] = set()
    for sq in s.squares:
        for row in sq.entries:
            pair = (row[i], row[j])
            if pair in seen:
                return False
            seen.add(pair)
    wanted = {(x, y) for x in range(1, s.order + 1) for y in range(1, s.order + 1) if x != y}
    return seen == wanted


@dataclass(frozen=True)
class Transversal:
    """One cell per row, one per column, every value 1..n exactly once."""

    order: int
    placements: tuple[tuple[int, int, int], ...]

    def __post_init__(self) -> None:
        if len(self.placements) != self.order:
            raise ValueError(f"need {self.order} placements, got {len(self.placements)}")
        rows = [r for r, _, _ in self.placements]
        cols = [c for _, c, _ in self.placements]
        values = {v for _, _, v in self.placements}
        if len(set(rows)) != self.order or len(set(cols)) != self.order:
            raise ValueError("placements must cover distinct rows and distinct columns")
        if values != set(range(1, self.order + 1)):
            raise ValueError(f"values must be exactly 1..{self.order}, got {sorted(values)}")

    def matches(self, square: LatinSquare) -> bool:
        return square.order == self.order and all(
            square.entries[r][c] == v for r, c, v in self.placements
        )


def transversals_from_companion(host: LatinSquare, companion: LatinSquare) -> list[Transversal]:
    """One transversal of host per companion row.

    Row s of the companion meets each host row in exactly one column with
    an equal entry; those cells form a transversal of the host, and over
    all s they partition its cells.
    """
    if host.order != companion.order:
        raise ValueError(f"orders differ: {host.order} vs {companion.order}")
    if not projective_pair(host, companion):
        raise ValueError("host and companion are not a projective pair")
    n = host.order
    result = []
    for s in range(n):
        comp_row = companion.entries[s]
        placements = []
        for r in range(n):
            cells = [c for c in range(n) if host.entries[r][c] == comp_row[c]]
            if len(cells) != 1:
                raise RuntimeError("projective pair lost its single agreement; this cannot happen")
            c = cells[0]
            placements.append((r, c, host.entries[r][c]))
        result.append(Transversal(n, tuple(placements)))
    return result


@dataclass(frozen=True)
class ResolvabilityReport:
    """Partitions of the target square into transversals, one per companion."""

    target_index: int
    companion_indices: tuple[int, ...]
    resolutions: tuple[tuple[Transversal, ...], ...]
    verified: bool
    problems: tuple[str, ...]


def resolvability_report(s: MplsSet, target_index: int) -> ResolvabilityReport:
    """Resolve the target square once per other member of a complete set.

    Each resolution must split the target's cells into order-many disjoint
    transversals; with order >= 3 there are order - 2 companions, and the
    resulting resolutions are expected to be pairwise distinct.
    """
    report = verify_mpls(s)
    if not report.is_complete:
        raise ValueError("resolvability is defined for complete sets only")
    if s.order < 3:
        raise ValueError(f"resolvability needs order >= 3, got {s.order}")
    if not 0 <= target_index < len(s.squares):
        raise ValueError(f"target index {target_index} outside 0..{len(s.squares) - 1}")
    host = s.squares[target_index]
    n = s.order
    all_cells = {(r, c) for r in range(n) for c in range(n)}
    companions = []
    resolutions = []
    problems: list[str] = []
    for idx, other in enumerate(s.squares):
        if idx == target_index:
            continue
        companions.append(idx)
        transversals = tuple(transversals_from_companion(host, other))
        covered = [(r, c) for t in transversals for r, c, _ in t.placements]
        if len(covered) != len(set(covered)) or set(covered) != all_cells:
            problems.append(f"resolution from square {idx} does not partition the cells")
        for t in transversals:
            if not t.matches(host):
                problems.append(f"resolution from square {idx} contains a transversal off the target")
        resolutions.append(transversals)
    if len(set(resolutions)) != len(resolutions):
        problems.append("two companions produced identical resolutions")
    verified = not problems and len(resolutions) == s.order - 2
    return ResolvabilityReport(
        target_index, tuple(companions), tuple(resolutions), verified, tuple(problems)
    )


def submatrix_symbol_count(
    square: LatinSquare, rows: Iterable[int], cols: Iterable[int]
) -> tuple[dict[int, int], bool]:
    """Count symbols inside a row/column selection and judge the excess rule.

    Whenever the selection sizes satisfy a + b = n + m with m >= 1, every
    symbol must show up at least m times in the selected submatrix. The
    verdict is vacuously true for a + b <= n.
    """
    n = square.order
    row_sel = sorted(set(rows))
    col_sel = sorted(set(cols))
    if not row_sel or not col_sel:
        raise ValueError("row and column selections must be nonempty")
    for r in row_sel:
        if not 0 <= r < n:
            raise ValueError(f"row {r} outside 0..{n - 1}")
    for c in col_sel:
        if not 0 <= c < n:
            raise ValueError(f"column {c} outside 0..{n - 1}")
    counts = {symbol: 0 for symbol in range(1, n + 1)}
    for r in row_sel:
        row = square.entries[r]
        for c in col_sel:
            counts[row[c]] += 1
    excess = len(row_sel) + len(col_sel) - n
    verdict = True if excess < 1 else all(count >= excess for count in counts.values())
    return counts, verdict


@lru_cache(maxsize=128)
def _group_identity(table: LatinSquare) -> int:
    """Identity element of a Cayley table, raising when the table is no group.

    Element i corresponds to symbol i + 1, so row e of an identity must
    read 1..n in order and so must column e. Associativity is checked by
    full triple enumeration, which is fine at desk scale.
    """
    n = table.order
    ordered = tuple(range(1, n + 1))
    identity = None
    for e in range(n):
        if table.entries[e] == ordered and tuple(row[e] for row in table.entries) == ordered:
            identity = e
            break
    if identity is None:
        raise ValueError("table has no identity element")
    t = table.entries
    for a in range(n):
        for b in range(n):
            ab = t[a][b] - 1
            for c in range(n):
                if t[ab][c] != t[a][t[b][c] - 1]:
                    raise ValueError(f"table is not associative at ({a}, {b}, {c})")
    return identity


def group_product_cover(cayley: LatinSquare, a_rows: Iterable[int], b_cols: Iterable[int]) -> bool:
    """Does the product set A*B read off a group table cover the whole group?

    Guaranteed to hold whenever |A| + |B| >= n + 1; the verdict simply
    reports whether all n symbols appear among the selected cells.
    """
    _group_identity(cayley)
    n = cayley.order
    a_sel = sorted(set(a_rows))
    b_sel = sorted(set(b_cols))
    if not a_sel or not b_sel:
        raise ValueError("both factor selections must be nonempty")
    for x in a_sel + b_sel:
        if not 0 <= x < n:
            raise ValueError(f"element index {x} outside 0..{n - 1}")
    covered: set[int] = set()
    for a in a_sel:
        row = cayley.entries[a]
        for b in b_sel:
            covered.add(row[b])
        if len(covered) == n:
            return True
    return len(covered) == n


# text form: header line "n", then n rows of space-separated symbols; sets
# are either one file per square or a single file with '#' separator lines

_LS_CHARS = frozenset("0123456789 \n#")


def to_ls_text(square: LatinSquare) -> str:
    lines = [str(square.order)]
    for row in square.entries:
        lines.append(" ".join(str(x) for x in row))
    return "\n".join(lines) + "\n"


def from_ls_text(text: str) -> LatinSquare:
    squares = _parse_square_blocks(text, allow_many=False)
    return squares[0]


def mpls_to_text(s: MplsSet) -> str:
    return "#\n".join(to_ls_text(sq) for sq in s.squares)


def mpls_from_text(text: str) -> MplsSet:
    squares = _parse_square_blocks(text, allow_many=True)
    return MplsSet(squares[0].order, tuple(squares))


def _parse_square_blocks(text: str, allow_many: bool) -> list[LatinSquare]:
    bad = set(text) - _LS_CHARS
    if bad:
        raise FormatError(f"illegal character {sorted(bad)[0]!r} in square text")
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    blocks: list[list[str]] = [[]]
    for line in lines:
        if line.strip() == "#":
            blocks.append([])
        elif "#" in line:
            raise FormatError("'#' may only appear alone on a separator line")
        else:
            blocks[-1].append(line)
    if not allow_many and len(blocks) > 1:
        raise FormatError("expected a single square, found a separator")
    squares = []
    for body in blocks:
        if not body:
            raise FormatError("empty square block")
        header = body[0].split()
        if len(header) != 1:
            raise FormatError("square header must be a single order")
        n = int(header[0])
        if n < 1:
            raise FormatError("order must be positive")
        if len(body) - 1 != n:
            raise FormatError(f"expected {n} rows, found {len(body) - 1}")
        rows = []
        for lineno, line in enumerate(body[1:], start=2):
            tokens = line.split()
            if len(tokens) != n:
                raise FormatError(f"row {lineno}: expected {n} entries, found {len(tokens)}")
            values = [int(tok) for tok in tokens]
            if any(not 1 <= x <= n for x in values):
                raise FormatError(f"row {lineno}: entries must sit in 1..{n}")
            rows.append(tuple(values))
        squares.append(LatinSquare(tuple(rows)))
    return squares
