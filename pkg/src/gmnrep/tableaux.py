"""Multipartitions, standard m-tableaux, and their eigenvalue-column strings.

A node of the k-th diagram at row r, column s carries the column
(xi_k, s - r); the string of a standard tableau lists these columns in
entry order.  Tableaux of a fixed shape are canonically ordered by the
key (root index ascending, integer content descending) read along the
string.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache

from .cyclo import CycRat, root_index, root_of_unity


def _partitions(k: int, max_part: int | None = None):
    """Integer partitions of k as descending tuples, largest first part first."""
    if k == 0:
        yield ()
        return
    cap = k if max_part is None else min(k, max_part)
    for first in range(cap, 0, -1):
        for rest in _partitions(k - first, first):
            yield (first,) + rest


def _compositions(total: int, slots: int):
    if slots == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in _compositions(total - first, slots - 1):
            yield (first,) + rest


@dataclass(frozen=True)
class MPartition:
    m: int
    parts: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.m < 1 or len(self.parts) != self.m:
            raise ValueError(f"expected {self.m} component diagrams")
        for part in self.parts:
            if any(r < 1 for r in part):
                raise ValueError("row lengths must be positive")
            if any(part[i] < part[i + 1] for i in range(len(part) - 1)):
                raise ValueError(f"{part} is not weakly decreasing")

    @property
    def size(self) -> int:
        return sum(sum(part) for part in self.parts)

    def row_length(self, diagram: int, row: int) -> int:
        part = self.parts[diagram - 1]
        return part[row - 1] if 1 <= row <= len(part) else 0

    def contains(self, node: Node) -> bool:
        return (
            1 <= node.diagram <= self.m
            and node.row >= 1
            and 1 <= node.col <= self.row_length(node.diagram, node.row)
        )

    def add(self, node: Node) -> MPartition:
        part = list(self.parts[node.diagram - 1])
        if node.row == len(part) + 1:
            part.append(0)
        part[node.row - 1] += 1
        parts = list(self.parts)
        parts[node.diagram - 1] = tuple(part)
        return MPartition(self.m, tuple(parts))

    def remove(self, node: Node) -> MPartition:
        part = list(self.parts[node.diagram - 1])
        part[node.row - 1] -= 1
        if part[node.row - 1] == 0:
            part.pop()
        parts = list(self.parts)
        parts[node.diagram - 1] = tuple(part)
        return MPartition(self.m, tuple(parts))


@dataclass(frozen=True)
class Node:
    diagram: int
    row: int
    col: int


@dataclass(frozen=True)
class ContentColumn:
    p: CycRat
    c: int

    @property
    def root(self) -> int:
        return root_index(self.p)

    def sort_key(self):
        return (self.root, -self.c)


@dataclass(frozen=True)
class ContentString:
    m: int
    columns: tuple[ContentColumn, ...]

    def __len__(self) -> int:
        return len(self.columns)

    def sort_key(self):
        return tuple(col.sort_key() for col in self.columns)


def empty_mpartition(m: int) -> MPartition:
    return MPartition(m, ((),) * m)


def enum_mpartitions(m: int, n: int) -> list[MPartition]:
    """All m-component partitions of n, in a fixed deterministic order."""
    if n < 0:
        raise ValueError("size must be nonnegative")
    out: list[MPartition] = []
    for comp in _compositions(n, m):
        choices = [list(_partitions(k)) for k in comp]
        stack = [()]
        for options in choices:
            stack = [prefix + (opt,) for prefix in stack for opt in options]
        out.extend(MPartition(m, parts) for parts in stack)
    return out


def addable_nodes(shape: MPartition) -> tuple[Node, ...]:
    out = []
    for k in range(1, shape.m + 1):
        part = shape.parts[k - 1]
        for r in range(1, len(part) + 2):
            length = shape.row_length(k, r)
            above = shape.row_length(k, r - 1) if r > 1 else None
            if r == 1 or (above is not None and above > length):
                out.append(Node(k, r, length + 1))
    return tuple(out)


def removable_nodes(shape: MPartition) -> tuple[Node, ...]:
    out = []
    for k in range(1, shape.m + 1):
        part = shape.parts[k - 1]
        for r in range(1, len(part) + 1):
            if part[r - 1] > shape.row_length(k, r + 1):
                out.append(Node(k, r, part[r - 1]))
    return tuple(out)


def node_content(node: Node) -> int:
    return node.col - node.row


def content_column(shape: MPartition, node: Node) -> ContentColumn:
    if not shape.contains(node):
        raise ValueError(f"{node} lies outside the shape")
    return ContentColumn(root_of_unity(shape.m, node.diagram), node_content(node))


def _rows_standard(shape: MPartition, rows) -> bool:
    n = shape.size
    seen = set()
    for k in range(1, shape.m + 1):
        diagram = rows[k - 1]
        for r, row in enumerate(diagram, start=1):
            for s, value in enumerate(row, start=1):
                if not isinstance(value, int) or not (1 <= value <= n):
                    return False
                seen.add(value)
                if s > 1 and row[s - 2] >= value:
                    return False
                if r > 1 and diagram[r - 2][s - 1] >= value:
                    return False
    return len(seen) == n


@dataclass(frozen=True)
class MTableau:
    shape: MPartition
    rows: tuple[tuple[tuple[int, ...], ...], ...]

    def __post_init__(self):
        expected = tuple(
            tuple(len(row) for row in diagram) for diagram in self.rows
        )
        if expected != self.shape.parts:
            raise ValueError("rows do not fill the shape")
        if not _rows_standard(self.shape, self.rows):
            raise ValueError("filling is not a standard tableau")

    @property
    def m(self) -> int:
        return self.shape.m

    @property
    def n(self) -> int:
        return self.shape.size

    @cached_property
    def positions(self) -> dict[int, Node]:
        pos = {}
        for k, diagram in enumerate(self.rows, start=1):
            for r, row in enumerate(diagram, start=1):
                for s, value in enumerate(row, start=1):
                    pos[value] = Node(k, r, s)
        return pos

    def node_of(self, value: int) -> Node:
        return self.positions[value]

    def swap(self, i: int) -> MTableau | None:
        """Exchange entries i and i+1; None when the result is not standard."""
        if not 1 <= i <= self.n - 1:
            raise ValueError(f"swap index must lie in [1, {self.n - 1}], got {i}")
        a, b = self.node_of(i), self.node_of(i + 1)
        rows = [list(list(row) for row in diagram) for diagram in self.rows]
        rows[a.diagram - 1][a.row - 1][a.col - 1] = i + 1
        rows[b.diagram - 1][b.row - 1][b.col - 1] = i
        rows = tuple(tuple(tuple(row) for row in diagram) for diagram in rows)
        if not _rows_standard(self.shape, rows):
            return None
        return MTableau(self.shape, rows)

    def remove_last(self) -> MTableau:
        """Forget the largest entry; the remaining filling keeps its nodes."""
        node = self.node_of(self.n)
        rows = [list(list(row) for row in diagram) for diagram in self.rows]
        row = rows[node.diagram - 1][node.row - 1]
        row.pop()
        if not row:
            rows[node.diagram - 1].pop()
        rows = tuple(tuple(tuple(r) for r in diagram) for diagram in rows)
        return MTableau(self.shape.remove(node), rows)


def content_string(tab: MTableau) -> ContentString:
    cols = tuple(
        content_column(tab.shape, tab.node_of(i)) for i in range(1, tab.n + 1)
    )
    return ContentString(tab.m, cols)


def _place(tab_rows, node: Node, value: int):
    rows = [list(list(row) for row in diagram) for diagram in tab_rows]
    if node.row == len(rows[node.diagram - 1]) + 1:
        rows[node.diagram - 1].append([])
    rows[node.diagram - 1][node.row - 1].append(value)
    return tuple(tuple(tuple(row) for row in diagram) for diagram in rows)


@lru_cache(maxsize=None)
def _standard_fillings(shape: MPartition) -> tuple[MTableau, ...]:
    n = shape.size
    if n == 0:
        return (MTableau(shape, tuple(() for _ in range(shape.m))),)
    out = []
    for node in removable_nodes(shape):
        smaller = shape.remove(node)
        for sub in _standard_fillings(smaller):
            out.append(MTableau(shape, _place(sub.rows, node, n)))
    return tuple(out)


def enum_standard_mtableaux(shape: MPartition) -> tuple[MTableau, ...]:
    """All standard tableaux of the shape, in canonical string order."""
    tabs = _standard_fillings(shape)
    return tuple(sorted(tabs, key=lambda t: content_string(t).sort_key()))


def count_standard_mtableaux(shape: MPartition) -> int:
    return len(_standard_fillings(shape))


@dataclass(frozen=True)
class CContReport:
    ok: bool
    condition: int | None = None
    index: int | None = None
    message: str = ""

    def __bool__(self) -> bool:
        return self.ok


def validate_ccont(s: ContentString) -> CContReport:
    """Check the three defining conditions of an admissible eigenvalue string."""
    m = s.m
    cols = s.columns
    n = len(cols)
    one = CycRat.one(m)
    for j in range(1, n + 1):
        a_j, c_j = cols[j - 1].p, cols[j - 1].c
        if j == 1 and n >= 1 and c_j != 0:
            return CContReport(False, 1, 1, "first content entry must be 0")
        if a_j ** m != one:
            return CContReport(False, 1, j, f"entry {j} is not an m-th root of unity")
        if j > 1 and c_j != 0:
            if not any(
                cols[i - 1].p == a_j and cols[i - 1].c in (c_j - 1, c_j + 1)
                for i in range(1, j)
            ):
                return CContReport(
                    False, 2, j,
                    f"entry {j} has no earlier neighbour with content {c_j}±1",
                )
        for i in range(1, j):
            if cols[i - 1].p == a_j and cols[i - 1].c == c_j:
                between = [
                    cols[t - 1].c
                    for t in range(i + 1, j)
                    if cols[t - 1].p == a_j
                ]
                if not (c_j - 1 in between and c_j + 1 in between):
                    return CContReport(
                        False, 3, j,
                        f"entries {i} and {j} repeat a column without both "
                        f"contents {c_j}±1 in between",
                    )
    return CContReport(True)


def string_to_tableau(s: ContentString) -> MTableau:
    """Rebuild the unique standard tableau with the given string."""
    report = validate_ccont(s)
    if not report:
        raise ValueError(f"invalid content string (condition {report.condition} "
                         f"at index {report.index}): {report.message}")
    m = s.m
    shape = empty_mpartition(m)
    rows: tuple = tuple(() for _ in range(m))
    for i, col in enumerate(s.columns, start=1):
        k = col.root
        target = None
        for node in addable_nodes(shape):
            if node.diagram == k and node_content(node) == col.c:
                target = node
                break
        if target is None:
            raise ValueError(
                f"no addable node with content {col.c} in diagram {k} at step {i}"
            )
        rows = _place(rows, target, i)
        shape = shape.add(target)
    return MTableau(shape, rows)
