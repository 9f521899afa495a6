"""Young-diagram shapes in Cartesian convention, and integer fillings.

A shape is a partition tuple whose row i (1-based, counted upward from the
x-axis) has shape[i-1] cells.  Cells are addressed (column, row) with both
coordinates 1-based, so the cell (c, r) occupies the unit square with corners
(c-1, r-1) and (c, r).  Matrices read from text arrive top row first and are
flipped on input to this bottom-up convention.
"""

import json
from dataclasses import dataclass

from .errors import DomainError, FormatError
from .partitions import Part, as_partition, conjugate, format_partition, parse_partition

PLUS = "+"
MINUS = "-"

Cell = tuple[int, int]


def shape_contains(outer: Part, inner: Part) -> bool:
    """True when every row of inner fits inside the same row of outer."""
    if len(inner) > len(outer):
        return False
    return all(inner[i] <= outer[i] for i in range(len(inner)))


def lattice_points(shape: Part) -> list[tuple[int, int]]:
    """All cell vertices of the shape, plus (0,0) for the empty shape."""
    if not shape:
        return [(0, 0)]
    pts = []
    for y in range(len(shape) + 1):
        width = shape[0] if y == 0 else shape[y - 1]
        pts.extend((x, y) for x in range(width + 1))
    return pts


def boundary_type_sequence(shape: Part) -> str:
    """Word over +- encoding the outer boundary, read from the x-axis.

    The i-th letter is + when the i-th boundary step goes up and - when it
    goes left.  An empty shape gives the empty word.
    """
    if not shape:
        return ""
    steps = []
    rows = len(shape)
    x, y = shape[0], 0
    while (x, y) != (0, rows):
        if y < rows and shape[y] == x:
            steps.append(PLUS)
            y += 1
        else:
            steps.append(MINUS)
            x -= 1
    return "".join(steps)


def boundary_points(shape: Part) -> list[tuple[int, int]]:
    """Lattice points along the outer boundary, from (shape_1, 0) to (0, rows)."""
    if not shape:
        return [(0, 0)]
    pts = [(shape[0], 0)]
    x, y = shape[0], 0
    for step in boundary_type_sequence(shape):
        if step == PLUS:
            y += 1
        else:
            x -= 1
        pts.append((x, y))
    return pts


@dataclass(frozen=True)
class Filling:
    """A shape together with a nonnegative entry in every cell."""

    shape: Part
    rows: tuple[tuple[int, ...], ...]  # rows[r-1][c-1] = entry at (column c, row r)

    def __post_init__(self):
        shape = as_partition(self.shape)
        object.__setattr__(self, "shape", shape)
        rows = tuple(tuple(int(v) for v in row) for row in self.rows)
        object.__setattr__(self, "rows", rows)
        if len(rows) != len(shape):
            raise DomainError(
                f"filling has {len(rows)} rows but shape {shape} has {len(shape)}"
            )
        for i, row in enumerate(rows):
            if len(row) != shape[i]:
                raise DomainError(f"row {i + 1} has {len(row)} entries, expected {shape[i]}")
            if any(v < 0 for v in row):
                raise DomainError(f"negative entry in row {i + 1}")

    def entry(self, col: int, row: int) -> int:
        """Entry in the addressed cell; the cell must lie in the shape."""
        if not self.has_cell(col, row):
            raise DomainError(f"cell ({col},{row}) outside shape {self.shape}")
        return self.rows[row - 1][col - 1]

    def has_cell(self, col: int, row: int) -> bool:
        return 1 <= row <= len(self.shape) and 1 <= col <= self.shape[row - 1]

    def cells(self) -> list[Cell]:
        """All cell addresses, row-major from the bottom row."""
        return [
            (c, r)
            for r in range(1, len(self.shape) + 1)
            for c in range(1, self.shape[r - 1] + 1)
        ]

    def nonzero_cells(self) -> list[tuple[int, int, int]]:
        """(column, row, entry) for each nonzero cell, row-major bottom-up."""
        return [
            (c, r, self.rows[r - 1][c - 1])
            for r in range(1, len(self.shape) + 1)
            for c in range(1, self.shape[r - 1] + 1)
            if self.rows[r - 1][c - 1]
        ]

    def total(self) -> int:
        return sum(sum(row) for row in self.rows)


def zero_filling(shape: Part) -> Filling:
    shape = as_partition(shape)
    return Filling(shape, tuple((0,) * w for w in shape))


def filling_from_matrix(shape, rows_top_first) -> Filling:
    """Build a filling from rows given in human-matrix order (top row first)."""
    return Filling(tuple(shape), tuple(reversed([tuple(r) for r in rows_top_first])))


def row_sums(f: Filling) -> tuple[int, ...]:
    """Entry sums per row, bottom row first."""
    return tuple(sum(row) for row in f.rows)


def col_sums(f: Filling) -> tuple[int, ...]:
    """Entry sums per column, leftmost first."""
    if not f.shape:
        return ()
    sums = [0] * f.shape[0]
    for row in f.rows:
        for j, v in enumerate(row):
            sums[j] += v
    return tuple(sums)


def reflect(f: Filling) -> Filling:
    """Transpose across the diagonal: entry (c, r) moves to (r, c)."""
    new_shape = conjugate(f.shape)
    new_rows = tuple(
        tuple(f.rows[r - 1][c - 1] for r in range(1, new_shape[c - 1] + 1))
        for c in range(1, len(new_shape) + 1)
    )
    return Filling(new_shape, new_rows)


def _restrict_cells(f: Filling, sub: Part | None) -> list[tuple[int, int, int]]:
    """Nonzero cells of f lying inside the sub-shape (default: whole shape)."""
    if sub is None:
        return f.nonzero_cells()
    sub = as_partition(sub)
    if not shape_contains(f.shape, sub):
        raise DomainError(f"sub-shape {sub} not contained in {f.shape}")
    return [
        (c, r, v)
        for (c, r, v) in f.nonzero_cells()
        if r <= len(sub) and c <= sub[r - 1]
    ]


def longest_ne_chain(f: Filling, sub: Part | None = None) -> int:
    """Largest entry sum over chains stepping weakly up and weakly right."""
    total, _ = ne_chain_witness(f, sub)
    return total


def ne_chain_witness(f: Filling, sub: Part | None = None):
    """Longest NE-chain value plus one witnessing chain of (col, row, entry)."""
    cells = sorted(_restrict_cells(f, sub), key=lambda t: (t[0], t[1]))
    best_val = 0
    best_end = None
    score: list[int] = []
    parent: list[int | None] = []
    for i, (c, r, v) in enumerate(cells):
        s, p = v, None
        for j in range(i):
            cj, rj, _ = cells[j]
            if cj <= c and rj <= r and score[j] + v > s:
                s, p = score[j] + v, j
        score.append(s)
        parent.append(p)
        if s > best_val:
            best_val, best_end = s, i
    chain: list[tuple[int, int, int]] = []
    while best_end is not None:
        chain.append(cells[best_end])
        best_end = parent[best_end]
    chain.reverse()
    return best_val, chain


def longest_se_chain(f: Filling, sub: Part | None = None) -> int:
    """Largest count over chains stepping strictly down and strictly right."""
    cells = sorted(_restrict_cells(f, sub), key=lambda t: (t[0], -t[1]))
    best = 0
    score: list[int] = []
    for i, (c, r, _) in enumerate(cells):
        s = 1
        for j in range(i):
            cj, rj, _ = cells[j]
            if cj < c and rj > r and score[j] + 1 > s:
                s = score[j] + 1
        score.append(s)
        best = max(best, s)
    return best


def contains_pattern(f: Filling, d: int) -> bool:
    """True when some strictly-descending chain of d nonzero entries is
    followed by a nonzero entry strictly above and strictly right of all of
    them."""
    return pattern_witness(f, d) is not None


def pattern_witness(f: Filling, d: int):
    """A witnessing cell list for the descending pattern, or None.

    Returns d chain cells plus the dominating cell, each as (col, row, entry).
    """
    if d < 1:
        raise DomainError(f"pattern order must be >= 1, got {d}")
    cells = f.nonzero_cells()
    for c, r, v in cells:
        # longest strictly-down-right chain in the open quadrant below-left
        region = sorted(
            (t for t in cells if t[0] < c and t[1] < r),
            key=lambda t: (t[0], -t[1]),
        )
        score: list[int] = []
        parent: list[int | None] = []
        best, end = 0, None
        for i, (ci, ri, _) in enumerate(region):
            s, p = 1, None
            for j in range(i):
                cj, rj, _ = region[j]
                if cj < ci and rj > ri and score[j] + 1 > s:
                    s, p = score[j] + 1, j
            score.append(s)
            parent.append(p)
            if s > best:
                best, end = s, i
        if best >= d:
            chain = []
            while end is not None:
                chain.append(region[end])
                end = parent[end]
            chain.reverse()
            # any d consecutive chain cells stay below-left of the witness
            return chain[-d:] + [(c, r, v)]
    return None


def permutation_to_filling(perm) -> Filling:
    """0/1 square filling with a 1 in cell (j, perm[j-1]) for each column j."""
    perm = tuple(int(x) for x in perm)
    n = len(perm)
    if sorted(perm) != list(range(1, n + 1)):
        raise DomainError(f"{perm} is not a permutation of 1..{n}")
    rows = tuple(
        tuple(1 if perm[c] == r + 1 else 0 for c in range(n)) for r in range(n)
    )
    return Filling((n,) * n if n else (), rows)


def filling_to_permutation(f: Filling) -> tuple[int, ...]:
    """Inverse of permutation_to_filling; requires a 0/1 permutation filling."""
    n = len(f.shape)
    if f.shape != ((n,) * n if n else ()):
        raise DomainError(f"shape {f.shape} is not square")
    perm = []
    for c in range(1, n + 1):
        hits = [r for r in range(1, n + 1) if f.rows[r - 1][c - 1]]
        if len(hits) != 1 or f.rows[hits[0] - 1][c - 1] != 1:
            raise DomainError(f"column {c} is not a unit column")
        perm.append(hits[0])
    for r in range(1, n + 1):
        if sum(f.rows[r - 1]) != 1:
            raise DomainError(f"row {r} is not a unit row")
    return tuple(perm)


def format_filling(f: Filling) -> str:
    """Shape line followed by entry rows, top row first."""
    lines = [format_partition(f.shape)]
    for row in reversed(f.rows):
        lines.append(" ".join(str(v) for v in row))
    return "\n".join(lines)


def filling_to_json(f: Filling) -> dict:
    return {"shape": list(f.shape), "rows": [list(r) for r in reversed(f.rows)]}


def parse_filling(text: str) -> Filling:
    """Parse the text form (or its JSON mirror with keys shape/rows)."""
    stripped = text.strip()
    if stripped.startswith("{"):
        try:
            obj = json.loads(stripped)
        except json.JSONDecodeError as exc:
            raise FormatError(f"bad JSON filling: {exc}") from exc
        return filling_from_json(obj)
    lines = [ln for ln in stripped.splitlines() if ln.strip()]
    if not lines:
        raise FormatError("empty filling input")
    shape = parse_partition(lines[0])
    body = lines[1:]
    if len(body) != len(shape):
        raise FormatError(f"expected {len(shape)} entry rows, got {len(body)}")
    try:
        rows_top = [tuple(int(tok) for tok in ln.split()) for ln in body]
    except ValueError as exc:
        raise FormatError(f"bad filling entry: {exc}") from exc
    try:
        return filling_from_matrix(shape, rows_top)
    except DomainError as exc:
        raise FormatError(str(exc)) from exc


def filling_from_json(obj) -> Filling:
    if not isinstance(obj, dict) or "shape" not in obj or "rows" not in obj:
        raise FormatError("filling JSON needs keys 'shape' and 'rows'")
    try:
        return filling_from_matrix(tuple(obj["shape"]), [tuple(r) for r in obj["rows"]])
    except (DomainError, TypeError) as exc:
        raise FormatError(str(exc)) from exc
