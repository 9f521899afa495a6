"""Growth diagrams: local rules, single-cell growth, and whole-diagram sweeps.

A growth diagram assigns a partition (or staircase) to every lattice point of
a filled shape.  Each cell, with corner labels bl/tl/br/tr (bottom-left,
top-left, bottom-right, top-right) and entry m, must satisfy the local rule
selected for the whole diagram:

* plain rule ("rsk"): tl and br each interlace above bl and below tr, and
      tr_1           = m + max(tl_1, br_1)
      tr_{i+1} + bl_i = min(tl_i, br_i) + max(tl_{i+1}, br_{i+1})
* cyclic rule ("drsk", degree d): the same interlacing among partitions of at
  most d parts, the side condition m = 0 or bl_d = 0, and the first row of
  the system wraps cyclically:
      tr_1 + bl_d    = m + min(tl_d, br_d) + max(tl_1, br_1)
* skew cyclic rule ("skew", degree d): the cyclic system over degree-d
  staircases with m = 0 everywhere and no boundary condition.

Forward growth solves a cell for tr; backward growth solves for bl and m.
Both directions are unique, which is what makes whole-diagram growth a
bijection between fillings and boundary label sequences.
"""

from dataclasses import dataclass

from .errors import DomainError, FormatError, InvariantViolation, PatternContainment
from .fillings import (
    MINUS,
    PLUS,
    Filling,
    boundary_points,
    boundary_type_sequence,
    parse_filling,
    format_filling,
    shape_contains,
    zero_filling,
)
from .partitions import (
    Part,
    as_partition,
    as_staircase,
    format_partition,
    interlaces,
    parse_partition,
    parse_staircase,
    part,
)
from .tableaux import OscillatingTableau, SkewOscillatingTableau


@dataclass(frozen=True)
class Rule:
    """Local-rule selector: plain, cyclic of degree d, or skew cyclic."""

    kind: str
    d: int = 0

    def __post_init__(self):
        if self.kind not in ("rsk", "drsk", "skew"):
            raise DomainError(f"unknown rule kind {self.kind!r}")
        if self.kind == "rsk" and self.d != 0:
            raise DomainError("plain rule carries no degree")
        if self.kind != "rsk" and self.d < 1:
            raise DomainError(f"rule {self.kind!r} needs a positive degree")

    @classmethod
    def rsk(cls) -> "Rule":
        return cls("rsk")

    @classmethod
    def drsk(cls, d: int) -> "Rule":
        return cls("drsk", d)

    @classmethod
    def skew(cls, d: int) -> "Rule":
        return cls("skew", d)

    def __str__(self):
        return self.kind if self.kind == "rsk" else f"{self.kind}({self.d})"


def _pad(p: Part, n: int) -> list[int]:
    return list(p) + [0] * (n - len(p))


def _validate_label(rule: Rule, p) -> Part:
    """Coerce a corner label to the kind the rule operates on."""
    if rule.kind == "skew":
        return as_staircase(p, rule.d)
    q = as_partition(p)
    if rule.kind == "drsk" and len(q) > rule.d:
        raise DomainError(f"label {q} exceeds {rule.d} parts")
    return q


def _validate_entry(rule: Rule, entry: int) -> int:
    entry = int(entry)
    if entry < 0:
        raise DomainError(f"cell entry must be nonnegative, got {entry}")
    return entry


def check_cell(rule: Rule, bl, tl, br, tr, entry: int) -> bool:
    """True iff the five pieces of cell data satisfy the rule."""
    bl, tl, br, tr = (_validate_label(rule, p) for p in (bl, tl, br, tr))
    entry = _validate_entry(rule, entry)
    if not (
        interlaces(bl, tl)
        and interlaces(bl, br)
        and interlaces(tl, tr)
        and interlaces(br, tr)
    ):
        return False
    if rule.kind == "rsk":
        n = max(len(bl), len(tl), len(br), len(tr)) + 1
        a, b, lo, hi = _pad(tl, n), _pad(br, n), _pad(bl, n), _pad(tr, n)
        if hi[0] != entry + max(a[0], b[0]):
            return False
        return all(
            hi[i] + lo[i - 1] == min(a[i - 1], b[i - 1]) + max(a[i], b[i])
            for i in range(1, n)
        )
    d = rule.d
    if rule.kind == "drsk" and not (entry == 0 or part(bl, d) == 0):
        return False
    if rule.kind == "skew" and entry != 0:
        return False
    a, b, lo, hi = _pad(tl, d), _pad(br, d), _pad(bl, d), _pad(tr, d)
    if hi[0] + lo[d - 1] != entry + min(a[d - 1], b[d - 1]) + max(a[0], b[0]):
        return False
    return all(
        hi[i] + lo[i - 1] == min(a[i - 1], b[i - 1]) + max(a[i], b[i])
        for i in range(1, d)
    )


def grow_forward_cell(rule: Rule, bl, tl, br, entry: int) -> Part:
    """The unique top-right label completing the cell under the rule."""
    bl, tl, br = (_validate_label(rule, p) for p in (bl, tl, br))
    entry = _validate_entry(rule, entry)
    if not (interlaces(bl, tl) and interlaces(bl, br)):
        raise DomainError(f"{bl} does not interlace below {tl} and {br}")
    if rule.kind == "rsk":
        n = max(len(tl), len(br)) + 1
        a, b, lo = _pad(tl, n), _pad(br, n), _pad(bl, n)
        vec = [entry + max(a[0], b[0])]
        vec += [
            min(a[i - 1], b[i - 1]) + max(a[i], b[i]) - lo[i - 1]
            for i in range(1, n)
        ]
        tr = _to_partition(vec)
    else:
        d = rule.d
        if rule.kind == "drsk" and entry > 0 and part(bl, d) > 0:
            raise DomainError(
                f"cell with entry {entry} over label {bl} of full length {d}"
            )
        if rule.kind == "skew" and entry != 0:
            raise DomainError("skew cells carry entry 0")
        a, b, lo = _pad(tl, d), _pad(br, d), _pad(bl, d)
        vec = [entry + min(a[d - 1], b[d - 1]) + max(a[0], b[0]) - lo[d - 1]]
        vec += [
            min(a[i - 1], b[i - 1]) + max(a[i], b[i]) - lo[i - 1]
            for i in range(1, d)
        ]
        tr = tuple(vec) if rule.kind == "skew" else _to_partition(vec)
    if not (interlaces(tl, tr) and interlaces(br, tr)):
        raise InvariantViolation(f"forward growth produced non-interlacing {tr}")
    return tr


def grow_backward_cell(rule: Rule, tl, br, tr) -> tuple[Part, int]:
    """The unique bottom-left label and entry completing the cell."""
    tl, br, tr = (_validate_label(rule, p) for p in (tl, br, tr))
    if not (interlaces(tl, tr) and interlaces(br, tr)):
        raise DomainError(f"{tr} does not interlace above {tl} and {br}")
    if rule.kind == "rsk":
        n = max(len(tl), len(br), len(tr)) + 1
        a, b, hi = _pad(tl, n), _pad(br, n), _pad(tr, n)
        entry = hi[0] - max(a[0], b[0])
        vec = [
            min(a[i - 1], b[i - 1]) + max(a[i], b[i]) - hi[i] for i in range(1, n)
        ]
        bl = _to_partition(vec)
    else:
        d = rule.d
        a, b, hi = _pad(tl, d), _pad(br, d), _pad(tr, d)
        vec = [
            min(a[i - 1], b[i - 1]) + max(a[i], b[i]) - hi[i] for i in range(1, d)
        ]
        wrap = min(a[d - 1], b[d - 1]) + max(a[0], b[0]) - hi[0]
        if rule.kind == "skew":
            bl, entry = tuple(vec + [wrap]), 0
        else:
            # the sign of the wrapped row decides which of bl_d, entry is zero
            bl = _to_partition(vec + [max(wrap, 0)])
            entry = max(-wrap, 0)
    if entry < 0 or not (interlaces(bl, tl) and interlaces(bl, br)):
        raise InvariantViolation(f"backward growth produced invalid ({bl}, {entry})")
    return bl, entry


def _to_partition(vec) -> Part:
    try:
        return as_partition(vec)
    except DomainError as exc:
        raise InvariantViolation(f"growth produced non-partition {vec}") from exc


@dataclass(frozen=True)
class GrowthDiagram:
    """A filled shape with a rule-consistent label at every lattice point."""

    rule: Rule
    filling: Filling
    labels: dict

    @property
    def shape(self) -> Part:
        return self.filling.shape

    def label(self, x: int, y: int) -> Part:
        try:
            return self.labels[(x, y)]
        except KeyError:
            raise DomainError(f"({x},{y}) is not a lattice point of {self.shape}")


def grow_from_filling(rule: Rule, filling: Filling) -> GrowthDiagram:
    """Extend a filling to the unique growth diagram under the rule.

    For the cyclic rule the filling must avoid the descending pattern of
    order d; the offending cell is reported otherwise.
    """
    if rule.kind == "skew":
        raise DomainError("skew diagrams are grown from path labels, not fillings")
    shape = filling.shape
    labels: dict = {(x, 0): () for x in range((shape[0] if shape else 0) + 1)}
    labels.update({(0, y): () for y in range(len(shape) + 1)})
    for row in range(1, len(shape) + 1):
        for col in range(1, shape[row - 1] + 1):
            bl = labels[(col - 1, row - 1)]
            tl = labels[(col - 1, row)]
            br = labels[(col, row - 1)]
            entry = filling.rows[row - 1][col - 1]
            if rule.kind == "drsk" and entry > 0 and part(bl, rule.d) > 0:
                raise PatternContainment(
                    f"filling contains the order-{rule.d} descending pattern; "
                    f"forward growth fails at cell ({col},{row})",
                    cell=(col, row),
                )
            labels[(col, row)] = grow_forward_cell(rule, bl, tl, br, entry)
    return GrowthDiagram(rule, filling, labels)


def grow_from_boundary(rule: Rule, shape: Part, t: OscillatingTableau) -> GrowthDiagram:
    """Rebuild the unique growth diagram with the given boundary labels."""
    if rule.kind == "skew":
        raise DomainError("skew diagrams are grown with grow_skew")
    shape = as_partition(shape)
    if boundary_type_sequence(shape) != t.w:
        raise DomainError(
            f"word {t.w!r} does not encode the boundary of {shape} "
            f"({boundary_type_sequence(shape)!r})"
        )
    if rule.kind == "drsk" and t.max_length() > rule.d:
        raise DomainError(f"boundary labels exceed {rule.d} parts")
    labels = dict(zip(boundary_points(shape), t.seq))
    entries = {}
    for row in range(len(shape), 0, -1):
        for col in range(shape[row - 1], 0, -1):
            tl = labels[(col - 1, row)]
            br = labels[(col, row - 1)]
            tr = labels[(col, row)]
            bl, entry = grow_backward_cell(rule, tl, br, tr)
            labels[(col - 1, row - 1)] = bl
            entries[(col, row)] = entry
    for x in range((shape[0] if shape else 0) + 1):
        if labels[(x, 0)] != ():
            raise InvariantViolation(f"axis label at ({x},0) is {labels[(x, 0)]}")
    for y in range(len(shape) + 1):
        if labels[(0, y)] != ():
            raise InvariantViolation(f"axis label at (0,{y}) is {labels[(0, y)]}")
    rows = tuple(
        tuple(entries[(col, row)] for col in range(1, shape[row - 1] + 1))
        for row in range(1, len(shape) + 1)
    )
    return GrowthDiagram(rule, Filling(shape, rows), labels)


def _monotone_path_points(w: str, start_x: int) -> list[tuple[int, int]]:
    """Lattice path from (start_x, 0), stepping up on + and left on -."""
    pts = [(start_x, 0)]
    x, y = start_x, 0
    for ch in w:
        if ch == PLUS:
            y += 1
        elif ch == MINUS:
            x -= 1
        else:
            raise DomainError(f"direction word must be over +-, got {w!r}")
        pts.append((x, y))
    return pts


def grow_skew(d: int, rect: Part, t: SkewOscillatingTableau) -> GrowthDiagram:
    """Fill a rectangle around the staircase labels assigned along t's path.

    The path runs from the bottom-right corner of the rectangle to its
    top-left corner, stepping per t's word.  Cells on the upper-left side of
    the path are completed by backward growth, the rest by forward growth.
    """
    rect = as_partition(rect)
    if not rect or any(wd != rect[0] for wd in rect):
        raise DomainError(f"skew growth needs a nonempty rectangle, got {rect}")
    rows, cols = len(rect), rect[0]
    if t.d != d:
        raise DomainError(f"tableau degree {t.d} != {d}")
    if t.w.count(PLUS) != rows or t.w.count(MINUS) != cols:
        raise DomainError(
            f"word {t.w!r} needs {rows} ups and {cols} lefts for a "
            f"{rows}x{cols} rectangle"
        )
    rule = Rule.skew(d)
    pts = _monotone_path_points(t.w, cols)
    labels = dict(zip(pts, t.seq))
    # x-coordinate of the vertical step crossing heights [b-1, b]
    up_x = [x for (x, y), ch in zip(pts, t.w) if ch == PLUS]
    for row in range(rows, 0, -1):  # backward region: cells left of the path
        for col in range(up_x[row - 1], 0, -1):
            tl = labels[(col - 1, row)]
            br = labels[(col, row - 1)]
            tr = labels[(col, row)]
            bl, _ = grow_backward_cell(rule, tl, br, tr)
            labels[(col - 1, row - 1)] = bl
    for row in range(1, rows + 1):  # forward region: cells right of the path
        for col in range(up_x[row - 1] + 1, cols + 1):
            bl = labels[(col - 1, row - 1)]
            tl = labels[(col - 1, row)]
            br = labels[(col, row - 1)]
            labels[(col, row)] = grow_forward_cell(rule, bl, tl, br, 0)
    if len(labels) != (rows + 1) * (cols + 1):
        raise InvariantViolation("skew growth left unlabeled lattice points")
    return GrowthDiagram(rule, zero_filling(rect), labels)


def extract_boundary(g: GrowthDiagram, path=None):
    """Labels along a path: a sub-shape boundary, or a word for skew diagrams."""
    if g.rule.kind == "skew":
        if not isinstance(path, str):
            raise DomainError("skew extraction needs a direction word")
        rows, cols = len(g.shape), g.shape[0]
        if path.count(PLUS) != rows or path.count(MINUS) != cols:
            raise DomainError(
                f"word {path!r} does not fit a {rows}x{cols} rectangle"
            )
        pts = _monotone_path_points(path, cols)
        return SkewOscillatingTableau(
            g.rule.d, path, tuple(g.labels[p] for p in pts)
        )
    if isinstance(path, str):
        raise DomainError("word paths apply only to skew diagrams")
    sub = g.shape if path is None else as_partition(path)
    if not shape_contains(g.shape, sub):
        raise DomainError(f"sub-shape {sub} escapes the diagram shape {g.shape}")
    seq = tuple(g.labels[p] for p in boundary_points(sub))
    return OscillatingTableau(boundary_type_sequence(sub), seq)


# ---------------------------------------------------------------------------
# Unit-step case analysis

RS_CASES = ("empty", "replay_up", "replay_right", "independent", "bump", "new_box")
DRS_CASES = RS_CASES + ("wrap",)
SKEW_RS_CASES = ("empty", "replay_up", "replay_right", "independent", "bump", "wrap")


def _added_row(lo: Part, hi: Part) -> int | None:
    """Row index (1-based) where hi = lo plus one unit, None when equal."""
    n = max(len(lo), len(hi))
    a, b = _pad(lo, n), _pad(hi, n)
    diffs = [i for i in range(n) if a[i] != b[i]]
    if not diffs:
        return None
    if len(diffs) == 1 and b[diffs[0]] == a[diffs[0]] + 1:
        return diffs[0] + 1
    raise InvariantViolation(f"{lo} -> {hi} is not a unit step")


def _expect(bl: Part, adds: list[int], tr: Part, tag: str) -> str:
    n = max([len(bl), len(tr)] + adds)
    vec = _pad(bl, n)
    for i in adds:
        vec[i - 1] += 1
    if vec != _pad(tr, n):
        raise InvariantViolation(f"cell does not match any unit-step case near {tag!r}")
    return tag


def classify_rs_cell(rule: Rule, bl, tl, br, tr, entry: int) -> str:
    """Name the unit-step configuration a cell realizes.

    Requires all adjacent labels to differ in size by at most one (the
    unit-step regime); raises InvariantViolation when no configuration of the
    rule matches.
    """
    bl, tl, br, tr = (_validate_label(rule, p) for p in (bl, tl, br, tr))
    entry = _validate_entry(rule, entry)
    for lo, hi, edge in ((bl, tl, "left"), (bl, br, "bottom"), (tl, tr, "top"), (br, tr, "right")):
        if abs(sum(hi) - sum(lo)) > 1:
            raise DomainError(f"size jumps by more than 1 across the {edge} edge")
    if entry > 1:
        raise DomainError(f"unit-step cells carry entry 0 or 1, got {entry}")
    up = _added_row(bl, tl)
    right = _added_row(bl, br)
    d = rule.d
    if entry == 1:
        if rule.kind == "skew":
            raise InvariantViolation("skew cells cannot carry entry 1")
        if up is not None or right is not None:
            raise InvariantViolation("entry 1 requires equal bl, tl, br")
        if rule.kind == "drsk" and part(bl, d) != 0:
            raise InvariantViolation(f"new box over {bl} with full last row")
        return _expect(bl, [1], tr, "new_box")
    if up is None and right is None:
        return _expect(bl, [], tr, "empty")
    if right is None:
        return _expect(bl, [up], tr, "replay_up")
    if up is None:
        return _expect(bl, [right], tr, "replay_right")
    if up != right:
        return _expect(bl, [up, right], tr, "independent")
    if rule.kind != "rsk" and up == d:
        return _expect(bl, [d, 1], tr, "wrap")
    return _expect(bl, [up, up + 1], tr, "bump")


# ---------------------------------------------------------------------------
# Text format

def format_diagram(g: GrowthDiagram) -> str:
    """Dump: header `kind d rows cols`, filling block, label rows top-first."""
    shape = g.shape
    rows = len(shape)
    cols = shape[0] if shape else 0
    lines = [f"{g.rule.kind} {g.rule.d} {rows} {cols}", format_filling(g.filling)]
    for y in range(rows, -1, -1):
        width = cols if y == 0 else shape[y - 1]
        lines.append(" ".join(format_partition(g.labels[(x, y)]) for x in range(width + 1)))
    return "\n".join(lines)


def parse_diagram(text: str) -> GrowthDiagram:
    """Parse a dump (or its JSON mirror) and revalidate every cell."""
    stripped = text.strip()
    if stripped.startswith("{"):
        import json

        try:
            obj = json.loads(stripped)
        except json.JSONDecodeError as exc:
            raise FormatError(f"bad JSON diagram: {exc}") from exc
        return diagram_from_json(obj)
    lines = [ln for ln in stripped.splitlines() if ln.strip()]
    if not lines:
        raise FormatError("empty diagram input")
    head = lines[0].split()
    if len(head) != 4:
        raise FormatError(f"bad diagram header {lines[0]!r}")
    kind, d_str, rows_str, cols_str = head
    try:
        rule = Rule(kind, int(d_str))
        n_rows, n_cols = int(rows_str), int(cols_str)
    except (ValueError, DomainError) as exc:
        raise FormatError(f"bad diagram header {lines[0]!r}: {exc}") from exc
    body = lines[1:]
    if len(body) < 1 + n_rows + n_rows + 1:
        raise FormatError("truncated diagram dump")
    filling = parse_filling("\n".join(body[: 1 + n_rows]))
    if len(filling.shape) != n_rows or (filling.shape and filling.shape[0] != n_cols):
        raise FormatError("diagram header disagrees with the filling shape")
    label_lines = body[1 + n_rows :]
    if len(label_lines) != n_rows + 1:
        raise FormatError(f"expected {n_rows + 1} label rows, got {len(label_lines)}")
    shape = filling.shape
    labels = {}
    for offset, y in enumerate(range(n_rows, -1, -1)):
        width = (shape[0] if shape else 0) if y == 0 else shape[y - 1]
        toks = label_lines[offset].split()
        if len(toks) != width + 1:
            raise FormatError(f"label row for height {y} needs {width + 1} entries")
        for x, tok in enumerate(toks):
            labels[(x, y)] = (
                parse_staircase(tok, rule.d)
                if rule.kind == "skew"
                else parse_partition(tok)
            )
    g = GrowthDiagram(rule, filling, labels)
    validate_diagram(g)
    return g


def validate_diagram(g: GrowthDiagram) -> None:
    """Check every cell and the axis boundary condition; raise on failure."""
    shape = g.shape
    if g.rule.kind != "skew":
        for x in range((shape[0] if shape else 0) + 1):
            if g.labels[(x, 0)] != ():
                raise DomainError(f"axis label at ({x},0) must be empty")
        for y in range(len(shape) + 1):
            if g.labels[(0, y)] != ():
                raise DomainError(f"axis label at (0,{y}) must be empty")
    for row in range(1, len(shape) + 1):
        for col in range(1, shape[row - 1] + 1):
            ok = check_cell(
                g.rule,
                g.labels[(col - 1, row - 1)],
                g.labels[(col - 1, row)],
                g.labels[(col, row - 1)],
                g.labels[(col, row)],
                g.filling.rows[row - 1][col - 1],
            )
            if not ok:
                raise DomainError(f"cell ({col},{row}) violates rule {g.rule}")


def render_diagram(g: GrowthDiagram) -> str:
    """Monospace picture: label rows interleaved with cell entries."""
    shape = g.shape
    rows = len(shape)
    cols = shape[0] if shape else 0

    def text(p):
        return ",".join(str(v) for v in p) if p else "."

    width = max(
        (len(text(lab)) for lab in g.labels.values()), default=1
    )
    out = []
    for y in range(rows, -1, -1):
        row_width = cols if y == 0 else shape[y - 1]
        out.append(
            "  ".join(text(g.labels[(x, y)]).rjust(width) for x in range(row_width + 1))
        )
        if y > 0:
            cells = []
            for col in range(1, shape[y - 1] + 1):
                v = g.filling.rows[y - 1][col - 1]
                cells.append((str(v) if v else ".").rjust(width))
            out.append(" " * ((width + 2) // 2) + "  ".join(cells))
    return "\n".join(out)


def diagram_to_json(g: GrowthDiagram) -> dict:
    shape = g.shape
    rows = len(shape)
    label_rows = []
    for y in range(rows, -1, -1):
        width = (shape[0] if shape else 0) if y == 0 else shape[y - 1]
        label_rows.append([list(g.labels[(x, y)]) for x in range(width + 1)])
    return {
        "rule": g.rule.kind,
        "d": g.rule.d,
        "shape": list(shape),
        "rows": [list(r) for r in reversed(g.filling.rows)],
        "labels": label_rows,
    }


def diagram_from_json(obj) -> GrowthDiagram:
    """Rebuild and revalidate a diagram from its JSON mirror."""
    try:
        rule = Rule(obj["rule"], int(obj["d"]))
        shape = as_partition(obj["shape"])
        filling = Filling(shape, tuple(reversed([tuple(r) for r in obj["rows"]])))
        label_rows = obj["labels"]
    except (KeyError, TypeError, DomainError) as exc:
        raise FormatError(f"bad diagram JSON: {exc}") from exc
    labels = {}
    n_rows = len(shape)
    if len(label_rows) != n_rows + 1:
        raise FormatError(f"expected {n_rows + 1} label rows, got {len(label_rows)}")
    for offset, y in enumerate(range(n_rows, -1, -1)):
        width = (shape[0] if shape else 0) if y == 0 else shape[y - 1]
        row = label_rows[offset]
        if len(row) != width + 1:
            raise FormatError(f"label row for height {y} needs {width + 1} entries")
        for x, lab in enumerate(row):
            try:
                labels[(x, y)] = (
                    as_staircase(lab, rule.d)
                    if rule.kind == "skew"
                    else as_partition(lab)
                )
            except DomainError as exc:
                raise FormatError(str(exc)) from exc
    g = GrowthDiagram(rule, filling, labels)
    validate_diagram(g)
    return g
