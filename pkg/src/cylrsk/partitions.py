"""Integer partitions and fixed-length staircases.

A partition is a plain tuple of positive ints in weakly decreasing order with
no trailing zeros (the canonical form).  A staircase of degree d is a tuple of
exactly d weakly decreasing ints; zeros and negative values are significant
there, so the two kinds are never silently interchanged.  Parts beyond the
stored length of a partition read as 0.
"""

from .errors import DomainError, FormatError

Part = tuple[int, ...]

EMPTY: Part = ()


def as_partition(parts) -> Part:
    """Canonicalize an iterable of ints into a partition tuple.

    Trailing zeros are dropped; any other zero, negative, or increasing part
    is rejected.
    """
    p = tuple(int(x) for x in parts)
    k = len(p)
    while k and p[k - 1] == 0:
        k -= 1
    p = p[:k]
    for i, x in enumerate(p):
        if x <= 0:
            raise DomainError(f"partition parts must be positive, got {x} in {p}")
        if i and p[i - 1] < x:
            raise DomainError(f"partition parts must be weakly decreasing, got {p}")
    return p


def as_staircase(parts, d: int) -> Part:
    """Validate an iterable of ints as a staircase of degree d."""
    if d < 1:
        raise DomainError(f"staircase degree must be positive, got {d}")
    s = tuple(int(x) for x in parts)
    if len(s) != d:
        raise DomainError(f"degree-{d} staircase needs exactly {d} parts, got {s}")
    for i in range(1, d):
        if s[i - 1] < s[i]:
            raise DomainError(f"staircase parts must be weakly decreasing, got {s}")
    return s


def partition_to_staircase(p: Part, d: int) -> Part:
    """Zero-pad a partition of length <= d to a degree-d staircase."""
    if len(p) > d:
        raise DomainError(f"partition {p} has more than {d} parts")
    return p + (0,) * (d - len(p))


def staircase_to_partition(s: Part) -> Part:
    """Strip trailing zeros from a nonnegative staircase."""
    if s and s[-1] < 0:
        raise DomainError(f"staircase {s} has negative parts, not a partition")
    return as_partition(s)


def size(p: Part) -> int:
    """Sum of the parts."""
    return sum(p)


def part(p: Part, i: int) -> int:
    """The i-th part (1-based), extending by zeros past the stored length."""
    if i < 1:
        raise ValueError(f"part index must be >= 1, got {i}")
    return p[i - 1] if i <= len(p) else 0


def contained_in(a: Part, b: Part) -> bool:
    """Componentwise a_i <= b_i, with zero extension."""
    n = max(len(a), len(b))
    return all(part(a, i) <= part(b, i) for i in range(1, n + 1))


def interlaces(a: Part, b: Part) -> bool:
    """b_1 >= a_1 >= b_2 >= a_2 >= ... (a below, b above).

    The shorter operand is zero-extended, which is exact for canonical
    partitions and a no-op for equal-degree staircases.
    """
    n = max(len(a), len(b))
    for i in range(1, n + 1):
        if part(b, i) < part(a, i):
            return False
        if i < n and part(a, i) < part(b, i + 1):
            return False
    return True


def cointerlaces(a: Part, b: Part) -> bool:
    """Every componentwise difference b_i - a_i is 0 or 1."""
    n = max(len(a), len(b))
    return all(part(b, i) - part(a, i) in (0, 1) for i in range(1, n + 1))


def _check_degree(a: Part, b: Part, d: int) -> None:
    if d < 1:
        raise DomainError(f"degree must be positive, got {d}")
    if len(a) > d or len(b) > d:
        raise DomainError(f"operands {a}, {b} exceed degree {d}")


def is_dl_staircase(a: Part, d: int, L: int) -> bool:
    """Width bound first-minus-last <= L at degree d.

    Accepts canonical partitions of length <= d (zero-extended) as well as
    degree-d staircases.
    """
    if d < 1:
        raise DomainError(f"degree must be positive, got {d}")
    if len(a) > d:
        raise DomainError(f"operand {a} exceeds degree {d}")
    return part(a, 1) - part(a, d) <= L


def dl_interlaces(a: Part, b: Part, d: int, L: int) -> bool:
    """Interlacing with the cyclic width bound b_1 - a_d <= L."""
    _check_degree(a, b, d)
    return interlaces(a, b) and part(b, 1) - part(a, d) <= L


def dl_cointerlaces(a: Part, b: Part, d: int, L: int) -> bool:
    """Cointerlacing between two width-bounded degree-d staircases."""
    _check_degree(a, b, d)
    return (
        is_dl_staircase(a, d, L)
        and is_dl_staircase(b, d, L)
        and cointerlaces(a, b)
    )


def mcw_pair(a: Part, b: Part, d: int) -> int:
    """Least width L making the pair interlace with the degree-d cyclic bound.

    Equals b_1 - a_d when a interlaces b, and a_1 - b_d when b interlaces a;
    the two formulas agree when both directions hold (a == b).
    """
    _check_degree(a, b, d)
    if interlaces(a, b):
        return part(b, 1) - part(a, d)
    if interlaces(b, a):
        return part(a, 1) - part(b, d)
    raise DomainError(f"{a} and {b} do not interlace in either direction")


def conjugate(p: Part) -> Part:
    """Transpose of the Young diagram: column lengths of p."""
    if not p:
        return ()
    return tuple(sum(1 for v in p if v >= j) for j in range(1, p[0] + 1))


def cyl_conjugate(s: Part, d: int, L: int) -> Part:
    """Reflect the periodic boundary path of a width-bounded staircase.

    The input must be a degree-d staircase with s_1 - s_d <= L.  Extending it
    bi-infinitely by a_{x+d} = a_x - L gives a weakly decreasing sequence; the
    result is the degree-L staircase whose j-th part is max{x : a_x >= j}.
    Geometrically this reflects the staircase's lattice-path boundary across
    the diagonal, so applying the map again at swapped parameters (L, d)
    recovers the input, and sizes are preserved.
    """
    s = as_staircase(s, d)
    if L < 1:
        raise DomainError(f"width parameter must be positive, got {L}")
    if s[0] - s[d - 1] > L:
        raise DomainError(f"{s} is not a ({d},{L})-bounded staircase")
    # max over residues r of the largest index x = qd + (r+1) with a_x >= j,
    # where q = floor((s_r - j) / L); exact for negative parts too.
    return tuple(
        max(d * ((s[r] - j) // L) + r + 1 for r in range(d))
        for j in range(1, L + 1)
    )


def format_partition(p: Part) -> str:
    """Bracketed comma-separated text form, `[]` for the empty partition."""
    return "[" + ",".join(str(x) for x in p) + "]"


def _parse_int_list(text: str) -> tuple[int, ...]:
    t = text.strip()
    if not (t.startswith("[") and t.endswith("]")):
        raise FormatError(f"expected bracketed list, got {text!r}")
    inner = t[1:-1].strip()
    if not inner:
        return ()
    try:
        return tuple(int(tok.strip()) for tok in inner.split(","))
    except ValueError as exc:
        raise FormatError(f"bad integer list {text!r}") from exc


def parse_partition(text: str) -> Part:
    """Parse the bracketed text form into a canonical partition."""
    try:
        return as_partition(_parse_int_list(text))
    except DomainError as exc:
        raise FormatError(str(exc)) from exc


def parse_staircase(text: str, d: int) -> Part:
    """Parse the bracketed text form into a degree-d staircase."""
    try:
        return as_staircase(_parse_int_list(text), d)
    except DomainError as exc:
        raise FormatError(str(exc)) from exc
