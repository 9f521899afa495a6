"""End-to-end bijections assembled from the growth kernel.

Each map here is a pure function with an explicit inverse, verified by the
uniqueness of forward/backward growth.  Rejections carry a witness: the cell
of a forbidden pattern occurrence, or an over-long NE-chain.
"""

from .errors import ChainBoundExceeded, DomainError, InvariantViolation
from .fillings import (
    Filling,
    MINUS,
    PLUS,
    filling_to_permutation,
    ne_chain_witness,
    permutation_to_filling,
)
from .growth import (
    Rule,
    extract_boundary,
    grow_from_boundary,
    grow_from_filling,
    grow_skew,
)
from .partitions import (
    Part,
    cyl_conjugate,
    partition_to_staircase,
    staircase_to_partition,
)
from .tableaux import (
    OscillatingTableau,
    SemistandardTableau,
    SkewOscillatingTableau,
    SkewRowStrictTableau,
    join_pair,
    split_pair,
)


def drsk(f: Filling, d: int) -> OscillatingTableau:
    """Boundary tableau of the degree-d cyclic growth of a filling.

    The filling must avoid the order-d descending pattern; the offending cell
    is reported otherwise.
    """
    return extract_boundary(grow_from_filling(Rule.drsk(d), f))


def drsk_inverse(shape: Part, t: OscillatingTableau, d: int) -> Filling:
    """Filling whose degree-d growth has boundary t on the given shape."""
    return grow_from_boundary(Rule.drsk(d), shape, t).filling


def rsk(f: Filling) -> OscillatingTableau:
    """Boundary tableau under the plain rule (no pattern restriction)."""
    return extract_boundary(grow_from_filling(Rule.rsk(), f))


def rsk_inverse(shape: Part, t: OscillatingTableau) -> Filling:
    return grow_from_boundary(Rule.rsk(), shape, t).filling


def _require_rectangle(f: Filling) -> tuple[int, int]:
    shape = f.shape
    if not shape or any(w != shape[0] for w in shape):
        raise DomainError(f"expected a nonempty rectangular shape, got {shape}")
    return len(shape), shape[0]


def cylindric_rsk(
    f: Filling, d: int, L: int
) -> tuple[SemistandardTableau, SemistandardTableau]:
    """Tableau pair of a rectangular filling under the width-bounded map.

    The filling must avoid the order-d descending pattern and contain no
    NE-chain longer than L; the rejection names a maximal chain.
    """
    _require_rectangle(f)
    ne, chain = ne_chain_witness(f)
    if ne > L:
        raise ChainBoundExceeded(
            f"NE-chain of length {ne} exceeds the bound {L}: {chain}", chain=chain
        )
    pair = split_pair(drsk(f, d))
    for t in pair:
        t.require_cylindric(d, L)
    return pair


def cylindric_rsk_inverse(
    p: SemistandardTableau, q: SemistandardTableau, d: int, L: int
) -> Filling:
    """Rectangular filling mapped to (p, q): p gives the rows, q the columns."""
    p.require_cylindric(d, L)
    q.require_cylindric(d, L)
    rows, cols = len(p.seq) - 1, len(q.seq) - 1
    if rows < 1 or cols < 1:
        raise DomainError("tableau pair must have at least one step each")
    shape = (cols,) * rows
    return drsk_inverse(shape, join_pair(p, q), d)


def cylindric_rs(
    perm, d: int, L: int
) -> tuple[SemistandardTableau, SemistandardTableau]:
    """Standard tableau pair of a doubly pattern-avoiding permutation."""
    p, q = cylindric_rsk(permutation_to_filling(perm), d, L)
    if not (p.is_standard() and q.is_standard()):
        raise InvariantViolation("permutation input produced a non-standard pair")
    return p, q


def cylindric_rs_inverse(
    p: SemistandardTableau, q: SemistandardTableau, d: int, L: int
) -> tuple[int, ...]:
    if not (p.is_standard() and q.is_standard()):
        raise DomainError("inverse of the permutation map needs standard tableaux")
    return filling_to_permutation(cylindric_rsk_inverse(p, q, d, L))


def skew_retype(t: SkewOscillatingTableau, v: str) -> SkewOscillatingTableau:
    """Transport a skew tableau to another word with the same step counts.

    Both words are read as monotone paths through one rectangle; the tableau
    labels the first path, the unique diagram around it is grown, and the
    labels along the second path are extracted.  Shape, weights, and minimum
    cylindric width are preserved, and retype back to t's word is the
    inverse.
    """
    if v.count(PLUS) != t.w.count(PLUS) or v.count(MINUS) != t.w.count(MINUS):
        raise DomainError(f"words {t.w!r} and {v!r} have different step counts")
    rows, cols = t.w.count(PLUS), t.w.count(MINUS)
    if rows == 0 or cols == 0:
        # the path is a straight line, so the word determines the tableau
        return SkewOscillatingTableau(t.d, v, t.seq)
    g = grow_skew(t.d, (cols,) * rows, t)
    return extract_boundary(g, v)


def rowstrict_retype(
    t: SkewRowStrictTableau, L: int, v: str
) -> SkewRowStrictTableau:
    """Transport a width-bounded row-strict skew tableau to another word.

    Conjugates every staircase (degree d, width bound L), retypes the
    resulting interlacing tableau at degree L, and conjugates back; shape and
    weights are preserved.
    """
    t.require_cylindric(L)
    d = t.d
    conj = SkewOscillatingTableau(
        L, t.w, tuple(cyl_conjugate(s, d, L) for s in t.seq)
    )
    moved = skew_retype(conj, v)
    return SkewRowStrictTableau(
        d, v, tuple(cyl_conjugate(s, L, d) for s in moved.seq)
    )


def bwx_map(f: Filling, d: int) -> Filling:
    """Send a pattern-avoiding filling to one with short descending chains.

    Composes the cyclic-rule map with the inverse plain-rule map over the
    same shape.  Every rectangular region of the output has descending chains
    of at most d entries; row and column sums are preserved, and the map
    commutes with reflection.
    """
    return rsk_inverse(f.shape, drsk(f, d))


def bwx_inverse(f: Filling, d: int) -> Filling:
    """Inverse of bwx_map; the input must satisfy the chain bound."""
    t = rsk(f)
    if t.max_length() > d:
        raise DomainError(
            f"some rectangular region has a descending chain longer than {d}"
        )
    return drsk_inverse(f.shape, t, d)


def conjugate_standard_pair(
    p: SemistandardTableau, d: int, L: int
) -> SemistandardTableau:
    """Elementwise boundary-path conjugation of a width-bounded standard chain."""
    lifted = []
    for lam in p.seq:
        stair = partition_to_staircase(lam, d)
        lifted.append(staircase_to_partition(cyl_conjugate(stair, d, L)))
    return SemistandardTableau(tuple(lifted))


def wilf_bijection(perm, d: int, L: int) -> tuple[int, ...]:
    """Map an avoider of the (d, L) pattern pair to one of the (L, d) pair.

    Applies the permutation-to-tableaux map, conjugates both tableaux, and
    inverts at swapped parameters.  Involutions map to involutions.
    """
    p, q = cylindric_rs(perm, d, L)
    p2 = conjugate_standard_pair(p, d, L)
    q2 = conjugate_standard_pair(q, d, L)
    return cylindric_rs_inverse(p2, q2, L, d)
