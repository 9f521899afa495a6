import random

import pytest

from cylrsk.errors import DomainError, FormatError
from cylrsk.partitions import cyl_conjugate, partition_to_staircase
from cylrsk.tableaux import (
    OscillatingTableau,
    RowStrictTableau,
    SemistandardTableau,
    SkewOscillatingTableau,
    SkewRowStrictTableau,
    cylindric_cointerlacing_violation,
    cylindric_violation,
    format_oscillating,
    format_skew,
    format_ssyt,
    join_pair,
    max_constituent_width,
    mcw_sequence,
    parse_oscillating,
    parse_skew,
    parse_ssyt,
    split_pair,
    weight_minus,
    weight_plus,
)
from conftest import random_oscillating_seq, random_skew_seq, random_word
from worked_examples import GRID7_BOUNDARY, GRID7_WORD, SSYT_CHAIN

BOUNDARY = OscillatingTableau(GRID7_WORD, GRID7_BOUNDARY)


def test_oscillating_validation():
    OscillatingTableau("+-", ((), (1,), ()))
    with pytest.raises(DomainError):
        OscillatingTableau("+-", ((), (1,), (1,)))
    with pytest.raises(DomainError):
        OscillatingTableau("+", ((), (1,)))
    with pytest.raises(DomainError) as err:
        OscillatingTableau("++--", ((), (2,), (1, 1), (1,), ()))
    assert "step 2" in str(err.value)


def test_rejection_names_first_bad_step():
    # (2,) cannot step down to (3,); the failure is at step 3
    with pytest.raises(DomainError) as err:
        OscillatingTableau("++--", ((), (1,), (2,), (3,), ()))
    assert "step 3" in str(err.value)


def test_weights():
    assert weight_plus("+" * 7, SSYT_CHAIN) == (1, 3, 4, 0, 3, 1, 3)
    assert BOUNDARY.wt_plus() == (3, 4, 3, 4, 3, 3, 3)
    assert BOUNDARY.wt_minus() == (3, 3, 3, 2, 5, 6, 1)
    empty = OscillatingTableau("", ((),))
    assert empty.wt_plus() == () and empty.wt_minus() == ()


def test_weight_totals_balance():
    rng = random.Random(5)
    for _ in range(60):
        w = random_word(rng, rng.randint(0, 4), rng.randint(0, 4))
        seq = random_oscillating_seq(rng, w, d=3)
        t = OscillatingTableau(w, seq)
        assert sum(t.wt_plus()) == sum(t.wt_minus())


def test_mcw_values():
    assert mcw_sequence(SSYT_CHAIN, 3) == 4
    assert mcw_sequence(SSYT_CHAIN, 4) == 6
    assert mcw_sequence(SSYT_CHAIN, 5) == 6
    assert BOUNDARY.mcw(3) == 7
    assert mcw_sequence(((), (), ()), 2) == 0
    with pytest.raises(DomainError):
        BOUNDARY.mcw(2)  # three-row labels exceed degree 2


def test_mcw_is_least_accepted_width():
    rng = random.Random(9)
    for _ in range(80):
        w = random_word(rng, rng.randint(1, 4), rng.randint(1, 4))
        d = rng.randint(1, 3)
        seq = random_oscillating_seq(rng, w, d)
        t = OscillatingTableau(w, seq)
        m = t.mcw(d)
        assert cylindric_violation(w, seq, d, m) is None
        if m > 0:
            assert cylindric_violation(w, seq, d, m - 1) is not None
        assert t.is_cylindric(d, m) and (m == 0 or not t.is_cylindric(d, m - 1))


def test_is_standard():
    assert OscillatingTableau("++--", ((), (1,), (2,), (1,), ())).is_standard()
    chain = SemistandardTableau(SSYT_CHAIN)
    assert not chain.is_standard()
    assert OscillatingTableau("", ((),)).is_standard()


def test_cylindric_acceptance_and_rejection():
    chain = SemistandardTableau(SSYT_CHAIN)
    assert chain.is_cylindric(3, 4)  # the shape-(6,6,3) example is (3,4)-bounded
    with pytest.raises(DomainError) as err:
        chain.require_cylindric(3, 3)
    # first width-4 step: (3,1) -> (4,3,1) spans 4 - 0 at degree 3
    assert "step 3" in str(err.value)


def test_split_and_join():
    p, q = split_pair(BOUNDARY)
    assert p.shape == q.shape == (9, 9, 5)
    assert p.weight() == BOUNDARY.wt_plus()
    assert q.weight() == BOUNDARY.wt_minus()
    assert join_pair(p, q) == BOUNDARY
    with pytest.raises(DomainError):
        split_pair(OscillatingTableau("+-+-", ((), (1,), (), (1,), ())))
    pal = OscillatingTableau("++--", ((), (1,), (2, 1), (1,), ()))
    a, b = split_pair(pal)
    assert a == b


def test_split_join_random_round_trip():
    rng = random.Random(15)
    for _ in range(50):
        n, m = rng.randint(0, 4), rng.randint(0, 4)
        seq = random_oscillating_seq(rng, "+" * n + "-" * m, d=4)
        t = OscillatingTableau("+" * n + "-" * m, seq)
        p, q = split_pair(t)
        assert join_pair(p, q) == t


def test_reverse():
    rng = random.Random(17)
    assert BOUNDARY.reverse().w == GRID7_WORD
    for _ in range(40):
        w = random_word(rng, rng.randint(0, 3), rng.randint(0, 3))
        t = OscillatingTableau(w, random_oscillating_seq(rng, w, 3))
        assert t.reverse().reverse() == t
    pal = OscillatingTableau("+-", ((), (2,), ()))
    assert pal.reverse() == pal


def test_row_strict_and_skew_validators():
    RowStrictTableau(((), (1, 1), (2, 2)))
    with pytest.raises(DomainError):
        RowStrictTableau(((), (2,)))  # jump of two in one row
    SkewOscillatingTableau(1, "+-", ((0,), (1,), (0,)))
    SkewRowStrictTableau(2, "+", ((1, 0), (2, 1)))
    SkewOscillatingTableau(2, "+", ((1, 0), (3, 1)))  # interlaces: 3>=1>=1>=0
    with pytest.raises(DomainError):
        SkewRowStrictTableau(2, "+", ((1, 0), (3, 1)))  # difference 2 in row 1


def _random_unit_chain(rng, steps):
    """Ascending chain adding at most one box per step."""
    seq = [()]
    lam = ()
    for _ in range(steps):
        if rng.random() < 0.3:
            seq.append(lam)
            continue
        spots = [
            i
            for i in range(len(lam) + 1)
            if i == 0 or lam[i - 1] > (lam[i] if i < len(lam) else 0)
        ]
        i = rng.choice(spots)
        if i == len(lam):
            lam = lam + (1,)
        else:
            lam = lam[:i] + (lam[i] + 1,) + lam[i + 1 :]
        seq.append(lam)
    return tuple(seq)


def test_standard_weight_tableaux_are_both_kinds():
    rng = random.Random(19)
    for _ in range(60):
        seq = _random_unit_chain(rng, rng.randint(0, 6))
        SemistandardTableau(seq)
        RowStrictTableau(seq)


def test_conjugation_duality_for_cylindric_sequences():
    # elementwise boundary-path conjugation turns width-bounded interlacing
    # sequences into width-bounded cointerlacing ones, preserving weights
    rng = random.Random(21)
    done = 0
    while done < 60:
        d, L = rng.randint(1, 3), rng.randint(1, 4)
        w = random_word(rng, rng.randint(1, 3), rng.randint(1, 3))
        seq = random_oscillating_seq(rng, w, d)
        if cylindric_violation(w, seq, d, L) is not None:
            continue
        done += 1
        stairs = tuple(partition_to_staircase(p, d) for p in seq)
        conj = tuple(cyl_conjugate(s, d, L) for s in stairs)
        assert cylindric_cointerlacing_violation(w, conj, L, d) is None
        assert weight_plus(w, conj) == weight_plus(w, seq)
        assert weight_minus(w, conj) == weight_minus(w, seq)


def test_two_width_notions_differ():
    seq = ((0, 0), (1, 0), (2, 1))
    assert mcw_sequence(seq, 2) == 2
    assert max_constituent_width(seq, 2) == 1


def test_skew_tableaux_weights_and_reverse():
    rng = random.Random(25)
    for _ in range(40):
        d = rng.randint(1, 3)
        w = random_word(rng, rng.randint(1, 3), rng.randint(1, 3))
        t = SkewOscillatingTableau(d, w, random_skew_seq(rng, d, w))
        assert t.reverse().reverse() == t
        assert sum(t.wt_plus()) - sum(t.wt_minus()) == sum(t.outer) - sum(t.inner)


def test_text_round_trips():
    assert parse_oscillating(format_oscillating(BOUNDARY)) == BOUNDARY
    chain = SemistandardTableau(SSYT_CHAIN)
    assert parse_ssyt(format_ssyt(chain)) == chain
    skew = SkewOscillatingTableau(2, "+-", ((1, -1), (2, 0), (2, -1)))
    assert parse_skew(format_skew(skew)) == skew
    with pytest.raises(FormatError):
        parse_oscillating("+-\n[]\n[2\n[]")
    with pytest.raises(FormatError):
        parse_ssyt("[1]\n[2]")
    with pytest.raises(FormatError):
        parse_oscillating("+-\n[]\n[1]\n[1]")  # endpoint violation surfaces as format
