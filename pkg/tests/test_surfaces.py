"""Surface algebra, position canonicalization, and the position grammar."""

import random

import pytest

from decompgame import (
    EMPTY,
    SPHERE,
    Position,
    PositionParseError,
    Surface,
    connected_sum,
    format_position,
    make_position,
    make_surface,
    parse_position,
)
from helpers import all_surfaces, random_position


def test_make_surface_normalizes_the_crosscap_sphere():
    assert make_surface("n", 0) == SPHERE
    assert make_surface("n", 0).kind == "o"
    assert make_surface("o", 3) == Surface("o", 3)
    assert make_surface("n", 5).label == "n5"


def test_make_surface_rejects_bad_input():
    with pytest.raises(ValueError):
        make_surface("x", 1)
    with pytest.raises(ValueError):
        make_surface("o", -1)
    with pytest.raises(TypeError):
        make_surface("o", True)
    with pytest.raises(TypeError):
        make_surface("o", 1.0)


def test_connected_sum_examples():
    assert connected_sum(Surface("o", 1), Surface("n", 1)) == Surface("n", 3)
    assert connected_sum(Surface("o", 0), Surface("n", 4)) == Surface("n", 4)
    assert connected_sum(Surface("o", 2), Surface("o", 3)) == Surface("o", 5)
    assert connected_sum(Surface("n", 2), Surface("n", 3)) == Surface("n", 5)


def test_connected_sum_is_commutative_and_associative():
    pool = [SPHERE] + all_surfaces(10)
    for a in pool:
        for b in pool:
            assert connected_sum(a, b) == connected_sum(b, a)
    for a in pool[::3]:
        for b in pool[::3]:
            for c in pool[::3]:
                assert connected_sum(connected_sum(a, b), c) == connected_sum(
                    a, connected_sum(b, c)
                )


def test_sphere_is_the_identity():
    for s in [SPHERE] + all_surfaces(12):
        assert connected_sum(s, SPHERE) == s
        assert connected_sum(SPHERE, s) == s
    # the raw crosscap spelling of the sphere behaves identically
    assert connected_sum(Surface("n", 0), Surface("o", 7)) == Surface("o", 7)


def test_orientable_doubling_into_crosscaps():
    # a torus amounts to two crosscaps in a nonorientable sum
    for half_a in range(1, 11):
        for b in range(1, 21):
            total = connected_sum(Surface("o", half_a), Surface("n", b))
            assert total == Surface("n", 2 * half_a + b)


def test_position_canonical_order_and_sphere_dropping():
    p = make_position(
        [Surface("n", 2), SPHERE, Surface("o", 1), Surface("n", 0), Surface("n", 2)]
    )
    assert p.components == (Surface("o", 1), Surface("n", 2), Surface("n", 2))
    assert p.total_genus == 5
    assert len(p) == 3
    assert not p.is_empty
    assert make_position([]).is_empty
    assert make_position([SPHERE, SPHERE]) == EMPTY


def test_position_construction_is_order_insensitive():
    rng = random.Random(4021)
    for _ in range(300):
        p = random_position(rng)
        shuffled = list(p.components)
        rng.shuffle(shuffled)
        assert make_position(shuffled) == p


def test_position_distinct_and_without_one():
    p = parse_position("2*n1+o3")
    assert p.distinct() == (Surface("o", 3), Surface("n", 1))
    assert p.without_one(Surface("n", 1)) == (Surface("o", 3), Surface("n", 1))
    with pytest.raises(ValueError):
        p.without_one(Surface("o", 9))


def test_parse_basics():
    assert parse_position("o3+n2").components == (Surface("o", 3), Surface("n", 2))
    assert parse_position("n2+o3") == parse_position("o3 + n2")
    assert parse_position("empty") == EMPTY
    assert parse_position("   empty   ") == EMPTY
    assert parse_position("2*n1+o0") == make_position([Surface("n", 1)] * 2)
    assert parse_position(" 3 * o2 ") == make_position([Surface("o", 2)] * 3)
    assert parse_position("n0") == EMPTY
    assert parse_position("o007") == make_position([Surface("o", 7)])


@pytest.mark.parametrize(
    "text,offset",
    [
        ("", 0),  # nothing at all
        ("x3", 0),  # unknown kind letter
        ("o", 1),  # genus missing
        ("o+n1", 1),  # genus missing before the plus
        ("0*n1", 0),  # zero count
        ("3n1", 1),  # count without the star
        ("3*", 2),  # count without a surface
        ("o1+", 3),  # dangling plus
        ("o1 n2", 3),  # missing plus between terms
        ("o1++n2", 3),  # doubled plus
        ("empty+o1", 5),  # 'empty' must stand alone
        ("-1*n1", 0),  # no signs in the grammar
        ("o1, n2", 2),  # wrong separator
    ],
)
def test_parse_errors_carry_the_failing_offset(text, offset):
    with pytest.raises(PositionParseError) as exc:
        parse_position(text)
    assert exc.value.offset == offset
    assert str(offset) in str(exc.value)


def test_format_basics():
    assert format_position(EMPTY) == "empty"
    assert format_position(parse_position("n1+n1")) == "2*n1"
    assert format_position(parse_position("n2+o1+n1+n1")) == "o1+2*n1+n2"
    assert format_position(make_position([Surface("o", 1)])) == "o1"


def test_round_trip_random_positions():
    rng = random.Random(991)
    for _ in range(2000):
        p = random_position(rng)
        assert parse_position(format_position(p)) == p


def test_round_trip_messy_spellings():
    # spacing, counts and order shouldn't matter
    rng = random.Random(992)
    for _ in range(500):
        p = random_position(rng, min_components=1)
        pieces = [s.label for s in p.components]
        rng.shuffle(pieces)
        text = ""
        for i, piece in enumerate(pieces):
            sep = rng.choice(["+", " + ", "+ ", " +"]) if i else ""
            prefix = rng.choice(["", "1*", "1 * "])
            text += f"{sep}{prefix}{piece}"
        assert parse_position(text) == p
