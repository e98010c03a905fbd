import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from corpus import CORPUS, TABLE_8_1, constant_system, table_system, xy
from projatlas.errors import InvalidSystemError, MappedToInfinityError, ParseError
from projatlas.poly_core import Poly2
from projatlas.projective import (
    P1_QUADRANT_MAP,
    P2_QUADRANT_MAP,
    ChartId,
    Direction,
    PlaneSystem,
    Which,
    classify_projective_type,
    disc_embed,
    disc_of_sphere,
    from_homogeneous,
    infinite_direction_chart,
    p1,
    p2,
    parse_system,
    poincare_map_point,
    predicted_reduced_degree,
    pushforward,
    quadrant,
    reduce_system,
    sphere_point,
    to_homogeneous,
    wn_polynomial,
)

nonzero = st.fractions(min_value=-50, max_value=50, max_denominator=30).filter(lambda q: q != 0)
off_axes = st.tuples(nonzero, nonzero)
floats = st.floats(min_value=-1e3, max_value=1e3, allow_nan=False)


# charts ----------------------------------------------------------------------


def test_chart_cycle():
    assert ChartId.XY.next is ChartId.XI_THETA
    assert ChartId.XI_THETA.next is ChartId.ETA_ZETA
    assert ChartId.ETA_ZETA.next is ChartId.XY
    assert all(c.next.previous is c for c in ChartId)
    assert ChartId.from_var_names(("eta", "zeta")) is ChartId.ETA_ZETA
    with pytest.raises(KeyError):
        ChartId.from_var_names(("u", "v"))


def test_first_map_example():
    assert poincare_map_point((2, 3), ChartId.XY, ChartId.XI_THETA) == (Fraction(3, 2), Fraction(1, 2))
    assert p2(p1((2, 3))) == (2, 3)


def test_map_to_infinity_names_the_line():
    with pytest.raises(MappedToInfinityError) as info:
        poincare_map_point((0, 1), ChartId.XY, ChartId.XI_THETA)
    assert info.value.line == "x=0"
    with pytest.raises(MappedToInfinityError) as info:
        poincare_map_point((1, 0), ChartId.XI_THETA, ChartId.XY)
    assert info.value.line == "theta=0"


@given(off_axes)
def test_group_law(p):
    assert p1(p1(p)) == p2(p)
    assert p2(p2(p)) == p1(p)
    assert p1(p2(p)) == p2(p1(p)) == p
    assert p1(p1(p1(p))) == p


@given(off_axes, st.sampled_from(list(ChartId)), st.sampled_from(list(ChartId)))
def test_map_agrees_with_homogeneous_coordinates(p, src, dst):
    q = poincare_map_point(p, src, dst)
    assert from_homogeneous(to_homogeneous(p, src), dst) == q


@pytest.mark.parametrize("q", [1, 2, 3, 4])
def test_quadrant_correspondence(q):
    signs = {1: (1, 1), 2: (-1, 1), 3: (-1, -1), 4: (1, -1)}[q]
    p = (Fraction(signs[0] * 3), Fraction(signs[1] * 5))
    assert quadrant(p1(p)) == P1_QUADRANT_MAP[q]
    assert quadrant(p2(p)) == P2_QUADRANT_MAP[q]
    assert {v: k for k, v in P1_QUADRANT_MAP.items()} == P2_QUADRANT_MAP


def test_quadrant_two_goes_to_three():
    assert quadrant(poincare_map_point((-1, 2), ChartId.XY, ChartId.XI_THETA)) == 3
    assert quadrant((0, 1)) is None


def test_disc_embed_examples():
    assert disc_embed((0, 0)) == (0.0, 0.0)
    assert disc_embed((1, 0)) == pytest.approx((1 / math.sqrt(2), 0))
    far = disc_embed((1e12, 1e12))
    assert far == pytest.approx((1 / math.sqrt(2), 1 / math.sqrt(2)))


@given(floats, floats)
def test_disc_embed_inside_and_equivariant(u, v):
    d = disc_embed((u, v))
    assert math.hypot(*d) < 1
    for su, sv, swap in [(-1, 1, False), (1, -1, False), (1, 1, True), (-1, -1, True)]:
        img = (sv * v, su * u) if swap else (su * u, sv * v)
        e = disc_embed(img)
        want = (sv * d[1], su * d[0]) if swap else (su * d[0], sv * d[1])
        assert e == pytest.approx(want, abs=1e-15)


@given(off_axes, st.sampled_from(list(ChartId)))
def test_sphere_point_disc_matches_embedding(p, chart):
    assert disc_of_sphere(sphere_point(p, chart), chart) == pytest.approx(disc_embed(p), abs=1e-12)


def test_infinite_direction_chart():
    assert infinite_direction_chart(Direction("y", 2)) == (ChartId.XI_THETA, (2, 0))
    assert infinite_direction_chart(Direction("x", 0)) == (ChartId.ETA_ZETA, (0, 0))
    assert infinite_direction_chart(Direction("y", -1)) == (ChartId.XI_THETA, (-1, 0))


@pytest.mark.parametrize(
    "direction, text",
    [(Direction("y", 0), "y=0"), (Direction("y", 1), "y=x"), (Direction("y", -1), "y=-x"), (Direction("y", 2), "y=2*x"), (Direction("x", 0), "x=0")],
)
def test_direction_describe(direction, text):
    assert direction.describe() == text


# systems ---------------------------------------------------------------------


def test_validation_rejects_common_factor_and_zero():
    with pytest.raises(InvalidSystemError, match="common factor"):
        PlaneSystem(xy("x*(x+y)"), xy("x*y"))
    with pytest.raises(InvalidSystemError, match="both identically zero"):
        PlaneSystem(Poly2(), Poly2())


def test_parse_system_chart_and_order():
    s = parse_system("theta' = -1 + xi*theta^2; xi' = theta + xi^2*theta")
    assert s.chart is ChartId.XI_THETA
    assert s == CORPUS["16.1"].first_system()
    assert parse_system("x' = -y + x^3\ny' = x + x^2*y") == CORPUS["16.1"].system()


@pytest.mark.parametrize(
    "text, position",
    [
        ("x' = x +* y; y' = x", 8),
        ("x' = x; z' = y", 8),
        ("x' = x", 6),
        ("x = x; y' = y", 0),
        ("x' = x; x' = y", 8),
    ],
)
def test_parse_system_errors(text, position):
    with pytest.raises(ParseError) as info:
        parse_system(text)
    assert info.value.position == position


# projective type ---------------------------------------------------------------


def test_wn_for_quadratic_example():
    assert wn_polynomial(CORPUS["16.4"].system()) == xy("2x^2*y + y^3")


@pytest.mark.parametrize(
    "key, kind",
    [("16.1", "P-singular"), ("16.4", "P-nonsingular"), ("12.8", "P-singular"), ("7.11", "P-nonsingular"), ("7.11s", "P-singular")],
)
def test_projective_type(key, kind):
    report = classify_projective_type(CORPUS[key].system())
    assert report.kind == kind
    assert report.equator_is_trajectory == (kind == "P-nonsingular")


def test_constant_system_is_nonsingular():
    assert classify_projective_type(constant_system(1, 2)).kind == "P-nonsingular"


@pytest.mark.parametrize("key", sorted(CORPUS))
def test_transverse_divides_theta_iff_nonsingular(key):
    sys = CORPUS[key].system()
    red = reduce_system(sys, Which.FIRST).system
    assert red.Y.divisible_by_second() == (not classify_projective_type(sys).singular)


# reductions --------------------------------------------------------------------


@pytest.mark.parametrize("key", sorted(CORPUS))
@pytest.mark.parametrize("which", list(Which))
def test_reduction_matches_reference(key, which):
    ref = CORPUS[key]
    red = reduce_system(ref.system(), which)
    want = ref.first_system() if which is Which.FIRST else ref.second_system()
    m = (ref.first if which is Which.FIRST else ref.second)[2]
    assert (red.system.X, red.system.Y, red.m) == (want.X, want.Y, m)
    assert red.system.chart is want.chart


def test_reduce_constant_system_has_negative_exponent():
    red = reduce_system(constant_system(1, 2), "first")
    assert red.system.X == xy("2 - xi", ("xi", "theta"))
    assert red.system.Y == xy("-theta", ("xi", "theta"))
    assert red.m == -1


def test_reduce_accepts_string_and_rejects_unknown():
    assert reduce_system(CORPUS["16.1"].system(), "second").which is Which.SECOND
    with pytest.raises(ValueError):
        reduce_system(CORPUS["16.1"].system(), "third")


def test_orientation_factor():
    red = reduce_system(CORPUS["16.1"].system(), Which.FIRST)
    assert red.orientation_factor((0.3, -0.1)) == -1
    assert red.orientation_factor((0.3, 0.1)) == 1
    even = reduce_system(CORPUS["16.10"].system(), Which.FIRST)
    assert even.orientation_factor((0.3, -0.1)) == 1


@pytest.mark.parametrize("key", sorted(CORPUS))
def test_reducing_reduced_system_returns_to_source_chart(key):
    # the second reduction of the first reduction lives in the source chart
    sys = CORPUS[key].system()
    back = reduce_system(reduce_system(sys, Which.FIRST).system, Which.FIRST)
    back = reduce_system(back.system, Which.FIRST).system
    assert back.chart is ChartId.XY
    # same direction field up to a scalar polynomial factor
    cross = back.X * sys.Y - back.Y * sys.X
    assert cross.is_zero()


@pytest.mark.parametrize(
    "sys, first",
    [(CORPUS["16.4"].system(), 3), (CORPUS["12.1"].system(), 2), (table_system("8.1"), 1)],
)
def test_predicted_degree_examples(sys, first):
    assert predicted_reduced_degree(sys).deg_first == first


@pytest.mark.parametrize("key", sorted(TABLE_8_1))
def test_predicted_degree_matches_table_systems(key):
    sys = table_system(key)
    pred = predicted_reduced_degree(sys)
    assert (pred.deg_first, pred.deg_second) == (
        reduce_system(sys, Which.FIRST).system.n,
        reduce_system(sys, Which.SECOND).system.n,
    )


@settings(max_examples=200, deadline=None)
@given(off_axes, st.sampled_from(sorted(CORPUS)), st.sampled_from(list(Which)))
def test_pullback_parallelism(p, key, which):
    sys = CORPUS[key].system()
    red = reduce_system(sys, which)
    q = poincare_map_point(p, ChartId.XY, red.system.chart)
    pushed = pushforward(sys.field_at(*p), p, ChartId.XY, red.system.chart)
    field = red.system.field_at(*q)
    assert pushed[0] * field[1] - pushed[1] * field[0] == 0
    # s^m d tau = dt, so d/dt = s^(-m) d/d tau
    s = q[red.transverse_index]
    factor = s ** (-red.m)
    assert pushed == (field[0] * factor, field[1] * factor)
