from fractions import Fraction
from itertools import product

import pytest

from kummerlat import (
    QuatRational,
    abcd_shorthand,
    fixed_points,
    left_mult_matrix,
    lieberman_check,
    parse_abcd,
    singularity_configuration,
    stabilizer_ade_type,
    standard_group,
)
from kummerlat.torus import (
    ALPHA,
    HURWITZ,
    NonIsolatedFixedLocus,
    QUAT_I,
    QUAT_J,
    QUAT_K,
    QUAT_T,
    AffineTorusMap,
    ClosureExceedsBound,
    UnrecognizedGroup,
    _map_from_quat,
    closure,
)

ONE = QuatRational.of(1)
HALF = Fraction(1, 2)


# --- quaternion arithmetic ------------------------------------------------


def test_multiplication_table():
    i, j, k = QUAT_I, QUAT_J, QUAT_K
    minus_one = QuatRational.of(-1)
    assert i * i == minus_one
    assert j * j == minus_one
    assert k * k == minus_one
    assert i * j == k
    assert j * i == -k
    assert j * k == i
    assert k * j == -i
    assert k * i == j
    assert i * k == -j


def test_left_mult_matrix_identity():
    assert left_mult_matrix(ONE) == [
        [1, 0, 0, 0],
        [0, 1, 0, 0],
        [0, 0, 1, 0],
        [0, 0, 0, 1],
    ]


def test_left_mult_matrix_i():
    M = left_mult_matrix(QUAT_I)
    # 1 -> i, i -> -1, j -> k, k -> -j (columns)
    cols = [[M[r][c] for r in range(4)] for c in range(4)]
    assert cols[0] == [0, 1, 0, 0]
    assert cols[1] == [-1, 0, 0, 0]
    assert cols[2] == [0, 0, 0, 1]
    assert cols[3] == [0, 0, -1, 0]


def test_left_mult_multiplicative():
    def matmul(a, b):
        return [
            [sum(a[i][t] * b[t][j] for t in range(4)) for j in range(4)]
            for i in range(4)
        ]

    for q1, q2 in [(QUAT_I, QUAT_J), (QUAT_T, QUAT_T), (QUAT_K, QUAT_T)]:
        assert left_mult_matrix(q1 * q2) == matmul(
            left_mult_matrix(q1), left_mult_matrix(q2)
        )


def test_t_has_order_6():
    t3 = QUAT_T * QUAT_T * QUAT_T
    assert t3 == QuatRational.of(-1)
    assert left_mult_matrix(t3) == left_mult_matrix(QuatRational.of(-1))


# --- groups ------------------------------------------------------------------


def test_group_orders():
    assert len(standard_group("neg1")) == 2
    assert len(standard_group("i")) == 4
    assert len(standard_group("Q8")) == 8
    assert len(standard_group("Q8_T24")) == 8
    assert len(standard_group("Q8hat")) == 8
    assert len(standard_group("D12")) == 12
    assert len(standard_group("T24")) == 24
    assert len(standard_group("T24hat")) == 24


def test_T24hat_contains_Q8hat():
    small = set(standard_group("Q8hat").elements)
    big = set(standard_group("T24hat").elements)
    assert small <= big


def test_jprime_squares_to_minus_one():
    jp = _map_from_quat(HURWITZ, QUAT_J, ALPHA)
    neg = _map_from_quat(HURWITZ, QuatRational.of(-1))
    assert jp.compose(jp) == neg


def test_closure_bound_guard():
    # an element of infinite order: translation by an irrational-free shift
    shear = AffineTorusMap.of(
        [[1, 1, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]],
        (Fraction(0), Fraction(0), Fraction(0), Fraction(0)),
    )
    bad = AffineTorusMap.of(
        [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]],
        (Fraction(1, 7), 0, 0, 0),
    )
    with pytest.raises(ClosureExceedsBound):
        closure([shear, bad], bound=50)


def test_unknown_group_name():
    with pytest.raises(UnrecognizedGroup):
        standard_group("Z7")


# --- fixed points ------------------------------------------------------------


def test_fix_i_known_points():
    g = _map_from_quat(HURWITZ, QUAT_I)
    fp = fixed_points(g, HURWITZ)
    assert fp.kind == "finite"
    assert sorted(abcd_shorthand(p) for p in fp.points) == [
        "0000",
        "0110",
        "1010",
        "1100",
    ]


def test_fix_jprime_kprime_known_points():
    jp = _map_from_quat(HURWITZ, QUAT_J, ALPHA)
    kp = _map_from_quat(HURWITZ, QUAT_K, ALPHA)
    fj = {abcd_shorthand(p) for p in fixed_points(jp, HURWITZ).points}
    fk = {abcd_shorthand(p) for p in fixed_points(kp, HURWITZ).points}
    assert fj == {"0011", "0101", "1001", "1111"}
    assert fk == {"0001", "1011", "0111", "1101"}


def test_fixed_sets_disjoint_and_leftover_orbit():
    gi = _map_from_quat(HURWITZ, QUAT_I)
    jp = _map_from_quat(HURWITZ, QUAT_J, ALPHA)
    kp = _map_from_quat(HURWITZ, QUAT_K, ALPHA)
    sets = [set(fixed_points(g, HURWITZ).points) for g in (gi, jp, kp)]
    assert not (sets[0] & sets[1] or sets[0] & sets[2] or sets[1] & sets[2])
    two_torsion = {
        tuple(Fraction(a, 2) for a in combo) for combo in product((0, 1), repeat=4)
    }
    leftover = two_torsion - sets[0] - sets[1] - sets[2]
    assert {abcd_shorthand(p) for p in leftover} == {"1000", "0100", "0010", "1110"}


def test_fix_neg1_sixteen_points():
    g = _map_from_quat(HURWITZ, QuatRational.of(-1))
    fp = fixed_points(g, HURWITZ)
    assert len(fp.points) == 16


def test_fixed_count_matches_det_small_denominators():
    group = standard_group("T24hat")
    for g in group.elements:
        if g.is_identity():
            continue
        A = [
            [g.linear[i][j] - (1 if i == j else 0) for j in range(4)]
            for i in range(4)
        ]
        from kummerlat.snf import det_int

        d = det_int(A)
        fp = fixed_points(g, group.lattice)
        if d != 0:
            assert fp.kind in ("finite",)
            assert len(fp.points) == abs(d)
            denom = max(c.denominator for p in fp.points for c in p)
            if denom <= 4:
                # cross-check against explicit torsion enumeration
                count = 0
                step = Fraction(1, denom)
                vals = [i * step for i in range(denom)]
                for x in product(vals, repeat=4):
                    if g(x) == x:
                        count += 1
                assert count == len(fp.points)


def test_positive_dimensional_detected():
    g = AffineTorusMap.of(
        [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, -1, 0], [0, 0, 0, -1]]
    )
    fp = fixed_points(g, HURWITZ)
    assert fp.kind == "positive_dimensional"


def test_empty_fixed_set():
    tau = AffineTorusMap.of(
        [[-1, 0, 0, 0], [0, -1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]],
        (HALF, 0, HALF, 0),
    )
    fp = fixed_points(tau, HURWITZ)
    assert fp.kind == "empty"


# --- singularity configurations ------------------------------------------------


TABLE_ROWS = [
    ("neg1", "16A1"),
    ("i", "6A1+4A3"),
    ("Q8", "2A1+3A3+2D4"),
    ("Q8_T24", "3A1+4D4"),
    ("Q8hat", "A1+6A3"),
    ("D12", "A1+2A2+3A3+D5"),
    ("T24", "A1+4A2+D4+E6"),
    ("T24hat", "4A2+2A3+A5"),
]


@pytest.mark.parametrize("name,expected", TABLE_ROWS)
def test_singularity_configurations(name, expected):
    report = singularity_configuration(standard_group(name))
    assert report.config.render() == expected


@pytest.mark.parametrize("name,expected", TABLE_ROWS)
def test_orbit_stabilizer_identity(name, expected):
    group = standard_group(name)
    report = singularity_configuration(group)
    for orbit, order in zip(report.orbits, report.stabilizer_orders):
        assert len(orbit) * order == len(group)


def test_non_isolated_locus_raises():
    refl = AffineTorusMap.of(
        [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, -1, 0], [0, 0, 0, -1]]
    )
    from kummerlat.torus import TorusGroup, IDENTITY_MAP, LIPSCHITZ

    group = TorusGroup("refl", LIPSCHITZ, (IDENTITY_MAP, refl))
    with pytest.raises(NonIsolatedFixedLocus):
        singularity_configuration(group)


# --- stabilizer classification -------------------------------------------------


def test_stabilizer_types_basic():
    neg = tuple(tuple(-1 if i == j else 0 for j in range(4)) for i in range(4))
    ident = tuple(tuple(1 if i == j else 0 for j in range(4)) for i in range(4))
    assert stabilizer_ade_type([ident, neg]) == ("A", 1)


def test_stabilizer_types_from_groups():
    q8 = standard_group("Q8")
    mats = [g.linear for g in q8.elements]
    assert stabilizer_ade_type(mats) == ("D", 4)
    t24 = standard_group("T24")
    assert stabilizer_ade_type([g.linear for g in t24.elements]) == ("E", 6)
    z4 = standard_group("i")
    assert stabilizer_ade_type([g.linear for g in z4.elements]) == ("A", 3)
    d12 = standard_group("D12")
    assert stabilizer_ade_type([g.linear for g in d12.elements]) == ("D", 5)


def test_non_symplectic_marker():
    refl = tuple(
        tuple((-1 if i == 0 else 1) if i == j else 0 for j in range(4))
        for i in range(4)
    )
    ident = tuple(tuple(1 if i == j else 0 for j in range(4)) for i in range(4))
    from kummerlat.torus import NON_SYMPLECTIC

    assert stabilizer_ade_type([ident, refl]) == NON_SYMPLECTIC


# --- lieberman ---------------------------------------------------------------


def test_lieberman_valid():
    report = lieberman_check((HALF, 0), (0, HALF))
    assert report.fixed_point_free
    assert report.tau_fixed == "empty"
    assert report.neg_tau_fixed == "empty"
    assert report.config.render() == "8A1"


def test_lieberman_all_nonzero_choices():
    torsion = [(HALF, 0), (0, HALF), (HALF, HALF)]
    for e1 in torsion:
        for e2 in torsion:
            report = lieberman_check(e1, e2)
            assert report.fixed_point_free
            assert report.config.render() == "8A1"


def test_lieberman_zero_e1_flagged():
    report = lieberman_check((0, 0), (HALF, 0))
    assert not report.fixed_point_free
    assert report.config is None


# --- shorthand ---------------------------------------------------------------


def test_abcd_roundtrip():
    for text in ("0000", "1010", "1111"):
        assert abcd_shorthand(parse_abcd(text)) == text
    assert abcd_shorthand((Fraction(1, 3), 0, 0, 0)) is None
