from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from kummerlat import (
    ADEConfig,
    InvalidComponent,
    ParseError,
    closed_form_disc,
    discriminant_group,
    dynkin,
    enumerate_configs,
    gram,
    m_value,
    max_disjoint_curves,
    parse_config,
    rank,
    render_config,
)

TABLE_10 = {
    "16A1": 16,
    "9A2": 18,
    "6A1+4A3": 18,
    "5A1+4A2+A5": 18,
    "2A1+3A3+2D4": 19,
    "3A1+4D4": 19,
    "A1+6A3": 19,
    "A1+2A2+3A3+D5": 19,
    "A1+4A2+D4+E6": 19,
    "4A2+2A3+A5": 19,
}

EXTRA_8 = [
    "11A1+2A3",
    "7A1+A3+2D4",
    "5A1+A3+A7+D4",
    "6A1+2A2+A3+D5",
    "5A1+A2+D4+D8",
    "5A1+A3+A4+D7",
    "2A1+2A2+2D4+D5",
    "A1+4A2+2D5",
]


# --- parsing -----------------------------------------------------------------


def test_parse_simple():
    c = parse_config("16A1")
    assert c.count("A", 1) == 16
    assert c.render() == "16A1"


def test_parse_mixed():
    c = parse_config("4A2+2A3+A5")
    assert c.count("A", 2) == 4
    assert c.count("A", 3) == 2
    assert c.count("A", 5) == 1


def test_parse_whitespace_and_roundtrip():
    c = parse_config("  5A1 + 4 A2+ A5 ")
    assert render_config(c) == "5A1+4A2+A5"
    assert parse_config(render_config(c)) == c


def test_parse_invalid_component():
    with pytest.raises(InvalidComponent):
        parse_config("2D3")
    with pytest.raises(InvalidComponent):
        parse_config("E5")
    with pytest.raises(InvalidComponent):
        parse_config("A0")


def test_parse_error_has_position():
    with pytest.raises(ParseError) as err:
        parse_config("2A1+؟+A3")
    assert err.value.position == 4


# --- m values and ranks ---------------------------------------------------


def test_m_16A1():
    assert m_value(parse_config("16A1")) == 24


def test_m_single_A1():
    assert m_value(parse_config("A1")) == Fraction(3, 2)


def test_m_C5():
    assert m_value(parse_config("5A1+A2+D4+D8")) == 24


@pytest.mark.parametrize("text,rho", sorted(TABLE_10.items()))
def test_table_m_and_rank(text, rho):
    c = parse_config(text)
    assert m_value(c) == 24
    assert rank(c) == rho


@pytest.mark.parametrize("text", EXTRA_8)
def test_extra_configs_m24(text):
    c = parse_config(text)
    assert m_value(c) == 24
    assert rank(c) <= 19


def test_rank_examples():
    assert rank(parse_config("16A1")) == 16
    assert rank(parse_config("A1+6A3")) == 19
    assert ADEConfig().rank == 0


small_configs = st.builds(
    ADEConfig.of,
    a=st.dictionaries(st.integers(1, 6), st.integers(1, 3), max_size=3),
    d=st.dictionaries(st.integers(4, 7), st.integers(1, 2), max_size=2),
    e=st.dictionaries(st.sampled_from([6, 7, 8]), st.integers(1, 1), max_size=1),
)


@settings(max_examples=80, deadline=None)
@given(small_configs, small_configs)
def test_m_additive(c1, c2):
    assert m_value(c1 + c2) == m_value(c1) + m_value(c2)


@settings(max_examples=40, deadline=None)
@given(small_configs)
def test_m_doubling(c):
    assert m_value(2 * c) == 2 * m_value(c)
    assert (2 * c).rank == 2 * c.rank


# --- Gram / Dynkin -------------------------------------------------------------


def test_gram_A2():
    assert gram(parse_config("A2")).gram == ((-2, 1), (1, -2))


def test_gram_D4_center():
    g = gram(parse_config("D4")).gram
    degrees = [sum(1 for x in row if x == 1) for row in g]
    assert sorted(degrees) == [1, 1, 1, 3]


def test_gram_E8_unimodular():
    assert gram(parse_config("E8")).det == 1


def test_dynkin_components():
    graph = dynkin(parse_config("2A1+A3"))
    comps = graph.component_nodes()
    assert [(l, n) for l, n, _ in comps] == [("A", 1), ("A", 1), ("A", 3)]
    assert len(graph.nodes) == 5
    assert len(graph.edges) == 2


# --- closed-form discriminants -------------------------------------------------


def test_closed_form_A3():
    assert closed_form_disc(parse_config("A3")) == (4,)


def test_closed_form_T24hat_config():
    assert closed_form_disc(parse_config("4A2+2A3+A5")) == (3, 3, 6, 12, 12)


def test_closed_form_E8():
    assert closed_form_disc(parse_config("E8")) == ()


ALL_COMPONENTS = (
    [f"A{n}" for n in range(1, 9)] + [f"D{n}" for n in range(4, 9)] + ["E6", "E7", "E8"]
)


@pytest.mark.parametrize("text", ALL_COMPONENTS)
def test_closed_form_matches_snf_components(text):
    c = parse_config(text)
    assert closed_form_disc(c) == discriminant_group(gram(c)).invariant_factors


@pytest.mark.parametrize("text", sorted(TABLE_10) + EXTRA_8)
def test_closed_form_matches_snf_census(text):
    c = parse_config(text)
    assert closed_form_disc(c) == discriminant_group(gram(c)).invariant_factors


# --- max disjoint curves ---------------------------------------------------


def test_max_disjoint_examples():
    assert max_disjoint_curves(parse_config("D8"))[0] == 5
    assert max_disjoint_curves(parse_config("D7"))[0] == 4
    assert max_disjoint_curves(parse_config("A3"))[0] == 2


def test_max_disjoint_witness_is_independent():
    c = parse_config("2A1+3A3+2D4")
    size, witness = max_disjoint_curves(c)
    assert len(witness) == size
    lat = gram(c)
    idx = {lab: i for i, lab in enumerate(lat.basis_labels)}
    for a in witness:
        for b in witness:
            if a != b:
                assert lat.gram[idx[a]][idx[b]] == 0


def brute_force_mis(text):
    graph = dynkin(parse_config(text))
    n = len(graph.nodes)
    best = 0
    for s in range(1 << n):
        if any(s >> i & 1 and s >> j & 1 for i, j in graph.edges):
            continue
        best = max(best, bin(s).count("1"))
    return best


@pytest.mark.parametrize("text", ["A7", "D8", "E8", "A3+D4", "2A2+D5"])
def test_max_disjoint_brute_force(text):
    assert max_disjoint_curves(parse_config(text))[0] == brute_force_mis(text)


# --- census ---------------------------------------------------------------


def test_census_minimal_m():
    assert [c.render() for c in enumerate_configs(Fraction(3, 2), 19)] == ["A1"]


def test_census_12_9():
    names = [c.render() for c in enumerate_configs(12, 9)]
    assert "8A1" in names
    assert "3A1+2A3" in names


def test_census_24_19_is_the_18():
    got = sorted(c.render() for c in enumerate_configs(24, 19))
    expected = sorted(list(TABLE_10) + EXTRA_8)
    assert got == expected


def test_census_deterministic():
    first = [c.render() for c in enumerate_configs(24, 19)]
    second = [c.render() for c in enumerate_configs(24, 19)]
    assert first == second
    ranks = [c.rank for c in enumerate_configs(24, 19)]
    assert ranks == sorted(ranks)


def test_census_rejects_nonpositive_m():
    with pytest.raises(ValueError):
        enumerate_configs(0, 19)


# --- JSON render -----------------------------------------------------------


def test_config_json_dict():
    d = parse_config("5A1+4A2+A5").to_json_dict()
    assert d["A"] == {"1": 5, "2": 4, "5": 1}
    assert d["m"] == "24/1"
    assert d["rank"] == 18
