from fractions import Fraction
from itertools import combinations

import pytest

from kummerlat import (
    check_nonexistence,
    double_cover_transform,
    enriques_census,
    even_set_candidates,
    gram,
    m_value,
    parse_config,
    required_even_sets,
    three_divisible_candidates,
)
from kummerlat.divisibility import EXCLUDED, NO_OBSTRUCTION

TABLE_10 = [
    "16A1",
    "9A2",
    "6A1+4A3",
    "5A1+4A2+A5",
    "2A1+3A3+2D4",
    "3A1+4D4",
    "A1+6A3",
    "A1+2A2+3A3+D5",
    "A1+4A2+D4+E6",
    "4A2+2A3+A5",
]

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


# --- even-set candidates ------------------------------------------------------


def test_even_candidates_A1_6A3():
    cands = even_set_candidates(parse_config("A1+6A3"))
    assert len(cands) == 15  # choose 4 of the 6 A3 end-pairs
    for c in cands:
        assert len(c.support) == 8
        assert all(lab.startswith("A3") for lab in c.support)
        # both ends, never the middle curve
        assert all(lab.endswith(".1") or lab.endswith(".3") for lab in c.support)


def test_even_candidates_16A1():
    cands = even_set_candidates(parse_config("16A1"))
    sizes = sorted(len(c.support) for c in cands)
    assert sizes.count(16) == 1
    assert sizes.count(8) == 12870


def test_even_candidates_never_single_A3_curve():
    # a lone curve of an A_3 cannot appear: supports use both ends or none
    for cand in even_set_candidates(parse_config("11A1+2A3")):
        for block in ("A3.1", "A3.2"):
            hit = [lab for lab in cand.support if lab.startswith(block)]
            assert len(hit) in (0, 2)


def brute_force_even(text):
    config = parse_config(text)
    lat = gram(config)
    n = lat.rank
    out = set()
    for size in (8, 16):
        if size > n:
            continue
        for comb in combinations(range(n), size):
            if any(lat.gram[i][j] for i in comb for j in comb if i < j):
                continue
            ok = True
            for j in range(n):
                total = sum(lat.gram[j][i] for i in comb)
                if total % 2:
                    ok = False
                    break
            if ok:
                out.add(tuple(lat.basis_labels[i] for i in comb))
    return out


@pytest.mark.parametrize(
    "text", ["12A1", "2A1+2A3+D4", "A1+3A3", "4A2+A3", "8A1+D4", "3A3+A1"]
)
def test_even_candidates_match_brute_force(text):
    got = {c.support for c in even_set_candidates(parse_config(text))}
    assert got == brute_force_even(text)


def test_candidate_class_vectors_in_dual():
    config = parse_config("2A1+3A3+2D4")
    lat = gram(config)
    for cand in even_set_candidates(config):
        assert lat.in_dual(cand.class_vector)


# --- 3-divisible candidates ---------------------------------------------------


def test_three_divisible_T24hat_config():
    cands = three_divisible_candidates(parse_config("4A2+2A3+A5"))
    supports = {frozenset(p for pair in c.support for p in pair) for c in cands}
    assert len(supports) == 1  # unique support: 4 free A2 + both A2 in the A5
    (supp,) = supports
    assert not any(lab.startswith("A3") for lab in supp)
    assert len(cands) == 32  # orientations: 2^4 free choices x 2 coupled A5 choices
    for c in cands:
        a5 = sorted(pair for pair in c.support if pair[0].startswith("A5"))
        assert len(a5) == 2


def test_three_divisible_9A2():
    cands = three_divisible_candidates(parse_config("9A2"))
    # 6 of 9 supports with free orientations, plus all-9 supports
    assert len(cands) == 84 * 64 + 512


def test_three_divisible_A1_6A3_empty():
    assert three_divisible_candidates(parse_config("A1+6A3")) == []


def test_three_divisible_no_D5_support():
    # Z4 components carry no 3-torsion, so D5 curves never enter a support
    for cand in three_divisible_candidates(parse_config("A1+4A2+2D5")):
        raise AssertionError("C8 admits no 3-divisible candidate")


def test_three_divisible_class_vectors_in_dual():
    config = parse_config("4A2+2A3+A5")
    lat = gram(config)
    for cand in three_divisible_candidates(config):
        assert lat.in_dual(cand.class_vector)


# --- required even sets ------------------------------------------------------


def test_required_even_sets_thresholds():
    assert required_even_sets(parse_config("11A1")) == 0
    assert required_even_sets(parse_config("12A1")) == 1
    assert required_even_sets(parse_config("13A1")) == 2
    assert required_even_sets(parse_config("14A1")) == 3


# --- double cover transform ----------------------------------------------------


def test_cover_16A1_full_even_set():
    config = parse_config("16A1")
    full = [c for c in even_set_candidates(config) if len(c.support) == 16][0]
    cover = double_cover_transform(config, full)
    assert cover.rank == 0


def test_cover_16A1_half():
    config = parse_config("16A1")
    half = [c for c in even_set_candidates(config) if len(c.support) == 8][0]
    cover = double_cover_transform(config, half)
    assert cover.render() == "16A1"


def test_cover_A1_6A3():
    config = parse_config("A1+6A3")
    cand = even_set_candidates(config)[0]
    cover = double_cover_transform(config, cand)
    assert cover.render() == "6A1+4A3"
    assert cover.rank == 18


def test_cover_C3():
    config = parse_config("5A1+A3+A7+D4")
    labels = gram(config).basis_labels
    support = [
        lab
        for lab in labels
        if lab in ("A1.1.1", "A1.2.1", "A1.3.1", "A1.4.1", "A3.1.1", "A3.1.3", "D4.1.1", "D4.1.3")
    ]
    cover = double_cover_transform(config, support)
    assert cover.render() == "3A1+A3+2A7"
    assert cover.rank == 20


@pytest.mark.parametrize(
    "text,support_size",
    [("5A1+A3+A7+D4", 8), ("16A1", 8), ("A1+6A3", 8)],
)
def test_cover_euler_bookkeeping(text, support_size):
    config = parse_config(text)
    cand = next(c for c in even_set_candidates(config) if len(c.support) == support_size)
    cover = double_cover_transform(config, cand)
    assert m_value(cover) == 2 * m_value(config) - 3 * support_size


# --- the checker ------------------------------------------------------------


@pytest.mark.parametrize("text", TABLE_10)
def test_table_configs_unobstructed(text):
    report = check_nonexistence(parse_config(text))
    assert report.verdict == NO_OBSTRUCTION


@pytest.mark.parametrize("text", EXTRA_8)
def test_extra_configs_excluded(text):
    report = check_nonexistence(parse_config(text))
    assert report.verdict == EXCLUDED
    assert len(report.steps) >= 2  # length summary plus re-checkable evidence


def test_C1_deficit_on_13_curves():
    report = check_nonexistence(parse_config("11A1+2A3"))
    deficits = [s for s in report.steps if s.kind == "IndependenceDeficit"]
    assert deficits
    assert any(
        int(s.get("required")) == 2 and int(s.get("available")) == 1 for s in deficits
    )


def test_C3_report_contains_rank20_cover_with_2A7():
    report = check_nonexistence(parse_config("5A1+A3+A7+D4"))
    covers = [s for s in report.steps if s.kind == "CoverRankExceeds"]
    assert covers
    assert any(
        "2A7" in s.get("cover_config") and int(s.get("cover_rank")) == 20
        for s in covers
    )


def test_C8_excluded_by_missing_3_divisible():
    report = check_nonexistence(parse_config("A1+4A2+2D5"))
    assert report.verdict == EXCLUDED
    global_steps = [
        s
        for s in report.steps
        if s.kind == "IndependenceDeficit" and s.get("prime") == "3"
    ]
    assert global_steps
    assert int(global_steps[0].get("available")) == 0


def test_report_json_shape():
    report = check_nonexistence(parse_config("16A1"))
    d = report.to_json_dict()
    assert d["config"] == "16A1"
    assert d["verdict"] == NO_OBSTRUCTION
    assert all(isinstance(v, str) for step in d["steps"] for v in step.values())


# --- Enriques --------------------------------------------------------------


def test_enriques_census():
    got = [c.render() for c in enriques_census()]
    assert got == ["8A1", "3A1+2A3"]
