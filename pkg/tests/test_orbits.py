import pytest

from oracles import centralizer_dim_bruteforce, check_in_algebra, jordan_type_of, nilpotent_with_form
from weylorbits.conjclass import delta
from weylorbits.labels import ClassLabel
from weylorbits.orbits import (
    JordanType, algebra_dim, centralizer_dim, closure_leq, iota_embed, orbit_record, parse_jordan,
    plain_union, springer_dim, valid_jordan_types,
)
from weylorbits.rootsys import build_root_system

SMALL = [("A", r) for r in range(1, 8)] + [("B", r) for r in range(1, 4)] + \
        [("C", r) for r in range(1, 5)] + [("D", r) for r in range(2, 5)]


def names(t, r):
    return [str(j) for j in valid_jordan_types(t, r)]


def test_examples():
    assert names("B", 2) == ["5", "311", "221", "11111"]
    assert names("C", 2) == ["4", "22", "211", "1111"]
    d4 = names("D", 4)
    assert {"44_I", "44_II", "2222_I", "2222_II"} <= set(d4)
    assert len(d4) == 12  # 10 partitions, two of them very even


def test_invalid_jordan_types():
    with pytest.raises(ValueError):
        JordanType((2, 1, 1, 1), "B", 5)  # even part with odd multiplicity
    with pytest.raises(ValueError):
        JordanType((3, 1), "C", 4)
    with pytest.raises(ValueError):
        JordanType((4, 4), "D", 8)  # very even needs a tag
    with pytest.raises(ValueError):
        JordanType((5, 3), "D", 8, "I")
    with pytest.raises(ValueError):
        JordanType((3, 1), "A", 5)


def test_springer_dim_values():
    b2 = {str(j): springer_dim(j) for j in valid_jordan_types("B", 2)}
    assert b2 == {"5": 0, "311": 1, "221": 2, "11111": 4}
    assert orbit_record(parse_jordan("5", "B", 2)).dim_orbit == 8


@pytest.mark.parametrize("t, r", SMALL)
def test_steinberg_against_matrix_centralizer(t, r):
    n_pos = r * (r + 1) // 2 if t == "A" else r * r if t in "BC" else r * (r - 1)
    for j in valid_jordan_types(t, r):
        assert check_in_algebra(j.parts, t)
        assert jordan_type_of(nilpotent_with_form(j.parts, t)[0]) == j.parts
        assert centralizer_dim(j) == centralizer_dim_bruteforce(j.parts, t)
        assert 0 <= springer_dim(j) <= n_pos
        rec = orbit_record(j)
        assert rec.dim_orbit == algebra_dim(t, j.ambient_dim) - centralizer_dim(j)
    js = valid_jordan_types(t, r)
    assert springer_dim(js[0]) == 0
    assert springer_dim(js[-1]) == n_pos


def test_3221_matches_delta_of_the_d4_class():
    j = parse_jordan("3221", "D", 4)
    assert (centralizer_dim_bruteforce(j.parts, "D") - 4) // 2 == springer_dim(j)
    rs = build_root_system("D", 4)
    assert springer_dim(j) == delta(rs, ClassLabel.bipartition((), (1, 1, 1, 1)))


@pytest.mark.parametrize("t, r", [("A", 5), ("B", 4), ("C", 4), ("D", 5), ("D", 4)])
def test_closure_is_partial_order_and_d_decreases(t, r):
    js = valid_jordan_types(t, r)
    for a in js:
        assert closure_leq(a, a)
        for b in js:
            if a != b and closure_leq(a, b):
                assert not closure_leq(b, a)
                assert springer_dim(a) > springer_dim(b)
                for c in js:
                    if closure_leq(b, c):
                        assert closure_leq(a, c)


def test_closure_examples():
    p = lambda s, t="B", r=2: parse_jordan(s, t, r)
    assert closure_leq(p("311"), p("5"))
    assert closure_leq(p("221"), p("311")) and not closure_leq(p("311"), p("221"))
    a, b = p("44_I", "D", 4), p("44_II", "D", 4)
    assert not closure_leq(a, b) and not closure_leq(b, a)
    with pytest.raises(ValueError):
        closure_leq(p("5"), p("4", "C", 2))


def test_iota_and_plain_union():
    inner = JordanType((3,), "B", 3)
    assert str(iota_embed((2,), inner)) == "322"
    assert iota_embed((), inner) == inner
    d2 = JordanType((3, 1), "D", 4)
    assert str(plain_union(d2, d2)) == "3311"
    empty = JordanType((), "D", 0)
    assert str(iota_embed((2, 2), empty, "II")) == "2222_II"


@pytest.mark.parametrize("t, r", [("B", 3), ("C", 3), ("D", 4)])
def test_iota_always_parity_valid(t, r):
    from weylorbits.partitions import partitions
    for k in range(0, r):
        for inner in valid_jordan_types(t, r - k) if r - k > (1 if t == "D" else 0) else []:
            for gl in partitions(k):
                out = iota_embed(gl, inner, "I")
                assert out.ambient_dim == inner.ambient_dim + 2 * k
