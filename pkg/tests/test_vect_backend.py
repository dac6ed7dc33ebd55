from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from hopfspan.vect_backend import (
    VObject, VMorphism, BraidParam, unit_object,
    tensor_obj, tensor_mor, braiding, invert, determinant,
)


def test_unit_is_strict():
    a = VObject([("x", 1), ("y", 2)])
    k = unit_object()
    assert tensor_obj(k, a) == a
    assert tensor_obj(a, k) == a


def test_tensor_obj_row_major_and_grades():
    a = VObject([("x", 1), ("y", 0)])
    b = VObject([("u", 2), ("v", 0), ("w", 1)])
    t = tensor_obj(a, b)
    assert t.dim == 6
    assert t.basis[0] == (("x", "u"), 3)
    # pair (i, j) sits at index i * b.dim + j
    for i, (la, ga) in enumerate(a.basis):
        for j, (lb, gb) in enumerate(b.basis):
            assert t.basis[i * b.dim + j] == (la + lb, ga + gb)


def test_tensor_obj_strictly_associative():
    a = VObject([("x", 1)])
    b = VObject([("u", 0), ("v", 2)])
    c = VObject([("s", 1), ("t", 0)])
    assert tensor_obj(tensor_obj(a, b), c) == tensor_obj(a, tensor_obj(b, c))


def test_tensor_mor_elementary_entries():
    a = VObject.ungraded(["0", "1"])
    e01 = VMorphism(a, a, [[0, 1], [0, 0]])
    e10 = VMorphism(a, a, [[0, 0], [1, 0]])
    k = tensor_mor(e01, e10)
    # only entry: row r1*2+r2 = 0*2+1, column c1*2+c2 = 1*2+0
    for r in range(4):
        for c in range(4):
            expected = 1 if (r, c) == (1, 2) else 0
            assert k[r, c] == expected
    ida = VMorphism.identity(a)
    assert tensor_mor(ida, ida) == VMorphism.identity(tensor_obj(a, a))
    assert tensor_mor(e01, VMorphism.zero(a, a)).is_zero()


def test_braiding_ungraded_is_swap():
    a = VObject.ungraded(["x", "y"])
    b = VObject.ungraded(["u"])
    c = braiding(a, b, BraidParam(2))
    assert c.is_permutation()
    assert c[0, 0] == 1 and c[1, 1] == 1


def test_braiding_graded_scaling():
    q = BraidParam(2)
    a = VObject([("x", 1)])
    b = VObject([("u", 1)])
    c = braiding(a, b, q)
    assert c[0, 0] == 2
    neg = VObject([("m", -1)])
    assert braiding(a, neg, q)[0, 0] == Fraction(1, 2)


def test_braiding_inverse_is_qsquared():
    q = BraidParam(3)
    a = VObject([("x", 1), ("y", 0)])
    b = VObject([("u", 2)])
    round_trip = braiding(b, a, q).compose(braiding(a, b, q))
    for i, (_, ga) in enumerate(a.basis):
        for j, (_, gb) in enumerate(b.basis):
            idx = i * b.dim + j
            assert round_trip[idx, idx] == Fraction(3) ** (2 * ga * gb)
    for qsym in (1, -1):
        c = braiding(a, b, BraidParam(qsym))
        assert braiding(b, a, BraidParam(qsym)).compose(c) == \
            VMorphism.identity(tensor_obj(a, b))


def grade_preserving(dom, cod, values):
    """Fill a matrix with the given values only where grades agree."""
    it = iter(values)
    rows = []
    for _, gr in cod.basis:
        row = []
        for _, gc in dom.basis:
            row.append(next(it) if gr == gc else 0)
        rows.append(row)
    return VMorphism(dom, cod, rows)


@settings(max_examples=40, deadline=None)
@given(st.lists(st.integers(-3, 3), min_size=16, max_size=16),
       st.sampled_from([1, -1, 2, Fraction(1, 3)]))
def test_braiding_natural_on_grade_preserving_maps(vals, q):
    a = VObject([("x", 0), ("y", 1)])
    b = VObject([("u", 1), ("v", 2)])
    f = grade_preserving(a, a, vals[:4])
    g = grade_preserving(b, b, vals[4:8])
    c_ab = braiding(a, b, BraidParam(q))
    lhs = c_ab.compose(tensor_mor(f, g))
    rhs = tensor_mor(g, f).compose(c_ab)
    assert lhs == rhs


def test_invert_hand_example():
    a = VObject.ungraded(["0", "1"])
    f = VMorphism(a, a, [[1, 1], [0, 1]])
    res = invert(f)
    assert res
    assert res.inverse.entries == ((1, -1), (0, 1))
    assert res.inverse.compose(f) == VMorphism.identity(a)
    assert f.compose(res.inverse) == VMorphism.identity(a)


def test_invert_identity_and_failures():
    a = VObject.ungraded(["0", "1"])
    assert invert(VMorphism.identity(a)).inverse == VMorphism.identity(a)
    singular = VMorphism(a, a, [[1, 2], [2, 4]])
    res = invert(singular)
    assert not res
    assert res.witness == 1  # rank
    b = VObject.ungraded(["0"])
    res = invert(VMorphism.zero(a, b))
    assert not res
    assert res.witness == (1, 2)  # shape


@settings(max_examples=40, deadline=None)
@given(st.lists(st.fractions(min_value=-4, max_value=4, max_denominator=6),
                min_size=4, max_size=4))
def test_invert_round_trip(vals):
    a = VObject.ungraded(["0", "1"])
    f = VMorphism(a, a, [vals[:2], vals[2:]])
    res = invert(f)
    det = determinant(f)
    assert bool(res) == (det != 0)
    if res:
        assert res.inverse.compose(f) == VMorphism.identity(a)
        assert f.compose(res.inverse) == VMorphism.identity(a)


@settings(max_examples=30, deadline=None)
@given(st.lists(st.integers(-3, 3), min_size=16, max_size=16))
def test_tensor_mor_interchange(vals):
    a = VObject.ungraded(["0", "1"])
    f1 = VMorphism(a, a, [vals[0:2], vals[2:4]])
    f2 = VMorphism(a, a, [vals[4:6], vals[6:8]])
    g1 = VMorphism(a, a, [vals[8:10], vals[10:12]])
    g2 = VMorphism(a, a, [vals[12:14], vals[14:16]])
    lhs = tensor_mor(f2.compose(f1), g2.compose(g1))
    rhs = tensor_mor(f2, g2).compose(tensor_mor(f1, g1))
    assert lhs == rhs


def test_determinant_permutation_signs():
    a = VObject.ungraded(["0", "1"])
    swap = VMorphism(a, a, [[0, 1], [1, 0]])
    assert determinant(swap) == -1
    assert determinant(VMorphism.identity(a)) == 1
    with pytest.raises(ValueError):
        determinant(VMorphism.zero(a, unit_object()))
