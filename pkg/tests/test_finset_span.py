import pytest
from hypothesis import given, settings, strategies as st

from hopfspan.finset_span import (
    FinSet, FinFn, Span, SpanMorphism, SpanError,
    compose_spans, compose_span_morphisms_h, cartesian_product,
    product_of_morphisms, associator_iso, left_unitor_iso, right_unitor_iso,
    right_adjoint_of, pullback_pairs,
)


def span_from_legs(src, tgt, apex, left, right):
    s, t, a = FinSet(src), FinSet(tgt), FinSet(apex)
    return Span(s, t, a, FinFn(a, t, left), FinFn(a, s, right))


def test_finset_rejects_duplicates():
    with pytest.raises(SpanError):
        FinSet(["a", "b", "a"])


def test_finfn_totality_checked():
    x = FinSet([0, 1])
    with pytest.raises(SpanError):
        FinFn(x, x, {0: 1})
    with pytest.raises(SpanError):
        FinFn(x, x, {0: 1, 1: 7})


def test_identity_compose_identity():
    x = FinSet(["a", "b"])
    i = Span.identity(x)
    c = compose_spans(i, i)
    assert c.apex.elements == (("a", "a"), ("b", "b"))
    assert c.left(("a", "a")) == "a"
    assert c.right(("b", "b")) == "b"


def test_compose_example_single_match():
    # b = ({*} <- {p,q} -> {0,1}), a = ({0,1} <- {m} -> {*})
    b = span_from_legs([0, 1], ["*"], ["p", "q"],
                       {"p": "*", "q": "*"}, {"p": 0, "q": 1})
    a = span_from_legs(["*"], [0, 1], ["m"], {"m": 0}, {"m": "*"})
    c = compose_spans(b, a)
    assert c.apex.elements == (("p", "m"),)


def test_compose_complete_span_cardinality():
    # complete span on a 2-element set composed with itself has 2^3 = 8
    # apex elements, one per triple
    x = FinSet([0, 1])
    k = Span.complete(x)
    c = compose_spans(k, k)
    assert len(c.apex) == 8
    assert len(c.apex) == len(pullback_pairs(k, k))


def test_compose_boundary_mismatch_reports_both_sets():
    a = Span.identity(FinSet([0]))
    b = Span.identity(FinSet([1]))
    with pytest.raises(SpanError) as err:
        compose_spans(b, a)
    assert "0" in str(err.value) and "1" in str(err.value)


def test_morphism_h_composition_identity():
    x = FinSet([0, 1])
    k = Span.complete(x)
    f = SpanMorphism.identity(k)
    gf = compose_span_morphisms_h(f, f)
    assert gf.source == compose_spans(k, k)
    assert gf.map == FinFn.identity(gf.source.apex)


def test_morphism_h_pointwise():
    x = FinSet([0])
    a = span_from_legs([0], [0], ["c1", "c2"],
                       {"c1": 0, "c2": 0}, {"c1": 0, "c2": 0})
    b = span_from_legs([0], [0], ["d"], {"d": 0}, {"d": 0})
    f = SpanMorphism(a, b, FinFn(a.apex, b.apex, {"c1": "d", "c2": "d"}))
    g = SpanMorphism.identity(b)
    gf = compose_span_morphisms_h(g, f)
    for (d, c) in gf.source.apex:
        assert gf.map((d, c)) == (g.map(d), f.map(c))


def test_cartesian_product_unit_and_counts():
    x = FinSet([0, 1])
    a = Span.complete(x)
    one = Span.identity(FinSet.singleton())
    p = cartesian_product(a, one)
    assert len(p.apex) == len(a.apex)
    assert all(c == (c0, "*") for c, (c0, _) in zip(p.apex, p.apex))
    q = cartesian_product(a, a)
    assert len(q.apex) == 16

    empty = span_from_legs([], [], [], {}, {})
    assert len(cartesian_product(empty, a).apex) == 0


def test_cartesian_product_functorial():
    x = FinSet([0])
    a = span_from_legs([0], [0], ["c1", "c2"],
                       {"c1": 0, "c2": 0}, {"c1": 0, "c2": 0})
    b = span_from_legs([0], [0], ["d"], {"d": 0}, {"d": 0})
    f = SpanMorphism(a, b, FinFn(a.apex, b.apex, {"c1": "d", "c2": "d"}))
    g = SpanMorphism.identity(b)
    fg = product_of_morphisms(f, g)
    gg = product_of_morphisms(g, g)
    assert fg.then(gg).map == product_of_morphisms(f.then(g), g.then(g)).map


def test_associator_is_bijection_small():
    x = FinSet([0, 1])
    k = Span.complete(x)
    al = associator_iso(k, k, k)
    assert al.is_iso()
    assert al.inverse().then(al).map == FinFn.identity(al.target.apex)
    # both bracketings enumerate the same matched triples
    lhs = {((e, d), c) for ((e, d), c) in al.source.apex}
    rhs = {((e, d), c) for (e, (d, c)) in al.target.apex}
    assert lhs == rhs


def test_associator_empty_factor():
    x = FinSet([0])
    empty = span_from_legs([0], [0], [], {}, {})
    i = Span.identity(x)
    al = associator_iso(i, empty, i)
    assert len(al.source.apex) == 0 and len(al.target.apex) == 0


def test_unitors_are_bijections():
    b = span_from_legs([0, 1], ["u", "v"], ["p", "q", "r"],
                       {"p": "u", "q": "u", "r": "v"},
                       {"p": 0, "q": 1, "r": 1})
    for unitor in (left_unitor_iso(b), right_unitor_iso(b)):
        assert unitor.is_iso()
        assert unitor.target == b


def test_right_adjoint_identity_span():
    x = FinSet([0, 1])
    res = right_adjoint_of(Span.identity(x))
    assert res
    assert res.adjoint == Span.identity(x)
    check_triangle_identities(Span.identity(x), res)


def test_right_adjoint_of_function_graph():
    # graph of the function {a,b} -> {u}: right leg is the identity
    g = span_from_legs(["a", "b"], ["u"], ["a", "b"],
                       {"a": "u", "b": "u"}, {"a": "a", "b": "b"})
    res = right_adjoint_of(g)
    assert res
    assert res.adjoint == g.reverse()
    check_triangle_identities(g, res)


def test_right_adjoint_missing_with_witness():
    # right leg misses the src element 1
    a = span_from_legs([0, 1], ["u"], ["c"], {"c": "u"}, {"c": 0})
    res = right_adjoint_of(a)
    assert not res
    assert res.witness == 1
    # right leg merges two apex elements
    b = span_from_legs([0], ["u"], ["c", "d"],
                       {"c": "u", "d": "u"}, {"c": 0, "d": 0})
    res = right_adjoint_of(b)
    assert not res
    assert res.witness == ("c", "d")


def check_triangle_identities(a, res):
    """Both zigzag composites collapse to identities, through the unitors."""
    u, unit, counit = res.adjoint, res.unit, res.counit
    ida, idu = SpanMorphism.identity(a), SpanMorphism.identity(u)
    # a -> a.1 -> a.(u.a) -> (a.u).a -> 1.a -> a
    total = (right_unitor_iso(a).inverse()
             .then(compose_span_morphisms_h(ida, unit))
             .then(associator_iso(a, u, a).inverse())
             .then(compose_span_morphisms_h(counit, ida))
             .then(left_unitor_iso(a)))
    assert total.map == FinFn.identity(a.apex)
    # u -> 1.u -> (u.a).u -> u.(a.u) -> u.1 -> u
    total = (left_unitor_iso(u).inverse()
             .then(compose_span_morphisms_h(unit, idu))
             .then(associator_iso(u, a, u))
             .then(compose_span_morphisms_h(idu, counit))
             .then(right_unitor_iso(u)))
    assert total.map == FinFn.identity(u.apex)


@st.composite
def small_span_between(draw, src, tgt, max_apex=4):
    n = draw(st.integers(min_value=0, max_value=max_apex))
    apex = FinSet(range(n))
    lvals = draw(st.lists(st.sampled_from(tgt.elements), min_size=n, max_size=n)) if n else []
    rvals = draw(st.lists(st.sampled_from(src.elements), min_size=n, max_size=n)) if n else []
    left = FinFn(apex, tgt, {i: lvals[i] for i in range(n)})
    right = FinFn(apex, src, {i: rvals[i] for i in range(n)})
    return Span(src, tgt, apex, left, right)


@st.composite
def composable_triple(draw):
    sets = [FinSet(["s%d%d" % (k, i) for i in range(draw(st.integers(1, 3)))])
            for k in range(4)]
    a = draw(small_span_between(sets[0], sets[1]))
    b = draw(small_span_between(sets[1], sets[2]))
    c = draw(small_span_between(sets[2], sets[3]))
    return c, b, a


@settings(max_examples=60, deadline=None)
@given(composable_triple())
def test_pullback_associative_up_to_canonical_iso(triple):
    c, b, a = triple
    al = associator_iso(c, b, a)
    assert al.is_iso()
    lhs, rhs = al.source, al.target
    for elem in lhs.apex:
        assert lhs.left(elem) == rhs.left(al.map(elem))
        assert lhs.right(elem) == rhs.right(al.map(elem))


@settings(max_examples=60, deadline=None)
@given(composable_triple())
def test_pullback_cardinality_matches_bruteforce(triple):
    c, b, a = triple
    assert len(compose_spans(b, a).apex) == len(pullback_pairs(b, a))
    assert len(compose_spans(c, b).apex) == len(pullback_pairs(c, b))
