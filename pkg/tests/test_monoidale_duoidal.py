import dataclasses
from fractions import Fraction

import pytest

from hopfspan.finset_span import FinSet, FinFn, Span, SpanMorphism
from hopfspan.vect_backend import BraidParam, VObject, VMorphism, tensor_obj
from hopfspan.cat_backend import FinCategory
from hopfspan.spanv_core import (
    SpanVError, VectBackend, CatBackend, Cell0, Cell1, Cell2,
    identity_cell1, identity_cell2, vcomp2, hcomp1, hcomp2,
    left_unitor_cell2, right_unitor_cell2, invert_cell2, eq2,
)
from hopfspan.monoidale_duoidal import (
    MonoidaleData, induced_monoidale, check_monoidale, unique_relabel_cell2,
    opmap_adjunctions, check_adjunction_triangles,
    frobenius_comparison_cells, check_frobenius,
    star1, star2, complete_unit_cell1, star_associator_cell2,
    star_left_unitor_cell2, star_right_unitor_cell2,
    duoidal_hom, duoidal_interchange, check_duoidal,
    ComonoidLabeledCell, check_comonoid, comonoid_cells,
    grouplike_comonoid, conjugate_comonoid,
    zunino_braiding, zunino_check,
)
from hopfspan.rand import seeded, random_vect_cell1, random_vect_cell2_from

V1 = VectBackend(BraidParam(1))
V2 = VectBackend(BraidParam(2))
C = CatBackend()


def carrier(n):
    return FinSet(["x%d" % k for k in range(n)])


def vect_base(be, X):
    return Cell0(be, X, {x: "*" for x in X})


def complete_cell1(be, base, dims):
    """An endo 1-cell on the complete span with ungraded labels of the
    given dimensions, one per apex pair in order."""
    span = Span.complete(base.carrier, base.carrier)
    label = {c: VObject.ungraded(["b%d_%d" % (k, i) for i in range(d)])
             for k, (c, d) in enumerate(zip(span.apex, dims))}
    return Cell1(be, base, base, span, label)


def graded_endo_cell2(rng, cell):
    """A random endo 2-cell whose components only mix equal grades."""
    comps = {}
    for h in cell.span.apex:
        p = cell.label[h]
        comps[h] = VMorphism(p, p, [
            [Fraction(rng.randint(-2, 2))
             if p.basis[r][1] == p.basis[c][1] else Fraction(0)
             for c in range(p.dim)]
            for r in range(p.dim)])
    return Cell2(cell, cell, SpanMorphism.identity(cell.span), comps)


# ---------------------------------------------------------------------------
# The induced monoid object and its coherence.


def test_induced_monoidale_spans():
    X = carrier(2)
    mon = induced_monoidale(X, V1)
    assert mon.m.span.apex == X
    for x in X:
        assert mon.m.span.left(x) == x
        assert mon.m.span.right(x) == (x, x)
    assert mon.u.span.apex == X
    for x in X:
        assert mon.u.span.left(x) == x
        assert mon.u.span.right(x) == "*"


def test_monoidale_coherence_small_carriers():
    for n in range(4):
        X = carrier(n)
        for be in (V1, V2, C):
            report = check_monoidale(induced_monoidale(X, be))
            assert report.ok, report.summary()


def test_monoidale_rejects_bad_boundary():
    X = carrier(1)
    mon = induced_monoidale(X, V1)
    with pytest.raises(SpanVError):
        MonoidaleData(mon.base, mon.u, mon.u, mon.alpha, mon.lam, mon.rho)


def test_check_monoidale_flags_corrupted_alpha():
    X = carrier(2)
    mon = induced_monoidale(X, V1)
    zeroed = Cell2(mon.alpha.source, mon.alpha.target, mon.alpha.morphism,
                   {c: f.scale(0) for c, f in mon.alpha.components.items()})
    report = check_monoidale(dataclasses.replace(mon, alpha=zeroed))
    assert not report.ok
    laws = [law for law, _ in report.failures]
    assert "alpha invertible" in laws
    assert "alpha canonical" in laws


def test_unique_relabel_needs_a_unique_match():
    X = carrier(1)
    base = vect_base(V1, X)
    doubled = Cell1(V1, base, base,
                    Span(X, X, FinSet(["c1", "c2"]),
                         FinFn.constant(FinSet(["c1", "c2"]), X, "x0"),
                         FinFn.constant(FinSet(["c1", "c2"]), X, "x0")),
                    {"c1": "*", "c2": "*"})
    with pytest.raises(SpanVError) as err:
        unique_relabel_cell2(identity_cell1(base), doubled)
    assert "exactly one" in str(err.value)


# ---------------------------------------------------------------------------
# Adjunctions and the Frobenius comparison.


def test_adjunction_triangles_small_carriers():
    for n in range(5):
        report = check_adjunction_triangles(opmap_adjunctions(carrier(n), V1))
        assert report.ok, report.summary()
    report = check_adjunction_triangles(opmap_adjunctions(carrier(2), C))
    assert report.ok, report.summary()


def test_frobenius_comparison_boundary():
    """Both comparison cells run between cells presented on the span
    X.X <- X -> X.X whose legs are both the diagonal."""
    X = carrier(2)
    adj = opmap_adjunctions(X, V1)
    left, right = frobenius_comparison_cells(adj)
    diag = [(x, x) for x in X]
    for cell in (left, right):
        assert list(cell.source.span.apex) == diag
        for c in cell.source.span.apex:
            assert cell.source.span.left(c) == c
            assert cell.source.span.right(c) == c
        assert len(cell.target.span.apex) == len(X)
        for c in cell.target.span.apex:
            assert cell.target.span.left(c) in diag
            assert cell.target.span.left(c) == cell.target.span.right(c)


def test_frobenius_small_carriers():
    for n in range(5):
        report = check_frobenius(carrier(n), V1)
        assert report.ok, report.summary()
    for n in (1, 2):
        report = check_frobenius(carrier(n), C)
        assert report.ok, report.summary()


def test_frobenius_conventions_agree_literally():
    adj = opmap_adjunctions(carrier(3), V1)
    first = frobenius_comparison_cells(adj, "unit-first")
    second = frobenius_comparison_cells(adj, "counit-first")
    for a, b in zip(first, second):
        assert eq2(a, b)
    with pytest.raises(SpanVError):
        frobenius_comparison_cells(adj, "sideways")


def test_frobenius_locates_corrupted_unit():
    X = carrier(2)
    adj = opmap_adjunctions(X, V1)
    zeroed = Cell2(adj.m_unit.source, adj.m_unit.target, adj.m_unit.morphism,
                   {c: f.scale(0) for c, f in adj.m_unit.components.items()})
    report = check_frobenius(X, V1, dataclasses.replace(adj, m_unit=zeroed))
    assert not report.ok
    laws = [law for law, _ in report.failures]
    assert any(law.startswith("m-adjunction") for law in laws)
    assert any("comparison invertible" in law for law in laws)


# ---------------------------------------------------------------------------
# Convolution.


def test_star_of_complete_cells_is_legwise_tensor():
    X = carrier(2)
    base = vect_base(V2, X)
    a = complete_cell1(V2, base, [2, 1, 1, 2])
    b = complete_cell1(V2, base, [1, 2, 2, 1])
    s = star1(b, a)
    assert len(s.span.apex) == 4
    for (c, h) in s.span.apex:
        assert c == h
        assert s.label[(c, h)] == tensor_obj(b.label[c], a.label[h])
        assert s.span.left((c, h)) == b.span.left(c)
        assert s.span.right((c, h)) == b.span.right(c)


def test_star_keeps_only_leg_matched_pairs():
    rng = seeded(7)
    X = carrier(2)
    base = vect_base(V1, X)
    for _ in range(10):
        a = random_vect_cell1(rng, V1, base, base, max_apex=3, max_dim=2)
        b = random_vect_cell1(rng, V1, base, base, max_apex=3, max_dim=2)
        s = star1(b, a)
        expected = [(c, h) for c in b.span.apex for h in a.span.apex
                    if b.span.left(c) == a.span.left(h)
                    and b.span.right(c) == a.span.right(h)]
        assert sorted(s.span.apex) == sorted(expected)


def test_star_units_and_associator_invertible():
    X = carrier(2)
    base = vect_base(V1, X)
    a = complete_cell1(V1, base, [2, 1, 2, 1])
    b = complete_cell1(V1, base, [1, 1, 2, 2])
    c = complete_cell1(V1, base, [2, 2, 1, 1])
    assert invert_cell2(star_associator_cell2(c, b, a))
    assert invert_cell2(star_left_unitor_cell2(a))
    assert invert_cell2(star_right_unitor_cell2(a))


def test_complete_unit_needs_matching_labels():
    z2 = FinCategory.indiscrete(["u", "v"])
    one = FinCategory.discrete(["*"])
    X = carrier(2)
    mixed = Cell0(C, X, {"x0": z2, "x1": one})
    with pytest.raises(SpanVError) as err:
        complete_unit_cell1(mixed, mixed)
    assert "unit label" in str(err.value)


def test_duoidal_unit_shapes():
    X = carrier(2)
    hom = duoidal_hom(X, V1)
    un = hom.units
    assert len(un.mu_j.source.span.apex) == 8
    assert len(un.mu_j.target.span.apex) == 4
    for x in X:
        assert un.delta_i.morphism.map(x) == (x, x)
        assert un.iota_ij.morphism.map(x) == (x, x)
    a = complete_cell1(V1, hom.base, [1, 2, 2, 1])
    b = complete_cell1(V1, hom.base, [2, 1, 1, 2])
    assert hom.star(b, a) == star1(b, a)
    assert hom.compose(b, a) == hcomp1(b, a)


def test_interchange_components_carry_the_braiding():
    X = carrier(2)
    base2 = vect_base(V2, X)
    span = Span.complete(X, X)
    g = Cell1(V2, base2, base2, span,
              {c: VObject([("u%d" % k, 1)]) for k, c in enumerate(span.apex)})
    xi = duoidal_interchange(g, g, g, g)
    for comp in xi.components.values():
        assert comp.entries == ((Fraction(2),),)
    base1 = vect_base(V1, X)
    a = complete_cell1(V1, base1, [2, 1, 1, 2])
    xi = duoidal_interchange(a, a, a, a)
    assert all(comp.is_permutation() for comp in xi.components.values())


def test_interchange_rejects_non_endo_cells():
    X = carrier(2)
    base = vect_base(V1, X)
    other = Cell0(V1, carrier(1), {"x0": "*"})
    a = complete_cell1(V1, base, [1, 1, 1, 1])
    odd = Cell1(V1, other, other, Span.complete(other.carrier, other.carrier),
                {("x0", "x0"): VObject.ungraded(["t"])})
    with pytest.raises(SpanVError):
        duoidal_interchange(a, a, odd, a)


def test_duoidal_axioms_randomized():
    rng = seeded(31)
    for q in (1, -1, 2):
        be = VectBackend(BraidParam(q))
        for n in (1, 2):
            hom = duoidal_hom(carrier(n), be)
            cells = [random_vect_cell1(rng, be, hom.base, hom.base,
                                       max_apex=2, max_dim=2, max_grade=1)
                     for _ in range(6)]
            report = check_duoidal(hom, cells)
            assert report.ok, "q=%s |X|=%d %s" % (q, n, report.summary())


def test_interchange_naturality_ungraded():
    rng = seeded(13)
    X = carrier(2)
    base = vect_base(V1, X)
    for _ in range(5):
        a, b, h, d = [random_vect_cell1(rng, V1, base, base,
                                        max_apex=2, max_dim=2, max_grade=0)
                      for _ in range(4)]
        alpha = random_vect_cell2_from(rng, a, max_grade=0)
        beta = random_vect_cell2_from(rng, b, max_grade=0)
        gamma = random_vect_cell2_from(rng, h, max_grade=0)
        delta = random_vect_cell2_from(rng, d, max_grade=0)
        lhs = vcomp2(duoidal_interchange(a, b, h, d),
                     hcomp2(star2(alpha, beta), star2(gamma, delta)))
        rhs = vcomp2(star2(hcomp2(alpha, gamma), hcomp2(beta, delta)),
                     duoidal_interchange(alpha.source, beta.source,
                                         gamma.source, delta.source))
        assert eq2(lhs, rhs)


def test_interchange_naturality_graded():
    """With q = 2 the braiding weights entries by grade pairing, so the
    square only closes against grade-preserving components."""
    rng = seeded(17)
    X = carrier(1)
    base = vect_base(V2, X)
    for _ in range(5):
        cells = [random_vect_cell1(rng, V2, base, base,
                                   max_apex=2, max_dim=2, max_grade=2)
                 for _ in range(4)]
        a, b, h, d = cells
        alpha, beta, gamma, delta = [graded_endo_cell2(rng, c) for c in cells]
        lhs = vcomp2(duoidal_interchange(a, b, h, d),
                     hcomp2(star2(alpha, beta), star2(gamma, delta)))
        rhs = vcomp2(star2(hcomp2(alpha, gamma), hcomp2(beta, delta)),
                     duoidal_interchange(a, b, h, d))
        assert eq2(lhs, rhs)


# ---------------------------------------------------------------------------
# Comonoid-labeled cells.


def test_grouplike_comonoid_satisfies_laws():
    rng = seeded(23)
    base = vect_base(V2, carrier(2))
    cell = random_vect_cell1(rng, V2, base, base, max_apex=3, max_dim=3)
    com = grouplike_comonoid(cell)
    report = check_comonoid(com)
    assert report.ok, report.summary()


def test_conjugated_comonoid_satisfies_laws():
    rng = seeded(29)
    base = vect_base(V1, carrier(2))
    cell = random_vect_cell1(rng, V1, base, base, max_apex=3, max_dim=2)
    com = grouplike_comonoid(cell)
    autos = {}
    for h in cell.span.apex:
        p = cell.label[h]
        rows = [[Fraction(1 if r == c else 0) for c in range(p.dim)]
                for r in range(p.dim)]
        rows[0][p.dim - 1] += 1 if p.dim > 1 else 0
        autos[h] = VMorphism(p, p, rows)
    report = check_comonoid(conjugate_comonoid(com, autos))
    assert report.ok, report.summary()


def test_check_comonoid_locates_corruption():
    rng = seeded(37)
    base = vect_base(V1, carrier(1))
    cell = random_vect_cell1(rng, V1, base, base, max_apex=2, max_dim=2,
                             max_grade=0)
    com = grouplike_comonoid(cell)
    h0 = cell.span.apex.elements[0]
    d0 = com.delta[h0]
    rows = [list(r) for r in d0.entries]
    rows[0][0] += 1
    bad_delta = dict(com.delta)
    bad_delta[h0] = VMorphism(d0.dom, d0.cod, rows)
    report = check_comonoid(ComonoidLabeledCell(cell, bad_delta,
                                                dict(com.eps)))
    assert not report.ok
    assert all(law in ("coassociativity", "left counit", "right counit")
               for law, _ in report.failures)


def test_comonoid_cell_boundary_validation():
    base = vect_base(V1, carrier(1))
    cell = complete_cell1(V1, base, [2])
    com = grouplike_comonoid(cell)
    h0 = cell.span.apex.elements[0]
    wrong = dict(com.eps)
    wrong[h0] = com.delta[h0]
    with pytest.raises(SpanVError):
        ComonoidLabeledCell(cell, dict(com.delta), wrong)


def test_comonoid_cells_give_coassociative_convolution():
    rng = seeded(43)
    base = vect_base(V2, carrier(2))
    cell = random_vect_cell1(rng, V2, base, base, max_apex=2, max_dim=2)
    com = grouplike_comonoid(cell)
    delta2, eps2 = comonoid_cells(com)
    assert delta2.target == star1(cell, cell)
    assert eps2.target == complete_unit_cell1(cell.src, cell.tgt)
    left = vcomp2(star2(delta2, identity_cell2(cell)), delta2)
    right = vcomp2(star2(identity_cell2(cell), delta2), delta2)
    assert eq2(left, right,
               transport=(star_associator_cell2(cell, cell, cell),))
    assert eq2(vcomp2(star2(eps2, identity_cell2(cell)), delta2),
               identity_cell2(cell),
               transport=(star_left_unitor_cell2(cell),))
    assert eq2(vcomp2(star2(identity_cell2(cell), eps2), delta2),
               identity_cell2(cell),
               transport=(star_right_unitor_cell2(cell),))


# ---------------------------------------------------------------------------
# The one-point carrier.


def test_star_collapses_to_composition_on_one_point():
    rng = seeded(47)
    hom = duoidal_hom(carrier(1), V1)
    for _ in range(10):
        a = random_vect_cell1(rng, V1, hom.base, hom.base, max_apex=3)
        b = random_vect_cell1(rng, V1, hom.base, hom.base, max_apex=3)
        assert star1(b, a) == hcomp1(b, a)
        u = random_vect_cell2_from(rng, a)
        v = random_vect_cell2_from(rng, b)
        assert eq2(star2(v, u), hcomp2(v, u))


def test_zunino_comparison():
    rng = seeded(53)
    for q in (1, -1, 2):
        be = VectBackend(BraidParam(q))
        hom = duoidal_hom(carrier(1), be)
        cells = [random_vect_cell1(rng, be, hom.base, hom.base,
                                   max_apex=2, max_dim=2, max_grade=1)
                 for _ in range(3)]
        report = zunino_check(carrier(1), be, cells)
        assert report.ok, "q=%s %s" % (q, report.summary())


def test_zunino_braiding_swaps_with_weights():
    be = V2
    hom = duoidal_hom(carrier(1), be)
    span = Span.complete(carrier(1), carrier(1))
    a = Cell1(be, hom.base, hom.base, span,
              {("x0", "x0"): VObject([("s", 1)])})
    b = Cell1(be, hom.base, hom.base, span,
              {("x0", "x0"): VObject([("t", 1)])})
    braid = zunino_braiding(a, b)
    comp = next(iter(braid.components.values()))
    assert comp.entries == ((Fraction(2),),)


def test_zunino_rejects_larger_carriers():
    with pytest.raises(SpanVError):
        zunino_check(carrier(2), V1, [])
