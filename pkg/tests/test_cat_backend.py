import random

import pytest

from hopfspan.finset_span import FinSet, FinFn
from hopfspan.cat_backend import (
    FinCategory, FunctorData, NatTransData, CatError,
    check_category, is_groupoid, nat_is_iso, vect_as_lazy_category,
)
from hopfspan.vect_backend import (
    VObject, VMorphism, BraidParam, braiding, invert, tensor_obj, unit_object,
)


def z2_category():
    mul = {("e", "e"): "e", ("e", "z"): "z", ("z", "e"): "z", ("z", "z"): "e"}
    return FinCategory.from_monoid(["e", "z"], mul, "e")


def idempotent_monoid_category():
    # {1, z | z.z = z}
    mul = {("1", "1"): "1", ("1", "z"): "z", ("z", "1"): "z", ("z", "z"): "z"}
    return FinCategory.from_monoid(["1", "z"], mul, "1")


def s3_category():
    """Symmetric group on 3 letters as permutation tuples."""
    perms = []
    for a in range(3):
        for b in range(3):
            for c in range(3):
                if {a, b, c} == {0, 1, 2}:
                    perms.append((a, b, c))
    mul = {}
    for g in perms:
        for f in perms:
            mul[(g, f)] = tuple(g[f[i]] for i in range(3))
    return FinCategory.from_monoid(perms, mul, (0, 1, 2))


def test_check_category_passes_on_monoid():
    assert check_category(idempotent_monoid_category()).ok
    assert check_category(z2_category()).ok


def test_check_category_missing_composite():
    objects = FinSet(["*"])
    morphisms = FinSet(["1", "z"])
    src = FinFn.constant(morphisms, objects, "*")
    tgt = FinFn.constant(morphisms, objects, "*")
    identities = FinFn(objects, morphisms, {"*": "1"})
    table = {("1", "1"): "1", ("1", "z"): "z", ("z", "1"): "z"}
    broken = FinCategory(objects, morphisms, src, tgt, identities, table,
                         check=False)
    report = check_category(broken)
    assert not report.ok
    assert ("missing composite", ("z", "z")) in report.failures
    with pytest.raises(CatError):
        FinCategory(objects, morphisms, src, tgt, identities, table)


def test_indiscrete_category_and_groupoid():
    c = FinCategory.indiscrete(["x", "y"])
    assert len(c.morphisms) == 4
    assert check_category(c).ok
    assert is_groupoid(c)


def test_groupoid_detection():
    assert is_groupoid(z2_category())
    verdict = is_groupoid(idempotent_monoid_category())
    assert not verdict
    assert verdict.witness == "z"


def test_functor_validation():
    z2 = z2_category()
    flip = FunctorData(z2, z2, FinFn.identity(z2.objects),
                       FinFn.identity(z2.morphisms))
    assert flip.then(flip).omap == flip.omap
    bad_mmap = FinFn(z2.morphisms, z2.morphisms, {"e": "z", "z": "z"})
    with pytest.raises(CatError):
        FunctorData(z2, z2, FinFn.identity(z2.objects), bad_mmap)


def test_nat_trans_identity_is_iso():
    z2 = z2_category()
    f = FunctorData.identity(z2)
    n = NatTransData.identity(f)
    assert nat_is_iso(n)


def test_nat_trans_non_iso_witness():
    c = idempotent_monoid_category()
    f = FunctorData.identity(c)
    # z is a valid component for id => id since the monoid is commutative,
    # but it has no inverse
    n = NatTransData(f, f, {"*": "z"})
    verdict = nat_is_iso(n)
    assert not verdict
    assert verdict.witness == "*"


def s3_endofunctors(c):
    """All monoid endomorphisms of the one-object category c."""
    out = []
    unit = c.identities("*")
    morphisms = list(c.morphisms)
    def extend(assignment, remaining):
        if not remaining:
            out.append(dict(assignment))
            return
        m = remaining[0]
        for img in morphisms:
            assignment[m] = img
            if all(c.composition[(assignment[a], assignment[b])]
                   == assignment.get(c.composition[(a, b)], None)
                   for a in assignment for b in assignment
                   if c.composition[(a, b)] in assignment):
                extend(assignment, remaining[1:])
            del assignment[m]
    extend({unit: unit}, [m for m in morphisms if m != unit])
    fns = []
    for table in out:
        fns.append(FunctorData(c, c, FinFn.identity(c.objects),
                               FinFn(c.morphisms, c.morphisms, table)))
    return fns


def all_nats(c, functors):
    nats = []
    for F in functors:
        for G in functors:
            for a in c.morphisms:
                if all(c.composition[(a, F.mmap(m))] ==
                       c.composition[(G.mmap(m), a)] for m in c.morphisms):
                    nats.append(NatTransData(F, G, {"*": a}))
    return nats


def test_interchange_on_s3():
    c = s3_category()
    functors = s3_endofunctors(c)
    nats = all_nats(c, functors)
    rng = random.Random(7)
    by_source = {}
    for n in nats:
        by_source.setdefault(n.source, []).append(n)
    checked = 0
    while checked < 60:
        alpha = rng.choice(nats)
        beta = rng.choice(by_source.get(alpha.target, []))
        gamma = rng.choice(nats)
        delta = rng.choice(by_source.get(gamma.target, []))
        lhs = alpha.vcomp(beta).hcomp(gamma.vcomp(delta))
        rhs = alpha.hcomp(gamma).vcomp(beta.hcomp(delta))
        assert lhs == rhs
        checked += 1


def test_lazy_category_probe_checks():
    q = BraidParam(2)
    k = unit_object()
    a = VObject([("x", 1), ("y", 0)])
    cat, pf = vect_as_lazy_category(q, [k, a])
    assert cat.check_probes().ok


def test_pseudofunctor_unit_and_obj_action():
    q = BraidParam(1)
    k = unit_object()
    a = VObject.ungraded(["0", "1"])
    cat, pf = vect_as_lazy_category(q, [k, a])
    # K tensor (-) acts as the identity on probes
    omap = pf.on_obj_omap(k)
    assert omap(a) == a and omap(k) == k
    # a 2-dim object doubles dimension
    omap2 = pf.on_obj_omap(a)
    assert omap2(a).dim == 4
    unit_obj, unit_iso = pf.unit_compat()
    assert unit_obj == k
    assert unit_iso == VMorphism.identity(k)


def test_pseudofunctor_product_compat_invertible():
    q = BraidParam(2)
    p = VObject([("p", 1)])
    p2 = VObject([("r", 1), ("s", 0)])
    x = VObject([("x", 1)])
    y = VObject([("y", 2)])
    cat, pf = vect_as_lazy_category(q, [x, y])
    comp = pf.product_compat_component(p, p2, x, y)
    assert comp.dom == tensor_obj(tensor_obj(p, x), tensor_obj(p2, y))
    assert comp.cod == tensor_obj(tensor_obj(p, p2), tensor_obj(x, y))
    assert invert(comp)
    # the nontrivial block is the braiding of x past p2
    c = braiding(x, p2, q)
    assert comp[0, 0] == c[0, 0]


def test_empty_probe_list_rejected():
    with pytest.raises(CatError):
        vect_as_lazy_category(BraidParam(1), [])
