"""Monoid objects on span 0-cells, and the two products on endo-hom cells.

Every finite carrier X carries a multiplication 1-cell (the diagonal span,
read backwards) and a unit 1-cell (the collapse span); together with
relabeling 2-cells these form a monoid object whose multiplication has a
left adjoint given by the reversed span, and the resulting comparison
2-cells are invertible.  On endo-cells X -> X this induces a second
product: the convolution b * a whose apex keeps only the pairs of apex
elements with equal legs.  The interchange 2-cell between composition and
convolution carries the base braiding, and over a one-point carrier the
two products literally coincide.

Coherence checking here leans on one structural fact: all cells of
interest live in the class where (i) every apex element of a span is
determined by its pair of legs, and (ii) labels agree on the nose along
any leg-preserving map (the base tensors are strict).  In that class a
parallel leg-preserving 2-cell with identity components is unique when it
exists, so each coherence axiom (pentagon, triangle, and the adjunction
and convolution variants) reduces to building the forced cells between
explicitly composed 1-cells and comparing composites with eq2.  The
forced-cell constructor fails loudly when either uniqueness or label
agreement breaks, so nothing outside the class is silently accepted.
"""

from dataclasses import dataclass

from .finset_span import FinSet, FinFn, Span, SpanMorphism
from .reporting import Verdict, CheckReport
from . import cat_backend as cb
from . import vect_backend as vb
from .spanv_core import (
    SpanVError, Backend, VectBackend, CatBackend,
    Cell0, Cell1, Cell2, identity_cell1, identity_cell2,
    vcomp2, hcomp1, hcomp2, unit_cell0, tensor0, tensor1, tensor2,
    relabel_cell2, associator_cell2, left_unitor_cell2, right_unitor_cell2,
    interchange_cell2, invert_cell2, eq2,
)


# ---------------------------------------------------------------------------
# Structural base labels and carrier-level coherence 1-cells.


def _structural_functor(src_cat, tgt_cat, fn):
    """The functor applying the same reshuffle to objects and morphisms.

    Valid for regrouping and projection maps between product categories,
    where morphism atoms mirror the nesting of object atoms.
    """
    omap = FinFn(src_cat.objects, tgt_cat.objects,
                 {o: fn(o) for o in src_cat.objects})
    mmap = FinFn(src_cat.morphisms, tgt_cat.morphisms,
                 {m: fn(m) for m in src_cat.morphisms})
    return cb.FunctorData(src_cat, tgt_cat, omap, mmap)


def _collapse_functor(src_cat, one):
    """The unique functor into the one-object one-morphism category."""
    return cb.FunctorData(
        src_cat, one,
        FinFn.constant(src_cat.objects, one.objects, "*"),
        FinFn.constant(src_cat.morphisms, one.morphisms, one.identities("*")))


def _reshape_label(be, src_label, tgt_label, fn):
    """A base 1-cell for a carrier reshuffle: a functor over a cat base,
    the unit object over a one-object base (where 0-cell labels carry no
    structure to reshuffle)."""
    if isinstance(be, CatBackend):
        return _structural_functor(src_label, tgt_label, fn)
    return be.id1(src_label)


def tensor_associator_cell1(x, y, z):
    """The regrouping 1-cell (x . y) . z -> x . (y . z).

    Its span has the source carrier as apex, identity right leg, and the
    regrouping bijection as left leg; each label is the corresponding
    reshuffle of base labels.
    """
    be = x.backend
    src = tensor0(tensor0(x, y), z)
    tgt = tensor0(x, tensor0(y, z))
    fn = lambda t: (t[0][0], (t[0][1], t[1]))
    left = FinFn(src.carrier, tgt.carrier, {c: fn(c) for c in src.carrier})
    span = Span(src.carrier, tgt.carrier, src.carrier,
                left, FinFn.identity(src.carrier))
    label = {c: _reshape_label(be, src.label[c], tgt.label[fn(c)], fn)
             for c in src.carrier}
    return Cell1(be, src, tgt, span, label)


def tensor_associator_inv_cell1(x, y, z):
    """The regrouping 1-cell x . (y . z) -> (x . y) . z."""
    be = x.backend
    src = tensor0(x, tensor0(y, z))
    tgt = tensor0(tensor0(x, y), z)
    fn = lambda t: ((t[0], t[1][0]), t[1][1])
    left = FinFn(src.carrier, tgt.carrier, {c: fn(c) for c in src.carrier})
    span = Span(src.carrier, tgt.carrier, src.carrier,
                left, FinFn.identity(src.carrier))
    label = {c: _reshape_label(be, src.label[c], tgt.label[fn(c)], fn)
             for c in src.carrier}
    return Cell1(be, src, tgt, span, label)


def tensor_left_unitor_cell1(x):
    """The projection 1-cell K . x -> x."""
    be = x.backend
    src = tensor0(unit_cell0(be), x)
    fn = lambda t: t[1]
    left = FinFn(src.carrier, x.carrier, {c: fn(c) for c in src.carrier})
    span = Span(src.carrier, x.carrier, src.carrier,
                left, FinFn.identity(src.carrier))
    label = {c: _reshape_label(be, src.label[c], x.label[fn(c)], fn)
             for c in src.carrier}
    return Cell1(be, src, x, span, label)


def tensor_right_unitor_cell1(x):
    """The projection 1-cell x . K -> x."""
    be = x.backend
    src = tensor0(x, unit_cell0(be))
    fn = lambda t: t[0]
    left = FinFn(src.carrier, x.carrier, {c: fn(c) for c in src.carrier})
    span = Span(src.carrier, x.carrier, src.carrier,
                left, FinFn.identity(src.carrier))
    label = {c: _reshape_label(be, src.label[c], x.label[fn(c)], fn)
             for c in src.carrier}
    return Cell1(be, src, x, span, label)


def unique_relabel_cell2(source, target):
    """The unique leg-preserving identity-component 2-cell, when forced.

    Each source apex element must have exactly one target apex element
    with the same pair of legs, and labels must agree along that match;
    SpanVError otherwise.  Within the class described in the module
    docstring any parallel identity-component cell equals this one.
    """
    s, t = source.span, target.span
    assignment = {}
    for c in s.apex:
        matches = [d for d in t.apex
                   if t.left(d) == s.left(c) and t.right(d) == s.right(c)]
        if len(matches) != 1:
            raise SpanVError(
                "%d leg matches at %r, need exactly one" % (len(matches), c))
        assignment[c] = matches[0]
    morphism = SpanMorphism(s, t, FinFn(s.apex, t.apex, assignment))
    return relabel_cell2(source, target, morphism)


# ---------------------------------------------------------------------------
# Monoid objects on a carrier.


@dataclass(frozen=True)
class MonoidalFiber:
    """Per-point base data: the fiber with its tensor and unit 1-cells."""

    obj: object
    tensor: object
    unit: object


def trivial_fibers(X, be):
    """The fiber assignment labeling everything by the base unit."""
    if isinstance(be, CatBackend):
        one = be.unit0()
        fib = MonoidalFiber(
            one,
            _structural_functor(be.tensor0v(one, one), one, lambda t: t[0]),
            cb.FunctorData.identity(one))
    else:
        k = be.id1(be.unit0())
        fib = MonoidalFiber(be.unit0(), k, k)
    return {x: fib for x in X}


@dataclass(frozen=True)
class MonoidaleData:
    """A monoid object: multiplication and unit 1-cells with coherence.

    alpha : m o (m . 1)  =>  (m o (1 . m)) o assoc
    lam   : m o (u . 1)  =>  left projection
    rho   : m o (1 . u)  =>  right projection
    """

    base: Cell0
    m: Cell1
    u: Cell1
    alpha: Cell2
    lam: Cell2
    rho: Cell2

    def __post_init__(self):
        be = self.base.backend
        if self.m.src != tensor0(self.base, self.base) or self.m.tgt != self.base:
            raise SpanVError("multiplication must go base . base -> base")
        if self.u.src != unit_cell0(be) or self.u.tgt != self.base:
            raise SpanVError("unit must go K -> base")


@dataclass(frozen=True)
class InducedMonoidale(MonoidaleData):
    """The diagonal-span monoid object on a carrier set."""

    carrier: FinSet = None


def induced_monoidale(X, be, fibers=None):
    """The monoid object on X: m is the reversed diagonal span, u the
    reversed collapse span.  fibers, when given, assigns each point a
    MonoidalFiber whose tensor must be strict; by default everything is
    labeled with the base unit."""
    if fibers is None:
        fibers = trivial_fibers(X, be)
    base = Cell0(be, X, {x: fibers[x].obj for x in X})
    squared = tensor0(base, base)
    diag = FinFn(X, squared.carrier, {x: (x, x) for x in X})
    m = Cell1(be, squared, base,
              Span(squared.carrier, X, X, FinFn.identity(X), diag),
              {x: fibers[x].tensor for x in X})
    k0 = unit_cell0(be)
    bang = FinFn.constant(X, k0.carrier, "*")
    u = Cell1(be, k0, base,
              Span(k0.carrier, X, X, FinFn.identity(X), bang),
              {x: fibers[x].unit for x in X})
    idc = identity_cell1(base)
    alpha = unique_relabel_cell2(
        hcomp1(m, tensor1(m, idc)),
        hcomp1(hcomp1(m, tensor1(idc, m)),
               tensor_associator_cell1(base, base, base)))
    lam = unique_relabel_cell2(hcomp1(m, tensor1(u, idc)),
                               tensor_left_unitor_cell1(base))
    rho = unique_relabel_cell2(hcomp1(m, tensor1(idc, u)),
                               tensor_right_unitor_cell1(base))
    return InducedMonoidale(base, m, u, alpha, lam, rho, carrier=X)


def check_monoidale(mon):
    """Verify the coherence data of a monoid object.

    Boundaries and invertibility of alpha/lam/rho, agreement with the
    forced cells, then the pentagon and triangle in the reduced form of
    the module docstring: both composite chains between explicitly
    bracketed 1-cells, compared with eq2.
    """
    report = CheckReport("monoidale")
    A = mon.base
    idc = identity_cell1(A)
    AA = tensor0(A, A)

    shapes = [
        ("alpha", mon.alpha,
         lambda: hcomp1(mon.m, tensor1(mon.m, idc)),
         lambda: hcomp1(hcomp1(mon.m, tensor1(idc, mon.m)),
                        tensor_associator_cell1(A, A, A))),
        ("lam", mon.lam,
         lambda: hcomp1(mon.m, tensor1(mon.u, idc)),
         lambda: tensor_left_unitor_cell1(A)),
        ("rho", mon.rho,
         lambda: hcomp1(mon.m, tensor1(idc, mon.u)),
         lambda: tensor_right_unitor_cell1(A)),
    ]
    for name, cell, mk_source, mk_target in shapes:
        source, target = mk_source(), mk_target()
        if cell.source != source or cell.target != target:
            report.fail(name + " boundary", "does not match canonical shape")
            continue
        res = invert_cell2(cell)
        if not res:
            report.fail(name + " invertible", res.witness)
        try:
            forced = unique_relabel_cell2(source, target)
        except SpanVError as e:
            report.fail(name + " forced", str(e))
            continue
        verdict = eq2(cell, forced)
        if not verdict:
            report.fail(name + " canonical", verdict.witness)
    if not report.ok:
        return report

    a3 = tensor_associator_cell1(A, A, A)
    v1 = hcomp1(hcomp1(mon.m, tensor1(mon.m, idc)),
                tensor1(tensor1(mon.m, idc), idc))
    v5 = hcomp1(hcomp1(mon.m, tensor1(idc, mon.m)),
                tensor1(idc, tensor1(idc, mon.m)))
    chain_short = hcomp1(tensor_associator_cell1(A, A, AA),
                         tensor_associator_cell1(AA, A, A))
    chain_long = hcomp1(hcomp1(tensor1(idc, a3),
                               tensor_associator_cell1(A, AA, A)),
                        tensor1(a3, idc))
    try:
        target_a = hcomp1(v5, chain_short)
        target_b = hcomp1(v5, chain_long)
        r1 = unique_relabel_cell2(v1, target_a)
        r2 = unique_relabel_cell2(v1, target_b)
        t = unique_relabel_cell2(target_a, target_b)
        verdict = eq2(vcomp2(t, r1), r2)
    except SpanVError as e:
        verdict = Verdict(False, witness=str(e))
    if not verdict:
        report.fail("pentagon", verdict.witness)

    w = hcomp1(hcomp1(mon.m, tensor1(mon.m, idc)),
               tensor1(tensor1(idc, mon.u), idc))
    side_a = hcomp1(mon.m, tensor1(tensor_right_unitor_cell1(A), idc))
    side_b = hcomp1(hcomp1(mon.m, tensor1(idc, tensor_left_unitor_cell1(A))),
                    tensor_associator_cell1(A, unit_cell0(A.backend), A))
    try:
        ra = unique_relabel_cell2(w, side_a)
        rb = unique_relabel_cell2(w, side_b)
        tt = unique_relabel_cell2(side_a, side_b)
        verdict = eq2(vcomp2(tt, ra), rb)
    except SpanVError as e:
        verdict = Verdict(False, witness=str(e))
    if not verdict:
        report.fail("triangle", verdict.witness)
    return report


# ---------------------------------------------------------------------------
# The adjoints of the induced multiplication and unit.


@dataclass(frozen=True)
class ComonoidaleData:
    """A comonoid object: comultiplication d and counit e."""

    base: Cell0
    d: Cell1
    e: Cell1

    def __post_init__(self):
        be = self.base.backend
        if self.d.src != self.base or self.d.tgt != tensor0(self.base, self.base):
            raise SpanVError("comultiplication must go base -> base . base")
        if self.e.src != self.base or self.e.tgt != unit_cell0(be):
            raise SpanVError("counit must go base -> K")


def induced_comonoidale(X, be, fibers=None):
    """The diagonal-span comonoid object on X (the reverses of the
    induced monoid 1-cells)."""
    if fibers is None:
        fibers = trivial_fibers(X, be)
    base = Cell0(be, X, {x: fibers[x].obj for x in X})
    squared = tensor0(base, base)
    diag = FinFn(X, squared.carrier, {x: (x, x) for x in X})
    if isinstance(be, CatBackend):
        d_labels = {x: _structural_functor(
            fibers[x].obj, be.tensor0v(fibers[x].obj, fibers[x].obj),
            lambda t: (t, t)) for x in X}
        e_labels = {x: _collapse_functor(fibers[x].obj, be.unit0()) for x in X}
    else:
        d_labels = {x: be.id1(fibers[x].obj) for x in X}
        e_labels = dict(d_labels)
    d = Cell1(be, base, squared,
              Span(X, squared.carrier, X, diag, FinFn.identity(X)), d_labels)
    k0 = unit_cell0(be)
    bang = FinFn.constant(X, k0.carrier, "*")
    e = Cell1(be, base, k0,
              Span(X, k0.carrier, X, bang, FinFn.identity(X)), e_labels)
    return ComonoidaleData(base, d, e)


@dataclass(frozen=True)
class OpmapAdjunctions:
    """m_star -| m and u_star -| u for the induced monoid object."""

    monoidale: InducedMonoidale
    m_star: Cell1
    u_star: Cell1
    m_unit: Cell2
    m_counit: Cell2
    u_unit: Cell2
    u_counit: Cell2


def opmap_adjunctions(X, be):
    """The left adjoints of the induced multiplication and unit, with
    their unit and counit 2-cells (all forced relabelings)."""
    mon = induced_monoidale(X, be)
    com = induced_comonoidale(X, be)
    m_star, u_star = com.d, com.e
    idc = identity_cell1(mon.base)
    return OpmapAdjunctions(
        mon, m_star, u_star,
        m_unit=unique_relabel_cell2(idc, hcomp1(mon.m, m_star)),
        m_counit=unique_relabel_cell2(hcomp1(m_star, mon.m),
                                      identity_cell1(mon.m.src)),
        u_unit=unique_relabel_cell2(idc, hcomp1(mon.u, u_star)),
        u_counit=unique_relabel_cell2(hcomp1(u_star, mon.u),
                                      identity_cell1(mon.u.src)))


def _triangle_left(left, right, unit, counit):
    """(counit o 1) . (1 o unit) = 1 on the left adjoint, with unitors."""
    start = invert_cell2(right_unitor_cell2(left)).inverse
    insert = hcomp2(identity_cell2(left), unit)
    rebracket = invert_cell2(
        associator_cell2(left, right, left)).inverse
    collapse = hcomp2(counit, identity_cell2(left))
    finish = left_unitor_cell2(left)
    cell = vcomp2(finish, vcomp2(collapse, vcomp2(rebracket,
                                                  vcomp2(insert, start))))
    return eq2(cell, identity_cell2(left))


def _triangle_right(left, right, unit, counit):
    """(1 o counit) . (unit o 1) = 1 on the right adjoint, with unitors."""
    start = invert_cell2(left_unitor_cell2(right)).inverse
    insert = hcomp2(unit, identity_cell2(right))
    rebracket = associator_cell2(right, left, right)
    collapse = hcomp2(identity_cell2(right), counit)
    finish = right_unitor_cell2(right)
    cell = vcomp2(finish, vcomp2(collapse, vcomp2(rebracket,
                                                  vcomp2(insert, start))))
    return eq2(cell, identity_cell2(right))


def check_adjunction_triangles(adj):
    """Both zigzag identities for both adjunctions, as exact 2-cell
    equalities."""
    report = CheckReport("opmap adjunctions")
    mon = adj.monoidale
    for name, left, right, unit, counit in [
            ("m", adj.m_star, mon.m, adj.m_unit, adj.m_counit),
            ("u", adj.u_star, mon.u, adj.u_unit, adj.u_counit)]:
        verdict = _triangle_left(left, right, unit, counit)
        if not verdict:
            report.fail(name + "-adjunction left triangle", verdict.witness)
        verdict = _triangle_right(left, right, unit, counit)
        if not verdict:
            report.fail(name + "-adjunction right triangle", verdict.witness)
    return report


# ---------------------------------------------------------------------------
# The Frobenius comparison 2-cells.


def _alpha_reversed(mon):
    """m o (1 . m)  =>  (m o (m . 1)) o reverse-assoc, derived from alpha.

    Whisker alpha with the reverse regrouping cell, collapse the
    regroup/ungroup pair with its forced cell, and invert.
    """
    A = mon.base
    idc = identity_cell1(A)
    a_fwd = tensor_associator_cell1(A, A, A)
    a_rev = tensor_associator_inv_cell1(A, A, A)
    right_side = hcomp1(mon.m, tensor1(idc, mon.m))
    w = hcomp2(mon.alpha, identity_cell2(a_rev))
    w = vcomp2(associator_cell2(right_side, a_fwd, a_rev), w)
    collapse = unique_relabel_cell2(hcomp1(a_fwd, a_rev),
                                    identity_cell1(a_rev.src))
    w = vcomp2(hcomp2(identity_cell2(right_side), collapse), w)
    w = vcomp2(right_unitor_cell2(right_side), w)
    res = invert_cell2(w)
    if not res:
        raise SpanVError("reversed coherence is not invertible: %r"
                         % (res.witness,))
    return res.inverse


def _frobenius_shared_prefix(adj, mirrored):
    """The opening moves of both mate composites: pad with the identity,
    insert the adjunction unit on one tensor factor, split off the
    composite with the inverse interchange cell, and rebracket so the
    multiplication sits next to its freshly inserted partner.

    Returns (prefix 2-cell, the tensored m_star 1-cell it ends against).
    """
    mon = adj.monoidale
    A = mon.base
    idc = identity_cell1(A)
    s0 = hcomp1(adj.m_star, mon.m)
    mm = hcomp1(mon.m, adj.m_star)
    if mirrored:
        pad = tensor2(identity_cell2(idc), adj.m_unit)
        split = invert_cell2(
            interchange_cell2(idc, mon.m, idc, adj.m_star)).inverse
        fixup = tensor2(invert_cell2(left_unitor_cell2(idc)).inverse,
                        identity_cell2(mm))
        inner = tensor1(idc, mon.m)
        outer = tensor1(idc, adj.m_star)
    else:
        pad = tensor2(adj.m_unit, identity_cell2(idc))
        split = invert_cell2(
            interchange_cell2(mon.m, idc, adj.m_star, idc)).inverse
        fixup = tensor2(identity_cell2(mm),
                        invert_cell2(left_unitor_cell2(idc)).inverse)
        inner = tensor1(mon.m, idc)
        outer = tensor1(adj.m_star, idc)
    cell = invert_cell2(right_unitor_cell2(s0)).inverse
    cell = vcomp2(hcomp2(identity_cell2(s0), pad), cell)
    cell = vcomp2(hcomp2(identity_cell2(s0), vcomp2(split, fixup)), cell)
    cell = vcomp2(invert_cell2(associator_cell2(s0, inner, outer)).inverse,
                  cell)
    cell = vcomp2(hcomp2(associator_cell2(adj.m_star, mon.m, inner),
                         identity_cell2(outer)), cell)
    return cell, outer


def _frobenius_core(adj, mirrored):
    """m_star o (m o (m-bracket))  =>  (1-bracket) o regroup: the part of
    the mate where the coherence cell fires and the counit collapses."""
    steps = _core_steps(adj, mirrored)
    cell = steps[0]
    for step in steps[1:]:
        cell = vcomp2(step, cell)
    return cell


def frobenius_comparison_cells(adj, convention="unit-first"):
    """The two mate composites m_star o m => (1 . m) o assoc o (m_star . 1)
    and its mirror with (m . 1) and reverse-assoc.

    Under "unit-first" every whiskering is a separate vertical step; under
    "counit-first" the coherence-and-counit core is assembled first and
    applied in one whiskered step.  Both conventions build the same
    pasting and the results are compared in check_frobenius.
    """
    if convention not in ("unit-first", "counit-first"):
        raise SpanVError("unknown mate convention %r" % (convention,))
    cells = []
    for mirrored in (False, True):
        prefix, outer = _frobenius_shared_prefix(adj, mirrored)
        core = _frobenius_core(adj, mirrored)
        if convention == "counit-first":
            cells.append(vcomp2(hcomp2(core, identity_cell2(outer)), prefix))
            continue
        # Replay the core step by step against the whiskered boundary.
        steps = _core_steps(adj, mirrored)
        cell = prefix
        for step in steps:
            cell = vcomp2(hcomp2(step, identity_cell2(outer)), cell)
        cells.append(cell)
    return tuple(cells)


def _core_steps(adj, mirrored):
    """The individual vertical steps making up _frobenius_core."""
    mon = adj.monoidale
    A = mon.base
    idc = identity_cell1(A)
    if mirrored:
        coherence = _alpha_reversed(mon)
        regroup = tensor_associator_inv_cell1(A, A, A)
        freed = tensor1(mon.m, idc)
    else:
        coherence = mon.alpha
        regroup = tensor_associator_cell1(A, A, A)
        freed = tensor1(idc, mon.m)
    return [
        hcomp2(identity_cell2(adj.m_star), coherence),
        invert_cell2(associator_cell2(
            adj.m_star, hcomp1(mon.m, freed), regroup)).inverse,
        hcomp2(invert_cell2(associator_cell2(
            adj.m_star, mon.m, freed)).inverse, identity_cell2(regroup)),
        hcomp2(hcomp2(adj.m_counit, identity_cell2(freed)),
               identity_cell2(regroup)),
        hcomp2(left_unitor_cell2(freed), identity_cell2(regroup)),
    ]


def check_frobenius(X, be, adj=None):
    """Build both Frobenius comparison cells in both mate conventions and
    verify invertibility; also re-checks the adjunction triangles so a
    corrupted unit or counit is located by name."""
    if adj is None:
        adj = opmap_adjunctions(X, be)
    report = CheckReport("frobenius")
    report.merge(check_adjunction_triangles(adj))
    try:
        first = frobenius_comparison_cells(adj, "unit-first")
        second = frobenius_comparison_cells(adj, "counit-first")
    except SpanVError as e:
        report.fail("comparison construction", str(e))
        return report
    for side, cell, cell2 in [("left", first[0], second[0]),
                              ("right", first[1], second[1])]:
        res = invert_cell2(cell)
        if not res:
            report.fail(side + " comparison invertible (unit-first)",
                        res.witness)
        res = invert_cell2(cell2)
        if not res:
            report.fail(side + " comparison invertible (counit-first)",
                        res.witness)
        verdict = eq2(cell, cell2)
        if not verdict:
            report.fail(side + " mate conventions agree", verdict.witness)
    return report


# ---------------------------------------------------------------------------
# Convolution of parallel 1- and 2-cells.


def _star_composite(b, a, com, mon):
    """The raw convolution composite m o (b . a) o d, its normalized
    presentation on plain leg-matched pairs, and the relabeling between
    them."""
    composite = hcomp1(hcomp1(mon.m, tensor1(b, a)), com.d)
    pairs, labels, assignment = [], {}, {}
    for big in composite.span.apex:
        ((_, pair), _) = big
        pairs.append(pair)
        labels[pair] = composite.label[big]
        assignment[big] = pair
    apex = FinSet(pairs)
    span = Span(a.src.carrier, a.tgt.carrier, apex,
                FinFn(apex, a.tgt.carrier, {(c, h): b.span.left(c)
                                            for (c, h) in apex}),
                FinFn(apex, a.src.carrier, {(c, h): b.span.right(c)
                                            for (c, h) in apex}))
    normalized = Cell1(b.backend, a.src, a.tgt, span, labels)
    normalizer = relabel_cell2(
        composite, normalized,
        SpanMorphism(composite.span, span,
                     FinFn(composite.span.apex, apex, assignment)))
    return composite, normalized, normalizer


def _star_context(b, a, com, mon):
    if (com is None) != (mon is None):
        raise SpanVError("convolution needs both or neither structure cell")
    if com is None:
        be = b.backend
        com = induced_comonoidale(b.src.carrier, be)
        mon = induced_monoidale(b.tgt.carrier, be)
    return com, mon


def star1(b, a, com=None, mon=None):
    """The convolution b * a of parallel 1-cells: apex pairs with equal
    legs, labeled m o (b(c) . a(h)) o d.  With the default diagonal
    structures over a one-object base this is just the label tensor."""
    if b.src != a.src or b.tgt != a.tgt:
        raise SpanVError("convolution needs parallel 1-cells")
    com, mon = _star_context(b, a, com, mon)
    _, normalized, _ = _star_composite(b, a, com, mon)
    return normalized


def star2(v, u, com=None, mon=None):
    """The convolution of parallel 2-cells: the whiskered composite
    1 o (v . u) o 1, transported to the normalized presentations."""
    com, mon = _star_context(v.source, u.source, com, mon)
    _, _, n_source = _star_composite(v.source, u.source, com, mon)
    _, _, n_target = _star_composite(v.target, u.target, com, mon)
    big = hcomp2(hcomp2(identity_cell2(mon.m), tensor2(v, u)),
                 identity_cell2(com.d))
    opened = invert_cell2(n_source)
    if not opened:
        raise SpanVError("convolution presentation is not invertible: %r"
                         % (opened.witness,))
    return vcomp2(n_target, vcomp2(big, opened.inverse))


def complete_unit_cell1(src0, tgt0):
    """The convolution unit between two 0-cells: the complete span with
    identity-like labels (requires matching base labels pointwise)."""
    be = src0.backend
    span = Span.complete(src0.carrier, tgt0.carrier)
    label = {}
    for (p, q) in span.apex:
        if not be.eq0(src0.label[q], tgt0.label[p]):
            raise SpanVError("no canonical unit label at %r" % ((p, q),))
        label[(p, q)] = be.id1(src0.label[q])
    return Cell1(be, src0, tgt0, span, label)


def star_associator_cell2(c, b, a):
    """(c * b) * a  =>  c * (b * a), identity components."""
    lhs = star1(star1(c, b), a)
    rhs = star1(c, star1(b, a))
    assignment = {((p, q), r): (p, (q, r)) for ((p, q), r) in lhs.span.apex}
    return relabel_cell2(lhs, rhs,
                         SpanMorphism(lhs.span, rhs.span,
                                      FinFn(lhs.span.apex, rhs.span.apex,
                                            assignment)))


def star_left_unitor_cell2(a):
    """J * a  =>  a, dropping the forced complete-span component."""
    j = complete_unit_cell1(a.src, a.tgt)
    lhs = star1(j, a)
    assignment = {(p, h): h for (p, h) in lhs.span.apex}
    return relabel_cell2(lhs, a,
                         SpanMorphism(lhs.span, a.span,
                                      FinFn(lhs.span.apex, a.span.apex,
                                            assignment)))


def star_right_unitor_cell2(a):
    """a * J  =>  a."""
    j = complete_unit_cell1(a.src, a.tgt)
    lhs = star1(a, j)
    assignment = {(h, p): h for (h, p) in lhs.span.apex}
    return relabel_cell2(lhs, a,
                         SpanMorphism(lhs.span, a.span,
                                      FinFn(lhs.span.apex, a.span.apex,
                                            assignment)))


# ---------------------------------------------------------------------------
# The duoidal structure on endo-hom cells.


@dataclass(frozen=True)
class DuoidalUnits:
    """Units and structure maps tying composition to convolution."""

    i: Cell1
    j: Cell1
    mu_j: Cell2
    delta_i: Cell2
    iota_ij: Cell2


def duoidal_units(X, be):
    """I (identity span), J (complete span), the J-multiplication, the
    I-comultiplication, and the diagonal comparison I => J."""
    fibers = trivial_fibers(X, be)
    base = Cell0(be, X, {x: fibers[x].obj for x in X})
    i = identity_cell1(base)
    j = complete_unit_cell1(base, base)
    mu_j = unique_relabel_cell2(hcomp1(j, j), j)
    delta_i = unique_relabel_cell2(i, star1(i, i))
    iota_ij = unique_relabel_cell2(i, j)
    return DuoidalUnits(i, j, mu_j, delta_i, iota_ij)


def duoidal_interchange(a, b, h, d):
    """(a * b) o (h * d)  =>  (a o h) * (b o d).

    The span map regroups the leg-matched quadruple; each component is
    the base middle-four cell, which carries the braiding over a graded
    one-object base.
    """
    for cell in (a, b, h, d):
        if cell.src != a.src or cell.tgt != a.src:
            raise SpanVError("interchange needs endo-cells on one carrier")
    be = a.backend
    lhs = hcomp1(star1(a, b), star1(h, d))
    rhs = star1(hcomp1(a, h), hcomp1(b, d))
    assignment = {((p, q), (v, w)): ((p, v), (q, w))
                  for ((p, q), (v, w)) in lhs.span.apex}
    morphism = SpanMorphism(lhs.span, rhs.span,
                            FinFn(lhs.span.apex, rhs.span.apex, assignment))
    comps = {((p, q), (v, w)): be.mid4(a.label[p], b.label[q],
                                       h.label[v], d.label[w])
             for ((p, q), (v, w)) in lhs.span.apex}
    return Cell2(lhs, rhs, morphism, comps)


@dataclass(frozen=True)
class DuoidalHom:
    """The endo-hom on a carrier with its two products and units."""

    carrier: FinSet
    backend: Backend
    base: Cell0
    units: DuoidalUnits
    comonoidale: ComonoidaleData
    monoidale: InducedMonoidale

    def compose(self, b, a):
        return hcomp1(b, a)

    def star(self, b, a):
        return star1(b, a)


def duoidal_hom(X, be):
    units = duoidal_units(X, be)
    return DuoidalHom(X, be, units.i.src, units,
                      induced_comonoidale(X, be), induced_monoidale(X, be))


def _take(cells, n, offset=0):
    return [cells[(offset + k) % len(cells)] for k in range(n)]


def check_duoidal(hom, cells):
    """All structure-morphism axioms of the two-product structure.

    J is a monoid for composition, I a comonoid for convolution, the
    interchange cell is associative against both products and compatible
    with all four units; the product-shape checks run over the supplied
    endo 1-cells.
    """
    if not cells:
        raise SpanVError("need at least one sample cell")
    report = CheckReport("duoidal")
    un = hom.units
    i, j = un.i, un.j

    left = vcomp2(un.mu_j, hcomp2(un.mu_j, identity_cell2(j)))
    right = vcomp2(un.mu_j, hcomp2(identity_cell2(j), un.mu_j))
    verdict = eq2(vcomp2(right, associator_cell2(j, j, j)), left)
    if not verdict:
        report.fail("J multiplication associative", verdict.witness)
    verdict = eq2(vcomp2(un.mu_j, hcomp2(un.iota_ij, identity_cell2(j))),
                  left_unitor_cell2(j))
    if not verdict:
        report.fail("J left unit", verdict.witness)
    verdict = eq2(vcomp2(un.mu_j, hcomp2(identity_cell2(j), un.iota_ij)),
                  right_unitor_cell2(j))
    if not verdict:
        report.fail("J right unit", verdict.witness)

    left = vcomp2(star2(un.delta_i, identity_cell2(i)), un.delta_i)
    right = vcomp2(star2(identity_cell2(i), un.delta_i), un.delta_i)
    verdict = eq2(left, right, transport=(star_associator_cell2(i, i, i),))
    if not verdict:
        report.fail("I comultiplication coassociative", verdict.witness)
    verdict = eq2(vcomp2(star2(un.iota_ij, identity_cell2(i)), un.delta_i),
                  identity_cell2(i),
                  transport=(star_left_unitor_cell2(i),))
    if not verdict:
        report.fail("I left counit", verdict.witness)
    verdict = eq2(vcomp2(star2(identity_cell2(i), un.iota_ij), un.delta_i),
                  identity_cell2(i),
                  transport=(star_right_unitor_cell2(i),))
    if not verdict:
        report.fail("I right counit", verdict.witness)

    for offset in range(min(len(cells), 3)):
        a, b, h, d, f, e = _take(cells, 6, offset)
        route1 = vcomp2(
            duoidal_interchange(hcomp1(a, h), hcomp1(b, d), f, e),
            hcomp2(duoidal_interchange(a, b, h, d),
                   identity_cell2(star1(f, e))))
        route2 = vcomp2(
            duoidal_interchange(a, b, hcomp1(h, f), hcomp1(d, e)),
            vcomp2(hcomp2(identity_cell2(star1(a, b)),
                          duoidal_interchange(h, d, f, e)),
                   associator_cell2(star1(a, b), star1(h, d), star1(f, e))))
        verdict = eq2(route1, route2,
                      transport=(star2(associator_cell2(a, h, f),
                                       associator_cell2(b, d, e)),))
        if not verdict:
            report.fail("interchange vs composition associativity",
                        (offset, verdict.witness))

        a, b, c, h, d, e = _take(cells, 6, offset + 1)
        route1 = vcomp2(
            star2(duoidal_interchange(a, b, h, d),
                  identity_cell2(hcomp1(c, e))),
            duoidal_interchange(star1(a, b), c, star1(h, d), e))
        route2 = vcomp2(
            star2(identity_cell2(hcomp1(a, h)),
                  duoidal_interchange(b, c, d, e)),
            vcomp2(duoidal_interchange(a, star1(b, c), h, star1(d, e)),
                   hcomp2(star_associator_cell2(a, b, c),
                          star_associator_cell2(h, d, e))))
        verdict = eq2(route1, route2,
                      transport=(star_associator_cell2(
                          hcomp1(a, h), hcomp1(b, d), hcomp1(c, e)),))
        if not verdict:
            report.fail("interchange vs convolution associativity",
                        (offset, verdict.witness))

    for offset in range(min(len(cells), 4)):
        a, b = _take(cells, 2, offset)
        ab_star = star1(a, b)
        cell = vcomp2(duoidal_interchange(a, b, i, i),
                      hcomp2(identity_cell2(ab_star), un.delta_i))
        verdict = eq2(vcomp2(star2(right_unitor_cell2(a),
                                   right_unitor_cell2(b)), cell),
                      right_unitor_cell2(ab_star))
        if not verdict:
            report.fail("interchange vs I on the right",
                        (offset, verdict.witness))
        cell = vcomp2(duoidal_interchange(i, i, a, b),
                      hcomp2(un.delta_i, identity_cell2(ab_star)))
        verdict = eq2(vcomp2(star2(left_unitor_cell2(a),
                                   left_unitor_cell2(b)), cell),
                      left_unitor_cell2(ab_star))
        if not verdict:
            report.fail("interchange vs I on the left",
                        (offset, verdict.witness))

        ab = hcomp1(a, b)
        cell = vcomp2(star2(identity_cell2(ab), un.mu_j),
                      duoidal_interchange(a, j, b, j))
        verdict = eq2(vcomp2(star_right_unitor_cell2(ab), cell),
                      hcomp2(star_right_unitor_cell2(a),
                             star_right_unitor_cell2(b)))
        if not verdict:
            report.fail("interchange vs J on the right",
                        (offset, verdict.witness))
        cell = vcomp2(star2(un.mu_j, identity_cell2(ab)),
                      duoidal_interchange(j, a, j, b))
        verdict = eq2(vcomp2(star_left_unitor_cell2(ab), cell),
                      hcomp2(star_left_unitor_cell2(a),
                             star_left_unitor_cell2(b)))
        if not verdict:
            report.fail("interchange vs J on the left",
                        (offset, verdict.witness))
    return report


# ---------------------------------------------------------------------------
# Comonoid-labeled cells.


@dataclass(frozen=True)
class ComonoidLabeledCell:
    """A 1-cell whose every label carries comonoid structure in the base:
    delta[h] : a(h) -> a(h) . a(h) and eps[h] : a(h) -> K."""

    cell: Cell1
    delta: dict
    eps: dict

    def __post_init__(self):
        be = self.cell.backend
        for h in self.cell.span.apex:
            p = self.cell.label[h]
            d, e = self.delta[h], self.eps[h]
            if not be.eq1(be.src2(d), p) or \
                    not be.eq1(be.tgt2(d), be.tensor1v(p, p)):
                raise SpanVError("comultiplication boundary at %r" % (h,))
            if not be.eq1(be.src2(e), p) or \
                    not be.eq1(be.tgt2(e), be.id1(be.unit0())):
                raise SpanVError("counit boundary at %r" % (h,))


def check_comonoid(com):
    """Coassociativity and both counit laws, per apex element."""
    report = CheckReport("comonoid labels")
    be = com.cell.backend
    for h in com.cell.span.apex:
        p = com.cell.label[h]
        d, e = com.delta[h], com.eps[h]
        one = be.id2(p)
        left = be.vcomp(be.tensor2v(d, one), d)
        right = be.vcomp(be.tensor2v(one, d), d)
        if not be.eq2(left, right):
            report.fail("coassociativity", (h, be.first_diff(left, right)))
        if not be.eq2(be.vcomp(be.tensor2v(e, one), d), one):
            report.fail("left counit", h)
        if not be.eq2(be.vcomp(be.tensor2v(one, e), d), one):
            report.fail("right counit", h)
    return report


def comonoid_cells(com):
    """The comultiplication a => a * a and counit a => J induced by
    per-label comonoid structure."""
    a = com.cell
    target = star1(a, a)
    assignment = {h: (h, h) for h in a.span.apex}
    delta2 = Cell2(a, target,
                   SpanMorphism(a.span, target.span,
                                FinFn(a.span.apex, target.span.apex,
                                      assignment)),
                   dict(com.delta))
    j = complete_unit_cell1(a.src, a.tgt)
    assignment = {h: (a.span.left(h), a.span.right(h)) for h in a.span.apex}
    eps2 = Cell2(a, j,
                 SpanMorphism(a.span, j.span,
                              FinFn(a.span.apex, j.span.apex, assignment)),
                 dict(com.eps))
    return delta2, eps2


def grouplike_comonoid(cell):
    """The basis comonoid on every label of a graded-vector cell: each
    basis vector is sent to its own tensor square, the counit is the sum
    of coordinates."""
    be = cell.backend
    if not isinstance(be, VectBackend):
        raise SpanVError("grouplike comonoids need a one-object graded base")
    delta, eps = {}, {}
    for h in cell.span.apex:
        obj = cell.label[h]
        sq = vb.tensor_obj(obj, obj)
        rows = [[vb.ZERO] * obj.dim for _ in range(sq.dim)]
        for k in range(obj.dim):
            rows[k * obj.dim + k][k] = vb.ONE
        delta[h] = vb.VMorphism(obj, sq, rows)
        eps[h] = vb.VMorphism(obj, vb.unit_object(), [[vb.ONE] * obj.dim])
    return ComonoidLabeledCell(cell, delta, eps)


def conjugate_comonoid(com, autos):
    """Transport the comonoid structure along a label automorphism P per
    apex element: delta' = (P . P) o delta o P^-1, eps' = eps o P^-1."""
    be = com.cell.backend
    delta, eps = {}, {}
    for h in com.cell.span.apex:
        p = autos[h]
        res = vb.invert(p)
        if not res:
            raise SpanVError("conjugator at %r is singular" % (h,))
        delta[h] = be.vcomp(be.tensor2v(p, p),
                            be.vcomp(com.delta[h], res.inverse))
        eps[h] = be.vcomp(com.eps[h], res.inverse)
    return ComonoidLabeledCell(com.cell, delta, eps)


# ---------------------------------------------------------------------------
# The one-point carrier, where the two products coincide.


def zunino_braiding(a, b):
    """The swap a * b  =>  b * a over a one-point carrier, with the base
    braiding as components."""
    be = a.backend
    if not isinstance(be, VectBackend):
        raise SpanVError("the braiding needs a one-object graded base")
    lhs, rhs = star1(a, b), star1(b, a)
    assignment = {(c, h): (h, c) for (c, h) in lhs.span.apex}
    comps = {(c, h): be.braid1(a.label[c], b.label[h])
             for (c, h) in lhs.span.apex}
    return Cell2(lhs, rhs,
                 SpanMorphism(lhs.span, rhs.span,
                              FinFn(lhs.span.apex, rhs.span.apex, assignment)),
                 comps)


def zunino_check(X, be, cells):
    """Over a one-point carrier: convolution literally equals composition
    on 1-cells, the unit comparison I => J is invertible, the braiding is
    invertible and natural-free hexagon-coherent on the samples."""
    if len(X) != 1:
        raise SpanVError("the comparison lives over a one-point carrier")
    report = CheckReport("zunino")
    hom = duoidal_hom(X, be)
    res = invert_cell2(hom.units.iota_ij)
    if not res:
        report.fail("unit comparison invertible", res.witness)
    for k, a in enumerate(cells):
        b = cells[(k + 1) % len(cells)]
        c = cells[(k + 2) % len(cells)]
        if star1(b, a) != hcomp1(b, a):
            report.fail("products agree", k)
        braid = zunino_braiding(a, b)
        res = invert_cell2(braid)
        if not res:
            report.fail("braiding invertible", (k, res.witness))

        bc = star1(b, c)
        direct = zunino_braiding(a, bc)
        onestep = vcomp2(
            invert_cell2(star_associator_cell2(b, c, a)).inverse,
            vcomp2(star2(identity_cell2(b), zunino_braiding(a, c)),
                   vcomp2(star_associator_cell2(b, a, c),
                          star2(zunino_braiding(a, b),
                                identity_cell2(c)))))
        lhs = vcomp2(direct, star_associator_cell2(a, b, c))
        verdict = eq2(lhs, onestep)
        if not verdict:
            report.fail("hexagon", (k, verdict.witness))
    return report
