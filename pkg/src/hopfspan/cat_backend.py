"""Finite categories, functors, natural transformations, lazy categories.

FinCategory stores a dense composition table keyed by composable morphism
pairs (g, f) with tgt(f) = src(g); the table value is g after f.  Category
axioms are verified at construction unless check=False is passed, in which
case check_category can be used to collect every violation.

LazyCategory wraps a category too big to materialize (here: graded rational
vector spaces) behind procedures, and verifies the axioms on a finite list
of probe objects and morphisms only.
"""

from dataclasses import dataclass, field

from .finset_span import FinSet, FinFn
from .reporting import CheckReport, Verdict
from .vect_backend import (
    VMorphism, braiding, tensor_mor, tensor_obj, unit_object,
)


class CatError(ValueError):
    """Raised for malformed categorical data, with a located witness."""


@dataclass(frozen=True)
class FinCategory:
    objects: FinSet
    morphisms: FinSet
    src: FinFn
    tgt: FinFn
    identities: FinFn
    composition: dict = field(compare=False)

    def __init__(self, objects, morphisms, src, tgt, identities, composition,
                 check=True):
        object.__setattr__(self, "objects", objects)
        object.__setattr__(self, "morphisms", morphisms)
        object.__setattr__(self, "src", src)
        object.__setattr__(self, "tgt", tgt)
        object.__setattr__(self, "identities", identities)
        object.__setattr__(self, "composition", dict(composition))
        if check:
            report = check_category(self)
            if not report.ok:
                raise CatError(report.summary())

    def __eq__(self, other):
        return (isinstance(other, FinCategory)
                and self.objects == other.objects
                and self.morphisms == other.morphisms
                and self.src == other.src and self.tgt == other.tgt
                and self.identities == other.identities
                and self.composition == other.composition)

    def __hash__(self):
        return hash((self.objects, self.morphisms))

    def compose(self, g, f):
        """g after f."""
        if self.tgt(f) != self.src(g):
            raise CatError("morphisms %r, %r are not composable" % (g, f))
        return self.composition[(g, f)]

    def identity(self, x):
        return self.identities(x)

    def composable_pairs(self):
        return [(g, f) for g in self.morphisms for f in self.morphisms
                if self.tgt(f) == self.src(g)]

    def hom(self, x, y):
        return [m for m in self.morphisms
                if self.src(m) == x and self.tgt(m) == y]

    @staticmethod
    def from_monoid(elements, mul, unit, obj="*"):
        """One-object category from a multiplication table dict (a,b) -> ab."""
        objects = FinSet([obj])
        morphisms = FinSet(elements)
        src = FinFn.constant(morphisms, objects, obj)
        tgt = FinFn.constant(morphisms, objects, obj)
        identities = FinFn(objects, morphisms, {obj: unit})
        composition = {(g, f): mul[(g, f)] for g in morphisms for f in morphisms}
        return FinCategory(objects, morphisms, src, tgt, identities, composition)

    @staticmethod
    def indiscrete(objects):
        """Exactly one morphism (x, y): x -> y between any two objects."""
        objects = FinSet(objects)
        morphisms = FinSet([(x, y) for x in objects for y in objects])
        src = FinFn(morphisms, objects, {(x, y): x for (x, y) in morphisms})
        tgt = FinFn(morphisms, objects, {(x, y): y for (x, y) in morphisms})
        identities = FinFn(objects, morphisms, {x: (x, x) for x in objects})
        composition = {((y, z), (x, y2)): (x, z)
                       for (y, z) in morphisms for (x, y2) in morphisms
                       if y2 == y}
        return FinCategory(objects, morphisms, src, tgt, identities, composition)

    @staticmethod
    def discrete(objects):
        """Identity morphisms only."""
        objects = FinSet(objects)
        morphisms = FinSet([("id", x) for x in objects])
        src = FinFn(morphisms, objects, {m: m[1] for m in morphisms})
        tgt = FinFn(morphisms, objects, {m: m[1] for m in morphisms})
        identities = FinFn(objects, morphisms, {x: ("id", x) for x in objects})
        composition = {(m, m): m for m in morphisms}
        return FinCategory(objects, morphisms, src, tgt, identities, composition)


def check_category(c):
    """Collect every violation of the category axioms in c."""
    report = CheckReport("category axioms")
    for x in c.objects:
        i = c.identities(x)
        if c.src(i) != x or c.tgt(i) != x:
            report.fail("identity endpoints", x)
    for (g, f) in c.composition:
        if c.tgt(f) != c.src(g):
            report.fail("table entry on non-composable pair", (g, f))
    for (g, f) in c.composable_pairs():
        if (g, f) not in c.composition:
            report.fail("missing composite", (g, f))
            continue
        gf = c.composition[(g, f)]
        if gf not in c.morphisms:
            report.fail("composite not a morphism", (g, f))
        elif c.src(gf) != c.src(f) or c.tgt(gf) != c.tgt(g):
            report.fail("composite endpoints", (g, f))
    if not report.ok:
        return report
    for f in c.morphisms:
        if c.composition[(c.identities(c.tgt(f)), f)] != f:
            report.fail("left identity", f)
        if c.composition[(f, c.identities(c.src(f)))] != f:
            report.fail("right identity", f)
    for (g, f) in c.composable_pairs():
        for h in c.morphisms:
            if c.tgt(g) == c.src(h):
                if c.composition[(c.composition[(h, g)], f)] != \
                        c.composition[(h, c.composition[(g, f)])]:
                    report.fail("associativity", (h, g, f))
    return report


def is_groupoid(c):
    """True iff every morphism has a two-sided inverse."""
    for m in c.morphisms:
        x, y = c.src(m), c.tgt(m)
        if not any(c.composition.get((n, m)) == c.identities(x)
                   and c.composition.get((m, n)) == c.identities(y)
                   for n in c.hom(y, x)):
            return Verdict(False, witness=m)
    return Verdict(True)


@dataclass(frozen=True)
class FunctorData:
    dom: FinCategory
    cod: FinCategory
    omap: FinFn
    mmap: FinFn

    def __post_init__(self):
        for m in self.dom.morphisms:
            fm = self.mmap(m)
            if self.cod.src(fm) != self.omap(self.dom.src(m)) or \
                    self.cod.tgt(fm) != self.omap(self.dom.tgt(m)):
                raise CatError("functor breaks endpoints at %r" % (m,))
        for x in self.dom.objects:
            if self.mmap(self.dom.identities(x)) != \
                    self.cod.identities(self.omap(x)):
                raise CatError("functor breaks identity at %r" % (x,))
        for (g, f) in self.dom.composable_pairs():
            if self.mmap(self.dom.composition[(g, f)]) != \
                    self.cod.composition[(self.mmap(g), self.mmap(f))]:
                raise CatError("functor breaks composition at %r" % ((g, f),))

    @staticmethod
    def identity(c):
        return FunctorData(c, c, FinFn.identity(c.objects),
                           FinFn.identity(c.morphisms))

    def then(self, other):
        """other after self."""
        return FunctorData(self.dom, other.cod,
                           other.omap.compose(self.omap),
                           other.mmap.compose(self.mmap))


@dataclass(frozen=True)
class NatTransData:
    source: FunctorData
    target: FunctorData
    components: dict = field(compare=False)

    def __post_init__(self):
        F, G = self.source, self.target
        if F.dom != G.dom or F.cod != G.cod:
            raise CatError("natural transformation endpoints must agree")
        cod = F.cod
        for x in F.dom.objects:
            n = self.components[x]
            if cod.src(n) != F.omap(x) or cod.tgt(n) != G.omap(x):
                raise CatError("component endpoints at %r" % (x,))
        for m in F.dom.morphisms:
            x, y = F.dom.src(m), F.dom.tgt(m)
            left = cod.composition[(self.components[y], F.mmap(m))]
            right = cod.composition[(G.mmap(m), self.components[x])]
            if left != right:
                raise CatError("naturality fails at %r" % (m,))

    def __eq__(self, other):
        return (isinstance(other, NatTransData)
                and self.source == other.source and self.target == other.target
                and all(self.components[x] == other.components[x]
                        for x in self.source.dom.objects))

    def __hash__(self):
        return hash((self.source, self.target))

    @staticmethod
    def identity(F):
        return NatTransData(F, F, {x: F.cod.identities(F.omap(x))
                                   for x in F.dom.objects})

    def vcomp(self, other):
        """other after self (same functor boundary chain)."""
        cod = self.source.cod
        comps = {x: cod.composition[(other.components[x], self.components[x])]
                 for x in self.source.dom.objects}
        return NatTransData(self.source, other.target, comps)

    def hcomp(self, other):
        """Horizontal composite: self: F => G on C -> D, other: H => K on
        D -> E; result H.F => K.G with component K(self_x) after other_{F x}."""
        F, G = self.source, self.target
        H, K = other.source, other.target
        E = H.cod
        comps = {x: E.composition[(K.mmap(self.components[x]),
                                   other.components[F.omap(x)])]
                 for x in F.dom.objects}
        return NatTransData(F.then(H), G.then(K), comps)


def nat_is_iso(n):
    """True iff every component has a two-sided inverse in the codomain."""
    cod = n.source.cod
    for x in n.source.dom.objects:
        m = n.components[x]
        sx, tx = cod.src(m), cod.tgt(m)
        if not any(cod.composition.get((p, m)) == cod.identities(sx)
                   and cod.composition.get((m, p)) == cod.identities(tx)
                   for p in cod.hom(tx, sx)):
            return Verdict(False, witness=x)
    return Verdict(True)


@dataclass
class LazyCategory:
    """A category given by procedures, verified on probes only."""

    name: str
    src: object
    tgt: object
    compose: object
    identity: object
    probe_objects: list
    probe_morphisms: list
    eq: object = None

    def equal(self, f, g):
        if self.eq is not None:
            return self.eq(f, g)
        return f == g

    def check_probes(self):
        report = CheckReport("lazy category probes (%s)" % self.name)
        for f in self.probe_morphisms:
            x, y = self.src(f), self.tgt(f)
            if not self.equal(self.compose(self.identity(y), f), f):
                report.fail("left identity", f)
            if not self.equal(self.compose(f, self.identity(x)), f):
                report.fail("right identity", f)
        for f in self.probe_morphisms:
            for g in self.probe_morphisms:
                if self.src(g) != self.tgt(f):
                    continue
                gf = self.compose(g, f)
                for h in self.probe_morphisms:
                    if self.src(h) != self.tgt(g):
                        continue
                    if not self.equal(self.compose(self.compose(h, g), f),
                                      self.compose(h, gf)):
                        report.fail("associativity", (h, g, f))
        return report


@dataclass
class VectPseudofunctor:
    """The pointwise data of the tensoring pseudofunctor into Cat.

    The single 0-cell goes to the category of graded rational vector
    spaces; an object p goes to the functor p tensor (-), a morphism f to
    the natural transformation f tensor (-).  Composition comparison cells
    are identities because the tensor here is strict; the product
    compatibility at (p, q) has the braiding-built component
    1 tensor c tensor 1, which is invertible.
    """

    q: object
    category: LazyCategory

    def on_obj_omap(self, p):
        return lambda x: tensor_obj(p, x)

    def on_obj_mmap(self, p):
        idp = VMorphism.identity(p)
        return lambda f: tensor_mor(idp, f)

    def on_mor_component(self, f, x):
        return tensor_mor(f, VMorphism.identity(x))

    def unit_compat(self):
        """The unit object K and the (identity) comparison K @ K -> K."""
        k = unit_object()
        assert tensor_obj(k, k) == k
        return k, VMorphism.identity(k)

    def compose_compat(self, p, p2, x):
        """Comparison p @ (p2 @ x) -> (p @ p2) @ x: identity by strictness."""
        return VMorphism.identity(tensor_obj(tensor_obj(p, p2), x))

    def product_compat_component(self, p, p2, x, y):
        """(p @ x) @ (p2 @ y) -> (p @ p2) @ (x @ y), the 1 @ c @ 1 map."""
        c = braiding(x, p2, self.q)
        return tensor_mor(VMorphism.identity(p),
                          tensor_mor(c, VMorphism.identity(y)))


def vect_as_lazy_category(q, probes):
    """Wrap graded vector spaces as a lazy category with the given probes.

    Probe morphisms are the identities and the braidings of probe pairs;
    returns the category together with the pseudofunctor data.
    """
    if not probes:
        raise CatError("probe list must not be empty")
    probe_morphisms = [VMorphism.identity(x) for x in probes]
    for x in probes:
        for y in probes:
            probe_morphisms.append(braiding(x, y, q))
    category = LazyCategory(
        name="graded vector spaces",
        src=lambda f: f.dom,
        tgt=lambda f: f.cod,
        compose=lambda g, f: g.compose(f),
        identity=VMorphism.identity,
        probe_objects=list(probes),
        probe_morphisms=probe_morphisms,
    )
    return category, VectPseudofunctor(q=q, category=category)
