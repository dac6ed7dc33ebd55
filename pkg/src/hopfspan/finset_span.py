"""Finite sets, finite functions, spans and span morphisms.

A span here points from ``src`` to ``tgt`` and is written tgt <-left- apex
-right-> src, so spans compose like functions: compose_spans(b, a) needs
b.src == a.tgt.  Composition is by pullback, with the apex enumerated in
lexicographic order of constituent indices.  That fixed order is what makes
every construction downstream deterministic and lets 2-cell equality be
decided by plain list comparison.

Apex elements of composites and products are pairs, so atoms are strings,
integers, or (nested) tuples of atoms.
"""

from dataclasses import dataclass, field
from itertools import product


class SpanError(ValueError):
    """Raised on boundary mismatches and malformed span data."""


def _check_atoms(elements):
    seen = set()
    for a in elements:
        if a in seen:
            raise SpanError("duplicate atom %r" % (a,))
        seen.add(a)


@dataclass(frozen=True)
class FinSet:
    """An ordered finite set of atoms."""

    elements: tuple

    def __init__(self, elements):
        elements = tuple(elements)
        _check_atoms(elements)
        object.__setattr__(self, "elements", elements)
        object.__setattr__(self, "_index", {a: i for i, a in enumerate(elements)})

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)

    def __contains__(self, atom):
        return atom in self._index

    def index(self, atom):
        return self._index[atom]

    def __repr__(self):
        return "FinSet(%r)" % (list(self.elements),)

    def __eq__(self, other):
        return isinstance(other, FinSet) and self.elements == other.elements

    def __hash__(self):
        return hash(self.elements)

    @staticmethod
    def singleton(atom="*"):
        return FinSet((atom,))

    @staticmethod
    def product(x, y):
        """Cartesian product, lexicographic in (index in x, index in y)."""
        return FinSet(tuple((a, b) for a in x for b in y))


@dataclass(frozen=True)
class FinFn:
    """A total function between finite sets, stored as an assignment dict."""

    domain: FinSet
    codomain: FinSet
    assignment: dict = field(compare=False)

    def __post_init__(self):
        for a in self.domain:
            if a not in self.assignment:
                raise SpanError("no value assigned to %r" % (a,))
            if self.assignment[a] not in self.codomain:
                raise SpanError(
                    "value %r of %r not in codomain %r"
                    % (self.assignment[a], a, self.codomain)
                )

    def __call__(self, atom):
        return self.assignment[atom]

    def __eq__(self, other):
        return (
            isinstance(other, FinFn)
            and self.domain == other.domain
            and self.codomain == other.codomain
            and all(self.assignment[a] == other.assignment[a] for a in self.domain)
        )

    def __hash__(self):
        return hash((self.domain, self.codomain,
                     tuple(self.assignment[a] for a in self.domain)))

    def compose(self, other):
        """self after other."""
        if other.codomain != self.domain:
            raise SpanError(
                "cannot compose: codomain %r != domain %r"
                % (other.codomain, self.domain)
            )
        return FinFn(other.domain, self.codomain,
                     {a: self(other(a)) for a in other.domain})

    @staticmethod
    def identity(x):
        return FinFn(x, x, {a: a for a in x})

    @staticmethod
    def constant(domain, codomain, value):
        return FinFn(domain, codomain, {a: value for a in domain})

    def image(self):
        return {self.assignment[a] for a in self.domain}

    def is_injective(self):
        return len(self.image()) == len(self.domain)

    def is_surjective(self):
        return len(self.image()) == len(self.codomain)

    def is_bijection(self):
        return self.is_injective() and self.is_surjective()

    def inverse(self):
        if not self.is_bijection():
            raise SpanError("function is not a bijection")
        return FinFn(self.codomain, self.domain,
                     {self(a): a for a in self.domain})


@dataclass(frozen=True)
class Span:
    """tgt <-left- apex -right-> src, a 1-cell skeleton from src to tgt."""

    src: FinSet
    tgt: FinSet
    apex: FinSet
    left: FinFn
    right: FinFn

    def __post_init__(self):
        if self.left.domain != self.apex or self.right.domain != self.apex:
            raise SpanError("span legs must share the apex as domain")
        if self.left.codomain != self.tgt:
            raise SpanError("left leg must land in tgt")
        if self.right.codomain != self.src:
            raise SpanError("right leg must land in src")

    @staticmethod
    def identity(x):
        i = FinFn.identity(x)
        return Span(x, x, x, i, i)

    @staticmethod
    def complete(x, y=None):
        """The span y <- y*x -> x with projection legs; all pairs matched."""
        if y is None:
            y = x
        apex = FinSet.product(y, x)
        left = FinFn(apex, y, {(b, a): b for (b, a) in apex})
        right = FinFn(apex, x, {(b, a): a for (b, a) in apex})
        return Span(x, y, apex, left, right)

    def reverse(self):
        return Span(self.tgt, self.src, self.apex, self.right, self.left)


@dataclass(frozen=True)
class SpanMorphism:
    """A map of spans: apex map commuting with both legs."""

    source: Span
    target: Span
    map: FinFn

    def __post_init__(self):
        s, t, m = self.source, self.target, self.map
        if m.domain != s.apex or m.codomain != t.apex:
            raise SpanError("morphism map must go apex to apex")
        if s.src != t.src or s.tgt != t.tgt:
            raise SpanError("span morphism endpoints must agree")
        for c in s.apex:
            if t.left(m(c)) != s.left(c) or t.right(m(c)) != s.right(c):
                raise SpanError("legs do not commute at %r" % (c,))

    @staticmethod
    def identity(span):
        return SpanMorphism(span, span, FinFn.identity(span.apex))

    def then(self, other):
        """other after self (vertical composition of span maps)."""
        if other.source != self.target:
            raise SpanError("span morphisms not composable")
        return SpanMorphism(self.source, other.target,
                            other.map.compose(self.map))

    def is_iso(self):
        return self.map.is_bijection()

    def inverse(self):
        return SpanMorphism(self.target, self.source, self.map.inverse())


def compose_spans(b, a):
    """Pullback composite b after a; needs b.src == a.tgt.

    The apex is the set of pairs (d, c) with b.right(d) == a.left(c),
    enumerated lexicographically in (index of d, index of c).
    """
    if b.src != a.tgt:
        raise SpanError(
            "span boundary mismatch: b.src = %r but a.tgt = %r" % (b.src, a.tgt)
        )
    pairs = tuple(
        (d, c) for d in b.apex for c in a.apex if b.right(d) == a.left(c)
    )
    apex = FinSet(pairs)
    left = FinFn(apex, b.tgt, {(d, c): b.left(d) for (d, c) in pairs})
    right = FinFn(apex, a.src, {(d, c): a.right(c) for (d, c) in pairs})
    return Span(a.src, b.tgt, apex, left, right)


def compose_span_morphisms_h(g, f):
    """Horizontal composite of span morphisms: (d, c) -> (g(d), f(c))."""
    source = compose_spans(g.source, f.source)
    target = compose_spans(g.target, f.target)
    assignment = {(d, c): (g.map(d), f.map(c)) for (d, c) in source.apex}
    return SpanMorphism(source, target,
                        FinFn(source.apex, target.apex, assignment))


def cartesian_product(a, b):
    """Componentwise product span; apex pairs lexicographic in (a, b)."""
    apex = FinSet.product(a.apex, b.apex)
    src = FinSet.product(a.src, b.src)
    tgt = FinSet.product(a.tgt, b.tgt)
    left = FinFn(apex, tgt, {(c, d): (a.left(c), b.left(d)) for (c, d) in apex})
    right = FinFn(apex, src, {(c, d): (a.right(c), b.right(d)) for (c, d) in apex})
    return Span(src, tgt, apex, left, right)


def product_of_morphisms(f, g):
    """(c, d) -> (f(c), g(d)) between cartesian_product spans."""
    source = cartesian_product(f.source, g.source)
    target = cartesian_product(f.target, g.target)
    assignment = {(c, d): (f.map(c), g.map(d)) for (c, d) in source.apex}
    return SpanMorphism(source, target,
                        FinFn(source.apex, target.apex, assignment))


def associator_iso(c, b, a):
    """Canonical bijection from (c . b) . a to c . (b . a)."""
    lhs = compose_spans(compose_spans(c, b), a)
    rhs = compose_spans(c, compose_spans(b, a))
    assignment = {((e, d), f): (e, (d, f)) for ((e, d), f) in lhs.apex}
    return SpanMorphism(lhs, rhs, FinFn(lhs.apex, rhs.apex, assignment))


def left_unitor_iso(a):
    """From identity(a.tgt) . a to a, by (y, c) -> c."""
    lhs = compose_spans(Span.identity(a.tgt), a)
    assignment = {(y, c): c for (y, c) in lhs.apex}
    return SpanMorphism(lhs, a, FinFn(lhs.apex, a.apex, assignment))


def right_unitor_iso(a):
    """From a . identity(a.src) to a, by (c, x) -> c."""
    lhs = compose_spans(a, Span.identity(a.src))
    assignment = {(c, x): c for (c, x) in lhs.apex}
    return SpanMorphism(lhs, a, FinFn(lhs.apex, a.apex, assignment))


@dataclass(frozen=True)
class RightAdjointResult:
    """Either the adjoint data, or a witness that the right leg fails."""

    adjoint: Span | None
    unit: SpanMorphism | None
    counit: SpanMorphism | None
    witness: object = None

    def __bool__(self):
        return self.adjoint is not None


def right_adjoint_of(a):
    """Right adjoint of a span, which exists iff its right leg is a bijection.

    Such a span is isomorphic to the graph of the function h = left o right^-1
    and its adjoint is the reversed span.  The unit embeds the identity span
    into adjoint . a and the counit collapses a . adjoint onto the identity.
    When the right leg is not bijective the result carries a witness: either
    a src element missed by the leg, or a pair of apex elements it merges.
    """
    r = a.right
    if not r.is_surjective():
        missed = next(x for x in a.src if x not in r.image())
        return RightAdjointResult(None, None, None, witness=missed)
    if not r.is_injective():
        hit = {}
        for c in a.apex:
            if r(c) in hit:
                return RightAdjointResult(None, None, None,
                                          witness=(hit[r(c)], c))
            hit[r(c)] = c
    adjoint = a.reverse()
    # unit: identity(a.src) -> adjoint . a, x -> (c, c) with right(c) = x
    comp_ua = compose_spans(adjoint, a)
    rinv = r.inverse()
    unit_map = FinFn(a.src, comp_ua.apex, {x: (rinv(x), rinv(x)) for x in a.src})
    unit = SpanMorphism(Span.identity(a.src), comp_ua, unit_map)
    # counit: a . adjoint -> identity(a.tgt), (c, c) -> left(c)
    comp_au = compose_spans(a, adjoint)
    counit_map = FinFn(comp_au.apex, a.tgt,
                       {(c, d): a.left(c) for (c, d) in comp_au.apex})
    counit = SpanMorphism(comp_au, Span.identity(a.tgt), counit_map)
    return RightAdjointResult(adjoint, unit, counit)


def pullback_pairs(b, a):
    """Brute-force enumeration of matching pairs, for cross-checking."""
    return [(d, c) for d, c in product(b.apex.elements, a.apex.elements)
            if b.right(d) == a.left(c)]
