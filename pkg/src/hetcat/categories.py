"""Finite categories with explicit composition tables, functors, and the
brute-force finder/verifier for self-predicative universals.

Composition convention: ``compose(g, f)`` means "f then g".  Hom-sets
are materialized per object pair at validation time, so the
universality condition "there exists a unique arrow" is a size-1 test.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping, Optional

from .config import DEFAULT_CAPS, Caps
from .errors import (
    AssociativityViolation,
    CompositionGap,
    CompositionViolation,
    DomainMismatch,
    EndpointMismatch,
    EndpointViolation,
    IdentityViolation,
    IsoConstructionFailure,
    SchemaError,
    SizeCapExceeded,
    UnknownLabel,
    Violation,
    fail,
)
from .posets import FinitePoset, MonotoneMap
from .reporting import Report, passed


@dataclass(frozen=True)
class Arrow:
    id: str
    src: str
    tgt: str


@dataclass(frozen=True)
class FiniteCategory:
    objects: tuple[str, ...]
    arrows: tuple[Arrow, ...]
    identities: Mapping[str, str]
    compose: Mapping[tuple[str, str], str]
    _by_id: dict = field(init=False, repr=False, compare=False, default_factory=dict)
    _hom: dict = field(init=False, repr=False, compare=False, default_factory=dict)

    def __post_init__(self):
        by_id = {a.id: a for a in self.arrows}
        hom: dict[tuple[str, str], list[str]] = {}
        for a in self.arrows:
            hom.setdefault((a.src, a.tgt), []).append(a.id)
        object.__setattr__(self, "_by_id", by_id)
        object.__setattr__(self, "_hom", {k: tuple(v) for k, v in hom.items()})

    def arrow(self, arrow_id: str) -> Arrow:
        return self._by_id[arrow_id]

    def hom(self, a: str, b: str) -> tuple[str, ...]:
        return self._hom.get((a, b), ())

    def identity(self, obj: str) -> str:
        return self.identities[obj]

    def then(self, g: str, f: str) -> str:
        """Composite of f followed by g."""
        try:
            return self.compose[(g, f)]
        except KeyError:
            raise CompositionGap(f"no composite for ({g}, {f})") from None

    def object_index(self, obj: str) -> int:
        return self.objects.index(obj)


@dataclass(frozen=True)
class Functor:
    dom: FiniteCategory
    cod: FiniteCategory
    object_map: Mapping[str, str]
    arrow_map: Mapping[str, str]

    def on_object(self, obj: str) -> str:
        return self.object_map[obj]

    def on_arrow(self, arrow_id: str) -> str:
        return self.arrow_map[arrow_id]


ARROWS_TO = "arrows-to"
ARROWS_FROM = "arrows-from"


@dataclass(frozen=True)
class ObjectPredicate:
    """Extensional property of objects, read in one of two directions.

    ``arrows-to``: x participates in u when there is exactly one arrow
    x -> u.  ``arrows-from`` turns the arrows around.
    """

    category: FiniteCategory
    holds: frozenset[str]
    direction: str

    def __post_init__(self):
        if self.direction not in (ARROWS_TO, ARROWS_FROM):
            raise SchemaError(f"direction must be {ARROWS_TO} or {ARROWS_FROM}")
        unknown = self.holds - set(self.category.objects)
        if unknown:
            raise UnknownLabel(f"predicate mentions unknown objects: {sorted(unknown)}")


@dataclass(frozen=True)
class UniversalWitness:
    """A self-predicative universal together with its participation arrows.

    ``factor`` maps every object satisfying the predicate to its unique
    participation arrow; self-participation factor[u] is the identity.
    """

    predicate: ObjectPredicate
    u: str
    factor: Mapping[str, str]


def validate_category(
    objects: Iterable[str],
    arrows: Iterable[tuple[str, str, str]],
    identities: Mapping[str, str],
    compose: Mapping[tuple[str, str], str],
    caps: Caps = DEFAULT_CAPS,
) -> FiniteCategory:
    """Exhaustively verify the category axioms for an explicit table."""
    objects = tuple(str(o) for o in objects)
    if len(set(objects)) != len(objects):
        raise SchemaError("duplicate object labels")
    caps.guard("category objects", len(objects), caps.max_elements)
    arrows = tuple(Arrow(str(i), str(s), str(t)) for i, s, t in arrows)
    ids = [a.id for a in arrows]
    if len(set(ids)) != len(ids):
        raise SchemaError("duplicate arrow ids")
    known_objects = set(objects)
    for a in arrows:
        if a.src not in known_objects or a.tgt not in known_objects:
            raise UnknownLabel(f"arrow {a.id} has unknown endpoint {a.src} or {a.tgt}")
    by_id = {a.id: a for a in arrows}

    for obj in objects:
        if obj not in identities:
            raise IdentityViolation(f"no identity declared for {obj}")
        ident = identities[obj]
        if ident not in by_id:
            raise UnknownLabel(f"identity of {obj} is unknown arrow {ident}")
        if by_id[ident].src != obj or by_id[ident].tgt != obj:
            raise IdentityViolation(f"identity of {obj} is {ident}: not an endo-arrow")

    arrow_pos = {a.id: i for i, a in enumerate(arrows)}
    outgoing: dict[str, list[Arrow]] = {o: [] for o in objects}
    for a in arrows:
        outgoing[a.src].append(a)
    compose = {(str(g), str(f)): str(h) for (g, f), h in compose.items()}
    gaps = []
    for (g, f), h in compose.items():
        if g not in by_id or f not in by_id or h not in by_id:
            raise UnknownLabel(f"compose entry ({g},{f})={h} mentions unknown arrows")
        if by_id[g].src != by_id[f].tgt:
            gaps.append(Violation("composition", (arrow_pos[g], arrow_pos[f]),
                                  f"({g},{f}) declared but not composable"))
    for f in arrows:
        for g in outgoing[f.tgt]:
            if (g.id, f.id) not in compose:
                gaps.append(Violation("composition", (arrow_pos[g.id], arrow_pos[f.id]),
                                      f"composable pair ({g.id},{f.id}) has no composite"))
    if gaps:
        raise fail(CompositionGap, "composition table", gaps)

    bad_endpoints = [
        Violation("endpoints", (arrow_pos[g], arrow_pos[f]),
                  f"compose({g},{f})={h} has endpoints "
                  f"{by_id[h].src}->{by_id[h].tgt}, expected {by_id[f].src}->{by_id[g].tgt}")
        for (g, f), h in compose.items()
        if by_id[g].src == by_id[f].tgt
        and (by_id[h].src != by_id[f].src or by_id[h].tgt != by_id[g].tgt)
    ]
    if bad_endpoints:
        raise fail(EndpointMismatch, "composite endpoints", bad_endpoints)

    id_violations = []
    for f in arrows:
        left = compose[(by_id[identities[f.tgt]].id, f.id)]
        right = compose[(f.id, by_id[identities[f.src]].id)]
        if left != f.id or right != f.id:
            id_violations.append(Violation("identity", (arrow_pos[f.id],),
                                           f"identity laws fail for {f.id}"))
    if id_violations:
        raise fail(IdentityViolation, "identity laws", id_violations)

    outgoing: dict[str, list[Arrow]] = {o: [] for o in objects}
    for a in arrows:
        outgoing[a.src].append(a)
    assoc = []
    for f in arrows:
        for g in outgoing[f.tgt]:
            gf = compose[(g.id, f.id)]
            for h in outgoing[g.tgt]:
                if compose[(h.id, gf)] != compose[(compose[(h.id, g.id)], f.id)]:
                    assoc.append(Violation(
                        "associativity",
                        (arrow_pos[h.id], arrow_pos[g.id], arrow_pos[f.id]),
                        f"h({h.id}) o (g({g.id}) o f({f.id})) != (h o g) o f"))
    if assoc:
        raise fail(AssociativityViolation, "associativity", assoc)

    return FiniteCategory(objects, arrows, dict(identities), compose)


def thin_arrow_id(x: str, y: str) -> str:
    return f"{x}->{y}"


def thin_category(elements: Iterable[str], relation: Iterable[tuple[str, str]],
                  caps: Caps = DEFAULT_CAPS) -> FiniteCategory:
    """Category of a preorder: one arrow per related pair, composition forced."""
    elements = tuple(elements)
    caps.guard("category objects", len(elements), caps.max_elements)
    relation = set(relation)
    arrows = [(thin_arrow_id(x, y), x, y) for x in elements for y in elements
              if (x, y) in relation]
    if len({a[0] for a in arrows}) != len(arrows):
        raise SchemaError("element labels collide under thin-arrow naming")
    identities = {x: thin_arrow_id(x, x) for x in elements}
    compose = {
        (thin_arrow_id(y, z), thin_arrow_id(x, y)): thin_arrow_id(x, z)
        for (x, y) in relation
        for (y2, z) in relation
        if y2 == y
    }
    return validate_category(elements, arrows, identities, compose, caps)


def poset_to_category(P: FinitePoset, caps: Caps = DEFAULT_CAPS) -> FiniteCategory:
    """One arrow x -> y per x <= y; hom-sets all of size 0 or 1."""
    return thin_category(P.elements, P.leq, caps)


def monotone_to_functor(m: MonotoneMap, dom_cat: FiniteCategory,
                        cod_cat: FiniteCategory) -> Functor:
    """Lift a monotone map to a functor between the poset categories."""
    object_map = dict(m.assignment)
    arrow_map = {
        a.id: thin_arrow_id(m(a.src), m(a.tgt))
        for a in dom_cat.arrows
    }
    return validate_functor(dom_cat, cod_cat, object_map, arrow_map)


def validate_functor(dom: FiniteCategory, cod: FiniteCategory,
                     object_map: Mapping[str, str],
                     arrow_map: Mapping[str, str]) -> Functor:
    """Exhaustively verify endpoint, identity, and composition preservation."""
    for obj in dom.objects:
        if obj not in object_map:
            raise UnknownLabel(f"object_map missing {obj}")
        if object_map[obj] not in set(cod.objects):
            raise UnknownLabel(f"object_map sends {obj} to unknown {object_map[obj]}")
    for a in dom.arrows:
        if a.id not in arrow_map:
            raise UnknownLabel(f"arrow_map missing {a.id}")
        if arrow_map[a.id] not in {b.id for b in cod.arrows}:
            raise UnknownLabel(f"arrow_map sends {a.id} to unknown {arrow_map[a.id]}")

    arrow_pos = {a.id: i for i, a in enumerate(dom.arrows)}
    bad = [
        Violation("endpoint", (arrow_pos[a.id],),
                  f"F({a.id}) must go {object_map[a.src]}->{object_map[a.tgt]}")
        for a in dom.arrows
        if cod.arrow(arrow_map[a.id]).src != object_map[a.src]
        or cod.arrow(arrow_map[a.id]).tgt != object_map[a.tgt]
    ]
    if bad:
        raise fail(EndpointViolation, "functor endpoints", bad)

    bad = [
        Violation("identity", (dom.object_index(obj),),
                  f"F(1_{obj}) != 1_F({obj})")
        for obj in dom.objects
        if arrow_map[dom.identity(obj)] != cod.identity(object_map[obj])
    ]
    if bad:
        raise fail(IdentityViolation, "functor identities", bad)

    bad = []
    for f in dom.arrows:
        for g in dom.arrows:
            if g.src != f.tgt:
                continue
            lhs = arrow_map[dom.then(g.id, f.id)]
            rhs = cod.then(arrow_map[g.id], arrow_map[f.id])
            if lhs != rhs:
                bad.append(Violation("composition", (arrow_pos[g.id], arrow_pos[f.id]),
                                     f"F({g.id} o {f.id}) != F({g.id}) o F({f.id})"))
    if bad:
        raise fail(CompositionViolation, "functor composition", bad)

    return Functor(dom, cod, dict(object_map), dict(arrow_map))


def compose_functors(g: Functor, f: Functor) -> Functor:
    """Composite functor (f then g), validated."""
    if f.cod != g.dom:
        raise DomainMismatch("functor codomain/domain mismatch")
    return validate_functor(
        f.dom, g.cod,
        {x: g.on_object(f.on_object(x)) for x in f.dom.objects},
        {a.id: g.on_arrow(f.on_arrow(a.id)) for a in f.dom.arrows},
    )


def are_isomorphic(cat: FiniteCategory, a: str, b: str) -> Optional[tuple[str, str]]:
    """Return a mutually inverse arrow pair (f: a->b, g: b->a) if one exists."""
    if a not in set(cat.objects) or b not in set(cat.objects):
        raise UnknownLabel(f"{a} or {b} not an object")
    if a == b:
        return (cat.identity(a), cat.identity(a))
    for f in cat.hom(a, b):
        for g in cat.hom(b, a):
            if cat.then(f, g) == cat.identity(b) and cat.then(g, f) == cat.identity(a):
                return (f, g)
    return None


def _participation_count(pred: ObjectPredicate, x: str, u: str) -> int:
    if pred.direction == ARROWS_TO:
        return len(pred.category.hom(x, u))
    return len(pred.category.hom(u, x))


def find_universal(pred: ObjectPredicate, caps: Caps = DEFAULT_CAPS) -> tuple[UniversalWitness, ...]:
    """Brute-force search for every self-predicative universal of a predicate.

    An object u qualifies when the predicate holds at u itself and, for
    every object x, there is exactly one participation arrow (x -> u, or
    u -> x in the dual direction) if and only if the predicate holds at
    x.  Results come in object input order; the empty tuple means no
    universal exists.
    """
    cat = pred.category
    caps.guard("category objects", len(cat.objects), caps.max_elements)
    witnesses = []
    for u in cat.objects:
        if u not in pred.holds:
            continue
        if all((_participation_count(pred, x, u) == 1) == (x in pred.holds)
               for x in cat.objects):
            if pred.direction == ARROWS_TO:
                factor = {x: cat.hom(x, u)[0] for x in cat.objects if x in pred.holds}
            else:
                factor = {x: cat.hom(u, x)[0] for x in cat.objects if x in pred.holds}
            assert factor[u] == cat.identity(u)
            witnesses.append(UniversalWitness(pred, u, factor))
    return tuple(witnesses)


def check_uniqueness_up_to_iso(witnesses: Iterable[UniversalWitness]) -> Report:
    """Verify that all universals for one predicate are pairwise isomorphic.

    For each pair (u, u') the unique mutual-participation arrows are read
    off the factor maps and both composites are checked against the
    identities; a single witness passes vacuously.
    """
    witnesses = tuple(witnesses)
    if not witnesses:
        return passed("uniqueness-up-to-iso", {"witnesses": 0, "pairs": 0})
    pred = witnesses[0].predicate
    if any(w.predicate != pred for w in witnesses):
        raise DomainMismatch("witnesses disagree on the predicate")
    cat = pred.category
    details = []
    pairs = 0
    for i, w in enumerate(witnesses):
        for w2 in witnesses[i + 1:]:
            pairs += 1
            u, u2 = w.u, w2.u
            if u2 not in w.factor or u not in w2.factor:
                raise IsoConstructionFailure(
                    f"{u} and {u2} do not participate in each other")
            if pred.direction == ARROWS_TO:
                f = w.factor[u2]   # u2 -> u
                g = w2.factor[u]   # u -> u2
            else:
                g = w.factor[u2]   # u -> u2
                f = w2.factor[u]   # u2 -> u
            if cat.then(g, f) != cat.identity(u2) or cat.then(f, g) != cat.identity(u):
                raise IsoConstructionFailure(
                    f"mutual participation of {u} and {u2} does not compose to identities")
            details.append(f"{u} ~= {u2} via ({f}, {g})")
    return passed("uniqueness-up-to-iso",
                  {"witnesses": len(witnesses), "pairs": pairs}, details)


def product_in_category(cat: FiniteCategory, a: str, b: str,
                        caps: Caps = DEFAULT_CAPS) -> Optional[tuple[str, str, str]]:
    """Search for a binary product (p, proj_a, proj_b), verified exhaustively.

    Every pair of arrows (f: c->a, g: c->b) must factor through p by a
    unique arrow c->p.  Returns the first hit in object input order, or
    None -- absence is a valid result.
    """
    if a not in set(cat.objects) or b not in set(cat.objects):
        raise UnknownLabel(f"{a} or {b} not an object")
    caps.guard("category objects", len(cat.objects), caps.max_elements)
    for p in cat.objects:
        for pa in cat.hom(p, a):
            for pb in cat.hom(p, b):
                if _is_product(cat, a, b, p, pa, pb):
                    return (p, pa, pb)
    return None


def _is_product(cat: FiniteCategory, a: str, b: str, p: str, pa: str, pb: str) -> bool:
    for c in cat.objects:
        mediators = cat.hom(c, p)
        for f in cat.hom(c, a):
            for g in cat.hom(c, b):
                hits = [h for h in mediators
                        if cat.then(pa, h) == f and cat.then(pb, h) == g]
                if len(hits) != 1:
                    return False
        # every mediator must also induce a distinct cone (injectivity)
        seen = set()
        for h in mediators:
            cone = (cat.then(pa, h), cat.then(pb, h))
            if cone in seen:
                return False
            seen.add(cone)
    return True
