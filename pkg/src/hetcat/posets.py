"""Finite partial orders, monotone maps, bounds as universals, and
Galois connections.

Orders are stored as explicit pair sets (every ``x <= y`` pair, not a
covering relation) so that order queries inside exhaustive checks are
O(1) set lookups.  Element labels are opaque strings; iteration order
always follows the input sequence, which makes every report
deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping, Optional

from .config import DEFAULT_CAPS, Caps
from .errors import (
    AdjointnessViolation,
    AntisymmetryViolation,
    DomainMismatch,
    MonotonicityViolation,
    ReflexivityViolation,
    SchemaError,
    TotalityViolation,
    TransitivityViolation,
    UnknownLabel,
    Violation,
    fail,
)
from .reporting import parallel_map


@dataclass(frozen=True)
class FinitePoset:
    elements: tuple[str, ...]
    leq: frozenset[tuple[str, str]]
    _index: dict = field(init=False, repr=False, compare=False, default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "_index", {x: i for i, x in enumerate(self.elements)})

    def le(self, x: str, y: str) -> bool:
        return (x, y) in self.leq

    def index(self, x: str) -> int:
        return self._index[x]

    def __contains__(self, x: str) -> bool:
        return x in self._index

    def __len__(self) -> int:
        return len(self.elements)


@dataclass(frozen=True)
class MonotoneMap:
    dom: FinitePoset
    cod: FinitePoset
    assignment: Mapping[str, str]

    def __call__(self, x: str) -> str:
        return self.assignment[x]


@dataclass(frozen=True)
class GaloisConnection:
    """Verified adjoint pair of monotone maps: lower(p) <= q iff p <= upper(q)."""

    lower: MonotoneMap
    upper: MonotoneMap


def _closure(elements: tuple[str, ...], pairs: set[tuple[str, str]]) -> set[tuple[str, str]]:
    """Reflexive-transitive closure via successor-set saturation."""
    succ: dict[str, set[str]] = {x: {x} for x in elements}
    for x, y in pairs:
        succ[x].add(y)
    changed = True
    while changed:
        changed = False
        for x in elements:
            reach = set(succ[x])
            for y in tuple(reach):
                extra = succ[y] - reach
                if extra:
                    reach |= extra
                    changed = True
            succ[x] = reach
    return {(x, y) for x in elements for y in succ[x]}


def validate_poset(
    elements: Iterable[str],
    leq: Iterable[tuple[str, str]],
    close_transitively: bool = False,
    caps: Caps = DEFAULT_CAPS,
) -> FinitePoset:
    """Check the partial-order axioms and return the validated poset.

    With ``close_transitively`` the pair set is replaced by its
    reflexive-transitive closure before antisymmetry is checked, so
    generator-style input is accepted.  Validating an already-closed
    relation is a no-op on the pair set.
    """
    elements = tuple(str(x) for x in elements)
    if len(set(elements)) != len(elements):
        raise SchemaError("duplicate element labels")
    caps.guard("poset elements", len(elements), caps.max_elements)
    known = set(elements)
    pairs = {(str(x), str(y)) for x, y in leq}

    bad = sorted(x for pair in pairs for x in pair if x not in known)
    if bad:
        raise UnknownLabel(f"leq mentions unknown labels: {', '.join(sorted(set(bad)))}")

    if close_transitively:
        pairs = _closure(elements, pairs)
    index = {x: i for i, x in enumerate(elements)}

    missing = [x for x in elements if (x, x) not in pairs]
    if missing:
        raise fail(
            ReflexivityViolation, "reflexivity",
            [Violation("reflexivity", (index[x],), f"({x},{x}) missing") for x in missing],
        )

    if not close_transitively:
        succ: dict[str, list[str]] = {x: [] for x in elements}
        for x, y in pairs:
            succ[x].append(y)
        gaps = [
            (x, y, z)
            for x in elements
            for y in succ[x]
            for z in succ[y]
            if (x, z) not in pairs
        ]
        if gaps:
            raise fail(
                TransitivityViolation, "transitivity",
                [
                    Violation("transitivity", (index[x], index[y], index[z]),
                              f"({x},{y}) and ({y},{z}) without ({x},{z})")
                    for x, y, z in gaps
                ],
            )

    cycles = [(x, y) for x, y in pairs if x != y and (y, x) in pairs and index[x] < index[y]]
    if cycles:
        raise fail(
            AntisymmetryViolation, "antisymmetry",
            [
                Violation("antisymmetry", (index[x], index[y]),
                          f"{x} <= {y} and {y} <= {x} with {x} != {y}")
                for x, y in cycles
            ],
        )

    return FinitePoset(elements, frozenset(pairs))


def opposite(P: FinitePoset) -> FinitePoset:
    return FinitePoset(P.elements, frozenset((y, x) for x, y in P.leq))


def pair_label(x: str, y: str) -> str:
    return f"({x},{y})"


def product_poset(P: FinitePoset, Q: FinitePoset, caps: Caps = DEFAULT_CAPS) -> FinitePoset:
    """Componentwise order on pairs: (a',b') <= (a,b) iff a' <= a and b' <= b."""
    caps.guard("product poset elements", len(P) * len(Q), caps.max_elements)
    elements = tuple(pair_label(p, q) for p in P.elements for q in Q.elements)
    leq = frozenset(
        (pair_label(a1, b1), pair_label(a2, b2))
        for a1, a2 in P.leq
        for b1, b2 in Q.leq
    )
    return FinitePoset(elements, leq)


def check_monotone(dom: FinitePoset, cod: FinitePoset, assignment: Mapping[str, str]) -> MonotoneMap:
    """Validate totality and order preservation; lists every violating pair."""
    missing = [x for x in dom.elements if x not in assignment]
    if missing:
        raise TotalityViolation(f"no image for: {', '.join(missing)}")
    unknown = sorted(set(assignment) - set(dom.elements))
    if unknown:
        raise UnknownLabel(f"assignment keys not in domain: {', '.join(unknown)}")
    bad_images = sorted({assignment[x] for x in dom.elements if assignment[x] not in cod})
    if bad_images:
        raise UnknownLabel(f"images not in codomain: {', '.join(bad_images)}")

    violations = [
        Violation("monotonicity", (dom.index(x), dom.index(y)),
                  f"{x} <= {y} but {assignment[x]} !<= {assignment[y]}")
        for x, y in dom.leq
        if not cod.le(assignment[x], assignment[y])
    ]
    if violations:
        raise fail(MonotonicityViolation, "monotonicity", violations)
    return MonotoneMap(dom, cod, dict(assignment))


def bound(P: FinitePoset, S: Iterable[str], kind: str) -> Optional[str]:
    """Least upper bound (``join``) or greatest lower bound (``meet``) of S.

    The returned element satisfies the full universality condition --
    for join: u <= x iff every s <= x, for all x -- checked exhaustively.
    Absence is a normal result, not an error.
    """
    if kind not in ("join", "meet"):
        raise SchemaError(f"kind must be join or meet, got {kind!r}")
    S = tuple(S)
    for s in S:
        if s not in P:
            raise UnknownLabel(f"{s} not an element")
    for u in P.elements:
        if kind == "join":
            ok = all((P.le(u, x)) == all(P.le(s, x) for s in S) for x in P.elements)
        else:
            ok = all((P.le(x, u)) == all(P.le(x, s) for s in S) for x in P.elements)
        if ok:
            return u
    return None


def check_galois_connection(
    lower: MonotoneMap, upper: MonotoneMap, workers: int = 1
) -> GaloisConnection:
    """Verify lower(p) <= q iff p <= upper(q) over every pair (p, q)."""
    P, Q = lower.dom, lower.cod
    if upper.dom != Q or upper.cod != P:
        raise DomainMismatch("upper must map the codomain of lower back to its domain")

    def check_p(p: str) -> list[Violation]:
        lp = lower(p)
        return [
            Violation("adjointness", (P.index(p), Q.index(q)),
                      f"lower({p}) <= {q} is {Q.le(lp, q)} but "
                      f"{p} <= upper({q}) is {P.le(p, upper(q))}")
            for q in Q.elements
            if Q.le(lp, q) != P.le(p, upper(q))
        ]

    violations = [v for batch in parallel_map(check_p, P.elements, workers) for v in batch]
    if violations:
        raise fail(AdjointnessViolation, "adjointness", violations)
    return GaloisConnection(lower, upper)


def _least(P: FinitePoset, candidates: list[str]) -> Optional[str]:
    for c in candidates:
        if all(P.le(c, d) for d in candidates):
            return c
    return None


def _greatest(P: FinitePoset, candidates: list[str]) -> Optional[str]:
    for c in candidates:
        if all(P.le(d, c) for d in candidates):
            return c
    return None


def compute_adjoint(g: MonotoneMap, side: str) -> Optional[MonotoneMap]:
    """Construct the left or right adjoint of g: P -> Q when it exists.

    side=left returns f: Q -> P with f(q) the least p such that
    q <= g(p); side=right returns the greatest p with g(p) <= q.  The
    candidate is re-verified as a Galois connection before it is
    returned; absence (some q has no least/greatest solution) gives None.
    """
    if side not in ("left", "right"):
        raise SchemaError(f"side must be left or right, got {side!r}")
    P, Q = g.dom, g.cod
    assignment: dict[str, str] = {}
    for q in Q.elements:
        if side == "left":
            candidates = [p for p in P.elements if Q.le(q, g(p))]
            best = _least(P, candidates)
        else:
            candidates = [p for p in P.elements if Q.le(g(p), q)]
            best = _greatest(P, candidates)
        if best is None:
            return None
        assignment[q] = best
    adj = check_monotone(Q, P, assignment)
    # pointwise best solutions always assemble into a connection; re-check anyway
    if side == "left":
        check_galois_connection(adj, g)
    else:
        check_galois_connection(g, adj)
    return adj
