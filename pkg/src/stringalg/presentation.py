"""Bound quiver presentations.

A presentation is a finite quiver together with zero relations (monomial
generators) and commutativity relations (pairs of parallel paths that are
identified).  Zero generators are minimalized on load and the presented
algebra is required to be finite dimensional: an oriented cycle all of
whose traversals avoid the ideal is rejected.
"""

from dataclasses import dataclass
from typing import NamedTuple

from ._ac import AhoCorasick
from .errors import (
    CorruptPresentationError,
    InfiniteDimensionalError,
    PreconditionError,
    SemanticError,
)


class Arrow(NamedTuple):
    name: str
    source: str
    target: str


@dataclass(frozen=True)
class OrientedPath:
    """Nonempty composable arrow sequence, composed left to right.

    In the path (a, b) the arrow a is traversed first, so the path exists
    iff target(a) = source(b).
    """

    arrows: tuple
    source: str
    target: str

    def __len__(self):
        return len(self.arrows)

    def __str__(self):
        return ".".join(self.arrows)


@dataclass(frozen=True)
class ZeroRelation:
    path: OrientedPath


@dataclass(frozen=True)
class Commutativity:
    left: OrientedPath
    right: OrientedPath


class Quiver:
    """Finite directed multigraph with named vertices and arrows."""

    def __init__(self, vertices, arrows):
        vertices = [str(v) for v in vertices]
        if len(set(vertices)) != len(vertices):
            raise SemanticError("duplicate vertex id")
        self.vertices = tuple(sorted(vertices))
        vset = set(self.vertices)
        seen = set()
        built = []
        for a in arrows:
            a = Arrow(*a)
            if a.name in seen:
                raise SemanticError(f"duplicate arrow id {a.name!r}")
            seen.add(a.name)
            if a.source not in vset:
                raise SemanticError(f"arrow {a.name!r}: unknown vertex {a.source!r}")
            if a.target not in vset:
                raise SemanticError(f"arrow {a.name!r}: unknown vertex {a.target!r}")
            built.append(a)
        self.arrows = tuple(built)
        self.arrow = {a.name: a for a in self.arrows}
        self._out = {v: [] for v in self.vertices}
        self._in = {v: [] for v in self.vertices}
        for a in self.arrows:
            self._out[a.source].append(a)
            self._in[a.target].append(a)
        for v in self.vertices:
            self._out[v] = tuple(sorted(self._out[v]))
            self._in[v] = tuple(sorted(self._in[v]))

    def has_vertex(self, v):
        return v in self._out

    def out_arrows(self, v):
        return self._out[v]

    def in_arrows(self, v):
        return self._in[v]

    def path(self, names):
        """Validated oriented path from a sequence of arrow ids."""
        names = tuple(names)
        if not names:
            raise SemanticError("a path needs at least one arrow")
        arrs = []
        for n in names:
            if n not in self.arrow:
                raise SemanticError(f"unknown arrow {n!r}")
            arrs.append(self.arrow[n])
        for a, b in zip(arrs, arrs[1:]):
            if a.target != b.source:
                raise SemanticError(
                    f"path not composable at {a.name!r}.{b.name!r}: "
                    f"{a.name} ends at {a.target}, {b.name} starts at {b.source}"
                )
        return OrientedPath(names, arrs[0].source, arrs[-1].target)

    def opposite(self):
        """Quiver with every arrow reversed (same names)."""
        return Quiver(self.vertices, [(a.name, a.target, a.source) for a in self.arrows])

    def __eq__(self, other):
        return (
            isinstance(other, Quiver)
            and self.vertices == other.vertices
            and sorted(self.arrows) == sorted(other.arrows)
        )

    def __hash__(self):
        return hash((self.vertices, tuple(sorted(self.arrows))))


def _contains_subpath(path, sub):
    n, m = len(path), len(sub)
    if m > n:
        return False
    return any(path[i : i + m] == sub for i in range(n - m + 1))


def minimalize(paths):
    """Drop every path that contains another one as a contiguous subpath.

    Idempotent; the result is an antichain under contiguous containment.
    """
    unique = sorted(set(tuple(p) for p in paths), key=lambda p: (len(p), p))
    kept = []
    for p in unique:
        if not any(_contains_subpath(p, q) for q in kept):
            kept.append(p)
    return kept


def _assert_finite_dimensional(quiver, gens):
    """Reject oriented cycles avoiding the monomial ideal.

    Walks the (vertex, matcher-progress) graph of ideal-avoiding oriented
    paths; revisiting a state on the current search path means such paths
    are unbounded, i.e. the algebra is infinite dimensional.
    """
    ac = AhoCorasick(gens) if gens else None
    done = set()
    active = set()
    for x in quiver.vertices:
        root = (x, 0)
        if root in done:
            continue
        stack = [(root, None)]
        while stack:
            state, children = stack[-1]
            if children is None:
                if state in done:
                    stack.pop()
                    continue
                active.add(state)
                nxt = []
                v, node = state
                for a in quiver.out_arrows(v):
                    if ac is None:
                        child = (a.target, 0)
                    else:
                        node2 = ac.step(node, a.name)
                        if ac.hit(node2) is not None:
                            continue
                        child = (a.target, node2)
                    nxt.append(child)
                children = iter(nxt)
                stack[-1] = (state, children)
            child = next(children, None)
            if child is None:
                active.discard(state)
                done.add(state)
                stack.pop()
                continue
            if child in active:
                raise InfiniteDimensionalError(
                    f"ideal-avoiding oriented cycle through vertex {child[0]!r}"
                )
            if child not in done:
                stack.append((child, None))


class Presentation:
    """Immutable bound quiver (Q, I).

    Zero generators are minimalized; a commutativity relation one of whose
    sides already lies in the monomial ideal degenerates to a pair of zero
    relations (the two sides are then separately zero).
    """

    def __init__(self, quiver, relations):
        self.quiver = quiver
        zeros = []
        comms = []
        for rel in relations:
            if isinstance(rel, ZeroRelation):
                zeros.append(rel.path)
            elif isinstance(rel, Commutativity):
                comms.append((rel.left, rel.right))
            else:
                raise SemanticError(f"unknown relation {rel!r}")
        for p in zeros:
            if len(p) < 2:
                raise SemanticError(f"zero relation {p} has length < 2")
        for left, right in comms:
            if len(left) < 2 or len(right) < 2:
                raise SemanticError(
                    f"commutativity {left} = {right}: sides must have length >= 2"
                )
            if (left.source, left.target) != (right.source, right.target):
                raise SemanticError(f"commutativity {left} = {right}: sides not parallel")
            if left.arrows == right.arrows:
                raise SemanticError(f"commutativity {left} = {right}: sides not distinct")

        zero_paths = [p.arrows for p in zeros]
        comm_pairs = [(l.arrows, r.arrows) for l, r in comms]
        # Degenerate commutativities: if either side is monomially zero the
        # relation is equivalent to two zero relations.  Iterate to a fixpoint
        # since newly added zeros can degrade further commutativities.
        while True:
            mins = minimalize(zero_paths)
            keep = []
            changed = False
            for l, r in comm_pairs:
                if any(_contains_subpath(l, g) or _contains_subpath(r, g) for g in mins):
                    zero_paths.extend([l, r])
                    changed = True
                else:
                    keep.append((l, r))
            comm_pairs = keep
            if not changed:
                break
        self._zero_paths = tuple(sorted(minimalize(zero_paths), key=lambda p: (len(p), p)))
        self._comm_pairs = tuple(sorted(tuple(sorted([l, r])) for l, r in comm_pairs))
        _assert_finite_dimensional(quiver, self.monomial_generators())
        self._cache = {}

    @classmethod
    def build(cls, vertices, arrows, zeros=(), comms=()):
        """Convenience constructor from raw ids."""
        q = Quiver(vertices, arrows)
        rels = [ZeroRelation(q.path(z)) for z in zeros]
        rels += [Commutativity(q.path(l), q.path(r)) for l, r in comms]
        return cls(q, rels)

    @property
    def zero_paths(self):
        return self._zero_paths

    @property
    def comm_pairs(self):
        return self._comm_pairs

    @property
    def zero_relations(self):
        q = self.quiver
        return tuple(ZeroRelation(q.path(p)) for p in self._zero_paths)

    @property
    def comm_relations(self):
        q = self.quiver
        return tuple(Commutativity(q.path(l), q.path(r)) for l, r in self._comm_pairs)

    @property
    def is_monomial(self):
        return not self._comm_pairs

    def monomial_generators(self):
        """Zero generators plus both sides of every commutativity relation,
        minimalized: the generators of the J-quotient's ideal."""
        gens = list(self._zero_paths)
        for l, r in self._comm_pairs:
            gens.extend([l, r])
        return tuple(minimalize(gens))

    def max_generator_length(self):
        gens = self.monomial_generators()
        return max((len(g) for g in gens), default=0)

    def opposite(self):
        """Presentation over the opposite quiver (paths reversed)."""
        q = self.quiver.opposite()
        rels = [ZeroRelation(q.path(tuple(reversed(p)))) for p in self._zero_paths]
        rels += [
            Commutativity(q.path(tuple(reversed(l))), q.path(tuple(reversed(r))))
            for l, r in self._comm_pairs
        ]
        return Presentation(q, rels)

    def cached(self, key, make):
        if key not in self._cache:
            self._cache[key] = make()
        return self._cache[key]

    def __eq__(self, other):
        return (
            isinstance(other, Presentation)
            and self.quiver == other.quiver
            and self._zero_paths == other._zero_paths
            and self._comm_pairs == other._comm_pairs
        )

    def __hash__(self):
        return hash((self.quiver, self._zero_paths, self._comm_pairs))


def path_in_ideal(p, path):
    """Monomial ideal membership: true iff some zero generator is a
    contiguous subpath.

    Consultation is rejected when a commutativity relation could affect
    the answer, i.e. when the path contains a commutativity side; callers
    must pass to the J-quotient first.
    """
    arrows = path.arrows if isinstance(path, OrientedPath) else tuple(path)
    for l, r in p.comm_pairs:
        if _contains_subpath(arrows, l) or _contains_subpath(arrows, r):
            raise PreconditionError(
                "membership depends on a commutativity relation; quotient by J first"
            )
    return any(_contains_subpath(arrows, g) for g in p.zero_paths)


@dataclass(frozen=True)
class Violation:
    condition: int
    site: str
    kind: str
    detail: tuple


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple

    @property
    def is_valid(self):
        return not self.violations

    def by_condition(self, k):
        return tuple(v for v in self.violations if v.condition == k)


def _two_path_is_zero(p, first, second):
    return (first, second) in set(p.zero_paths)


def _axiom_violations(p):
    """Violations of the vertex-degree and unique-continuation axioms.

    Two-path ideal membership is decided against zero generators alone; in
    special biserial normal form a commutativity side never makes a further
    two-path vanish, so this is exact for the presentations we accept.
    """
    q = p.quiver
    out = []
    for v in q.vertices:
        ins = q.in_arrows(v)
        outs = q.out_arrows(v)
        if len(ins) > 2:
            out.append(Violation(1, v, "in", tuple(a.name for a in ins)))
        if len(outs) > 2:
            out.append(Violation(1, v, "out", tuple(a.name for a in outs)))
    for a in q.arrows:
        succ = [b.name for b in q.out_arrows(a.target) if not _two_path_is_zero(p, a.name, b.name)]
        if len(succ) > 1:
            out.append(Violation(2, a.name, "successors", tuple(succ)))
        pred = [b.name for b in q.in_arrows(a.source) if not _two_path_is_zero(p, b.name, a.name)]
        if len(pred) > 1:
            out.append(Violation(2, a.name, "predecessors", tuple(pred)))
    return out


def validate_string_algebra(p):
    """Check the three string algebra axioms; violations are data."""
    out = _axiom_violations(p)
    for l, r in p.comm_pairs:
        out.append(Violation(3, ".".join(l), "commutativity", (".".join(l), ".".join(r))))
    return ValidationReport(tuple(out))


def validate_special_biserial(p):
    """Like validate_string_algebra but the ideal may be non-monomial."""
    return ValidationReport(tuple(_axiom_violations(p)))


def quotient_by_J(p):
    """Quotient by the ideal generated by commutativity-relation paths.

    The result is monomial: both sides of every commutativity relation
    become zero generators, re-minimalized.  Requires a special biserial
    input and always yields a string algebra presentation.
    """
    if not validate_special_biserial(p).is_valid:
        raise PreconditionError("quotient_by_J requires a special biserial presentation")
    if p.is_monomial:
        return p
    q = p.quiver
    rels = [ZeroRelation(q.path(g)) for g in p.monomial_generators()]
    out = Presentation(q, rels)
    report = validate_string_algebra(out)
    if not report.is_valid:
        raise CorruptPresentationError(f"J-quotient is not a string algebra: {report}")
    return out
