"""Side and middle decomposition of a DOZE-free string algebra.

Each band with only exiting arrows contributes a right side part A_i (the
two-sided string closure of a trivial walk at an anchor vertex), each band
with only entering arrows a left side part B_j, and the middle part C
collects the support of every string not contained in a single side part.
The structural consequences (fullness, no entering arrows, convexity,
unique cycle, finite middle, double-zero-free sides) are verified
mechanically.
"""

from dataclasses import dataclass, field

from .automaton import automaton, band_census, enumerate_strings
from .doze import STRICT_LAURA_OR_TILTED, classify, has_double_zero
from .errors import CorruptPresentationError, PreconditionError
from .presentation import Presentation, Quiver, ZeroRelation, quotient_by_J
from .walks import (
    direct,
    inverse,
    is_string,
    letter_ends,
    trivial_walk,
    walk_arrows,
    walk_vertices,
)


@dataclass(frozen=True)
class Subcategory:
    label: str
    objects: frozenset
    arrows: frozenset
    anchor: str = None
    band: object = field(default=None, compare=False)

    def contains_walk(self, quiver, w):
        return set(walk_vertices(quiver, w)) <= self.objects and walk_arrows(w) <= self.arrows


@dataclass(frozen=True)
class Decomposition:
    a_parts: tuple
    b_parts: tuple
    middle: Subcategory
    notes: tuple
    analyzed: object = field(repr=False, compare=False, default=None)

    @property
    def parts(self):
        return self.a_parts + self.b_parts + (self.middle,)

    @property
    def side_parts(self):
        return self.a_parts + self.b_parts


def _kmp_failure(pat):
    fail = [0] * len(pat)
    k = 0
    for i in range(1, len(pat)):
        while k and pat[i] != pat[k]:
            k = fail[k - 1]
        if pat[i] == pat[k]:
            k += 1
        fail[i] = k
    return fail


def _product_nodes(aut, pat):
    """Forward-reachable (state, pattern-progress) nodes and their edges.

    Progress is a KMP match state over the pattern's letters, absorbing
    once the pattern has occurred.
    """
    fail = _kmp_failure(pat)
    K = len(pat)

    def advance(pr, letter):
        if pr == K:
            return K
        while pr and pat[pr] != letter:
            pr = fail[pr - 1]
        return pr + 1 if pat[pr] == letter else 0

    inits = []
    for a in sorted(aut.quiver.arrow):
        for letter in (direct(a), inverse(a)):
            s = aut.initial_state(letter)
            inits.append((s, advance(0, letter)))
    edges = {}
    todo = list(dict.fromkeys(inits))
    for n in todo:
        edges[n] = None
    while todo:
        n = todo.pop()
        s, pr = n
        succ = []
        for t in aut.successors(s):
            m = (t, advance(pr, t.letter))
            succ.append(m)
            if m not in edges:
                edges[m] = None
                todo.append(m)
        edges[n] = tuple(succ)
    return set(dict.fromkeys(inits)), edges, K


def _co_reachable(edges, goals):
    rev = {n: [] for n in edges}
    for n, succ in edges.items():
        for m in succ:
            rev[m].append(n)
    seen = set(goals)
    stack = list(goals)
    while stack:
        n = stack.pop()
        for prev in rev[n]:
            if prev not in seen:
                seen.add(prev)
                stack.append(prev)
    return seen


def d_category(p, w, label="D"):
    """Support of all two-sided string extensions of a string.

    Objects and arrows touched by any string containing the given walk,
    computed exactly on the string automaton (finitely many states, so
    the exploration terminates even though extensions pump bands).
    """
    if not is_string(p, w):
        raise PreconditionError("d_category needs a string")
    aut = automaton(p)
    q = p.quiver
    objects = {w.base}
    arrows = set()
    if w.letters:
        pat = list(w.letters)
        inits, edges, K = _product_nodes(aut, pat)
        good = _co_reachable(edges, [n for n in edges if n[1] == K])
        marked = good & set(edges)
        for s, _pr in marked:
            sv, tv = letter_ends(q, s.letter)
            objects.update((sv, tv))
            arrows.add(s.arrow)
        objects.update(walk_vertices(q, w))
        arrows.update(walk_arrows(w))
    else:
        x = w.base
        touch = set()
        for s in aut.states:
            sv, tv = letter_ends(q, s.letter)
            if x in (sv, tv):
                touch.add(s)
        fwd = set(touch)
        stack = list(touch)
        while stack:
            s = stack.pop()
            for t in aut.successors(s):
                if t not in fwd:
                    fwd.add(t)
                    stack.append(t)
        rev = {s: [] for s in aut.states}
        for s in aut.states:
            for t in aut.successors(s):
                rev[t].append(s)
        bwd = set(touch)
        stack = list(touch)
        while stack:
            s = stack.pop()
            for t in rev[s]:
                if t not in bwd:
                    bwd.add(t)
                    stack.append(t)
        for s in fwd | bwd:
            sv, tv = letter_ends(q, s.letter)
            objects.update((sv, tv))
            arrows.add(s.arrow)
    return Subcategory(label, frozenset(objects), frozenset(arrows))


def choose_anchor(p, band, side="out"):
    """Least band vertex whose out-arrows (dually in-arrows) all lie on
    the band; always exists for finite-dimensional inputs."""
    q = p.quiver
    on_vertices = sorted(set(walk_vertices(q, band.walk)))
    on_arrows = walk_arrows(band.walk)
    for v in on_vertices:
        incident = q.out_arrows(v) if side == "out" else q.in_arrows(v)
        if all(a.name in on_arrows for a in incident):
            return v
    raise CorruptPresentationError(
        f"band {band} has no {side}-anchor; presentation is corrupted"
    )


def _eligible_anchors(p, band, side):
    q = p.quiver
    on_arrows = walk_arrows(band.walk)
    out = []
    for v in sorted(set(walk_vertices(q, band.walk))):
        incident = q.out_arrows(v) if side == "out" else q.in_arrows(v)
        if all(a.name in on_arrows for a in incident):
            out.append(v)
    return out


def _straddle_support(p, side_parts):
    """Vertices and arrows on strings not contained in a single side part.

    Tracks, per automaton state, the antichain of minimal part-masks of
    walks ending (resp. starting) there; a state lies on a straddling
    string iff some pair of masks meets in the empty set.
    """
    aut = automaton(p)
    q = p.quiver
    n = len(side_parts)

    def stepmask(s):
        a = q.arrow[s.arrow]
        m = 0
        for i, part in enumerate(side_parts):
            if s.arrow in part.arrows and a.source in part.objects and a.target in part.objects:
                m |= 1 << i
        return m

    masks = {s: stepmask(s) for s in aut.states}

    def add(store, s, m):
        have = store[s]
        for e in have:
            if e & m == e:
                return False
        store[s] = [e for e in have if not (m & e == m)] + [m]
        return True

    fwd = {s: [] for s in aut.states}
    work = []
    for a in sorted(q.arrow):
        for letter in (direct(a), inverse(a)):
            s = aut.initial_state(letter)
            if add(fwd, s, masks[s]):
                work.append((s, masks[s]))
    while work:
        s, m = work.pop()
        for t in aut.successors(s):
            m2 = m & masks[t]
            if add(fwd, t, m2):
                work.append((t, m2))
    rev = {s: [] for s in aut.states}
    for s in aut.states:
        for t in aut.successors(s):
            rev[t].append(s)
    bwd = {s: [] for s in aut.states}
    work = []
    for s in aut.states:
        if add(bwd, s, masks[s]):
            work.append((s, masks[s]))
    while work:
        s, m = work.pop()
        for t in rev[s]:
            m2 = m & masks[t]
            if add(bwd, t, m2):
                work.append((t, m2))

    objects = set()
    arrows = set()
    part_vertices = [part.objects for part in side_parts]
    for v in q.vertices:
        if not any(v in obj for obj in part_vertices):
            objects.add(v)
    for s in aut.states:
        if any(m1 & m2 == 0 for m1 in fwd[s] for m2 in bwd[s]):
            sv, tv = letter_ends(q, s.letter)
            objects.update((sv, tv))
            arrows.add(s.arrow)
    return objects, arrows


def decompose(p):
    """Side parts per one-sided band plus the middle part.

    Defined exactly when classify(p) says StrictLauraOrTilted; the side
    part around a band is independent of the anchor choice, which is
    verified over every eligible anchor.
    """
    report = classify(p)
    if report.verdict != STRICT_LAURA_OR_TILTED:
        raise PreconditionError(
            f"decomposition is defined for StrictLauraOrTilted inputs, got {report.verdict}"
        )
    work = report.analyzed
    notes = list(report.notes)
    a_parts = []
    b_parts = []
    for info in report.bands:
        if info.boundary.entering:
            side, bucket, prefix = "in", b_parts, "B"
        else:
            side, bucket, prefix = "out", a_parts, "A"
        anchors = _eligible_anchors(work, info.band, side)
        if not anchors:
            raise CorruptPresentationError(f"band {info.band} has no {side}-anchor")
        cats = [d_category(work, trivial_walk(work.quiver, v)) for v in anchors]
        base = cats[0]
        if any((c.objects, c.arrows) != (base.objects, base.arrows) for c in cats[1:]):
            raise CorruptPresentationError("side part depends on the anchor choice")
        label = f"{prefix}{len(bucket) + 1}"
        bucket.append(
            Subcategory(label, base.objects, base.arrows, anchor=anchors[0], band=info.band)
        )
    objects, arrows = _straddle_support(work, a_parts + b_parts)
    middle = Subcategory("C", frozenset(objects), frozenset(arrows))
    notes.append(
        "middle part convention: a string belongs to the middle census unless "
        "its full support lies in one single side part"
    )
    dec = Decomposition(tuple(a_parts), tuple(b_parts), middle, tuple(notes), work)
    covered = set().union(*(part.objects for part in dec.parts))
    if covered != set(work.quiver.vertices):
        raise CorruptPresentationError("decomposition does not cover every vertex")
    return dec


@dataclass(frozen=True)
class StructureReport:
    full: bool
    no_entry: bool
    convex: bool
    unique_cycle: bool
    middle_finite: bool
    sides_double_zero_free: bool
    details: tuple

    @property
    def all_pass(self):
        return (
            self.full
            and self.no_entry
            and self.convex
            and self.unique_cycle
            and self.middle_finite
            and self.sides_double_zero_free
        )

    def as_dict(self):
        return {
            "full": self.full,
            "no_entry": self.no_entry,
            "convex": self.convex,
            "unique_cycle": self.unique_cycle,
            "middle_finite": self.middle_finite,
            "sides_double_zero_free": self.sides_double_zero_free,
        }


def _restrict(p, part):
    q = p.quiver
    sub = Quiver(
        sorted(part.objects),
        [(a.name, a.source, a.target) for a in q.arrows if a.name in part.arrows],
    )
    rels = [
        ZeroRelation(sub.path(g))
        for g in p.zero_paths
        if all(n in part.arrows for n in g)
    ]
    return Presentation(sub, rels)


def check_structure(p, decomposition=None):
    """The six structural checks on a decomposition.

    With an explicit decomposition the checks run against p itself, which
    lets tests aim a valid decomposition at a corrupted presentation."""
    if decomposition is None:
        dec = decompose(p)
        work = dec.analyzed
    else:
        dec = decomposition
        work = p if p.is_monomial else quotient_by_J(p)
    q = work.quiver
    details = []

    full = True
    for part in dec.side_parts:
        for a in q.arrows:
            if a.source in part.objects and a.target in part.objects and a.name not in part.arrows:
                full = False
                details.append(f"full: arrow {a.name} between {part.label}-objects is missing")

    no_entry = True
    for part in dec.a_parts:
        for a in q.arrows:
            if a.target in part.objects and a.source not in part.objects:
                no_entry = False
                details.append(f"no_entry: arrow {a.name} enters {part.label}")
    for part in dec.b_parts:
        for a in q.arrows:
            if a.source in part.objects and a.target not in part.objects:
                no_entry = False
                details.append(f"no_entry: arrow {a.name} leaves {part.label}")

    convex = True
    for part in dec.side_parts:
        outside = set()
        stack = []
        for a in q.arrows:
            if a.source in part.objects and a.target not in part.objects:
                stack.append(a.target)
        while stack:
            v = stack.pop()
            if v in outside:
                continue
            outside.add(v)
            for a in q.out_arrows(v):
                if a.target in part.objects:
                    convex = False
                    details.append(f"convex: {part.label} is re-entered through {a.name}")
                elif a.target not in outside:
                    stack.append(a.target)

    unique_cycle = True
    for part in dec.side_parts:
        part_arrows = [a for a in q.arrows if a.name in part.arrows]
        comp = {v: v for v in part.objects}

        def find(v):
            while comp[v] != v:
                comp[v] = comp[comp[v]]
                v = comp[v]
            return v

        for a in part_arrows:
            comp[find(a.source)] = find(a.target)
        ncomp = len({find(v) for v in part.objects})
        cyclomatic = len(part_arrows) - len(part.objects) + ncomp
        if cyclomatic != 1:
            unique_cycle = False
            details.append(f"unique_cycle: {part.label} has cyclomatic number {cyclomatic}")
        if _has_directed_cycle(part_arrows, part.objects):
            unique_cycle = False
            details.append(f"unique_cycle: {part.label} contains an oriented cycle")

    middle_finite = True
    for band in band_census(work):
        support_ok = set(walk_vertices(q, band.walk)) <= dec.middle.objects and walk_arrows(
            band.walk
        ) <= dec.middle.arrows
        if support_ok:
            middle_finite = False
            details.append("middle_finite: the middle part contains a band")

    sides_clean = True
    for part in dec.side_parts:
        if has_double_zero(_restrict(work, part)):
            sides_clean = False
            details.append(f"sides_double_zero_free: {part.label} contains a double-zero")

    return StructureReport(
        full, no_entry, convex, unique_cycle, middle_finite, sides_clean, tuple(details)
    )


def _has_directed_cycle(arrows, vertices):
    succ = {v: [] for v in vertices}
    for a in arrows:
        succ[a.source].append(a.target)
    done = set()
    active = set()
    for root in sorted(vertices):
        if root in done:
            continue
        stack = [(root, iter(succ[root]))]
        active.add(root)
        while stack:
            v, it = stack[-1]
            child = next(it, None)
            if child is None:
                active.discard(v)
                done.add(v)
                stack.pop()
                continue
            if child in active:
                return True
            if child not in done:
                active.add(child)
                stack.append((child, iter(succ[child])))
    return False


def support_cover_check(p, max_len, decomposition=None):
    """Every string of bounded length is supported inside a single part."""
    if decomposition is None:
        dec = decompose(p)
        work = dec.analyzed
    else:
        dec = decomposition
        work = p if p.is_monomial else quotient_by_J(p)
    for w in enumerate_strings(work, max_len):
        if not any(part.contains_walk(work.quiver, w) for part in dec.parts):
            return False
    return True
