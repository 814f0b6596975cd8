"""Double-zeros, interlaced double-zeros, and the laura classifier.

A double-zero is a reduced walk of the shape rho1 . middle . rho2 where
both zero generators are traversed forwards and the interior (the walk
minus its outermost arrow at each end) is a string.  An interlaced
double-zero (DOZE) additionally factors the middle as w1 . band . w3;
pumping the band then produces double-zeros of every power, which is
what kills laura-ness.

The exact search runs on the string automaton: a witness exists iff some
state reachable from a just-consumed generator lies on a cycle and can
reach a generator-completing step.  The brute-force enumerator is kept
deliberately naive (no automaton) so the two can act as independent
oracles for each other.
"""

from dataclasses import dataclass, field

from .automaton import _primitive_root, automaton, band_census
from .errors import (
    CorruptPresentationError,
    PreconditionError,
    SearchBudgetExceeded,
)
from .presentation import (
    _contains_subpath,
    quotient_by_J,
    validate_special_biserial,
    validate_string_algebra,
)
from .walks import (
    BandBoundary,
    CyclicWalk,
    Walk,
    band_boundary,
    concat_walks,
    cyclic_power,
    direct,
    inverse,
    is_band,
    is_reduced,
    is_string,
    letter_ends,
    make_cyclic,
    serialize_walk,
    walk_arrows,
    walk_vertices,
)

FINITE_TYPE = "FiniteType"
QUASI_TILTED_CANONICAL = "QuasiTiltedCanonical"
STRICT_LAURA_OR_TILTED = "StrictLauraOrTilted"
HEREDITARY_SINGLE_BAND = "HereditarySingleBand"
NOT_LAURA = "NotLaura"


def generator_walk(quiver, names):
    """A zero generator read forwards, as a walk of direct letters."""
    path = quiver.path(names)
    return Walk(path.source, tuple(direct(n) for n in names))


@dataclass(frozen=True)
class DoubleZero:
    rho1: tuple
    middle: Walk
    rho2: tuple
    whole: Walk

    def __len__(self):
        return len(self.whole.letters)


def make_double_zero(p, rho1, middle, rho2):
    """Validated double-zero; raises on any broken invariant."""
    rho1, rho2 = tuple(rho1), tuple(rho2)
    gens = set(p.zero_paths)
    if rho1 not in gens or rho2 not in gens:
        raise CorruptPresentationError("double-zero ends must be zero generators")
    q = p.quiver
    whole = concat_walks(q, generator_walk(q, rho1), middle, generator_walk(q, rho2))
    if not is_reduced(whole):
        raise CorruptPresentationError("double-zero walk is not reduced")
    interior = Walk(
        letter_ends(q, whole.letters[0])[1], whole.letters[1:-1]
    )
    if not is_string(p, interior):
        raise CorruptPresentationError("double-zero interior is not a string")
    return DoubleZero(rho1, middle, rho2, whole)


@dataclass(frozen=True)
class DozeWitness:
    """Factorization rho1 . w1 . band^n . w3 . rho2 certifying non-laura."""

    p: object = field(repr=False)
    rho1: tuple
    w1: Walk
    band: CyclicWalk
    w3: Walk
    rho2: tuple

    def assembled(self, n):
        q = self.p.quiver
        return concat_walks(
            q,
            generator_walk(q, self.rho1),
            self.w1,
            cyclic_power(q, self.band, n),
            self.w3,
            generator_walk(q, self.rho2),
        )

    def double_zero(self, n):
        q = self.p.quiver
        middle = concat_walks(q, self.w1, cyclic_power(q, self.band, n), self.w3)
        return make_double_zero(self.p, self.rho1, middle, self.rho2)

    def pumps_cleanly_at(self, n):
        """Whether assembled(n) still satisfies the double-zero invariants.

        True for every n >= 1; can legitimately fail at n = 0 when
        deleting the band merges two runs across a generator.
        """
        try:
            self.double_zero(n)
            return True
        except CorruptPresentationError:
            return False

    def serialize(self):
        return (
            f"doze: rho1={'.'.join(self.rho1)} w1=[{serialize_walk(self.w1)}] "
            f"band=[{serialize_walk(self.band.walk)}] w3=[{serialize_walk(self.w3)}] "
            f"rho2={'.'.join(self.rho2)}"
        )


def _validate_witness(w):
    if not is_band(w.p, w.band):
        raise CorruptPresentationError("witness band is not a band")
    for n in (1, 2, 3):
        w.double_zero(n)
    return w


def _gen_as_suffix(gens, run):
    for g in gens:
        if len(g) <= len(run) and tuple(run[-len(g):]) == g:
            return g
    return None


def _gen_as_prefix(gens, run):
    for g in gens:
        if len(g) <= len(run) and tuple(run[: len(g)]) == g:
            return g
    return None


def find_double_zeros(p, max_len, node_budget=None):
    """All double-zeros of total length <= max_len, canonical order.

    Deduplicated up to inversion: both generators are traversed forwards
    along the returned walks, which picks one member of each {w, w^-1}
    class.  Naive extension search on purpose; see the module docstring.
    """
    if not p.is_monomial:
        raise PreconditionError("find_double_zeros needs a monomial presentation")
    q = p.quiver
    gens = p.zero_paths
    results = []
    budget = [node_budget]

    def spend():
        if budget[0] is None:
            return
        budget[0] -= 1
        if budget[0] < 0:
            raise SearchBudgetExceeded("double-zero enumeration budget exhausted")

    for g in gens:
        l = len(g)
        if l + 2 > max_len:
            continue
        if any(_contains_subpath(tuple(g[1:]), h) for h in gens):
            raise CorruptPresentationError("generators are not minimal")
        seed = [direct(a) for a in g]
        arr = q.arrow[g[-1]]

        def extend(letters, vertex, tail_inv, tail, depth):
            spend()
            last = letters[-1]
            total = len(letters)
            # completion: a direct letter finishing a generator occurrence
            # that is disjoint from rho1 (depth >= len(gen) - 1)
            if not last.inverse and total + 1 <= max_len:
                for a in q.out_arrows(vertex):
                    hit = _gen_as_suffix(gens, tail + [a.name])
                    if hit is not None and depth >= len(hit) - 1:
                        full = letters + [direct(a.name)]
                        mid_letters = full[l : len(full) - len(hit)]
                        middle = Walk(
                            q.arrow[g[-1]].target, tuple(mid_letters)
                        )
                        results.append(make_double_zero(p, g, middle, hit))
            if total + 2 > max_len:
                return
            cands = [direct(a.name) for a in q.out_arrows(vertex)]
            cands += [inverse(a.name) for a in q.in_arrows(vertex)]
            cands.sort(key=lambda m: m.key())
            for m in cands:
                if m.arrow == last.arrow and m.inverse != last.inverse:
                    continue
                if m.inverse == tail_inv:
                    run = tail + [m.arrow] if not m.inverse else [m.arrow] + tail
                    check = _gen_as_prefix if m.inverse else _gen_as_suffix
                    if check(gens, run) is not None:
                        continue
                else:
                    run = [m.arrow]
                nv = letter_ends(q, m)[1]
                extend(letters + [m], nv, m.inverse, run, depth + 1)

        extend(seed, arr.target, False, list(g[1:]), 0)
    results.sort(key=lambda dz: dz.whole.key())
    return results


def has_double_zero(p):
    """Exact decision, not length-bounded.

    A double-zero needs a generator start whose interior state can reach
    a generator completion at distance >= len(rho2) - 1; distances grow
    without bound past any cycle, and are a DAG longest-path otherwise.
    """
    if not p.is_monomial:
        raise PreconditionError("has_double_zero needs a monomial presentation")
    aut = automaton(p)
    gens = p.zero_paths
    if not gens:
        return False
    cyc = aut.cycle_states()
    for g in gens:
        s0 = aut.state_after_direct_path(g[1:])
        if s0 is None:
            continue
        dist, _ = aut.bfs([s0])
        reach = set(dist)
        from_cyc = set()
        seeds = sorted(reach & cyc)
        if seeds:
            d2, _ = aut.bfs(seeds)
            from_cyc = set(d2)
        longest = _dag_longest_from(aut, s0, reach - from_cyc)
        for f in reach:
            limit = None if f in from_cyc else longest.get(f, -1)
            for gen_idx, _x in aut.completions(f):
                m = len(gens[gen_idx])
                if limit is None or m - 1 <= limit:
                    return True
    return False


def _dag_longest_from(aut, s0, dag):
    """Longest path lengths from s0 within an acyclic state set."""
    if s0 not in dag:
        return {}
    order = []
    seen = set()
    stack = [(s0, iter([t for t in aut.successors(s0) if t in dag]))]
    seen.add(s0)
    while stack:
        s, it = stack[-1]
        child = next(it, None)
        if child is None:
            order.append(s)
            stack.pop()
            continue
        if child not in seen:
            seen.add(child)
            stack.append((child, iter([t for t in aut.successors(child) if t in dag])))
    order.reverse()
    longest = {s0: 0}
    for s in order:
        if s not in longest:
            continue
        for t in aut.successors(s):
            if t in dag and longest[s] + 1 > longest.get(t, -1):
                longest[t] = longest[s] + 1
    return longest


def find_doze(p):
    """Exact DOZE search; returns a validated witness or None.

    Existence is equivalent to: some state q reachable from a freshly
    consumed generator lies on an automaton cycle and can reach a
    generator-completing step.  The witness band is the primitive root
    of a minimal cycle at q; w3 absorbs extra band copies whenever the
    closing generator would otherwise overlap the band.
    """
    if not p.is_monomial:
        raise PreconditionError("find_doze needs a monomial presentation")
    aut = automaton(p)
    gens = p.zero_paths
    if not gens:
        return None
    cyc = aut.cycle_states()
    if not cyc:
        return None
    for g in gens:
        s0 = aut.state_after_direct_path(g[1:])
        if s0 is None:
            continue
        dist1, par1 = aut.bfs([s0])
        for q in sorted((s for s in cyc if s in dist1), key=lambda s: (dist1[s], s)):
            dist2, par2 = aut.bfs([q])
            target = None
            for f in sorted(dist2, key=lambda s: (dist2[s], s)):
                comps = aut.completions(f)
                if comps:
                    comps.sort(key=lambda c: (gens[c[0]], c[1]))
                    target = (f, comps[0])
                    break
            if target is None:
                continue
            return _assemble_witness(p, aut, g, q, par1, target, par2)
    return None


def _assemble_witness(p, aut, g, q, par1, target, par2):
    quiver = p.quiver
    f, (gen_idx, xarrow) = target
    g2 = p.zero_paths[gen_idx]
    cycle_letters = aut.shortest_cycle_at(q)
    root = list(_primitive_root(cycle_letters))
    s = q
    for l in root:
        s = aut.step(s, l)
    if s != q:
        raise CorruptPresentationError("primitive root does not stabilize its state")
    band = make_cyclic(quiver, Walk(aut.state_vertex(q), tuple(root)))
    path = aut.path_letters(par2, f)
    m = len(g2)
    pad = 0
    while len(path) + pad * len(root) < m - 1:
        pad += 1
    tail = root * pad + path + [direct(xarrow)]
    rho2_letters = tail[len(tail) - m :]
    w3_letters = tail[: len(tail) - m]
    if any(l.inverse for l in rho2_letters) or tuple(l.arrow for l in rho2_letters) != g2:
        raise CorruptPresentationError("generator completion is inconsistent")
    rho1_end = quiver.arrow[g[-1]].target
    w1 = Walk(rho1_end, tuple(aut.path_letters(par1, q)))
    w3 = Walk(band.base, tuple(w3_letters))
    return _validate_witness(DozeWitness(p, g, w1, band, w3, g2))


def find_doze_bruteforce(p, max_len, node_budget=None):
    """Independent oracle: factor enumerated double-zeros through a band.

    Tests every contiguous cyclic segment of each middle; first witness
    in canonical order wins.
    """
    q = p.quiver
    for dz in find_double_zeros(p, max_len, node_budget):
        mid = dz.middle
        verts = walk_vertices(q, mid)
        n = len(mid.letters)
        for i in range(n):
            for j in range(i + 1, n + 1):
                if verts[i] != verts[j]:
                    continue
                c = CyclicWalk(Walk(verts[i], mid.letters[i:j]))
                if not is_band(p, c):
                    continue
                w1 = Walk(mid.base, mid.letters[:i])
                w3 = Walk(verts[j], mid.letters[j:])
                return _validate_witness(DozeWitness(p, dz.rho1, w1, c, w3, dz.rho2))
    return None


@dataclass(frozen=True)
class BandInfo:
    band: CyclicWalk
    boundary: BandBoundary


@dataclass(frozen=True)
class ClassificationReport:
    verdict: str
    evidence: object
    bands: tuple
    notes: tuple
    analyzed: object = field(repr=False, default=None, compare=False)


def classify(p):
    """Laura classification of a string or special biserial presentation.

    Special biserial inputs are analyzed on their J-quotient, where being
    laura is equivalent; the note records this.  The verdict NotLaura
    always carries a witness, and conversely.
    """
    notes = []
    if validate_string_algebra(p).is_valid:
        work = p
    else:
        if not validate_special_biserial(p).is_valid:
            raise PreconditionError(
                "classification needs a string or special biserial presentation"
            )
        work = quotient_by_J(p)
        notes.append(
            "special biserial input: verdict computed on the J-quotient, "
            "where being laura is equivalent"
        )
    witness = find_doze(work)
    if witness is not None:
        notes.append("band census omitted: only complete without interlaced double-zeros")
        return ClassificationReport(NOT_LAURA, witness, (), tuple(notes), work)
    census = band_census(work)
    infos = tuple(BandInfo(b, band_boundary(work, b)) for b in census)
    if not census:
        return ClassificationReport(FINITE_TYPE, None, infos, tuple(notes), work)
    if len(census) == 1 and not infos[0].boundary.entering and not infos[0].boundary.exiting:
        b = census[0]
        covers = walk_arrows(b.walk) == set(work.quiver.arrow) and set(
            walk_vertices(work.quiver, b.walk)
        ) == set(work.quiver.vertices)
        if covers:
            return ClassificationReport(
                HEREDITARY_SINGLE_BAND, None, infos, tuple(notes), work
            )
        notes.append("boundary-free band does not cover the quiver (disconnected input)")
    if any(i.boundary.entering and i.boundary.exiting for i in infos):
        return ClassificationReport(QUASI_TILTED_CANONICAL, None, infos, tuple(notes), work)
    return ClassificationReport(STRICT_LAURA_OR_TILTED, None, infos, tuple(notes), work)
