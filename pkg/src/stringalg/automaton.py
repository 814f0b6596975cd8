"""Finite automaton accepting exactly the strings of a monomial presentation.

A state is (last letter, run progress) where run progress is the
multi-pattern matcher state of the current maximal same-direction run:
direct runs are matched forwards against the zero generators, inverse
runs against the reversed generators.  Transitions are the composable,
reduced continuations that never complete a generator, so every walk the
automaton accepts is a string and conversely.

Cycles in the state graph are exactly the source of bands: pumping any
cycle yields arbitrarily long strings, and the primitive root of its
letter sequence is a band.
"""

from typing import NamedTuple

import networkx as nx

from ._ac import AhoCorasick
from .errors import CorruptPresentationError, PreconditionError
from .walks import (
    CyclicWalk,
    Letter,
    Walk,
    canonical_band,
    canonical_string,
    direct,
    inverse,
    is_band,
    letter_ends,
    make_cyclic,
    trivial_walk,
    walk_end,
)


class AutoState(NamedTuple):
    arrow: str
    inverse: bool
    node: int

    @property
    def letter(self):
        return Letter(self.arrow, self.inverse)


class StringAutomaton:
    def __init__(self, p):
        if not p.is_monomial:
            raise PreconditionError("the string automaton needs a monomial presentation")
        self.p = p
        self.quiver = p.quiver
        gens = p.zero_paths
        self.acf = AhoCorasick(gens)
        self.acr = AhoCorasick([tuple(reversed(g)) for g in gens])
        self.edges = {}
        todo = []
        for a in self.quiver.arrows:
            for s in (self._init(direct(a.name)), self._init(inverse(a.name))):
                if s is not None and s not in self.edges:
                    self.edges[s] = None
                    todo.append(s)
        while todo:
            s = todo.pop()
            succ = []
            for letter in self._candidate_letters(s):
                t = self.step(s, letter)
                if t is None:
                    continue
                succ.append(t)
                if t not in self.edges:
                    self.edges[t] = None
                    todo.append(t)
            self.edges[s] = tuple(succ)
        self.states = tuple(sorted(self.edges))
        for s in self.states:
            self.edges[s] = tuple(sorted(self.edges[s]))

    def _init(self, letter):
        ac = self.acr if letter.inverse else self.acf
        node = ac.step(0, letter.arrow)
        if ac.hit(node) is not None:
            raise CorruptPresentationError("single arrow lies in the ideal")
        return AutoState(letter.arrow, letter.inverse, node)

    def initial_state(self, letter):
        """State after a one-letter walk."""
        return self._init(letter)

    def state_vertex(self, s):
        return letter_ends(self.quiver, s.letter)[1]

    def _candidate_letters(self, s):
        v = self.state_vertex(s)
        letters = [direct(a.name) for a in self.quiver.out_arrows(v)]
        letters += [inverse(a.name) for a in self.quiver.in_arrows(v)]
        return sorted(letters, key=Letter.key)

    def step(self, s, letter):
        """Extend by one letter; None when the extension is not a string."""
        if letter.arrow == s.arrow and letter.inverse != s.inverse:
            return None
        sv, _ = letter_ends(self.quiver, letter)
        if sv != self.state_vertex(s):
            return None
        ac = self.acr if letter.inverse else self.acf
        node = ac.step(s.node if letter.inverse == s.inverse else 0, letter.arrow)
        if ac.hit(node) is not None:
            return None
        return AutoState(letter.arrow, letter.inverse, node)

    def successors(self, s):
        return self.edges[s]

    def completions(self, s):
        """Direct letters that would complete a generator occurrence,
        as (generator index, arrow name) pairs."""
        v = self.state_vertex(s)
        out = []
        for a in self.quiver.out_arrows(v):
            if s.inverse and a.name == s.arrow:
                continue
            node = self.acf.step(0 if s.inverse else s.node, a.name)
            hit = self.acf.hit(node)
            if hit is not None:
                out.append((hit, a.name))
        return out

    def __len__(self):
        return len(self.states)

    def accepts(self, w):
        """Simulate a walk; agrees with walks.is_string by construction."""
        if not w.letters:
            return self.quiver.has_vertex(w.base)
        s = None
        at = w.base
        for l in w.letters:
            sv, tv = letter_ends(self.quiver, l)
            if sv != at:
                return False
            s = self._init(l) if s is None else self.step(s, l)
            if s is None:
                return False
            at = tv
        return True

    def walk_state(self, w):
        """State after consuming a nonempty string, or None."""
        s = None
        for l in w.letters:
            s = self._init(l) if s is None else self.step(s, l)
            if s is None:
                return None
        return s

    def state_after_direct_path(self, names):
        """Feed an oriented path as direct letters from scratch."""
        s = None
        for n in names:
            l = direct(n)
            s = self._init(l) if s is None else self.step(s, l)
            if s is None:
                return None
        return s

    def has_cycle(self):
        done = set()
        active = set()
        for root in self.states:
            if root in done:
                continue
            stack = [(root, iter(self.edges[root]))]
            active.add(root)
            while stack:
                s, it = stack[-1]
                child = next(it, None)
                if child is None:
                    active.discard(s)
                    done.add(s)
                    stack.pop()
                    continue
                if child in active:
                    return True
                if child not in done:
                    active.add(child)
                    stack.append((child, iter(self.edges[child])))
        return False

    def cycle_states(self):
        """States lying on some nontrivial cycle."""
        g = self.graph()
        out = set()
        for scc in nx.strongly_connected_components(g):
            if len(scc) > 1:
                out |= scc
            else:
                (s,) = scc
                if g.has_edge(s, s):
                    out.add(s)
        return out

    def graph(self):
        g = nx.DiGraph()
        g.add_nodes_from(self.states)
        for s in self.states:
            for t in self.edges[s]:
                g.add_edge(s, t)
        return g

    def bfs(self, sources):
        """Deterministic BFS; returns (dist, parent) maps."""
        dist = {}
        parent = {}
        frontier = list(sources)
        for s in frontier:
            dist[s] = 0
            parent[s] = None
        d = 0
        while frontier:
            nxt = []
            for s in frontier:
                for t in self.edges[s]:
                    if t not in dist:
                        dist[t] = d + 1
                        parent[t] = s
                        nxt.append(t)
            frontier = nxt
            d += 1
        return dist, parent

    def path_letters(self, parent, target):
        """Letters along the BFS parent chain ending at target."""
        out = []
        s = target
        while parent[s] is not None:
            out.append(s.letter)
            s = parent[s]
        out.reverse()
        return out

    def shortest_cycle_at(self, q):
        """Letter sequence of a minimal cycle through q, or None."""
        best = None
        for s in self.edges[q]:
            if s == q:
                cand = [s.letter]
            else:
                dist, parent = self.bfs([s])
                if q not in dist:
                    continue
                cand = [s.letter] + self.path_letters(parent, q)
            key = (len(cand), [l.key() for l in cand])
            if best is None or key < best[0]:
                best = (key, cand)
        return best[1] if best else None


def automaton(p):
    """The cached string automaton of a monomial presentation."""
    return p.cached("string_automaton", lambda: StringAutomaton(p))


def pumping_bound(p):
    """Length bound beyond which string behaviour is periodic: the state
    count plus room for a generator at each end."""
    return len(automaton(p)) + 2 * p.max_generator_length()


def exists_band(p):
    """True iff the string automaton contains a reachable nontrivial cycle."""
    return automaton(p).has_cycle()


def _walks_up_to(p, max_len):
    """Every nonempty string of length <= max_len, one per derivation."""
    if max_len < 1:
        return []
    aut = automaton(p)
    q = p.quiver
    out = []
    stack = []
    for a in sorted(q.arrow):
        for letter in (direct(a), inverse(a)):
            s = aut.initial_state(letter)
            base = letter_ends(q, letter)[0]
            stack.append((Walk(base, (letter,)), s))
    while stack:
        w, s = stack.pop()
        out.append(w)
        if len(w.letters) >= max_len:
            continue
        for t in aut.successors(s):
            stack.append((Walk(w.base, w.letters + (t.letter,)), t))
    return out


def enumerate_strings(p, max_len):
    """Canonically ordered strings of length <= max_len, one per {w, w^-1}."""
    q = p.quiver
    found = {trivial_walk(q, v) for v in q.vertices}
    for w in _walks_up_to(p, max_len):
        found.add(canonical_string(q, w))
    return sorted(found, key=Walk.key)


def strings_of_length(p, lengths):
    """Canonical strings whose length lies in the given set."""
    wanted = set(lengths)
    q = p.quiver
    out = set()
    if 0 in wanted:
        out |= {trivial_walk(q, v) for v in q.vertices}
    top = max(wanted, default=0)
    for w in _walks_up_to(p, top):
        if len(w.letters) in wanted:
            out.add(canonical_string(q, w))
    return sorted(out, key=Walk.key)


def enumerate_bands(p, max_len):
    """Bands of length <= max_len, one per rotation/inversion class."""
    q = p.quiver
    found = set()
    for w in _walks_up_to(p, max_len):
        if w.base != walk_end(q, w):
            continue
        c = CyclicWalk(w)
        if is_band(p, c):
            found.add(canonical_band(q, c))
    return sorted(found, key=lambda c: c.walk.key())


_CENSUS_CAP = 200_000


def band_census(p):
    """All bands, via the simple cycles of the string automaton.

    Complete whenever distinct bands pairwise share at most one vertex
    (always the case on DOZE-free presentations, the only place the
    census is consulted); each simple automaton cycle's letter sequence
    has a band as its primitive root.
    """
    aut = automaton(p)
    g = aut.graph()
    found = set()
    for n, cycle in enumerate(nx.simple_cycles(g)):
        if n >= _CENSUS_CAP:
            raise CorruptPresentationError("band census exceeded the cycle cap")
        letters = [s.letter for s in cycle[1:]] + [cycle[0].letter]
        base = aut.state_vertex(cycle[0])
        root = _primitive_root(letters)
        c = make_cyclic(p.quiver, Walk(base, tuple(root)))
        if not is_band(p, c):
            raise CorruptPresentationError("automaton cycle did not yield a band")
        found.add(canonical_band(p.quiver, c))
    return sorted(found, key=lambda c: c.walk.key())


def _primitive_root(letters):
    n = len(letters)
    for d in range(1, n + 1):
        if n % d == 0 and letters[d:] + letters[:d] == letters:
            return letters[:d]
    return letters
