"""Signed-letter walks on a bound quiver.

A letter traverses an arrow forwards (direct) or backwards (inverse).  A
walk is a base vertex plus a composable letter sequence; the empty
sequence is the trivial walk at its base.  Strings are reduced walks none
of whose same-direction runs contains a zero generator.
"""

import math
from dataclasses import dataclass
from typing import NamedTuple

from .errors import PreconditionError, SemanticError
from .presentation import _contains_subpath


class Letter(NamedTuple):
    arrow: str
    inverse: bool

    def inverted(self):
        return Letter(self.arrow, not self.inverse)

    def key(self):
        return (self.arrow, self.inverse)

    def __str__(self):
        return f"{self.arrow}^-1" if self.inverse else self.arrow


def direct(name):
    return Letter(name, False)


def inverse(name):
    return Letter(name, True)


def letter_ends(quiver, letter):
    """Effective (source, target) of a letter."""
    a = quiver.arrow[letter.arrow]
    return (a.target, a.source) if letter.inverse else (a.source, a.target)


@dataclass(frozen=True)
class Walk:
    base: str
    letters: tuple

    def __len__(self):
        return len(self.letters)

    @property
    def is_trivial(self):
        return not self.letters

    def key(self):
        return (len(self.letters), tuple(l.key() for l in self.letters), self.base)


def make_walk(quiver, base, letters):
    """Validated walk; raises if the letters do not compose from base."""
    letters = tuple(letters)
    at = base
    if not quiver.has_vertex(base):
        raise SemanticError(f"unknown vertex {base!r}")
    for l in letters:
        if l.arrow not in quiver.arrow:
            raise SemanticError(f"unknown arrow {l.arrow!r}")
        s, t = letter_ends(quiver, l)
        if s != at:
            raise SemanticError(f"letter {l} does not start at {at!r}")
        at = t
    return Walk(base, letters)


def trivial_walk(quiver, vertex):
    return make_walk(quiver, vertex, ())


def walk_end(quiver, w):
    if w.is_trivial:
        return w.base
    return letter_ends(quiver, w.letters[-1])[1]


def walk_vertices(quiver, w):
    """Vertex passages, length len(w) + 1."""
    out = [w.base]
    for l in w.letters:
        out.append(letter_ends(quiver, l)[1])
    return out


def walk_arrows(w):
    return frozenset(l.arrow for l in w.letters)


def inverse_walk(quiver, w):
    return Walk(walk_end(quiver, w), tuple(l.inverted() for l in reversed(w.letters)))


def concat_walks(quiver, *walks):
    walks = [w for w in walks if w is not None]
    if not walks:
        raise ValueError("nothing to concatenate")
    letters = []
    at = walks[0].base
    for w in walks:
        if w.base != at:
            raise SemanticError(f"cannot concatenate: expected base {at!r}, got {w.base!r}")
        letters.extend(w.letters)
        at = walk_end(quiver, w)
    return Walk(walks[0].base, tuple(letters))


def is_reduced(w):
    """No letter immediately followed by its own inverse."""
    for a, b in zip(w.letters, w.letters[1:]):
        if a.arrow == b.arrow and a.inverse != b.inverse:
            return False
    return True


def maximal_runs(w):
    """Maximal same-direction segments as (inverse?, letters) pairs."""
    runs = []
    for l in w.letters:
        if runs and runs[-1][0] == l.inverse:
            runs[-1][1].append(l)
        else:
            runs.append((l.inverse, [l]))
    return runs


def run_oriented_arrows(inv, letters):
    """The run read as an oriented path; inverse runs read against the
    arrow direction, i.e. reversed."""
    names = [l.arrow for l in letters]
    return tuple(reversed(names)) if inv else tuple(names)


def is_string(p, w):
    """Reduced and no same-direction run contains a zero generator."""
    if not p.is_monomial:
        raise PreconditionError("is_string needs a monomial presentation")
    if not is_reduced(w):
        return False
    for inv, letters in maximal_runs(w):
        oriented = run_oriented_arrows(inv, letters)
        if any(_contains_subpath(oriented, g) for g in p.zero_paths):
            return False
    return True


def canonical_string(quiver, w):
    """Representative of {w, w^-1}: the letter-key-lexicographic minimum."""
    wi = inverse_walk(quiver, w)
    return min(w, wi, key=Walk.key)


@dataclass(frozen=True)
class CyclicWalk:
    """Walk whose effective endpoints coincide."""

    walk: Walk

    def __len__(self):
        return len(self.walk)

    @property
    def base(self):
        return self.walk.base

    @property
    def letters(self):
        return self.walk.letters


def make_cyclic(quiver, walk):
    if walk_end(quiver, walk) != walk.base:
        raise SemanticError("walk is not cyclic")
    return CyclicWalk(walk)


def rotations(quiver, c):
    """All rotations of a cyclic walk, starting one at c itself."""
    letters = c.letters
    out = []
    for i in range(len(letters)):
        rot = letters[i:] + letters[:i]
        base = letter_ends(quiver, rot[0])[0]
        out.append(CyclicWalk(Walk(base, rot)))
    return out or [c]


def cyclic_power(quiver, c, n):
    """The walk traversing the cycle n times (n = 0 gives the trivial walk)."""
    return Walk(c.base, c.letters * n)


def canonical_band(quiver, c):
    """Minimum over all rotations of both orientations."""
    cands = rotations(quiver, c)
    inv = make_cyclic(quiver, inverse_walk(quiver, c.walk))
    cands += rotations(quiver, inv)
    return min(cands, key=lambda r: r.walk.key())


def is_primitive(letters):
    n = len(letters)
    for d in range(1, n):
        if n % d == 0 and letters[d:] + letters[:d] == letters:
            return False
    return True


def is_band(p, c):
    """Primitive cyclic string all of whose powers are strings.

    Checking one long enough power covers every rotation window: a
    generator occurrence in the infinite periodic walk spans at most
    ceil(len(generator) / len(c)) + 1 periods.
    """
    if not p.is_monomial:
        raise PreconditionError("is_band needs a monomial presentation")
    if len(c) == 0:
        return False
    if walk_end(p.quiver, c.walk) != c.base:
        return False
    if not is_primitive(c.letters):
        return False
    k = max(3, math.ceil(p.max_generator_length() / len(c)) + 2)
    return is_string(p, cyclic_power(p.quiver, c, k))


@dataclass(frozen=True)
class BandBoundary:
    entering: frozenset
    exiting: frozenset


def band_boundary(p, c):
    """Off-band arrows incident to the band's vertices.

    entering: target on the band; exiting: source on the band.
    """
    on_vertices = set(walk_vertices(p.quiver, c.walk))
    on_arrows = walk_arrows(c.walk)
    entering = frozenset(
        a.name for a in p.quiver.arrows if a.name not in on_arrows and a.target in on_vertices
    )
    exiting = frozenset(
        a.name for a in p.quiver.arrows if a.name not in on_arrows and a.source in on_vertices
    )
    return BandBoundary(entering, exiting)


def serialize_walk(w):
    body = " ".join(str(l) for l in w.letters)
    return f"{w.base}: {body}" if body else f"{w.base}:"


def parse_walk(quiver, text):
    head, sep, tail = text.partition(":")
    if not sep:
        raise SemanticError(f"walk {text!r}: missing ':' after base vertex")
    base = head.strip()
    letters = []
    for tok in tail.split():
        if tok.endswith("^-1"):
            letters.append(inverse(tok[:-3]))
        else:
            letters.append(direct(tok))
    return make_walk(quiver, base, letters)


def serialize_band(c):
    return f"band: {serialize_walk(c.walk)}"


def parse_band(quiver, text):
    if not text.startswith("band:"):
        raise SemanticError(f"band {text!r}: missing 'band:' prefix")
    return make_cyclic(quiver, parse_walk(quiver, text[len("band:") :].strip()))
