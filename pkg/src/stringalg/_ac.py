"""Multi-pattern matcher over arrow alphabets (Aho-Corasick).

Patterns are tuples of arrow ids.  The caller guarantees the pattern set
is an antichain under contiguous containment (relation generators are
minimalized on load), so at most one pattern can end at any position.
"""

from collections import deque


class AhoCorasick:
    """Failure-link automaton reporting completed patterns per step.

    States are integers; 0 is the root.  ``step`` consumes one symbol and
    returns the next state.  ``hit(state)`` is the index of the pattern
    ending exactly at the current position, or None.
    """

    def __init__(self, patterns):
        self.patterns = [tuple(p) for p in patterns]
        self._goto = [{}]
        self._fail = [0]
        self._ends = [None]
        for idx, pat in enumerate(self.patterns):
            if not pat:
                raise ValueError("empty pattern")
            node = 0
            for sym in pat:
                nxt = self._goto[node].get(sym)
                if nxt is None:
                    nxt = len(self._goto)
                    self._goto.append({})
                    self._fail.append(0)
                    self._ends.append(None)
                    self._goto[node][sym] = nxt
                node = nxt
            if self._ends[node] is not None:
                raise ValueError(f"duplicate pattern {pat!r}")
            self._ends[node] = idx
        self._hit = list(self._ends)
        queue = deque()
        for child in self._goto[0].values():
            queue.append(child)
        while queue:
            node = queue.popleft()
            fail = self._fail[node]
            if self._hit[node] is None:
                self._hit[node] = self._hit[fail]
            for sym, child in self._goto[node].items():
                f = fail
                while f and sym not in self._goto[f]:
                    f = self._fail[f]
                self._fail[child] = self._goto[f].get(sym, 0)
                if self._fail[child] == child:
                    self._fail[child] = 0
                queue.append(child)

    def __len__(self):
        return len(self._goto)

    def step(self, state, symbol):
        while state and symbol not in self._goto[state]:
            state = self._fail[state]
        return self._goto[state].get(symbol, 0)

    def hit(self, state):
        """Index of the pattern ending at this position, or None."""
        return self._hit[state]

    def scan(self, symbols):
        """Yield (position, pattern index) for every match in symbols."""
        state = 0
        for pos, sym in enumerate(symbols):
            state = self.step(state, sym)
            if self._hit[state] is not None:
                yield pos, self._hit[state]

    def contains_match(self, symbols):
        state = 0
        for sym in symbols:
            state = self.step(state, sym)
            if self._hit[state] is not None:
                return True
        return False
