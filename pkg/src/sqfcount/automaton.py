"""Deterministic pattern automaton: accepts strings containing a pattern.

Built with the classic trie + failure-link construction, then flattened
into a dense transition table (three entries per state, consecutive ids,
start state 0).  Every accepting trie node is merged into one absorbing
accept sink, because the counting recurrences only ever distinguish
"already matched" from "not yet matched".  The resulting automaton has
at most 1 + (total pattern length) states.
"""

from array import array
from collections import deque

ALPHABET_SIZE = 3


class PatternAutomaton:
    """Immutable DFA over {0,1,2} with a dense transition table.

    transitions[3*q + d] is the successor of state q on symbol d.
    accept_sink is the single absorbing accepting state, or None when
    the pattern set was empty (then nothing is ever accepted).
    """

    __slots__ = ("state_count", "start_state", "transitions", "accept_sink")

    def __init__(self, state_count, transitions, accept_sink):
        self.state_count = state_count
        self.start_state = 0
        self.transitions = transitions
        self.accept_sink = accept_sink

    def is_accepting(self, q):
        return q == self.accept_sink

    def step(self, q, d):
        return self.transitions[ALPHABET_SIZE * q + d]

    def run(self, q, word):
        """Fold the transition function over ``word`` starting at state q."""
        if not 0 <= q < self.state_count:
            raise ValueError(f"state {q} out of range")
        trans = self.transitions
        for d in word:
            q = trans[ALPHABET_SIZE * q + d]
        return q

    def accepts(self, word):
        return self.is_accepting(self.run(self.start_state, word))

    def predecessors_view(self):
        """Reverse transition index: for each state, its (state, symbol)
        predecessors as a list.  Total size is 3 * state_count because
        the transition function is total.
        """
        preds = [[] for _ in range(self.state_count)]
        trans = self.transitions
        for p in range(self.state_count):
            base = ALPHABET_SIZE * p
            for d in range(ALPHABET_SIZE):
                preds[trans[base + d]].append((p, d))
        return preds

    def debug_dump(self):
        """One stable line per state: id, transitions, accepting flag."""
        lines = []
        trans = self.transitions
        for q in range(self.state_count):
            base = ALPHABET_SIZE * q
            flag = "accept" if self.is_accepting(q) else "reject"
            lines.append(
                f"{q}: a->{trans[base]} b->{trans[base + 1]} "
                f"c->{trans[base + 2]} {flag}"
            )
        return lines


def build_pattern_automaton(patterns):
    """Build the automaton accepting exactly the words that contain at
    least one of ``patterns`` (each a non-empty bytes over 0..2) as a
    substring.

    Patterns may arrive in any finite stream; construction is linear in
    total pattern length (times the alphabet size).  Redundant patterns
    (superstrings of other patterns) are harmless: their deeper trie
    nodes end up unreachable behind the accept sink.
    """
    # Trie with children as flat parallel arrays.
    children = [[-1] * ALPHABET_SIZE]
    terminal = [False]
    for pat in patterns:
        if len(pat) == 0:
            raise ValueError("empty pattern would match every word")
        node = 0
        for d in pat:
            nxt = children[node][d]
            if nxt < 0:
                nxt = len(children)
                children[node][d] = nxt
                children.append([-1] * ALPHABET_SIZE)
                terminal.append(False)
            node = nxt
        terminal[node] = True

    n_nodes = len(children)
    if n_nodes == 1:
        # No patterns: one rejecting state with self-loops.
        return PatternAutomaton(1, array("i", [0] * ALPHABET_SIZE), None)

    # BFS failure links; a node accepts if it is terminal or its failure
    # target accepts (some pattern is then a suffix of the node's path).
    fail = [0] * n_nodes
    accepting = list(terminal)
    goto = array("i", [0] * (ALPHABET_SIZE * n_nodes))
    queue = deque()
    for d in range(ALPHABET_SIZE):
        c = children[0][d]
        if c >= 0:
            fail[c] = 0
            goto[d] = c
            queue.append(c)
        else:
            goto[d] = 0
    while queue:
        node = queue.popleft()
        if accepting[fail[node]]:
            accepting[node] = True
        base = ALPHABET_SIZE * node
        fbase = ALPHABET_SIZE * fail[node]
        for d in range(ALPHABET_SIZE):
            c = children[node][d]
            if c >= 0:
                fail[c] = goto[fbase + d]
                goto[base + d] = c
                queue.append(c)
            else:
                goto[base + d] = goto[fbase + d]

    # Merge all accepting nodes into one absorbing sink and renumber the
    # rest consecutively (order preserved, so builds are reproducible).
    new_id = [-1] * n_nodes
    next_id = 0
    for node in range(n_nodes):
        if not accepting[node]:
            new_id[node] = next_id
            next_id += 1
    sink = next_id
    state_count = next_id + 1

    trans = array("i", [0] * (ALPHABET_SIZE * state_count))
    for node in range(n_nodes):
        if accepting[node]:
            continue
        base = ALPHABET_SIZE * new_id[node]
        old = ALPHABET_SIZE * node
        for d in range(ALPHABET_SIZE):
            t = goto[old + d]
            trans[base + d] = sink if accepting[t] else new_id[t]
    sbase = ALPHABET_SIZE * sink
    for d in range(ALPHABET_SIZE):
        trans[sbase + d] = sink

    return PatternAutomaton(state_count, trans, sink)
