"""Exact counting of ternary square-free words.

The counting pipeline: stream the antidictionary of minimal squares,
build the pattern automaton that recognizes "contains a square", then
count by dynamic programming over its states.  A reduced-memory variant
needs only the automaton for short squares and corrects for the long
ones by streaming them.  The structural facts that make the correction
exact are machine-verified in sqfcount.lemmas.
"""

from ._backend import BACKEND
from .antidict import (
    MinimalSquare,
    antidictionary_total_length,
    minimal_squares_in_range,
    minimal_squares_up_to,
)
from .automaton import PatternAutomaton, build_pattern_automaton
from .counting import (
    CountResult,
    CountStats,
    CountTable,
    count_improved,
    count_range,
    count_simple,
    forward_table,
    g_count,
    rejected_table,
)
from .lemmas import (
    ForcedEqualityGraph,
    KeyLemmaReport,
    KeyLemmaSummary,
    OverlapVerdict,
    analyze_word_run,
    build_forced_components,
    find_forced_square,
    verify_key_lemma,
    verify_overlap_lemma,
)
from .words import (
    count_square_free_naive,
    enumerate_square_free,
    is_minimal_square,
    is_square,
    is_square_free,
    parse_word,
    render_word,
)

__version__ = "0.1.0"
