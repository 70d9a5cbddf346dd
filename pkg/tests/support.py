"""Shared fixtures: the branching sample model and its expected languages."""
from dagmut import SopfRe

# Seventeen nodes a..q, twenty arcs, one start (a) and one finish (q).
SAMPLE_ARCS = [
    ("a", "b"), ("a", "c"), ("b", "d"), ("c", "d"), ("c", "e"),
    ("e", "f"), ("f", "g"), ("d", "g"), ("g", "h"), ("h", "i"),
    ("h", "j"), ("i", "l"), ("j", "k"), ("k", "l"), ("k", "n"),
    ("l", "m"), ("m", "p"), ("n", "o"), ("o", "p"), ("p", "q"),
]

SAMPLE_GRAPH_TEXT = "".join(f"arc {a} {b}\n" for a, b in SAMPLE_ARCS)

# The nine start-to-finish paths of the sample model.
SAMPLE_TERMS = (
    "abdghilmpq",
    "abdghjklmpq",
    "abdghjknopq",
    "acdghilmpq",
    "acdghjklmpq",
    "acdghjknopq",
    "acefghilmpq",
    "acefghjklmpq",
    "acefghjknopq",
)

# Result of applying "(cd)o_a (df)i_a (n)o_n" to the sample model.
MUTATED_TERMS = (
    "abdghilmpq",
    "abdghjklmpq",
    "abdfghilmpq",
    "abdfghjklmpq",
    "acefghilmpq",
    "acefghjklmpq",
    "opq",
)


def sopf(*words: str) -> SopfRe:
    """Build an expression from compact single-character-symbol spellings."""
    return SopfRe(tuple(tuple(w) for w in words))


def spell(re: SopfRe) -> set[str]:
    """Compact spellings of all terms, as a set."""
    return {"".join(term) for term in re}
