"""Sum-of-products term algebra for star-free regular expressions.

A product term is a nonempty tuple of symbols.  A :class:`SopfRe` is a
duplicate-free collection of product terms kept in canonical order
(shortest first, then lexicographic by symbol sequence), so structural
equality is language equality.

Every operation optionally threads an :class:`~dagmut.metrics.OpCounters`
instance through which it tallies symbol comparisons, term copies and set
lookups; passing ``None`` (the default) skips all accounting.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING, Iterator, Sequence

from .errors import ParseError

if TYPE_CHECKING:
    from .metrics import OpCounters

Term = tuple[str, ...]

#: Characters that may never appear inside a symbol id, on top of whitespace.
RESERVED_CHARS = frozenset("(){},+.#")

#: Spelling of the empty expression in textual form; not a legal symbol id.
EMPTY_TOKEN = "EMPTY"


def validate_symbol(sym: str) -> str:
    """Check that ``sym`` is a legal symbol id and return it unchanged."""
    if not isinstance(sym, str) or not sym:
        raise ValueError("symbol must be a nonempty string")
    if sym == EMPTY_TOKEN:
        raise ValueError(f"{EMPTY_TOKEN!r} is reserved for the empty expression")
    for ch in sym:
        if ch.isspace() or ch in RESERVED_CHARS:
            raise ValueError(f"symbol {sym!r} contains reserved character {ch!r}")
    return sym


def term_key(term: Term) -> tuple[int, Term]:
    return (len(term), term)


@dataclass(frozen=True)
class SopfRe:
    """A canonical, duplicate-free set of product terms (possibly empty)."""

    terms: tuple[Term, ...] = ()

    def __post_init__(self):
        canon = tuple(sorted({tuple(t) for t in self.terms}, key=term_key))
        for term in canon:
            if not term:
                raise ValueError("product terms must be nonempty")
        object.__setattr__(self, "terms", canon)

    def __iter__(self) -> Iterator[Term]:
        return iter(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __contains__(self, term) -> bool:
        return tuple(term) in self.terms

    def symbols(self) -> frozenset[str]:
        return frozenset(sym for term in self.terms for sym in term)


# --------------------------------------------------------------------------
# counter plumbing

def _count_scan(counters: "OpCounters | None", n: int) -> None:
    if counters is not None:
        counters.symbol_comparisons += n


def _count_probe(counters: "OpCounters | None", term: Term) -> None:
    # a set membership probe hashes/compares the whole term
    if counters is not None:
        counters.set_lookups += 1
        counters.symbol_comparisons += len(term)


def _count_copy(counters: "OpCounters | None") -> None:
    if counters is not None:
        counters.term_copies += 1


# --------------------------------------------------------------------------
# selectors

def check_pattern(pattern: Sequence[str]) -> Term:
    """Coerce and validate a search pattern of one or two symbols."""
    pat = tuple(pattern)
    if not 1 <= len(pat) <= 2:
        raise ValueError("patterns are limited to one or two symbols")
    return pat


def _find(term: Term, pattern: Term, counters: "OpCounters | None",
          *, last: bool = False) -> int | None:
    """Index of the first (or last) occurrence of ``pattern`` in ``term``."""
    found = None
    for k in range(len(term) - len(pattern) + 1):
        _count_scan(counters, 1)
        if term[k] != pattern[0]:
            continue
        if len(pattern) == 2:
            _count_scan(counters, 1)
            if term[k + 1] != pattern[1]:
                continue
        if not last:
            return k
        found = k
    return found


def pt(r: SopfRe, pattern: Sequence[str], counters: "OpCounters | None" = None) -> SopfRe:
    """Terms of ``r`` containing ``pattern`` as a contiguous symbol run."""
    pat = check_pattern(pattern)
    picked = []
    for term in r:
        if _find(term, pat, counters) is not None:
            _count_copy(counters)
            picked.append(term)
    return SopfRe(tuple(picked))


def ht(p: SopfRe, pattern: Sequence[str], counters: "OpCounters | None" = None) -> SopfRe:
    """Prefixes of the terms of ``p``, each cut just after the first occurrence
    of ``pattern``.  Every term of ``p`` must contain the pattern."""
    pat = check_pattern(pattern)
    seen: set[Term] = set()
    cuts = []
    for term in p:
        k = _find(term, pat, counters)
        if k is None:
            raise ValueError(f"term {''.join(term)!r} does not contain the pattern")
        head = term[:k + len(pat)]
        _count_copy(counters)
        _count_probe(counters, head)
        if head not in seen:
            seen.add(head)
            cuts.append(head)
    return SopfRe(tuple(cuts))


def tt(p: SopfRe, pattern: Sequence[str], counters: "OpCounters | None" = None) -> SopfRe:
    """Suffixes of the terms of ``p``, each starting at the last occurrence
    of ``pattern``.  Every term of ``p`` must contain the pattern."""
    pat = check_pattern(pattern)
    seen: set[Term] = set()
    cuts = []
    for term in p:
        k = _find(term, pat, counters, last=True)
        if k is None:
            raise ValueError(f"term {''.join(term)!r} does not contain the pattern")
        tail = term[k:]
        _count_copy(counters)
        _count_probe(counters, tail)
        if tail not in seen:
            seen.add(tail)
            cuts.append(tail)
    return SopfRe(tuple(cuts))


# --------------------------------------------------------------------------
# set operations

def set_union(a: SopfRe, b: SopfRe, counters: "OpCounters | None" = None) -> SopfRe:
    seen: set[Term] = set()
    merged = []
    for term in (*a, *b):
        _count_probe(counters, term)
        if term not in seen:
            seen.add(term)
            _count_copy(counters)
            merged.append(term)
    return SopfRe(tuple(merged))


def set_difference(r: SopfRe, c: SopfRe, counters: "OpCounters | None" = None) -> SopfRe:
    drop: set[Term] = set()
    for term in c:
        _count_probe(counters, term)
        drop.add(term)
    kept = []
    for term in r:
        _count_probe(counters, term)
        if term not in drop:
            _count_copy(counters)
            kept.append(term)
    return SopfRe(tuple(kept))


def set_concat(a: SopfRe, b: SopfRe, counters: "OpCounters | None" = None) -> SopfRe:
    """All pairwise concatenations; duplicates collapse at insertion."""
    seen: set[Term] = set()
    out = []
    for x in a:
        for y in b:
            joined = x + y
            _count_copy(counters)
            _count_probe(counters, joined)
            if joined not in seen:
                seen.add(joined)
                out.append(joined)
    return SopfRe(tuple(out))


def add_term(r: SopfRe, term: Sequence[str], counters: "OpCounters | None" = None) -> SopfRe:
    t = tuple(term)
    if not t:
        raise ValueError("product terms must be nonempty")
    _count_probe(counters, t)
    if t in r.terms:
        return r
    _count_copy(counters)
    return SopfRe(r.terms + (t,))


def remove_term(r: SopfRe, term: Sequence[str], counters: "OpCounters | None" = None) -> SopfRe:
    t = tuple(term)
    _count_probe(counters, t)
    if t not in r.terms:
        return r
    return SopfRe(tuple(x for x in r.terms if x != t))


def sets_equal(a: SopfRe, b: SopfRe, counters: "OpCounters | None" = None) -> bool:
    """Set equality of two canonical term sets, with comparison accounting."""
    if len(a.terms) != len(b.terms):
        return False
    for x, y in zip(a.terms, b.terms):
        _count_scan(counters, min(len(x), len(y)))
        if x != y:
            return False
    return True


# --------------------------------------------------------------------------
# textual form
#
# Compact form spells a term by concatenating single-character symbols;
# dotted form joins symbols with ".".  A dot anywhere in the input switches
# the whole expression to dotted reading.  Note the inherent ambiguity of
# the compact spelling: a dot-free multi-character token is always read as
# single-character symbols, so an expression whose every term is one
# multi-character symbol does not survive a text round-trip unless the
# reader passes ``dotted=True``.

def parse_sopf(text: str, *, dotted: bool | None = None) -> SopfRe:
    """Parse the textual sum-of-products form.

    ``dotted`` forces the term reading; ``None`` auto-detects (dotted iff a
    "." occurs anywhere in the input).
    """
    stripped = text.strip()
    if not stripped:
        raise ParseError("empty expression text")
    if stripped == EMPTY_TOKEN:
        return SopfRe()
    if dotted is None:
        dotted = "." in stripped
    terms = []
    for chunk in stripped.split("+"):
        chunk = chunk.strip()
        if not chunk:
            raise ParseError("empty product term")
        parts = chunk.split(".") if dotted else list(chunk)
        try:
            terms.append(tuple(validate_symbol(p) for p in parts))
        except ValueError as exc:
            raise ParseError(str(exc)) from exc
    return SopfRe(tuple(terms))


def print_sopf(r: SopfRe, *, dotted: bool = False) -> str:
    """Render in canonical order; the empty expression prints as ``EMPTY``."""
    if not r.terms:
        return EMPTY_TOKEN
    use_dots = dotted or any(len(sym) > 1 for term in r for sym in term)
    sep = "." if use_dots else ""
    return " + ".join(sep.join(term) for term in r.terms)
