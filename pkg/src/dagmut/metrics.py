"""Primitive-operation counting and empirical growth-rate validation.

Cost is machine-independent: symbol comparisons plus term copies, tallied
into an explicit :class:`OpCounters` context threaded through the term-set
operations.  :func:`trend` runs an operation over size-doubling corpora,
fits the log-log slope and checks it against the operation's worst-case
bound exponent (in term-set size, with term length held fixed) plus a
fixed slack.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .graph import Dg
from .mutate import ModelState, arc_insert, arc_omit, model_from_graph, node_insert, node_omit
from .sopf import (
    SopfRe,
    add_term,
    ht,
    pt,
    remove_term,
    set_concat,
    set_difference,
    set_union,
    tt,
)

#: Fitted exponents may exceed the bound by at most this much (small-size
#: noise allowance; corpora are average-case while bounds are worst-case).
SLACK = 0.3


@dataclass
class OpCounters:
    """Monotone tallies of the primitive work done by term-set operations."""

    symbol_comparisons: int = 0
    term_copies: int = 0
    set_lookups: int = 0

    def cost(self) -> int:
        return self.symbol_comparisons + self.term_copies


@dataclass(frozen=True)
class TrendReport:
    op_kind: str
    series: tuple[tuple[int, int], ...]
    fitted_exponent: float
    bound_exponent: float
    passed: bool

    @property
    def verdict(self) -> str:
        return "pass" if self.passed else "fail"


#: Worst-case growth exponents in term-set size at fixed term length.
#: Selectors and arc operators are bounded quadratically (the arc-insertion
#: figure is the duplicate-tolerant variant: concatenation products are
#: deduplicated by hashed insertion, not pairwise comparison); plain set
#: concatenation with pairwise filtering is bounded quartically.
BOUND_EXPONENTS: dict[str, float] = {
    "set_union": 2.0,
    "set_difference": 2.0,
    "set_concat": 4.0,
    "pt": 2.0,
    "ht": 2.0,
    "tt": 2.0,
    "arc_insert": 2.0,
    "arc_omit": 2.0,
    "node_insert": 2.0,
    "node_omit": 2.0,
}

_DISPATCH = {
    "set_union": lambda c, a, b: set_union(a, b, c),
    "set_difference": lambda c, a, b: set_difference(a, b, c),
    "set_concat": lambda c, a, b: set_concat(a, b, c),
    "add_term": lambda c, r, t: add_term(r, t, c),
    "remove_term": lambda c, r, t: remove_term(r, t, c),
    "pt": lambda c, r, s: pt(r, s, c),
    "ht": lambda c, p, s: ht(p, s, c),
    "tt": lambda c, p, s: tt(p, s, c),
    "arc_insert": lambda c, st, u, v: arc_insert(st, u, v, c)[0],
    "arc_omit": lambda c, st, u, v: arc_omit(st, u, v, c)[0],
    "node_insert": lambda c, st, v, outs, ins: node_insert(st, v, outs, ins, c)[0],
    "node_omit": lambda c, st, v: node_omit(st, v, c)[0],
}


def measure(kind: str, *inputs):
    """Run one operation with counting enabled.

    Returns ``(result, counters)``; the result is identical to an
    uncounted run.
    """
    try:
        fn = _DISPATCH[kind]
    except KeyError:
        raise ValueError(f"unknown operation kind {kind!r}") from None
    counters = OpCounters()
    result = fn(counters, *inputs)
    return result, counters


# --------------------------------------------------------------------------
# corpora

_ALPHABET = "abcdefghijklmnopqrstuvwxyz"


def _random_re(rng: random.Random, count: int, length: int,
               plant: str | None = None, every: int = 1) -> SopfRe:
    """``count`` distinct random terms of the given length; ``plant`` puts
    a marker symbol into every ``every``-th term."""
    terms: set[tuple[str, ...]] = set()
    k = 0
    while len(terms) < count:
        term = tuple(rng.choice(_ALPHABET) for _ in range(length))
        if plant is not None and k % every == 0:
            pos = rng.randrange(length)
            term = term[:pos] + (plant,) + term[pos + 1:]
        k += 1
        terms.add(term)
    return SopfRe(tuple(terms))


def _layered_state(width: int) -> ModelState:
    """Entry -> one of ``width`` middles -> exit: exactly ``width`` terms,
    all of length 3, so term-set size scales while term length stays put."""
    entry, exit_ = "in0", "out0"
    mids = [f"m{k}" for k in range(width)]
    nodes = frozenset([entry, exit_, *mids])
    arcs = frozenset([(entry, m) for m in mids] + [(m, exit_) for m in mids])
    return model_from_graph(Dg(nodes, arcs, frozenset([entry]), frozenset([exit_])))


def trend_inputs(kind: str, size: int, rng: random.Random, term_len: int):
    """Inputs for one series point of :func:`trend`."""
    if kind in ("set_union", "set_difference"):
        return (_random_re(rng, size, term_len), _random_re(rng, size, term_len))
    if kind == "set_concat":
        return (_random_re(rng, size, term_len), _random_re(rng, size, term_len))
    if kind == "pt":
        return (_random_re(rng, size, term_len, plant="q", every=2), ("q",))
    if kind in ("ht", "tt"):
        return (_random_re(rng, size, term_len, plant="q"), ("q",))
    if kind == "arc_insert":
        return (_layered_state(size), "in0", "out0")
    if kind == "arc_omit":
        return (_layered_state(size), "m0", "out0")
    if kind == "node_insert":
        return (_layered_state(size), "v0", ("out0",), ("in0",))
    if kind == "node_omit":
        return (_layered_state(size), "m0")
    raise ValueError(f"no trend corpus for operation kind {kind!r}")


def fit_exponent(series: Sequence[tuple[int, int]]) -> float:
    """Least-squares slope of log(cost) against log(size)."""
    if len(series) < 4:
        raise ValueError("need at least 4 series points for a trend fit")
    if any(cost <= 0 for _, cost in series):
        raise ValueError("degenerate series: zero cost")
    return float(np.polyfit(np.log([s for s, _ in series]),
                            np.log([c for _, c in series]), 1)[0])


def trend(kind: str, sizes: Sequence[int], *, bound_exponent: float | None = None,
          seed: int = 0, term_len: int = 6) -> TrendReport:
    """Measure ``kind`` over corpora of the given term-set sizes and fit
    the log-log growth exponent by least squares."""
    sizes = [int(s) for s in sizes]
    if len(sizes) < 4:
        raise ValueError("need at least 4 series points for a trend fit")
    if min(sizes) < 2:
        raise ValueError("series sizes must be at least 2")
    if bound_exponent is None:
        if kind not in BOUND_EXPONENTS:
            raise ValueError(f"no bound exponent known for {kind!r}")
        bound_exponent = BOUND_EXPONENTS[kind]
    series = []
    for index, size in enumerate(sizes):
        rng = random.Random(seed * 7919 + index * 104729 + size)
        inputs = trend_inputs(kind, size, rng, term_len)
        _, counters = measure(kind, *inputs)
        cost = counters.cost()
        if cost <= 0:
            raise ValueError(f"degenerate series: zero cost at size {size}")
        series.append((size, cost))
    slope = fit_exponent(series)
    return TrendReport(op_kind=kind, series=tuple(series),
                       fitted_exponent=slope,
                       bound_exponent=float(bound_exponent),
                       passed=slope <= bound_exponent + SLACK)
