"""Synchronized mutation of a (graph, expression) model pair.

Each operator transforms the graph and its sum-of-products expression in
one step and returns a fresh :class:`ModelState` plus a :class:`LogEntry`
with term accounting; inputs are never modified, and a failed operator
leaves no partial result.

Arc insertion concatenates every distinct head fragment reaching the arc's
source (prefixes cut at its first occurrence) with every distinct tail
fragment leaving the arc's target (suffixes cut at its last occurrence) and
adds the products.  Arc omission drops every term containing the two nodes
adjacently and, when that removal exhausts all terms containing the source
(target), re-adds the head (tail) fragments as terms of their own.  Node
operators are composites of arc operators around adding/removing the bare
one-symbol term.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING, Iterable, Iterator, Sequence

from .errors import OperationError, ScriptError
from .graph import Dg, apply_dg_op, enumerate_paths, path_exists, validate_acyclic
from .ops import ArcInsert, ArcOmit, MutationOp, NodeInsert, NodeOmit, format_op
from .sopf import (
    SopfRe,
    add_term,
    ht,
    pt,
    remove_term,
    set_concat,
    set_difference,
    set_union,
    sets_equal,
    tt,
)

if TYPE_CHECKING:
    from .metrics import OpCounters


@dataclass(frozen=True)
class ModelState:
    """A graph and its expression, transformed together and never separately."""

    dg: Dg
    re: SopfRe

    def __post_init__(self):
        stray = self.re.symbols() - self.dg.nodes
        if stray:
            raise ValueError(f"expression mentions undeclared nodes: {sorted(stray)}")


@dataclass(frozen=True)
class LogEntry:
    """Term accounting for one operator application.

    ``terms_added``/``terms_removed`` are net set differences against the
    pre-state.  For arc operators ``added_bound`` is the head-count x
    tail-count product (insertion) or head-count + tail-count sum
    (omission) and ``removed_expected`` the count of adjacent-pair terms;
    node operators carry their inner arc steps in ``sub`` instead.
    """

    op: MutationOp
    terms_added: int
    terms_removed: int
    added_bound: int | None = None
    removed_expected: int | None = None
    sub: tuple["LogEntry", ...] = ()

    @property
    def notation(self) -> str:
        return format_op(self.op)


@dataclass(frozen=True)
class MutationLog:
    applied: tuple[LogEntry, ...] = ()

    def __iter__(self) -> Iterator[LogEntry]:
        return iter(self.applied)

    def __len__(self) -> int:
        return len(self.applied)

    def arc_entries(self) -> list[LogEntry]:
        """All arc-level entries, including those nested in node operators."""
        out: list[LogEntry] = []
        stack = list(self.applied)
        while stack:
            entry = stack.pop()
            if isinstance(entry.op, (ArcInsert, ArcOmit)):
                out.append(entry)
            stack.extend(entry.sub)
        return out


def model_from_graph(g: Dg) -> ModelState:
    """Build the synchronized state of an acyclic graph; its expression is
    the full start-to-finish path enumeration."""
    return ModelState(g, enumerate_paths(g))


def _entry(op: MutationOp, before: SopfRe, after: SopfRe, **extra) -> LogEntry:
    old, new = set(before.terms), set(after.terms)
    return LogEntry(op, terms_added=len(new - old), terms_removed=len(old - new), **extra)


def _order_witnessed(r: SopfRe, earlier: str, later: str) -> bool:
    """True if some term places ``earlier`` strictly before ``later``."""
    for term in r:
        try:
            k = term.index(earlier)
        except ValueError:
            continue
        if later in term[k + 1:]:
            return True
    return False


def arc_insert(st: ModelState, src: str, dst: str,
               counters: "OpCounters | None" = None) -> tuple[ModelState, LogEntry]:
    """Insert arc ``src -> dst`` and extend the expression accordingly."""
    dg = st.dg
    for v in (src, dst):
        if v not in dg.nodes:
            raise OperationError(f"unknown node {v!r}")
    if (src, dst) in dg.arcs:
        raise OperationError(f"arc {src} -> {dst} already present")
    if path_exists(dg, dst, src):
        # reachability is authoritative; note when the term set alone would
        # not have caught the cycle
        msg = f"inserting arc {src} -> {dst} would create a cycle"
        if not _order_witnessed(st.re, dst, src):
            msg += " (path not witnessed by any product term)"
        raise OperationError(msg)
    heads = ht(pt(st.re, (src,), counters), (src,), counters)
    tails = tt(pt(st.re, (dst,), counters), (dst,), counters)
    products = set_concat(heads, tails, counters)
    new_re = set_union(st.re, products, counters)
    state = ModelState(apply_dg_op(dg, ArcInsert(src, dst)), new_re)
    entry = _entry(ArcInsert(src, dst), st.re, new_re,
                   added_bound=len(heads) * len(tails))
    return state, entry


def arc_omit(st: ModelState, src: str, dst: str,
             counters: "OpCounters | None" = None) -> tuple[ModelState, LogEntry]:
    """Omit arc ``src -> dst`` and shrink the expression accordingly."""
    dg = st.dg
    if (src, dst) not in dg.arcs:
        raise OperationError(f"arc {src} -> {dst} not present")
    containing_src = pt(st.re, (src,), counters)
    containing_dst = pt(st.re, (dst,), counters)
    joined = pt(st.re, (src, dst), counters)
    heads = SopfRe()
    if sets_equal(containing_src, joined, counters):
        heads = ht(containing_src, (src,), counters)
    tails = SopfRe()
    if sets_equal(containing_dst, joined, counters):
        tails = tt(containing_dst, (dst,), counters)
    shrunk = set_difference(st.re, joined, counters)
    new_re = set_union(shrunk, set_union(heads, tails, counters), counters)
    state = ModelState(apply_dg_op(dg, ArcOmit(src, dst)), new_re)
    entry = _entry(ArcOmit(src, dst), st.re, new_re,
                   added_bound=len(heads) + len(tails),
                   removed_expected=len(joined))
    return state, entry


def node_insert(st: ModelState, node: str,
                outgoing: Sequence[str] = (), ingoing: Sequence[str] = (),
                counters: "OpCounters | None" = None) -> tuple[ModelState, LogEntry]:
    """Insert ``node`` with its arcs: the bare term first, then outgoing
    arcs, then ingoing arcs (each a full arc insertion), then the bare term
    is dropped again if any arc was attached."""
    op = NodeInsert(node, tuple(outgoing), tuple(ingoing))
    dg = st.dg
    if node in dg.nodes:
        raise OperationError(f"node {node!r} already present")
    for v in (*op.outgoing, *op.ingoing):
        if v not in dg.nodes:
            raise OperationError(f"unknown node {v!r}")
    work = ModelState(apply_dg_op(dg, NodeInsert(node)),
                      add_term(st.re, (node,), counters))
    sub: list[LogEntry] = []
    for x in op.outgoing:
        work, step = arc_insert(work, node, x, counters)
        sub.append(step)
    for y in op.ingoing:
        work, step = arc_insert(work, y, node, counters)
        sub.append(step)
    if op.outgoing or op.ingoing:
        work = ModelState(work.dg, remove_term(work.re, (node,), counters))
    return work, _entry(op, st.re, work.re, sub=tuple(sub))


def node_omit(st: ModelState, node: str,
              counters: "OpCounters | None" = None) -> tuple[ModelState, LogEntry]:
    """Omit ``node``: its outgoing arcs first, then its ingoing arcs (each a
    full arc omission, leaving the node flagged both ways), then the bare
    term and the node itself are dropped."""
    dg = st.dg
    if node not in dg.nodes:
        raise OperationError(f"unknown node {node!r}")
    work = st
    sub: list[LogEntry] = []
    for x in dg.successors(node):
        work, step = arc_omit(work, node, x, counters)
        sub.append(step)
    for y in dg.predecessors(node):
        work, step = arc_omit(work, y, node, counters)
        sub.append(step)
    final_re = remove_term(work.re, (node,), counters)
    final_dg = Dg(work.dg.nodes - {node}, work.dg.arcs,
                  work.dg.starts - {node}, work.dg.finishes - {node})
    state = ModelState(final_dg, final_re)
    return state, _entry(NodeOmit(node), st.re, final_re, sub=tuple(sub))


def apply_op(st: ModelState, op: MutationOp,
             counters: "OpCounters | None" = None) -> tuple[ModelState, LogEntry]:
    """Apply a single operator to the synchronized state."""
    if isinstance(op, ArcInsert):
        return arc_insert(st, op.src, op.dst, counters)
    if isinstance(op, ArcOmit):
        return arc_omit(st, op.src, op.dst, counters)
    if isinstance(op, NodeInsert):
        return node_insert(st, op.node, op.outgoing, op.ingoing, counters)
    if isinstance(op, NodeOmit):
        return node_omit(st, op.node, counters)
    raise TypeError(f"not a mutation operator: {op!r}")


def apply_script(st: ModelState, ops: Iterable[MutationOp],
                 counters: "OpCounters | None" = None) -> tuple[ModelState, MutationLog]:
    """Apply operators left to right.  The first failure aborts with a
    :class:`ScriptError` naming the 1-based operator index; no partial
    state is returned."""
    entries: list[LogEntry] = []
    state = st
    for index, op in enumerate(ops, 1):
        try:
            state, entry = apply_op(state, op, counters)
        except (OperationError, ValueError) as exc:
            raise ScriptError(index, format_op(op), exc) from exc
        entries.append(entry)
    return state, MutationLog(tuple(entries))


def assert_model_invariants(st: ModelState) -> None:
    """Raise AssertionError if a state violates the model invariants
    (acyclic graph, duplicate-free symbols within each term)."""
    witness = validate_acyclic(st.dg)
    assert witness is None, f"cyclic graph: {witness}"
    for term in st.re:
        assert len(set(term)) == len(term), f"repeated symbol in term {term}"
