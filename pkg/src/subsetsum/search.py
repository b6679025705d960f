"""Exhaustive non-existence search for A given the first terms of B.

Let ``H = max(known_b)``.  Any A with ``P(A) = N \\ B`` yields the finite
``S = A ∩ [1, H]`` with ``P(S) ⊇ [0, H] \\ B`` and ``P(S) ∩ known_b = ∅``.  The
search enumerates increasing candidate prefixes of such an S.  A prefix can
only be extended by ``a <= t``, where ``t`` is the least non-B value in
``[0, H]`` it does not yet represent (later elements are all larger than
``t``, so nothing could ever represent it), and only by elements whose sums
avoid ``known_b``.  Exhausting the tree therefore certifies that no B
beginning with ``known_b`` admits an A.
"""
from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Sequence

from .errors import InvalidInput
from .sumset import SumSet, _mask, add_element, empty_sumset

log = logging.getLogger(__name__)

DEFAULT_MAX_NODES = 10_000_000
DEFAULT_MAX_DEPTH = 64

EXHAUSTED = "exhausted"
PREFIX_SATISFIABLE = "prefix_satisfiable"
INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class SearchNode:
    prefix: tuple[int, ...]
    sums: SumSet
    depth: int = 0

    @classmethod
    def root(cls, horizon: int) -> "SearchNode":
        return cls((), empty_sumset(horizon), 0)

    @classmethod
    def of(cls, prefix: Sequence[int], horizon: int) -> "SearchNode":
        node = cls.root(horizon)
        for a in prefix:
            node = node.child(a)
        return node

    def child(self, a: int) -> "SearchNode":
        return SearchNode(self.prefix + (a,), add_element(self.sums, a), self.depth + 1)


@dataclass(frozen=True)
class Extensions:
    """Admissible next elements of a node.

    ``target`` is the least value that still has to be represented, or None
    when every obligation up to the horizon is already met.  ``rejected``
    pairs each pruned candidate with the B value its sums would hit.
    """

    target: int | None
    candidates: tuple[int, ...] = ()
    rejected: tuple[tuple[int, int], ...] = ()

    @property
    def satisfiable(self) -> bool:
        return self.target is None


@dataclass(frozen=True)
class DeadEnd:
    prefix: tuple[int, ...]
    target: int
    rejected: tuple[tuple[int, int], ...]

    def to_dict(self) -> dict:
        return {"prefix": list(self.prefix), "target": self.target,
                "rejected": [list(r) for r in self.rejected]}


@dataclass(frozen=True)
class SearchOutcome:
    kind: str
    known_b: tuple[int, ...]
    horizon: int
    nodes: int
    max_depth: int
    witness: tuple[int, ...] | None = None
    limit: str | None = None
    frontier: int = 0
    dead_ends: tuple[DeadEnd, ...] | None = field(default=None, repr=False)

    def to_dict(self) -> dict:
        out: dict = {
            "outcome": self.kind,
            "known_b": list(self.known_b),
            "horizon": self.horizon,
            "nodes": self.nodes,
            "max_depth": self.max_depth,
        }
        if self.kind == PREFIX_SATISFIABLE:
            out["witness"] = list(self.witness)
            out["note"] = ("witness satisfies the constraints up to the horizon; "
                           "this does not show that an infinite A exists")
        elif self.kind == EXHAUSTED:
            out["note"] = "no A exists for any B beginning with known_b"
        else:
            out["limit"] = self.limit
            out["frontier"] = self.frontier
        if self.dead_ends is not None:
            out["dead_ends"] = [d.to_dict() for d in self.dead_ends]
        return out


def _b_mask(known_b: Sequence[int], horizon: int) -> int:
    m = 0
    for b in known_b:
        if b <= horizon:
            m |= 1 << b
    return m


def admissible_extensions(node: SearchNode, known_b: Sequence[int], horizon: int,
                          *, bmask: int | None = None) -> Extensions:
    if bmask is None:
        bmask = _b_mask(known_b, horizon)
    bits = node.sums.bits
    if bits & bmask:
        raise InvalidInput(f"node {node.prefix} already represents a value of B")
    uncovered = ~(bits | bmask) & _mask(horizon)
    if not uncovered:
        return Extensions(None)
    t = (uncovered & -uncovered).bit_length() - 1
    last = node.prefix[-1] if node.prefix else 0
    cands, rejected = [], []
    for a in range(last + 1, t + 1):
        hit = (bits << a) & bmask
        if hit:
            rejected.append((a, (hit & -hit).bit_length() - 1))
        else:
            cands.append(a)
    return Extensions(t, tuple(cands), tuple(rejected))


@dataclass
class _Run:
    known_b: tuple[int, ...]
    horizon: int
    bmask: int
    max_nodes: int
    max_depth: int
    record: bool
    nodes: int = 0
    deepest: int = 0
    depth_cut: bool = False
    dead_ends: list = field(default_factory=list)

    def expand(self, node: SearchNode) -> Extensions:
        self.nodes += 1
        self.deepest = max(self.deepest, node.depth)
        ext = admissible_extensions(node, self.known_b, self.horizon, bmask=self.bmask)
        if self.record and not ext.satisfiable and not ext.candidates:
            self.dead_ends.append(DeadEnd(node.prefix, ext.target, ext.rejected))
        return ext

    def dfs(self, start: SearchNode) -> tuple[str, tuple[int, ...] | None, int]:
        """Returns (kind, witness, frontier size at stop)."""
        stack = [start]
        while stack:
            if self.nodes >= self.max_nodes:
                return INCONCLUSIVE, None, len(stack)
            node = stack.pop()
            ext = self.expand(node)
            if ext.satisfiable:
                return PREFIX_SATISFIABLE, node.prefix, len(stack)
            if not ext.candidates:
                continue
            if node.depth >= self.max_depth:
                self.depth_cut = True
                continue
            # reversed so the smallest candidate is popped first
            for a in reversed(ext.candidates):
                stack.append(node.child(a))
        if self.depth_cut:
            return INCONCLUSIVE, None, 0
        return EXHAUSTED, None, 0


def _check_args(known_b: Sequence[int], horizon: int | None) -> tuple[tuple[int, ...], int]:
    known_b = tuple(known_b)
    if not known_b:
        raise InvalidInput("known_b must be nonempty")
    prev = 0
    for b in known_b:
        if b <= prev:
            raise InvalidInput(f"known_b must be strictly increasing and positive: {list(known_b)}")
        prev = b
    if horizon is None:
        horizon = known_b[-1]
    if not 1 <= horizon <= known_b[-1]:
        # above max(known_b) membership in B is unknown, so obligations there are unsound
        raise InvalidInput(f"horizon {horizon} must lie in [1, max(known_b)={known_b[-1]}]")
    return known_b, horizon


def _subtree(args) -> tuple[str, tuple[int, ...] | None, int, int, bool, int, list]:
    known_b, horizon, prefix, max_nodes, max_depth, record = args
    run = _Run(known_b, horizon, _b_mask(known_b, horizon), max_nodes, max_depth, record)
    start = SearchNode.of(prefix, horizon)
    kind, witness, frontier = run.dfs(start)
    return kind, witness, run.nodes, run.deepest, run.depth_cut, frontier, run.dead_ends


def nonexistence_search(known_b: Sequence[int], horizon: int | None = None, *,
                        max_nodes: int = DEFAULT_MAX_NODES,
                        max_depth: int = DEFAULT_MAX_DEPTH,
                        threads: int = 1,
                        record_dead_ends: bool = False) -> SearchOutcome:
    known_b, horizon = _check_args(known_b, horizon)
    if threads <= 1:
        run = _Run(known_b, horizon, _b_mask(known_b, horizon), max_nodes, max_depth,
                   record_dead_ends)
        kind, witness, frontier = run.dfs(SearchNode.root(horizon))
        return _outcome(kind, known_b, horizon, run.nodes, run.deepest, witness, frontier,
                        run.depth_cut, max_nodes, max_depth,
                        run.dead_ends if record_dead_ends else None)
    return _parallel_search(known_b, horizon, max_nodes, max_depth, threads, record_dead_ends)


def _outcome(kind, known_b, horizon, nodes, deepest, witness, frontier, depth_cut,
             max_nodes, max_depth, dead_ends) -> SearchOutcome:
    limit = None
    if kind == INCONCLUSIVE:
        if nodes >= max_nodes:
            limit = f"node budget {max_nodes} exhausted"
        elif depth_cut:
            limit = f"depth limit {max_depth} reached"
    log.debug("search %s horizon=%d: %s after %d nodes", known_b, horizon, kind, nodes)
    return SearchOutcome(kind, known_b, horizon, nodes, deepest, witness, limit, frontier,
                         tuple(dead_ends) if dead_ends is not None else None)


def _parallel_search(known_b, horizon, max_nodes, max_depth, threads, record) -> SearchOutcome:
    # Expand a frontier in place (keeps DFS preorder), then search the subtrees
    # in worker processes and merge in frontier order.
    run = _Run(known_b, horizon, _b_mask(known_b, horizon), max_nodes, max_depth, record)
    frontier: list[tuple[SearchNode, str | None]] = [(SearchNode.root(horizon), None)]
    target = 4 * threads
    while True:
        open_nodes = [n for n, done in frontier if done is None]
        if not open_nodes or len(open_nodes) >= target:
            break
        nxt = []
        for node, done in frontier:
            if done is not None:
                nxt.append((node, done))
                continue
            ext = run.expand(node)
            if ext.satisfiable:
                nxt.append((node, PREFIX_SATISFIABLE))
            elif ext.candidates and node.depth >= max_depth:
                run.depth_cut = True
            else:
                nxt.extend((node.child(a), None) for a in ext.candidates)
        frontier = nxt
        if run.nodes >= max_nodes:
            break

    jobs = [(known_b, horizon, n.prefix, max_nodes, max_depth, record)
            for n, done in frontier if done is None]
    with ProcessPoolExecutor(max_workers=threads) as pool:
        results = iter(list(pool.map(_subtree, jobs)))

    nodes, deepest, depth_cut = run.nodes, run.deepest, run.depth_cut
    dead_ends = list(run.dead_ends)
    kind, witness, frontier_left = EXHAUSTED, None, 0
    for node, done in frontier:
        if done == PREFIX_SATISFIABLE:
            res = (PREFIX_SATISFIABLE, node.prefix, 0, node.depth, False, 0, [])
        else:
            res = next(results)
        r_kind, r_witness, r_nodes, r_deep, r_cut, r_front, r_dead = res
        nodes += r_nodes
        deepest = max(deepest, r_deep)
        depth_cut = depth_cut or r_cut
        dead_ends.extend(r_dead)
        if kind == PREFIX_SATISFIABLE:
            continue
        if r_kind == PREFIX_SATISFIABLE:
            kind, witness = PREFIX_SATISFIABLE, r_witness
        elif r_kind == INCONCLUSIVE:
            kind, frontier_left = INCONCLUSIVE, frontier_left + r_front
    if kind == EXHAUSTED and depth_cut:
        kind = INCONCLUSIVE
    if kind != PREFIX_SATISFIABLE and nodes >= max_nodes:
        kind = INCONCLUSIVE
    return _outcome(kind, known_b, horizon, nodes, deepest, witness, frontier_left, depth_cut,
                    max_nodes, max_depth, dead_ends if record else None)
