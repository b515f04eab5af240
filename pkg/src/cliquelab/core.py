"""The congested clique execution model.

A run consists of n fully connected nodes computing on an input graph in
synchronous rounds.  Per round every node may send one message of at most
ceil(log2 n) bits over each outgoing link; all messages drafted in a round
are delivered simultaneously at its end.  Local computation is free and
unbounded.  Each potential-edge presence bit of the input graph is private
to exactly one of its endpoints (round-robin tournament orientation), so a
node initially knows only about half of its incident pairs.

Programs declare their total round budget up front as a function of n;
the engine executes exactly that many rounds.  Execution is deterministic:
identical inputs produce bit-identical reports, regardless of whether
nodes are evaluated sequentially or in parallel within a round.
"""

from __future__ import annotations

import json
from abc import ABC, abstractmethod
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from functools import cached_property
from typing import Any, Iterable, Optional

from cliquelab.bits import check_bits, chunk, word_size
from cliquelab.errors import (
    BandwidthViolation,
    EngineError,
    GraphFormatError,
    InvalidDraftError,
    MultiplexingViolation,
    TimeoutExceeded,
)

Pair = tuple[int, int]
Draft = tuple[int, str]


def _norm_pair(u: int, v: int) -> Pair:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph on nodes 1..n; edges are (u, v) with u < v."""

    n: int
    edges: frozenset[Pair]

    @cached_property
    def _adjacency(self) -> dict[int, frozenset[int]]:
        nbrs: dict[int, set[int]] = {v: set() for v in range(1, self.n + 1)}
        for u, v in self.edges:
            nbrs[u].add(v)
            nbrs[v].add(u)
        return {v: frozenset(s) for v, s in nbrs.items()}

    def adj(self, u: int, v: int) -> bool:
        if u == v:
            return False
        return _norm_pair(u, v) in self.edges

    def neighbors(self, v: int) -> frozenset[int]:
        return self._adjacency[v]

    def degree(self, v: int) -> int:
        return len(self._adjacency[v])

    def all_pairs(self) -> list[Pair]:
        return [(u, v) for u in range(1, self.n + 1) for v in range(u + 1, self.n + 1)]

    def edge_count(self) -> int:
        return len(self.edges)


@dataclass(frozen=True)
class VertexSet:
    """A vertex subset tagged with the role it claims to play."""

    members: frozenset[int]
    kind: str  # one of "dominating", "independent", "cover"

    def __post_init__(self):
        if self.kind not in ("dominating", "independent", "cover"):
            raise ValueError(f"unknown vertex set kind {self.kind!r}")

    def sorted_members(self) -> tuple[int, ...]:
        return tuple(sorted(self.members))

    def __len__(self) -> int:
        return len(self.members)


def build_graph(n: int, edge_list: Iterable[Iterable[int]]) -> Graph:
    """Construct a Graph, deduplicating edges and validating endpoints."""
    if n < 1:
        raise GraphFormatError(f"node count must be >= 1, got {n}")
    edges: set[Pair] = set()
    for raw in edge_list:
        pair = tuple(raw)
        if len(pair) != 2:
            raise GraphFormatError(f"edge must have two endpoints: {raw!r}")
        u, v = pair
        if not (1 <= u <= n) or not (1 <= v <= n):
            raise GraphFormatError(f"endpoint out of range 1..{n}: {raw!r}")
        if u == v:
            raise GraphFormatError(f"self-loop rejected: {raw!r}")
        edges.add(_norm_pair(u, v))
    return Graph(n=n, edges=frozenset(edges))


# ---------------------------------------------------------------------------
# Input-bit ownership


def pair_owner(n: int, u: int, v: int) -> int:
    """Owner of the presence bit of pair {u, v}.

    Round-robin tournament orientation: u owns {u, v} iff
    ((v - u) mod n) in {1, ..., floor((n-1)/2)}.  For even n the leftover
    pairs at offset exactly n/2 go to the lower endpoint.
    """
    if u == v:
        raise ValueError("pairs have distinct endpoints")
    half = (n - 1) // 2
    if 1 <= (v - u) % n <= half:
        return u
    if 1 <= (u - v) % n <= half:
        return v
    return min(u, v)


@dataclass(frozen=True)
class InputAssignment:
    """Ownership of the n(n-1)/2 presence bits, plus their values for one graph.

    Every pair has exactly one owner and every node owns at least
    floor((n-1)/2) pairs.  A node's bit sequence lists its owned pairs by
    ascending other endpoint.
    """

    graph: Graph
    owner: dict[Pair, int]
    owned: dict[int, tuple[Pair, ...]]

    def bits(self, v: int) -> str:
        return "".join(
            "1" if pair in self.graph.edges else "0" for pair in self.owned[v]
        )

    def owned_pairs(self, v: int) -> tuple[Pair, ...]:
        return self.owned[v]


def owned_pairs_of(n: int, v: int) -> tuple[Pair, ...]:
    """Pairs owned by node v under the tournament rule, by other endpoint."""
    out = []
    for u in range(1, n + 1):
        if u != v and pair_owner(n, v, u) == v:
            out.append(_norm_pair(v, u))
    return tuple(out)


def assign_inputs(g: Graph) -> InputAssignment:
    if g.n < 2:
        raise EngineError("input assignment requires n >= 2")
    owner: dict[Pair, int] = {}
    owned: dict[int, tuple[Pair, ...]] = {}
    for v in range(1, g.n + 1):
        owned[v] = owned_pairs_of(g.n, v)
        for pair in owned[v]:
            owner[pair] = v
    return InputAssignment(graph=g, owner=owner, owned=owned)


# ---------------------------------------------------------------------------
# Messages and programs


@dataclass(frozen=True)
class Message:
    src: int
    dst: int
    payload: str


@dataclass(frozen=True)
class NodeContext:
    """Everything a node knows at round zero.

    owned_pairs/owned_bits are the node's private share of the input graph;
    aux carries per-node auxiliary input such as a certificate label.
    """

    n: int
    me: int
    owned_pairs: tuple[Pair, ...]
    owned_bits: str
    aux: Any = None

    def owned_bit_map(self) -> dict[Pair, bool]:
        return {p: b == "1" for p, b in zip(self.owned_pairs, self.owned_bits)}


class NodeProgram(ABC):
    """A per-node state machine driven by the round engine.

    Transitions must be deterministic functions of their arguments.  States
    are owned by a single node, so in-place mutation inside receive() is
    allowed; cross-node shared mutable state is not.
    """

    @abstractmethod
    def round_budget(self, n: int) -> int:
        """Total number of rounds, fixed up front from n and parameters."""

    @abstractmethod
    def init_state(self, ctx: NodeContext) -> Any:
        ...

    @abstractmethod
    def send(self, state: Any, round_no: int) -> list[Draft]:
        """Drafts as (dst, payload) pairs; at most one per destination."""

    @abstractmethod
    def receive(self, state: Any, round_no: int, inbox: dict[int, str]) -> Any:
        """Consume this round's inbox (src -> payload) and return new state."""

    @abstractmethod
    def output(self, state: Any) -> str:
        """The node's final output bits."""


@dataclass
class ExecutionReport:
    """The measurable artifact of a run."""

    rounds: int
    outputs: dict[int, str]
    link_load: dict[Pair, int]
    total_bits: int

    def to_json_dict(self) -> dict:
        return {
            "rounds": self.rounds,
            "outputs": {str(v): bits for v, bits in sorted(self.outputs.items())},
            "link_load": {
                f"{u}->{v}": c for (u, v), c in sorted(self.link_load.items())
            },
            "total_bits": self.total_bits,
        }

    def canonical_json(self) -> str:
        return json.dumps(self.to_json_dict(), sort_keys=True, separators=(",", ":"))


# ---------------------------------------------------------------------------
# The round engine


def _collect_drafts(program, states, round_no, nodes, parallel, executor):
    if parallel and executor is not None:
        return list(executor.map(lambda v: program.send(states[v], round_no), nodes))
    return [program.send(states[v], round_no) for v in nodes]


def _execute(
    program: NodeProgram,
    g: Graph,
    aux: Optional[dict[int, Any]],
    max_rounds: Optional[int],
    parallel: bool,
    log: Optional[list[Message]],
) -> ExecutionReport:
    if g.n < 2:
        raise EngineError("the model requires n >= 2 (no links exist for n = 1)")
    if max_rounds is not None and max_rounds < 0:
        raise EngineError(f"max_rounds must be >= 0, got {max_rounds}")

    n = g.n
    w = word_size(n)
    assignment = assign_inputs(g)
    nodes = list(range(1, n + 1))

    states = {}
    for v in nodes:
        ctx = NodeContext(
            n=n,
            me=v,
            owned_pairs=assignment.owned_pairs(v),
            owned_bits=assignment.bits(v),
            aux=None if aux is None else aux.get(v),
        )
        states[v] = program.init_state(ctx)

    budget = program.round_budget(n)
    if budget < 0:
        raise EngineError(f"negative round budget {budget}")
    capped = max_rounds is not None and budget > max_rounds
    rounds_to_run = max_rounds if capped else budget

    link_load: dict[Pair, int] = {}
    total_bits = 0
    executor = ThreadPoolExecutor(max_workers=min(8, n)) if parallel else None
    try:
        for round_no in range(1, rounds_to_run + 1):
            inboxes: dict[int, dict[int, str]] = {v: {} for v in nodes}
            round_links: set[Pair] = set()
            all_drafts = _collect_drafts(
                program, states, round_no, nodes, parallel, executor
            )
            for src, drafts in zip(nodes, all_drafts):
                for dst, payload in drafts:
                    if not (1 <= dst <= n) or dst == src:
                        raise InvalidDraftError(
                            f"round {round_no}: node {src} drafted to invalid dst {dst}"
                        )
                    check_bits(payload)
                    if len(payload) > w:
                        raise BandwidthViolation(round_no, src, dst, len(payload), w)
                    if dst in inboxes and src in inboxes[dst]:
                        raise MultiplexingViolation(round_no, src, dst)
                    # audit: one message per directed link per round
                    link = (src, dst)
                    assert link not in round_links
                    round_links.add(link)
                    inboxes[dst][src] = payload
                    link_load[link] = link_load.get(link, 0) + 1
                    total_bits += len(payload)
                    if log is not None:
                        log.append(Message(src=src, dst=dst, payload=payload))
            ordered_inboxes = {
                v: dict(sorted(inboxes[v].items())) for v in nodes
            }
            if parallel and executor is not None:
                new_states = list(
                    executor.map(
                        lambda v: program.receive(
                            states[v], round_no, ordered_inboxes[v]
                        ),
                        nodes,
                    )
                )
            else:
                new_states = [
                    program.receive(states[v], round_no, ordered_inboxes[v])
                    for v in nodes
                ]
            for v, st in zip(nodes, new_states):
                states[v] = st
    finally:
        if executor is not None:
            executor.shutdown()

    outputs = {v: program.output(states[v]) for v in nodes}
    report = ExecutionReport(
        rounds=rounds_to_run,
        outputs=outputs,
        link_load=dict(sorted(link_load.items())),
        total_bits=total_bits,
    )
    if capped:
        raise TimeoutExceeded(max_rounds, report)
    return report


def run(
    program: NodeProgram,
    g: Graph,
    aux: Optional[dict[int, Any]] = None,
    max_rounds: Optional[int] = None,
    parallel: bool = False,
) -> ExecutionReport:
    """Execute a program on a graph and return its report."""
    return _execute(program, g, aux, max_rounds, parallel, log=None)


def run_traced(
    program: NodeProgram,
    g: Graph,
    aux: Optional[dict[int, Any]] = None,
    max_rounds: Optional[int] = None,
    parallel: bool = False,
) -> tuple[ExecutionReport, list[Message]]:
    """Like run(), but also return the full delivery log in (round, src, dst) order."""
    log: list[Message] = []
    report = _execute(program, g, aux, max_rounds, parallel, log=log)
    return report, log


# ---------------------------------------------------------------------------
# Broadcast

def broadcast_round_cost(n: int, n_bits: int) -> int:
    """Rounds for every node to ship n_bits to all peers: ceil(B / w)."""
    if n_bits < 0:
        raise ValueError("bit count must be >= 0")
    w = word_size(n)
    return -(-n_bits // w)


class BroadcastProgram(NodeProgram):
    """Every node ships its aux bit vector (exactly n_bits long) to all peers.

    Chunk i of the vector goes out to every other node in round i.  The
    output is the concatenation of all nodes' vectors in id order, so after
    the run every node holds every other node's bits.
    """

    def __init__(self, n_bits: int):
        self.n_bits = n_bits

    def round_budget(self, n: int) -> int:
        return broadcast_round_cost(n, self.n_bits)

    def init_state(self, ctx: NodeContext) -> dict:
        mine = ctx.aux if ctx.aux is not None else ""
        if len(mine) != self.n_bits:
            raise EngineError(
                f"node {ctx.me}: aux has {len(mine)} bits, expected {self.n_bits}"
            )
        return {
            "n": ctx.n,
            "me": ctx.me,
            "chunks": chunk(mine, word_size(ctx.n)),
            "mine": mine,
            "got": {u: [] for u in range(1, ctx.n + 1) if u != ctx.me},
        }

    def send(self, state: dict, round_no: int) -> list[Draft]:
        if round_no > len(state["chunks"]):
            return []
        piece = state["chunks"][round_no - 1]
        return [(u, piece) for u in sorted(state["got"])]

    def receive(self, state: dict, round_no: int, inbox: dict[int, str]) -> dict:
        for src in sorted(inbox):
            state["got"][src].append(inbox[src])
        return state

    def output(self, state: dict) -> str:
        parts = []
        for v in range(1, state["n"] + 1):
            if v == state["me"]:
                parts.append(state["mine"])
            else:
                parts.append("".join(state["got"][v])[: self.n_bits])
        return "".join(parts)


# ---------------------------------------------------------------------------
# Direct-link routing

class RouteProgram(NodeProgram):
    """FIFO scheduling of a fixed demand multiset over direct links.

    Message (u -> v) consumes one slot of link (u, v) per round; the round
    budget is the maximum number of demands on any single ordered pair.
    """

    def __init__(self, n: int, demands: list[tuple[int, int, str]]):
        self.n = n
        queues: dict[int, dict[int, list[str]]] = {}
        per_link: dict[Pair, int] = {}
        for src, dst, payload in demands:
            queues.setdefault(src, {}).setdefault(dst, []).append(payload)
            per_link[(src, dst)] = per_link.get((src, dst), 0) + 1
        self.queues = queues
        self.budget = max(per_link.values(), default=0)

    def round_budget(self, n: int) -> int:
        return self.budget

    def init_state(self, ctx: NodeContext) -> dict:
        return {"queues": self.queues.get(ctx.me, {})}

    def send(self, state: dict, round_no: int) -> list[Draft]:
        return [
            (dst, q[round_no - 1])
            for dst, q in sorted(state["queues"].items())
            if len(q) >= round_no
        ]

    def receive(self, state: dict, round_no: int, inbox: dict[int, str]) -> dict:
        return state

    def output(self, state: dict) -> str:
        return ""


def route(
    n: int, demands: Iterable[tuple[int, int, str]]
) -> tuple[ExecutionReport, list[tuple[int, int, str]]]:
    """Deliver a demand multiset over direct links; FIFO per ordered pair.

    Returns the execution report and the delivered (src, dst, payload)
    multiset in delivery order.
    """
    demand_list = []
    w = word_size(n)
    for src, dst, payload in demands:
        if not (1 <= src <= n) or not (1 <= dst <= n) or src == dst:
            raise InvalidDraftError(f"demand with invalid endpoints: {(src, dst)}")
        check_bits(payload)
        if len(payload) > w:
            raise BandwidthViolation(0, src, dst, len(payload), w)
        demand_list.append((src, dst, payload))
    program = RouteProgram(n, demand_list)
    empty = Graph(n=n, edges=frozenset())
    report, log = run_traced(program, empty)
    delivered = [(m.src, m.dst, m.payload) for m in log]
    return report, delivered
