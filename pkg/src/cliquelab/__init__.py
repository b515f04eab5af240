"""clique-lab: a desk-scale congested clique laboratory.

n fully connected nodes compute on an input graph in synchronous rounds,
every directed link carrying at most one message of at most ceil(log2 n)
bits per round.  The package provides the round engine, the parameterised
search algorithms (dominating set, vertex cover, independent set) and
gadget reductions built on it, certificate verification with a transcript
normal form, alternation games, protocol-counting arithmetic, and
centralized brute-force oracles that every distributed result is checked
against.
"""

from cliquelab.core import (
    Graph,
    InputAssignment,
    Message,
    NodeContext,
    NodeProgram,
    ExecutionReport,
    VertexSet,
    build_graph,
    assign_inputs,
    run,
    broadcast_round_cost,
    BroadcastProgram,
    route,
)

__all__ = [
    "Graph",
    "InputAssignment",
    "Message",
    "NodeContext",
    "NodeProgram",
    "ExecutionReport",
    "VertexSet",
    "build_graph",
    "assign_inputs",
    "run",
    "broadcast_round_cost",
    "BroadcastProgram",
    "route",
]
