"""Greedy embeddings of Christmas cactus graphs.

Construction and certification of greedy drawings, the chain-of-triangles
lower-bound families, aspect-ratio diagnostics, and a penalty-based optimizer
for searching over embeddings.
"""
from .graphs import (
    BRIDGE,
    CYCLE,
    OTHER,
    Block,
    BlockCutTree,
    CactusCheck,
    Graph,
    block_cut_decompose,
    build_graph,
    is_christmas_cactus,
)
from .families import (
    FK,
    GK,
    CopyMap,
    FamilyInstance,
    gen_fk,
    gen_gk,
    random_christmas_cactus,
)

__all__ = [
    "BRIDGE",
    "CYCLE",
    "OTHER",
    "Block",
    "BlockCutTree",
    "CactusCheck",
    "Graph",
    "block_cut_decompose",
    "build_graph",
    "is_christmas_cactus",
    "FK",
    "GK",
    "CopyMap",
    "FamilyInstance",
    "gen_fk",
    "gen_gk",
    "random_christmas_cactus",
]
