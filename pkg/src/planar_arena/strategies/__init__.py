"""Strategy registry: name strings map to constructors for the CLI,
match runner and service."""

from __future__ import annotations

from .apollonian import BuilderApollonian
from .boxbuilder import BuilderBox
from .common import EdgeStrategy, StrategyConfused, owed_moves
from .degree import BuilderDegree
from .edge_basic import GreedyBlocker, RandomEdge, TargetedOctahedron
from .gamma import SpoilerGamma
from .ham13 import SpoilerHam13
from .ham21 import BuilderHam21
from .p3t import SpoilerPartial3Tree
from .pack_common import GreedyCircleBlocker, PackingStrategy, RandomCircle

EDGE_STRATEGIES: dict[str, type[EdgeStrategy]] = {}
PACKING_STRATEGIES: dict[str, type[PackingStrategy]] = {}


def register_edge(cls: type[EdgeStrategy]):
    EDGE_STRATEGIES[cls.name] = cls
    return cls


def register_packing(cls):
    PACKING_STRATEGIES[cls.name] = cls
    return cls


for _cls in (
    RandomEdge, GreedyBlocker, TargetedOctahedron,
    BuilderHam21, SpoilerHam13, BuilderDegree, SpoilerPartial3Tree,
):
    register_edge(_cls)

for _cls in (RandomCircle, GreedyCircleBlocker, SpoilerGamma,
             BuilderApollonian, BuilderBox):
    register_packing(_cls)


def edge_strategy(name: str, seed: int = 0, strict: bool = False, **opts) -> EdgeStrategy:
    if name not in EDGE_STRATEGIES:
        raise KeyError(f"unknown edge strategy {name!r}; have {sorted(EDGE_STRATEGIES)}")
    return EDGE_STRATEGIES[name](seed=seed, strict=strict, **opts)


def packing_strategy(name: str, seed: int = 0, **opts) -> PackingStrategy:
    if name not in PACKING_STRATEGIES:
        raise KeyError(
            f"unknown packing strategy {name!r}; have {sorted(PACKING_STRATEGIES)}"
        )
    return PACKING_STRATEGIES[name](seed=seed, **opts)
