# File: trees/shapes.py
"""Planar rooted trees built by grafting corollas onto the root tree r_t."""

from dataclasses import dataclass
import math
from typing import Iterator, Tuple, Union

from core.exceptions import QDomainError


def _require_int(name, value, minimum):
    if not isinstance(value, int) or isinstance(value, bool) or value < minimum:
        raise QDomainError(f"{name} must be an integer >= {minimum}, got {value!r}")


@dataclass(frozen=True)
class TreeShapeParams:
    """t root children, n internal vertices, k+1 children per internal vertex"""
    t: int
    n: int
    k: int

    def __post_init__(self):
        _require_int('t', self.t, 1)
        _require_int('n', self.n, 0)
        _require_int('k', self.k, 1)

    def leaf_count(self, grafted: int = None) -> int:
        """Leaves after `grafted` graftings (all n by default)"""
        grafted = self.n if grafted is None else grafted
        return self.t + grafted * self.k

    def index_ranges(self):
        """Legal values of l_1..l_n"""
        return [range(1, self.leaf_count(i) + 1) for i in range(self.n)]

    @property
    def sequence_count(self) -> int:
        return math.prod(self.leaf_count(i) for i in range(self.n))


@dataclass(frozen=True)
class GraftingSequence:
    """(l_1, ..., l_n): l_i is the leaf of the partial tree receiving corolla c_i"""
    indices: Tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, 'indices', tuple(self.indices))

    @classmethod
    def parse(cls, text: str) -> 'GraftingSequence':
        text = text.strip()
        if not text:
            return cls(())
        try:
            return cls(tuple(int(part) for part in text.split(',')))
        except ValueError:
            raise QDomainError(f"grafting sequence must be comma-separated integers, got {text!r}") from None

    def validate_for(self, params: TreeShapeParams):
        if len(self.indices) != params.n:
            raise QDomainError(
                f"sequence has {len(self.indices)} indices, expected n={params.n}"
            )
        for i, l in enumerate(self.indices):
            leaves = params.leaf_count(i)
            if not isinstance(l, int) or not 1 <= l <= leaves:
                raise QDomainError(
                    f"l_{i + 1}={l} is out of range 1..{leaves}"
                )

    @property
    def weight_exponent(self) -> int:
        return sum(l - 1 for l in self.indices)

    def __len__(self):
        return len(self.indices)

    def __str__(self):
        return ','.join(str(l) for l in self.indices)


@dataclass(frozen=True)
class Leaf:
    index: int


@dataclass(frozen=True)
class Vertex:
    label: int
    children: Tuple['Node', ...]


Node = Union[Leaf, Vertex]


@dataclass(frozen=True)
class PlantedTree:
    """Root and its ordered children; the root itself carries no label"""
    children: Tuple[Node, ...]

    def walk(self) -> Iterator[Node]:
        """Planar (left-to-right) preorder"""
        stack = list(reversed(self.children))
        while stack:
            node = stack.pop()
            yield node
            if isinstance(node, Vertex):
                stack.extend(reversed(node.children))

    def leaves(self):
        return [node for node in self.walk() if isinstance(node, Leaf)]

    def vertices(self):
        return [node for node in self.walk() if isinstance(node, Vertex)]

    @property
    def leaf_count(self) -> int:
        return len(self.leaves())

    @classmethod
    def root_tree(cls, t: int) -> 'PlantedTree':
        """r_t: t leaves, no internal vertices"""
        return cls(tuple(Leaf(i + 1) for i in range(t)))
