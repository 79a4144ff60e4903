# File: trees/grafting.py
"""
The grafting bijection between sequences (l_1..l_n) and trees in T_{n,k}^t,
the q-weight, and weighted / unweighted cardinalities.
"""

from collections import Counter
from functools import reduce
from itertools import product
import logging
from typing import Iterator, List, Optional, Tuple

from core.exceptions import EnumerationBudgetExceeded, QDomainError
from core.qcore import classical_pochhammer_k, qcalc_setting
from core.qpoly import QPolynomial, poly_mul, q_bracket_poly

from .shapes import GraftingSequence, Leaf, PlantedTree, TreeShapeParams, Vertex

logger = logging.getLogger(__name__)


class _Draft:
    """Mutable internal vertex used while grafting; leaves are None"""
    __slots__ = ('label', 'children')

    def __init__(self, label, children):
        self.label = label
        self.children = children


def _freeze(children: List) -> Tuple:
    counter = [0]

    def convert(node):
        if node is None:
            counter[0] += 1
            return Leaf(counter[0])
        return Vertex(node.label, tuple(convert(child) for child in node.children))

    return tuple(convert(child) for child in children)


def _thaw(children) -> List:
    return [None if isinstance(node, Leaf) else _Draft(node.label, _thaw(node.children))
            for node in children]


def _walk_slots(children: List):
    """Planar preorder over (parent list, position, node)"""
    for pos, node in enumerate(children):
        yield children, pos, node
        if node is not None:
            yield from _walk_slots(node.children)


def compose(seq: GraftingSequence, params: TreeShapeParams) -> PlantedTree:
    """(...((r_t o_{l_1} c_1) o_{l_2} c_2)...) o_{l_n} c_n"""
    seq.validate_for(params)
    root = [None] * params.t
    # slots[i] addresses leaf i+1 of the current partial tree
    slots = [(root, pos) for pos in range(params.t)]
    for label, l in enumerate(seq.indices, start=1):
        parent, pos = slots[l - 1]
        corolla = _Draft(label, [None] * (params.k + 1))
        parent[pos] = corolla
        slots[l - 1:l] = [(corolla.children, j) for j in range(params.k + 1)]
    return PlantedTree(_freeze(root))


def validate_tree(tree: PlantedTree, params: TreeShapeParams):
    """Check the defining conditions of T_{n,k}^t; raise QDomainError on the first violation"""
    if len(tree.children) != params.t:
        raise QDomainError(f"root has {len(tree.children)} children, expected t={params.t}")

    labels = []
    stack = [(child, 0) for child in tree.children]
    while stack:
        node, parent_label = stack.pop()
        if isinstance(node, Leaf):
            continue
        if len(node.children) != params.k + 1:
            raise QDomainError(
                f"vertex {node.label} has {len(node.children)} children, expected k+1={params.k + 1}"
            )
        if node.label <= parent_label:
            raise QDomainError(
                f"vertex {node.label} lies above vertex {parent_label} on its path to the root"
            )
        labels.append(node.label)
        stack.extend((child, node.label) for child in node.children)

    if sorted(labels) != list(range(1, params.n + 1)):
        raise QDomainError(f"internal vertex labels {sorted(labels)} are not 1..{params.n}")

    indices = [leaf.index for leaf in tree.leaves()]
    if indices != list(range(1, params.leaf_count() + 1)):
        raise QDomainError(
            f"leaves are not numbered 1..{params.leaf_count()} in planar order"
        )


def decompose(tree: PlantedTree, params: TreeShapeParams) -> GraftingSequence:
    """Recover the unique grafting sequence by removing c_n, c_{n-1}, ..., c_1"""
    validate_tree(tree, params)
    root = _thaw(tree.children)
    indices = [0] * params.n
    for label in range(params.n, 0, -1):
        before = 0
        for parent, pos, node in _walk_slots(root):
            if node is None:
                before += 1
            elif node.label == label:
                # every vertex above `label` is already collapsed to a leaf
                parent[pos] = None
                indices[label - 1] = before + 1
                break
    return GraftingSequence(tuple(indices))


def weight(seq: GraftingSequence) -> QPolynomial:
    """omega(T) = prod_{i=1}^{n} q^{l_i - 1}"""
    return QPolynomial.monomial(seq.weight_exponent)


def check_budget(params: TreeShapeParams, budget: Optional[int] = None):
    budget = qcalc_setting('ENUMERATION_BUDGET') if budget is None else budget
    size = params.sequence_count
    if size > budget:
        logger.warning(f"Enumeration of {size} sequences refused (budget {budget})")
        raise EnumerationBudgetExceeded(
            f"T_{{{params.n},{params.k}}}^{params.t} has {size} trees, above the budget of {budget}"
        )


def grafting_sequences(params: TreeShapeParams, budget: Optional[int] = None) -> Iterator[GraftingSequence]:
    """Every legal sequence once, in lexicographic order"""
    check_budget(params, budget)
    for indices in product(*params.index_ranges()):
        yield GraftingSequence(indices)


def enumerate_trees(params: TreeShapeParams, budget: Optional[int] = None,
                    verify: bool = False) -> Iterator[Tuple[GraftingSequence, PlantedTree, QPolynomial]]:
    """Stream (sequence, tree, weight) over T_{n,k}^t in lexicographic sequence order"""
    for seq in grafting_sequences(params, budget):
        tree = compose(seq, params)
        if verify:
            validate_tree(tree, params)
        yield seq, tree, weight(seq)


def weighted_cardinality(params: TreeShapeParams, brute_force: bool = False,
                         budget: Optional[int] = None) -> QPolynomial:
    """|T_{n,k}^t, omega|: enumerated sum of weights, or prod_j [t+jk]_q"""
    if brute_force:
        counts = Counter(seq.weight_exponent for seq in grafting_sequences(params, budget))
        if not counts:
            return QPolynomial()
        return QPolynomial(tuple(counts[e] for e in range(max(counts) + 1)))
    return reduce(
        poly_mul,
        (q_bracket_poly(params.t + j * params.k) for j in range(params.n)),
        QPolynomial.one(),
    )


def unweighted_count(params: TreeShapeParams) -> int:
    """|T_{n,k}^t| = (t)_{n,k}"""
    return classical_pochhammer_k(params.t, params.n, params.k)
