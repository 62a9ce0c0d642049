"""Brute-force multiplication by tree rewriting. Verification only.

Products of basis terms are kept literally as binary trees of symbols.
:func:`normalize` left-combs a tree with the rewrite ``x(yz) -> K*(xy)z``
and sends anything of degree four or more to zero; :func:`naive_mul`
multiplies two elements term pair by term pair this way.  It is the
slow, structurally independent cross-check for the product in
:mod:`antiassoc.core` and is not part of the public API.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union

from .core import AaaElement, Coefficient, TermKey, _accumulate, as_coeff, zero

__all__ = ["Leaf", "Node", "Tree", "degree", "normalize", "naive_mul"]


@dataclass(frozen=True)
class Leaf:
    name: str


@dataclass(frozen=True)
class Node:
    left: "Tree"
    right: "Tree"


Tree = Union[Leaf, Node]


def degree(tree: Tree) -> int:
    """Number of leaves."""
    if isinstance(tree, Leaf):
        return 1
    return degree(tree.left) + degree(tree.right)


def _combed(tree: Tree) -> tuple[Optional[TermKey], int]:
    """Left-comb a tree.

    Returns (key, n) where n is the number of rewrite applications the
    combing needed (each contributes one factor of K), or (None, 0) for
    trees of degree four or more, which vanish.
    """
    deg = degree(tree)
    if deg > 3:
        return None, 0
    if isinstance(tree, Leaf):
        return (tree.name,), 0
    if deg == 2:
        return (tree.left.name, tree.right.name), 0
    if isinstance(tree.left, Node):
        return (tree.left.left.name, tree.left.right.name, tree.right.name), 0
    inner = tree.right
    return (tree.left.name, inner.left.name, inner.right.name), 1


def normalize(k: object, tree: Tree, coeff: object = 1) -> AaaElement:
    """The element a signed tree denotes under associativity constant ``k``."""
    key, power = _combed(tree)
    if key is None:
        return zero()
    total = as_coeff(coeff) * as_coeff(k) ** power
    if not total:
        return zero()
    maps: tuple[dict, dict, dict] = ({}, {}, {})
    maps[len(key) - 1][key] = total
    return AaaElement(*maps)


def _term_tree(key: TermKey) -> Tree:
    leaves = [Leaf(name) for name in key]
    if len(leaves) == 1:
        return leaves[0]
    if len(leaves) == 2:
        return Node(leaves[0], leaves[1])
    return Node(Node(leaves[0], leaves[1]), leaves[2])


def naive_mul(k: object, a: AaaElement, b: AaaElement) -> AaaElement:
    """Product computed term pair by term pair through tree rewriting."""
    k = as_coeff(k)
    maps: tuple[dict, dict, dict] = ({}, {}, {})
    b_terms = [(key, coeff, _term_tree(key)) for key, coeff in b.terms()]
    for key_a, ca in a.terms():
        ta = _term_tree(key_a)
        for _key_b, cb, tb in b_terms:
            key, power = _combed(Node(ta, tb))
            if key is None:
                continue
            coeff: Coefficient = ca * cb * k**power
            if coeff:
                _accumulate(maps[len(key) - 1], key, coeff)
    return AaaElement(*maps)
