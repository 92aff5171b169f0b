"""Single-step rewriting and normalization strategies for ``(x*y)*z -> x*(y*z)``.

A redex is any node whose left child is itself a node; rewriting replaces
``(x*y)*z`` at that position with ``x*(y*z)``.  Every step preserves term size
and strictly decreases ``sigma``, so every rewrite sequence terminates at the
unique normal form (the right chain over the term's leaves in order).

Two strategies are provided with exact step counts:

* :func:`normalize_shortest` rotates as close to the root as possible and
  reaches the normal form in ``size(t) - depth_rightmost(t)`` steps, visiting
  O(size) nodes in total.
* :func:`normalize_longest` rotates at the deepest redex (leftmost on ties)
  and takes exactly ``sigma(t)`` steps, each lowering ``sigma`` by 1.

Positions are strings over ``L``/``R`` read from the root; the empty string
is the root and prints as ``ε``.  When redexes are listed or chosen, deeper
positions come first and ties break lexicographically with ``L < R``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .terms import Leaf, Node, Term

__all__ = [
    "Position",
    "RewriteError",
    "InvalidPosition",
    "NotARedex",
    "Step",
    "Trace",
    "format_position",
    "find_redexes",
    "apply_at",
    "step_shortest",
    "normalize_shortest",
    "normalize_longest",
    "normalize",
    "STRATEGIES",
]

Position = str


def format_position(p: Position) -> str:
    """Printable form of a position; the root shows as ``ε``."""
    return p if p else "ε"


class RewriteError(Exception):
    """Base class for position errors; carries the offending position."""

    def __init__(self, message: str, position: Position):
        super().__init__(message)
        self.position = position


class InvalidPosition(RewriteError):
    """The position walks out of the term (or contains junk characters)."""

    def __init__(self, position: Position):
        super().__init__(
            f"position {format_position(position)} leaves the term", position
        )


class NotARedex(RewriteError):
    """The addressed subterm is a leaf or has a leaf left child."""

    def __init__(self, position: Position):
        super().__init__(
            f"no redex at position {format_position(position)}", position
        )


@dataclass(frozen=True)
class Step:
    """One rewrite application: where it fired and the whole term after."""

    position: Position
    term_after: Term


@dataclass(frozen=True)
class Trace:
    """A rewrite sequence from ``start`` to its normal form ``final``.

    Replaying ``steps`` with :func:`apply_at` from ``start`` reproduces every
    intermediate term and ``final`` exactly.
    """

    start: Term
    steps: tuple[Step, ...]
    final: Term

    @property
    def step_count(self) -> int:
        return len(self.steps)


def find_redexes(t: Term) -> list[Position]:
    """All redex positions, deepest first, ties left-to-right (``L < R``).

    Empty exactly when ``t`` is in normal form.
    """
    found: list[Position] = []
    stack: list[tuple[Term, str]] = [(t, "")]
    while stack:
        x, path = stack.pop()
        if isinstance(x, Node):
            if isinstance(x.left, Node):
                found.append(path)
            stack.append((x.left, path + "L"))
            stack.append((x.right, path + "R"))
    found.sort(key=lambda p: (-len(p), p))
    return found


def apply_at(t: Term, p: Position) -> Term:
    """Rewrite ``(x*y)*z -> x*(y*z)`` at position ``p`` of ``t``.

    The result has the same size; its ``sigma`` drops by
    ``size(x) + 1`` where ``x`` is the left-left subtree at ``p``.
    Raises :class:`InvalidPosition` if ``p`` exits the tree and
    :class:`NotARedex` if the subterm there does not match the rule.
    """
    spine: list[Node] = []
    cur = t
    for ch in p:
        if ch not in ("L", "R") or not isinstance(cur, Node):
            raise InvalidPosition(p)
        spine.append(cur)
        cur = cur.left if ch == "L" else cur.right
    if not isinstance(cur, Node) or not isinstance(cur.left, Node):
        raise NotARedex(p)
    inner = cur.left
    result: Term = Node(inner.left, Node(inner.right, cur.right))
    for parent, ch in zip(reversed(spine), reversed(p)):
        if ch == "L":
            result = Node(result, parent.right)
        else:
            result = Node(parent.left, result)
    return result


def step_shortest(t: Term) -> tuple[Term, Position] | None:
    """Apply one rewrite at the shallowest redex on the rightmost path.

    Scans down the right spine past nodes whose left child is a leaf and
    fires at the first node whose left child is a node.  Returns ``None``
    iff ``t`` is already in normal form; otherwise ``(rewritten, position)``,
    and the rewrite is guaranteed to push the rightmost leaf exactly one
    edge deeper.
    """
    spine: list[Node] = []
    cur = t
    while isinstance(cur, Node) and isinstance(cur.left, Leaf):
        spine.append(cur)
        cur = cur.right
    if not isinstance(cur, Node):
        return None
    inner = cur.left
    result: Term = Node(inner.left, Node(inner.right, cur.right))
    position = "R" * len(spine)
    for parent in reversed(spine):
        result = Node(parent.left, result)
    return result, position


def normalize_shortest(t: Term) -> Trace:
    """Normalize by rotating as close to the root as possible.

    Takes exactly ``size(t) - depth_rightmost(t)`` steps.  Equivalent to
    iterating :func:`step_shortest` to a fixpoint, but keeps a cursor into
    the term so the already-validated prefix of the rightmost path is never
    rescanned: total node visits are O(size(t)).
    """
    # spine holds the validated prefix: right-spine ancestors whose left
    # child is a leaf.  A rotation leaves the focus at the same depth, so
    # only newly entered nodes are ever examined.
    spine: list[Node] = []
    focus = t
    steps: list[Step] = []
    while True:
        while isinstance(focus, Node) and isinstance(focus.left, Leaf):
            spine.append(focus)
            focus = focus.right
        if not isinstance(focus, Node):
            break
        inner = focus.left
        focus = Node(inner.left, Node(inner.right, focus.right))
        snapshot: Term = focus
        for parent in reversed(spine):
            snapshot = Node(parent.left, snapshot)
        steps.append(Step("R" * len(spine), snapshot))
    final = steps[-1].term_after if steps else t
    return Trace(start=t, steps=tuple(steps), final=final)


def normalize_longest(t: Term) -> Trace:
    """Normalize by always rewriting the deepest redex (leftmost on ties).

    The chosen redex always has a leaf as its left-left subtree, so every
    step lowers ``sigma`` by exactly 1 and the trace has exactly
    ``sigma(t)`` steps: the longest rewrite sequence that exists for ``t``.
    """
    steps: list[Step] = []
    cur = t
    while True:
        redexes = find_redexes(cur)
        if not redexes:
            break
        p = redexes[0]
        cur = apply_at(cur, p)
        steps.append(Step(p, cur))
    return Trace(start=t, steps=tuple(steps), final=cur)


STRATEGIES = ("shortest", "longest")


def normalize(t: Term, strategy: str = "shortest") -> Trace:
    """Dispatch to one of the two strategies; both end at the same NF."""
    if strategy == "shortest":
        return normalize_shortest(t)
    if strategy == "longest":
        return normalize_longest(t)
    raise ValueError(f"unknown strategy {strategy!r}, expected one of {STRATEGIES}")
