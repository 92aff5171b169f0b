"""Binary terms over a single `*` connective, their text format, and measures.

A term is either a leaf (optionally labeled) or a node with two children.
The canonical text form is fully parenthesized: every node prints as
``(left*right)`` and an unlabeled leaf prints as ``.``, so for example the
three-node left chain is ``(((.*.)*.)*.)``.

Terms are immutable values: share them freely, never mutate ``left``/``right``.
Every operation here walks trees with explicit stacks so that chains nested
a million deep are handled without touching the interpreter recursion limit.
"""

from __future__ import annotations

from dataclasses import dataclass

__all__ = [
    "Term",
    "Leaf",
    "Node",
    "Metrics",
    "ParseError",
    "parse",
    "render",
    "size",
    "sigma",
    "depth_rightmost",
    "is_normal_form",
    "left_chain",
    "right_chain",
    "measure",
]

_LABEL_CHARS = frozenset("abcdefghijklmnopqrstuvwxyz0123456789_")


class Term:
    """Base class for :class:`Leaf` and :class:`Node`."""

    __slots__ = ()

    def __str__(self) -> str:
        return render(self)


class Leaf(Term):
    """A leaf, carrying an optional label over ``[a-z0-9_]``."""

    __slots__ = ("label",)

    def __init__(self, label: str | None = None):
        if label is not None and (not label or not set(label) <= _LABEL_CHARS):
            raise ValueError(f"invalid leaf label: {label!r}")
        self.label = label

    def __repr__(self) -> str:
        return f"Leaf({self.label!r})" if self.label is not None else "Leaf()"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Leaf) and self.label == other.label

    def __hash__(self) -> int:
        return hash(("leaf", self.label))


class Node(Term):
    """An internal node; rewriting never inspects anything but the shape."""

    __slots__ = ("left", "right", "_hash")

    def __init__(self, left: Term, right: Term):
        self.left = left
        self.right = right
        self._hash: int | None = None

    def __repr__(self) -> str:
        return f"parse({render(self)!r})"

    def __eq__(self, other: object) -> bool:
        if self is other:
            return True
        if not isinstance(other, Node):
            return NotImplemented
        stack = [(self, other)]
        while stack:
            a, b = stack.pop()
            if a is b:
                continue
            if type(a) is not type(b):
                return False
            if isinstance(a, Leaf):
                if a.label != b.label:
                    return False
            else:
                stack.append((a.left, b.left))
                stack.append((a.right, b.right))
        return True

    def __hash__(self) -> int:
        h = self._hash
        if h is None:
            h = _node_hash(self)
        return h


def _node_hash(root: Node) -> int:
    # Bottom-up over an explicit stack; caches into _hash so shared subtrees
    # and repeated lookups stay cheap.
    stack = [root]
    while stack:
        x = stack.pop()
        if not isinstance(x, Node) or x._hash is not None:
            continue
        pending = []
        child_hashes = []
        for child in (x.left, x.right):
            if isinstance(child, Node) and child._hash is None:
                pending.append(child)
            else:
                child_hashes.append(hash(child))
        if pending:
            stack.append(x)
            stack.extend(pending)
        else:
            x._hash = hash((child_hashes[0], child_hashes[1]))
    return root._hash  # type: ignore[return-value]


@dataclass(frozen=True)
class Metrics:
    """Size, left-weight, rightmost-leaf depth, and NF status of one term.

    ``size`` counts internal nodes.  ``sigma`` is the sum over internal nodes
    of the size of each node's left subtree; it equals the length of the
    longest rewrite sequence to normal form and is bounded by
    ``size*(size-1)/2``.  ``d_rm`` counts edges from the root to the rightmost
    leaf; ``size - d_rm`` is the length of the shortest rewrite sequence.
    A term is in normal form exactly when ``d_rm == size``.
    """

    size: int
    sigma: int
    d_rm: int
    is_nf: bool


class ParseError(ValueError):
    """Malformed term text; ``offset`` is the byte position of the fault."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} at byte {offset}")
        self.offset = offset


def _byte_offset(text: str, index: int) -> int:
    if text.isascii():
        return index
    return len(text[:index].encode("utf-8"))


_WS = frozenset(" \t\r\n")

# Sentinel marking an open '(' whose left child has not been parsed yet.
_OPEN = object()


def parse(text: str) -> Term:
    """Parse canonical term text: ``T ::= LEAF | "(" T "*" T ")"``.

    Leaves are ``.`` (unlabeled) or a nonempty run of ``[a-z0-9_]``.
    Whitespace between tokens is ignored.  Raises :class:`ParseError` with a
    byte offset on malformed input.  Nesting depth is unbounded.
    """
    n = len(text)
    i = 0
    # Stack entries: _OPEN for an open paren awaiting its left child, or the
    # completed left child Term awaiting '*' right ')'.
    stack: list = []
    while True:
        while i < n and text[i] in _WS:
            i += 1
        if i >= n:
            raise ParseError("unexpected end of input", _byte_offset(text, i))
        c = text[i]
        if c == "(":
            stack.append(_OPEN)
            i += 1
            continue
        if c == ".":
            term: Term = Leaf(None)
            i += 1
        elif c in _LABEL_CHARS:
            j = i + 1
            while j < n and text[j] in _LABEL_CHARS:
                j += 1
            term = Leaf(text[i:j])
            i = j
        else:
            raise ParseError(f"expected a term, found {c!r}", _byte_offset(text, i))
        # Attach the completed term upward, closing parens as they finish.
        while True:
            while i < n and text[i] in _WS:
                i += 1
            if not stack:
                if i < n:
                    raise ParseError(
                        f"trailing input {text[i]!r}", _byte_offset(text, i)
                    )
                return term
            top = stack[-1]
            if top is _OPEN:
                if i >= n:
                    raise ParseError(
                        "unexpected end of input, expected '*'",
                        _byte_offset(text, i),
                    )
                if text[i] != "*":
                    raise ParseError(
                        f"expected '*', found {text[i]!r}", _byte_offset(text, i)
                    )
                stack[-1] = term
                i += 1
                break
            if i >= n:
                raise ParseError(
                    "unexpected end of input, expected ')'", _byte_offset(text, i)
                )
            if text[i] != ")":
                raise ParseError(
                    f"expected ')', found {text[i]!r}", _byte_offset(text, i)
                )
            stack.pop()
            term = Node(top, term)
            i += 1


def render(t: Term) -> str:
    """Canonical text of ``t``; injective, and ``parse(render(t)) == t``."""
    out: list[str] = []
    stack: list = [t]
    while stack:
        x = stack.pop()
        if type(x) is str:
            out.append(x)
        elif isinstance(x, Leaf):
            out.append(x.label if x.label is not None else ".")
        else:
            stack.append(")")
            stack.append(x.right)
            stack.append("*")
            stack.append(x.left)
            stack.append("(")
    return "".join(out)


def size(t: Term) -> int:
    """Number of internal nodes."""
    count = 0
    stack = [t]
    while stack:
        x = stack.pop()
        if isinstance(x, Node):
            count += 1
            stack.append(x.left)
            stack.append(x.right)
    return count


def sigma(t: Term) -> int:
    """Sum over internal nodes of the size of each node's left subtree.

    Equivalently: 0 for a leaf, else ``sigma(left) + sigma(right) +
    size(left)``.  Computed here by crediting every internal node once per
    ancestor that holds it in a left subtree.
    """
    total = 0
    stack = [(t, 0)]
    while stack:
        x, left_ancestors = stack.pop()
        if isinstance(x, Node):
            total += left_ancestors
            stack.append((x.left, left_ancestors + 1))
            stack.append((x.right, left_ancestors))
    return total


def depth_rightmost(t: Term) -> int:
    """Edge count from the root to the rightmost leaf (0 for a leaf)."""
    d = 0
    while isinstance(t, Node):
        t = t.right
        d += 1
    return d


def is_normal_form(t: Term) -> bool:
    """True iff ``t`` has no redex, i.e. it is a pure right chain.

    Normal forms are exactly the terms whose rightmost leaf sits at depth
    ``size(t)``, which is the test applied here.
    """
    return depth_rightmost(t) == size(t)


def left_chain(n: int) -> Term:
    """Fully left-nested term with ``n`` internal nodes and unlabeled leaves.

    The worst input for rewriting: ``sigma(left_chain(n)) == n*(n-1)//2``
    for every ``n >= 0`` (both ``n = 0`` and ``n = 1`` give 0).
    """
    if n < 0:
        raise ValueError("chain size must be nonnegative")
    leaf = Leaf(None)
    t: Term = leaf
    for _ in range(n):
        t = Node(t, leaf)
    return t


def right_chain(n: int) -> Term:
    """Fully right-nested term with ``n`` internal nodes: the normal form."""
    if n < 0:
        raise ValueError("chain size must be nonnegative")
    leaf = Leaf(None)
    t: Term = leaf
    for _ in range(n):
        t = Node(leaf, t)
    return t


def measure(t: Term) -> Metrics:
    """All measures of ``t`` in one record."""
    total = 0
    count = 0
    stack = [(t, 0)]
    while stack:
        x, left_ancestors = stack.pop()
        if isinstance(x, Node):
            count += 1
            total += left_ancestors
            stack.append((x.left, left_ancestors + 1))
            stack.append((x.right, left_ancestors))
    d_rm = depth_rightmost(t)
    return Metrics(size=count, sigma=total, d_rm=d_rm, is_nf=d_rm == count)
