"""Small self-contained oracles for the tests.

Everything here is written as the plainest possible recursion or recurrence,
independent of the library's iterative implementations, so tests can compare
the two sides.  Only meant for small terms.
"""

from assocnf.terms import Leaf, Node


def catalan_counts(n_max):
    """Catalan numbers C(0)..C(n_max) straight from the split recurrence."""
    counts = [1]
    for n in range(1, n_max + 1):
        counts.append(sum(counts[i] * counts[n - 1 - i] for i in range(n)))
    return counts


def naive_size(t):
    if isinstance(t, Leaf):
        return 0
    return 1 + naive_size(t.left) + naive_size(t.right)


def naive_sigma(t):
    if isinstance(t, Leaf):
        return 0
    return naive_sigma(t.left) + naive_sigma(t.right) + naive_size(t.left)


def subterm_at(t, path):
    for ch in path:
        t = t.left if ch == "L" else t.right
    return t


def leaves_in_order(t):
    if isinstance(t, Leaf):
        return [t.label]
    return leaves_in_order(t.left) + leaves_in_order(t.right)


def right_chain_over(labels):
    """The right-nested term whose leaves are ``labels`` in order."""
    t = Leaf(labels[-1])
    for label in reversed(labels[:-1]):
        t = Node(Leaf(label), t)
    return t


def shape_of(t):
    """Copy of ``t`` with labels stripped."""
    if isinstance(t, Leaf):
        return Leaf(None)
    return Node(shape_of(t.left), shape_of(t.right))


def random_shape(n, rng, counts):
    """Uniformly random shape of size ``n``; splits weighted by Catalan products."""
    if n == 0:
        return Leaf(None)
    weights = [counts[i] * counts[n - 1 - i] for i in range(n)]
    i = rng.choices(range(n), weights=weights)[0]
    return Node(random_shape(i, rng, counts), random_shape(n - 1 - i, rng, counts))


def with_indexed_leaves(t, prefix="x"):
    """Relabel leaves ``x0, x1, ...`` left to right (labels stay distinct)."""
    counter = iter(range(1_000_000))

    def go(t):
        if isinstance(t, Leaf):
            return Leaf(f"{prefix}{next(counter)}")
        return Node(go(t.left), go(t.right))

    return go(t)
