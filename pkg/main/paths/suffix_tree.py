# -*- coding: utf-8 -*-

""" Generalized suffix tree over vertex IDs.

The tree stores vertex sequences directly, one vertex per node, with no
backing string and no edge compression. A node is *final* when the path
from the root to it is an inserted path that no other inserted path
contains, so the final nodes read back in depth-first order are the
maximal inserted paths in lexicographic order.
"""

from collections import namedtuple

InsertOutcome = namedtuple('InsertOutcome', ['created_node', 'was_extension'])

SuffixesOutcome = namedtuple('SuffixesOutcome', ['final_path_recorded'])


class _Node(object):
    __slots__ = ('vertex', 'children', 'final')

    def __init__(self, vertex=None):
        self.vertex = vertex
        self.children = {}
        self.final = False


class SuffixTree(object):
    """Suffix tree of candidate paths.

    Examples
    --------
    >>> t = SuffixTree()
    >>> _ = t.insert_with_suffixes([2, 3, 4, 5])
    >>> _ = t.insert_with_suffixes([3, 4, 5])
    >>> t.enumerate_final()
    [(2, 3, 4, 5)]
    """
    def __init__(self):
        self._root = _Node()
        self._size = 0
        # full-path insertions that created at least one node
        self.insert_counter = 0
        # node visits and creations over all insertions
        self.work_counter = 0

    def __len__(self):
        """Number of nodes, root excluded.
        """
        return self._size

    def insert(self, path, final=True) -> InsertOutcome:
        """Insert *path* by following it from the root.

        Any final node the insertion walks past is not maximal any more and
        loses its mark. When the insertion creates nodes and *final* is set,
        the new terminal is marked final. A path exhausted on existing nodes
        leaves the marks alone, except that a suffix (*final* unset) ending
        on a final node clears it, the node being a proper suffix of the
        path that owns the suffix.

        Parameters
        ----------
        path : sequence
            Vertex IDs, non-empty.
        final : bool
            If set, mark the new terminal node final.

        Returns
        -------
        r : InsertOutcome
            ``created_node`` is True if any node was added, ``was_extension``
            is True if a final node was walked past.
        """
        if not path:
            raise ValueError("cannot insert an empty path")
        node = self._root
        created = False
        extended = False
        for v in path:
            self.work_counter += 1
            if node.final:
                node.final = False
                extended = True
            child = node.children.get(v)
            if child is None:
                child = _Node(v)
                node.children[v] = child
                self._size += 1
                created = True
            node = child
        if created:
            if final:
                node.final = True
        elif not final and node.final:
            node.final = False
        return InsertOutcome(created, extended)

    def insert_with_suffixes(self, path) -> SuffixesOutcome:
        """Insert *path* marked final, then its tails unmarked.

        Tails stop at the first one that creates no node, its own tails
        are already present.
        """
        outcome = self.insert(path, final=True)
        if not outcome.created_node:
            return SuffixesOutcome(False)
        self.insert_counter += 1
        for i in range(1, len(path)):
            if not self.insert(path[i:], final=False).created_node:
                break
        return SuffixesOutcome(True)

    def contains_as_subpath(self, path) -> bool:
        """Test if *path* is a contiguous part of an inserted path.

        Walks the tree without modifying it: *path* is a subpath iff an
        insertion would create no node.
        """
        node = self._root
        for v in path:
            node = node.children.get(v)
            if node is None:
                return False
        return True

    def _walk(self):
        # (depth, node, root-path) in ordered depth-first order
        stack = [(0, c, (c.vertex, )) for _, c in sorted(self._root.children.items(), reverse=True)]
        while stack:
            depth, node, path = stack.pop()
            yield depth, node, path
            for v, c in sorted(node.children.items(), reverse=True):
                stack.append((depth + 1, c, path + (v, )))

    def enumerate_final(self) -> list:
        """Root paths of all final nodes, in lexicographic order.
        """
        return [path for _, node, path in self._walk() if node.final]

    def dump(self) -> str:
        """Indented node-per-line listing, final nodes marked with ``*``.
        """
        return "".join(f"{'  ' * depth}{node.vertex}{' *' if node.final else ''}\n"
                       for depth, node, _ in self._walk())

    def __repr__(self):
        return f"SuffixTree: [{self._size}] nodes, [{self.insert_counter}] insertions counted."
