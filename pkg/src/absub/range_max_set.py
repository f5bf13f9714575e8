"""Ordered key set with values, supporting max-value queries over key ranges.

AVL tree augmented per subtree with (best value, smallest key achieving it)
plus key bounds for range pruning.  Ties on value always resolve to the
smaller key, both in queries and in the stored aggregates.
"""

from __future__ import annotations

from .errors import CapacityExceeded, DuplicateKey


class _Node:
    __slots__ = ("key", "value", "left", "right", "height",
                 "best_key", "best_value", "min_key", "max_key")

    def __init__(self, key, value):
        self.key = key
        self.value = value
        self.left = None
        self.right = None
        self.height = 1
        self.best_key = key
        self.best_value = value
        self.min_key = key
        self.max_key = key


def _height(node):
    return node.height if node is not None else 0


def _pull(node):
    left, right = node.left, node.right
    node.height = 1 + max(_height(left), _height(right))
    bk, bv = node.key, node.value
    mn = left.min_key if left is not None else node.key
    mx = right.max_key if right is not None else node.key
    for child in (left, right):
        if child is None:
            continue
        cv, ck = child.best_value, child.best_key
        if cv > bv or (cv == bv and ck < bk):
            bk, bv = ck, cv
    node.best_key, node.best_value = bk, bv
    node.min_key, node.max_key = mn, mx
    return node


def _rotate_left(node):
    r = node.right
    node.right = r.left
    r.left = node
    _pull(node)
    return _pull(r)


def _rotate_right(node):
    l = node.left
    node.left = l.right
    l.right = node
    _pull(node)
    return _pull(l)


def _rebalance(node):
    _pull(node)
    bal = _height(node.left) - _height(node.right)
    if bal > 1:
        if _height(node.left.left) < _height(node.left.right):
            node.left = _rotate_left(node.left)
        return _rotate_right(node)
    if bal < -1:
        if _height(node.right.right) < _height(node.right.left):
            node.right = _rotate_right(node.right)
        return _rotate_left(node)
    return node


class RangeMaxSet:
    """Mutable set of (key, value) pairs with range maximum lookup."""

    def __init__(self, capacity: int | None = None):
        self._root = None
        self._size = 0
        self.capacity = capacity

    def __len__(self) -> int:
        return self._size

    def __contains__(self, key) -> bool:
        node = self._root
        while node is not None:
            if key == node.key:
                return True
            node = node.left if key < node.key else node.right
        return False

    def insert(self, key, value):
        """Add a pair; rejects duplicate keys and enforces the capacity."""
        if self.capacity is not None and self._size >= self.capacity:
            if key not in self:
                raise CapacityExceeded(f"capacity {self.capacity} reached")
        self._root = self._insert(self._root, key, value)
        self._size += 1

    def _insert(self, node, key, value):
        if node is None:
            return _Node(key, value)
        if key == node.key:
            raise DuplicateKey(f"key {key!r} already present")
        if key < node.key:
            node.left = self._insert(node.left, key, value)
        else:
            node.right = self._insert(node.right, key, value)
        return _rebalance(node)

    def delete(self, key) -> bool:
        """Remove a key; returns False when it was not present."""
        self._root, found = self._delete(self._root, key)
        if found:
            self._size -= 1
        return found

    def _delete(self, node, key):
        if node is None:
            return None, False
        if key < node.key:
            node.left, found = self._delete(node.left, key)
        elif key > node.key:
            node.right, found = self._delete(node.right, key)
        else:
            if node.left is None:
                return node.right, True
            if node.right is None:
                return node.left, True
            heir = node.right
            while heir.left is not None:
                heir = heir.left
            node.key, node.value = heir.key, heir.value
            node.right, _ = self._delete(node.right, heir.key)
            return _rebalance(node), True
        return (_rebalance(node) if found else node), found

    def range_max(self, lo, hi):
        """(key, value) with the largest value among keys in [lo, hi].

        Ties prefer the smallest key; returns None when the range is empty.
        """
        best = self._range(self._root, lo, hi)
        return None if best is None else (best[1], best[0])

    def _range(self, node, lo, hi):
        if node is None or node.max_key < lo or node.min_key > hi:
            return None
        if lo <= node.min_key and node.max_key <= hi:
            return node.best_value, node.best_key
        best = (node.value, node.key) if lo <= node.key <= hi else None
        for child in (node.left, node.right):
            cand = self._range(child, lo, hi)
            if cand is None:
                continue
            if best is None or cand[0] > best[0] or (cand[0] == best[0] and cand[1] < best[1]):
                best = cand
        return best

    def items(self):
        """All pairs in key order (debugging and tests)."""
        out = []

        def walk(node):
            if node is None:
                return
            walk(node.left)
            out.append((node.key, node.value))
            walk(node.right)

        walk(self._root)
        return out
