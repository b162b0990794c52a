"""Sign bookkeeping for exterior products of sorted index tuples."""

from __future__ import annotations


def merge(left: tuple[int, ...], right: tuple[int, ...]) -> tuple[int, tuple[int, ...]]:
    """Return ``(sign, indices)`` with ``e_left ^ e_right = sign * e_indices``.

    ``sign`` is 0 when the tuples share an index.
    """
    if not left:
        return 1, right
    if not right:
        return 1, left
    if len(left) == 1 and len(right) == 1:
        a, b = left[0], right[0]
        if a < b:
            return 1, (a, b)
        if a > b:
            return -1, (b, a)
        return 0, ()
    if set(left).intersection(right):
        return 0, ()
    inversions = 0
    for j in right:
        for i in left:
            if i > j:
                inversions += 1
    return (-1 if inversions & 1 else 1), tuple(sorted(left + right))


def remove_left(indices: tuple[int, ...], i: int) -> tuple[int, tuple[int, ...]]:
    """Left derivative: e_indices = sign * e_i ^ e_rest.  sign 0 if i absent."""
    try:
        r = indices.index(i)
    except ValueError:
        return 0, ()
    return (-1 if r & 1 else 1), indices[:r] + indices[r + 1:]


def remove_right(indices: tuple[int, ...], i: int) -> tuple[int, tuple[int, ...]]:
    """Right derivative: e_indices = sign * e_rest ^ e_i.  sign 0 if i absent."""
    try:
        r = indices.index(i)
    except ValueError:
        return 0, ()
    return (-1 if (len(indices) - 1 - r) & 1 else 1), indices[:r] + indices[r + 1:]


def permutation_sign(seq) -> int:
    """Sign of the permutation sorting ``seq`` (0 if it has repeats)."""
    seq = list(seq)
    if len(set(seq)) != len(seq):
        return 0
    sign = 1
    for a in range(len(seq)):
        for b in range(a + 1, len(seq)):
            if seq[a] > seq[b]:
                sign = -sign
    return sign
