"""Maximum bipartite matching by augmenting paths.

Left vertices are ``0..len(domains)-1``; ``domains[u]`` is a bitmask of the
right vertices ``u`` may be matched to. Augmenting paths are found by BFS
that scans right vertices in increasing index, so the result is
deterministic and favours small indices.
"""

from __future__ import annotations

from collections import deque
from collections.abc import Iterable, Sequence


def bits(mask: int) -> Iterable[int]:
    """Indices of set bits, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_mask(items: Iterable[int]) -> int:
    m = 0
    for i in items:
        m |= 1 << i
    return m


def _augment(start: int, domains: Sequence[int], match_left: list[int],
             match_right: dict[int, int]) -> bool:
    reached_from: dict[int, int] = {}
    reached = 0
    queue = deque([start])
    while queue:
        left = queue.popleft()
        for right in bits(domains[left] & ~reached):
            reached |= 1 << right
            reached_from[right] = left
            nxt = match_right.get(right)
            if nxt is None:
                while True:
                    owner = reached_from[right]
                    previous = match_left[owner]
                    match_left[owner] = right
                    match_right[right] = owner
                    if owner == start:
                        return True
                    right = previous
            queue.append(nxt)
    return False


def max_matching(domains: Sequence[int]) -> list[int]:
    """Right vertex matched to each left vertex, ``-1`` where unmatched."""
    match_left = [-1] * len(domains)
    match_right: dict[int, int] = {}
    for u in range(len(domains)):
        _augment(u, domains, match_left, match_right)
    return match_left


def has_saturating_matching(domains: Sequence[int]) -> bool:
    """True iff every left vertex can be matched. Stops at the first failure."""
    match_left = [-1] * len(domains)
    match_right: dict[int, int] = {}
    for u in range(len(domains)):
        if not _augment(u, domains, match_left, match_right):
            return False
    return True
