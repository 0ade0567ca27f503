"""Shared fixtures and independent oracles.

The oracles here never call into cxkit: type A is modelled by permutations,
dihedral types by rotations/reflections of a polygon.
"""

import itertools
from itertools import product

import pytest

from cxkit.coxeter import build_system
from cxkit.twist import registry_twist


@pytest.fixture(scope="session")
def systems():
    cache = {}

    def get(descriptor):
        if descriptor not in cache:
            cache[descriptor] = build_system(descriptor)
        return cache[descriptor]

    return get


@pytest.fixture(scope="session")
def twists():
    cache = {}

    def get(descriptor):
        if descriptor not in cache:
            cache[descriptor] = registry_twist(descriptor)[1]
        return cache[descriptor]

    return get


# --- permutation model of type A_n -----------------------------------------


def perm_of_word(word, n):
    """One-line form of s_{i1} s_{i2} ... acting on {1..n+1}; s_i swaps positions i, i+1."""
    p = list(range(1, n + 2))
    for i in word:
        p[i - 1], p[i] = p[i], p[i - 1]
    return tuple(p)


def perm_inversions(p):
    return sum(1 for i in range(len(p)) for j in range(i + 1, len(p)) if p[i] > p[j])


def contains_pattern(p, pattern):
    k = len(pattern)
    for idx in product(range(len(p)), repeat=k):
        if list(idx) != sorted(set(idx)) or len(set(idx)) != k:
            continue
        vals = [p[i] for i in idx]
        order = sorted(range(k), key=lambda j: vals[j])
        ranks = [0] * k
        for r, j in enumerate(order, 1):
            ranks[j] = r
        if tuple(ranks) == tuple(pattern):
            return True
    return False


# --- dihedral model ---------------------------------------------------------


def dihedral_of_word(word, m):
    """Element of the dihedral group of order 2m as (rotation, flipped)."""
    rot, flip = 0, 0
    for s in word:
        # generator 1 is the reflection r -> -r, generator 2 is the reflection r -> 1 - r
        k = 0 if s == 1 else 1
        rot, flip = (k - rot) % m, 1 - flip
    return rot, flip


def dihedral_length(elem, m):
    """Word length in the dihedral group: BFS, independent of any formula."""
    from collections import deque

    dist = {(0, 0): 0}
    q = deque([((0, 0), ())])
    while q:
        e, w = q.popleft()
        for s in (1, 2):
            f = dihedral_of_word(w + (s,), m)
            if f not in dist:
                dist[f] = len(w) + 1
                q.append((f, w + (s,)))
    return dist[elem]


# --- braid closure oracle ---------------------------------------------------


def braid_class_bfs(word, m_of):
    """All words reachable from ``word`` by braid relations (m_of(s, t) gives m)."""
    seen = {tuple(word)}
    stack = [tuple(word)]
    while stack:
        w = stack.pop()
        for i in range(len(w)):
            for j in range(i + 2, len(w) + 1):
                block = w[i:j]
                if len(set(block)) != 2:
                    continue
                s, t = block[0], block[1]
                m = m_of(s, t)
                if len(block) != m or any(block[k] != (s if k % 2 == 0 else t) for k in range(m)):
                    continue
                new = w[:i] + tuple(t if k % 2 == 0 else s for k in range(m)) + w[j:]
                if new not in seen:
                    seen.add(new)
                    stack.append(new)
    return seen


# --- flags over the field with two elements --------------------------------


def count_complete_flags_f2(n):
    """Brute force: chains 0 < V1 < ... < V_{n-1} < F_2^n of subspaces."""
    vectors = list(itertools.product((0, 1), repeat=n))

    def span(vs):
        out = {tuple([0] * n)}
        for v in vs:
            out |= {tuple((a + b) % 2 for a, b in zip(u, v)) for u in out}
        return frozenset(out)

    def extend(chain):
        if len(chain[-1]) == 2**n:
            return 1
        total = 0
        seen = set()
        for v in vectors:
            if v in chain[-1]:
                continue
            bigger = span(list(chain[-1]) + [v])
            if bigger not in seen:
                seen.add(bigger)
                total += extend(chain + [bigger])
        return total

    return extend([span([])])
