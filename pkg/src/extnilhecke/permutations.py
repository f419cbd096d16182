"""Permutations in one-line notation.

A permutation of ``{1..n}`` is a tuple ``w`` with ``w[i-1] = w(i)``.  Plain
tuples keep hashing and equality cheap; everything here is a free function.
Composition is function composition, ``(u * w)(i) = u(w(i))``.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import permutations as _it_permutations
from typing import Iterator

Perm = tuple[int, ...]


def identity(n: int) -> Perm:
    return tuple(range(1, n + 1))


def is_perm(w: Perm) -> bool:
    return sorted(w) == list(range(1, len(w) + 1))


def compose(u: Perm, w: Perm) -> Perm:
    if len(u) != len(w):
        raise ValueError("size mismatch")
    return tuple(u[w[i] - 1] for i in range(len(w)))


def inverse(w: Perm) -> Perm:
    out = [0] * len(w)
    for i, v in enumerate(w):
        out[v - 1] = i + 1
    return tuple(out)


def transposition(i: int, n: int) -> Perm:
    """The adjacent transposition ``s_i`` in ``S_n``."""
    if not 1 <= i <= n - 1:
        raise ValueError(f"s_{i} undefined in S_{n}")
    w = list(range(1, n + 1))
    w[i - 1], w[i] = w[i], w[i - 1]
    return tuple(w)


def length(w: Perm) -> int:
    """Number of inversions."""
    n = len(w)
    return sum(1 for i in range(n) for j in range(i + 1, n) if w[i] > w[j])


def longest_element(n: int) -> Perm:
    return tuple(range(n, 0, -1))


def symmetric_group(n: int) -> Iterator[Perm]:
    """All of ``S_n`` in lexicographic order."""
    return _it_permutations(range(1, n + 1))


@lru_cache(maxsize=None)
def reduced_word(w: Perm) -> tuple[int, ...]:
    """The lexicographically smallest reduced word of ``w``.

    Greedy: repeatedly strip the smallest left descent, i.e. the smallest
    ``i`` with ``w^{-1}(i) > w^{-1}(i+1)``.
    """
    word: list[int] = []
    n = len(w)
    cur = w
    while True:
        inv = inverse(cur)
        for i in range(1, n):
            if inv[i - 1] > inv[i]:
                word.append(i)
                cur = compose(transposition(i, n), cur)
                break
        else:
            return tuple(word)


def all_reduced_words(w: Perm) -> list[tuple[int, ...]]:
    """Every reduced word of ``w``; exponential, for tests at small rank."""
    n = len(w)
    if length(w) == 0:
        return [()]
    out = []
    inv = inverse(w)
    for i in range(1, n):
        if inv[i - 1] > inv[i]:
            for rest in all_reduced_words(compose(transposition(i, n), w)):
                out.append((i,) + rest)
    return out


def block_perm(u: Perm, w: Perm) -> Perm:
    """``u`` acting on the first block, ``w`` shifted past it."""
    k = len(u)
    return u + tuple(v + k for v in w)


@lru_cache(maxsize=None)
def min_coset_reps(k: int, l: int) -> tuple[Perm, ...]:
    """Length-minimal representatives of ``(S_k x S_l) \\ S_{k+l}``.

    Cosets ``(S_k x S_l) w`` are separated by the block pattern
    ``i -> [w(i) <= k]``; within each coset the representative of least
    length is found by exhaustive search, which is fine for ``k + l <= 7``.
    """
    n = k + l
    best: dict[tuple[bool, ...], tuple[int, Perm]] = {}
    for w in symmetric_group(n):
        sig = tuple(v <= k for v in w)
        cand = (length(w), w)
        if sig not in best or cand < best[sig]:
            best[sig] = cand
    return tuple(sorted(w for _, w in best.values()))
