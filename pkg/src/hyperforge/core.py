"""Finite universes, subset masks, dense operation tables and the (H, f, g) container.

Elements of a universe of size ``k`` are the integers ``0..k-1``.  Subsets are
plain ``int`` bitmasks (bit ``x`` set iff ``x`` is a member), so union,
intersection and inclusion are single integer operations.  Operation tables
are dense row-major tuples indexed by :func:`tuple_index`.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

from .errors import ArityError, DomainError, EmptySubsetError

MAX_K = 64


# -- subset masks -----------------------------------------------------------

def mask_of(elements: Iterable[int]) -> int:
    bits = 0
    for x in elements:
        if x < 0:
            raise DomainError(f"negative element {x}")
        bits |= 1 << x
    return bits


@functools.lru_cache(maxsize=1 << 16)
def members(mask: int) -> tuple[int, ...]:
    """Elements of ``mask`` in increasing order."""
    out = []
    x = 0
    while mask:
        if mask & 1:
            out.append(x)
        mask >>= 1
        x += 1
    return tuple(out)


def full_mask(k: int) -> int:
    return (1 << k) - 1


def is_subset(a: int, b: int) -> bool:
    return a & ~b == 0


def popcount(mask: int) -> int:
    return bin(mask).count("1")


# -- mixed-radix addressing -------------------------------------------------

def tuple_index(tup: Sequence[int], k: int) -> int:
    """Row-major flat index of ``tup`` in a table over ``k`` elements.

    >>> tuple_index([2, 1, 0], 3)
    21
    """
    idx = 0
    for x in tup:
        if not 0 <= x < k:
            raise DomainError(f"element {x} out of range for k={k}")
        idx = idx * k + x
    return idx


def tuple_decode(index: int, k: int, length: int) -> tuple[int, ...]:
    """Inverse of :func:`tuple_index` for tuples of a fixed ``length``."""
    if not 0 <= index < k**length:
        raise DomainError(f"index {index} out of range for k={k}, length={length}")
    out = [0] * length
    for pos in range(length - 1, -1, -1):
        index, out[pos] = divmod(index, k)
    return tuple(out)


def all_tuples(k: int, length: int) -> Iterator[tuple[int, ...]]:
    """Every tuple of ``length`` elements, in flat-index order."""
    return itertools.product(range(k), repeat=length)


# -- tables -----------------------------------------------------------------

@dataclass(frozen=True)
class HyperOpTable:
    """An m-ary hyperoperation: every entry a non-empty subset mask."""

    arity: int
    k: int
    table: tuple[int, ...]

    def __post_init__(self):
        if self.arity < 2:
            raise DomainError(f"hyperoperation arity must be >= 2, got {self.arity}")
        if not 1 <= self.k <= MAX_K:
            raise DomainError(f"universe size must be in [1, {MAX_K}], got {self.k}")
        if len(self.table) != self.k**self.arity:
            raise DomainError(
                f"table length {len(self.table)} != k^m = {self.k**self.arity}")
        limit = full_mask(self.k)
        for idx, entry in enumerate(self.table):
            if entry == 0:
                raise EmptySubsetError(
                    f"empty entry at flat index {idx}, "
                    f"tuple {list(tuple_decode(idx, self.k, self.arity))}")
            if entry & ~limit:
                raise DomainError(f"entry at flat index {idx} has members >= k")

    def __getitem__(self, tup: Sequence[int]) -> int:
        if len(tup) != self.arity:
            raise ArityError(f"expected {self.arity} arguments, got {len(tup)}")
        return self.table[tuple_index(tup, self.k)]


@dataclass(frozen=True)
class OpTable:
    """An n-ary single-valued operation."""

    arity: int
    k: int
    table: tuple[int, ...]

    def __post_init__(self):
        if self.arity < 2:
            raise DomainError(f"operation arity must be >= 2, got {self.arity}")
        if not 1 <= self.k <= MAX_K:
            raise DomainError(f"universe size must be in [1, {MAX_K}], got {self.k}")
        if len(self.table) != self.k**self.arity:
            raise DomainError(
                f"table length {len(self.table)} != k^n = {self.k**self.arity}")
        for idx, entry in enumerate(self.table):
            if not 0 <= entry < self.k:
                raise DomainError(f"entry {entry} at flat index {idx} out of range")

    def __getitem__(self, tup: Sequence[int]) -> int:
        if len(tup) != self.arity:
            raise ArityError(f"expected {self.arity} arguments, got {len(tup)}")
        return self.table[tuple_index(tup, self.k)]


@dataclass(frozen=True)
class Structure:
    """The triple (H, f, g) with H = {0, ..., k-1}.

    ``cache`` memoizes axiom verdicts keyed by check name; it never takes part
    in equality and is filled only with fresh computations.
    """

    f: HyperOpTable
    g: OpTable
    cache: dict = field(default_factory=dict, compare=False, repr=False, hash=False)

    def __post_init__(self):
        if self.f.k != self.g.k:
            raise DomainError(f"f and g disagree on k ({self.f.k} vs {self.g.k})")

    @property
    def k(self) -> int:
        return self.f.k

    @property
    def m(self) -> int:
        return self.f.arity

    @property
    def n(self) -> int:
        return self.g.arity

    @property
    def universe(self) -> int:
        return full_mask(self.k)

    @classmethod
    def from_functions(cls, k: int, m: int, n: int, f, g) -> "Structure":
        """Tabulate ``f`` (returning an iterable of elements) and ``g``."""
        ftab = tuple(mask_of(f(*t)) for t in all_tuples(k, m))
        gtab = tuple(g(*t) for t in all_tuples(k, n))
        return cls(HyperOpTable(m, k, ftab), OpTable(n, k, gtab))

    def relabel(self, perm: Sequence[int]) -> "Structure":
        """The isomorphic copy in which element ``x`` is renamed ``perm[x]``."""
        k = self.k
        if sorted(perm) != list(range(k)):
            raise DomainError(f"{list(perm)} is not a permutation of range({k})")
        ftab = [0] * len(self.f.table)
        for idx, t in enumerate(all_tuples(k, self.m)):
            out = mask_of(perm[z] for z in members(self.f.table[idx]))
            ftab[tuple_index([perm[x] for x in t], k)] = out
        gtab = [0] * len(self.g.table)
        for idx, t in enumerate(all_tuples(k, self.n)):
            gtab[tuple_index([perm[x] for x in t], k)] = perm[self.g.table[idx]]
        return Structure(HyperOpTable(self.m, k, tuple(ftab)),
                         OpTable(self.n, k, tuple(gtab)))


# -- evaluation ---------------------------------------------------------------

def eval_f(S: Structure, tup: Sequence[int]) -> int:
    return S.f[tup]


def eval_g(S: Structure, tup: Sequence[int]) -> int:
    return S.g[tup]


def eval_f_subsets(S: Structure, args: Sequence[int]) -> int:
    """Union of f over the Cartesian product of the subset arguments."""
    if len(args) != S.m:
        raise ArityError(f"expected {S.m} subset arguments, got {len(args)}")
    if any(a == 0 for a in args):
        raise EmptySubsetError("f applied to an empty subset")
    k, table = S.k, S.f.table
    out = 0
    for t in itertools.product(*(members(a) for a in args)):
        idx = 0
        for x in t:
            idx = idx * k + x
        out |= table[idx]
    return out


def eval_g_subset(S: Structure, prefix: Sequence[int], A: int,
                  suffix: Sequence[int]) -> int:
    """{ g(prefix, a, suffix) : a in A }."""
    if len(prefix) + 1 + len(suffix) != S.n:
        raise ArityError(
            f"prefix+1+suffix has length {len(prefix) + 1 + len(suffix)}, expected {S.n}")
    if A == 0:
        raise EmptySubsetError("g applied to an empty subset")
    g = S.g
    return mask_of(g[(*prefix, a, *suffix)] for a in members(A))
