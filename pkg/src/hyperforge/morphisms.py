"""Homomorphisms between structures of equal arity.

A map phi is a homomorphism when phi(f(x)) = f'(phi(x)) as sets and
phi(g(y)) = g'(phi(y)); an inclusion homomorphism only needs
phi(f(x)) to be contained in f'(phi(x)).  g is single-valued, so its
condition is equality in both cases.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .core import Structure, all_tuples, members
from .errors import DomainError, ResourceError


@dataclass(frozen=True)
class Mapping:
    source: Structure
    target: Structure
    image: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "image", tuple(self.image))
        if len(self.image) != self.source.k:
            raise DomainError(
                f"image has {len(self.image)} entries, source has {self.source.k} elements")
        if any(not 0 <= y < self.target.k for y in self.image):
            raise DomainError("image element out of range of the target")

    def __call__(self, x: int) -> int:
        return self.image[x]

    def is_bijective(self) -> bool:
        return self.source.k == self.target.k and len(set(self.image)) == self.source.k

    def inverse(self) -> "Mapping":
        if not self.is_bijective():
            raise DomainError("only bijections have inverses")
        inv = [0] * self.source.k
        for x, y in enumerate(self.image):
            inv[y] = x
        return Mapping(self.target, self.source, tuple(inv))

    def to_json(self) -> list[int]:
        return list(self.image)


def _check_arity(src, tgt):
    if src.m != tgt.m or src.n != tgt.n:
        raise DomainError(
            f"arity mismatch: ({src.m},{src.n}) vs ({tgt.m},{tgt.n})")


def _image_mask(phi, mask):
    out = 0
    for z in members(mask):
        out |= 1 << phi[z]
    return out


def _index(k, tup):
    idx = 0
    for x in tup:
        idx = idx * k + x
    return idx


def _f_ok(src, tgt, phi, idx, t, inclusion):
    lhs = _image_mask(phi, src.f.table[idx])
    rhs = tgt.f.table[_index(tgt.k, [phi[x] for x in t])]
    return lhs & ~rhs == 0 if inclusion else lhs == rhs


def _g_ok(src, tgt, phi, idx, t):
    return phi[src.g.table[idx]] == tgt.g.table[_index(tgt.k, [phi[x] for x in t])]


def _sweep(src, tgt, phi, inclusion):
    for idx, t in enumerate(all_tuples(src.k, src.m)):
        if not _f_ok(src, tgt, phi, idx, t, inclusion):
            return False
    for idx, t in enumerate(all_tuples(src.k, src.n)):
        if not _g_ok(src, tgt, phi, idx, t):
            return False
    return True


def is_homomorphism(phi: Mapping) -> bool:
    _check_arity(phi.source, phi.target)
    return _sweep(phi.source, phi.target, phi.image, inclusion=False)


def is_inclusion_homomorphism(phi: Mapping) -> bool:
    _check_arity(phi.source, phi.target)
    return _sweep(phi.source, phi.target, phi.image, inclusion=True)


def compose(first: Mapping, second: Mapping) -> Mapping:
    """x -> second(first(x)), i.e. apply ``first`` and then ``second``."""
    if first.target != second.source:
        raise DomainError("first.target must equal second.source")
    return Mapping(first.source, second.target,
                   tuple(second.image[y] for y in first.image))


def identity_map(S: Structure) -> Mapping:
    return Mapping(S, S, tuple(range(S.k)))


# -- search ---------------------------------------------------------------------

def _constraint_buckets(src):
    """Group every f- and g-tuple by the largest source element it involves.

    A tuple's condition depends on phi at its arguments and at its outputs, so
    it can be decided as soon as phi is fixed on 0..max of those elements.
    """
    buckets = [[] for _ in range(src.k)]
    for idx, t in enumerate(all_tuples(src.k, src.m)):
        top = max(max(t), members(src.f.table[idx])[-1])
        buckets[top].append(("f", idx, t))
    for idx, t in enumerate(all_tuples(src.k, src.n)):
        top = max(max(t), src.g.table[idx])
        buckets[top].append(("g", idx, t))
    return buckets


def _backtrack(src, tgt, bijective, first_only):
    buckets = _constraint_buckets(src)
    phi = [0] * src.k
    used = [False] * tgt.k
    found = []

    def extend(x):
        if x == src.k:
            found.append(tuple(phi))
            return first_only
        for y in range(tgt.k):
            if bijective and used[y]:
                continue
            phi[x] = y
            ok = True
            for kind, idx, t in buckets[x]:
                if kind == "f":
                    ok = _f_ok(src, tgt, phi, idx, t, False)
                else:
                    ok = _g_ok(src, tgt, phi, idx, t)
                if not ok:
                    break
            if ok:
                used[y] = True
                stop = extend(x + 1)
                used[y] = False
                if stop:
                    return True
        return False

    extend(0)
    return found


def _plain(src, tgt, bijective, first_only):
    found = []
    for image in itertools.product(range(tgt.k), repeat=src.k):
        if bijective and len(set(image)) != src.k:
            continue
        if _sweep(src, tgt, image, inclusion=False):
            found.append(image)
            if first_only:
                break
    return found


def enumerate_homomorphisms(source: Structure, target: Structure, mode: str = "all",
                            cap: int = 10**7) -> list[Mapping]:
    """Homomorphisms from ``source`` to ``target`` in lexicographic image order.

    ``mode`` is ``all``, ``first`` (at most one result) or ``iso`` (bijective
    homomorphisms whose inverse is also a homomorphism).
    """
    if mode not in ("all", "first", "iso"):
        raise ValueError(f"unknown mode {mode!r}")
    _check_arity(source, target)
    if target.k ** source.k > cap:
        raise ResourceError(
            f"{target.k}^{source.k} candidate maps exceed cap {cap}")
    bijective = mode == "iso"
    if bijective and source.k != target.k:
        return []
    search = _plain if source.k < 3 else _backtrack
    # In iso mode the inverse test happens after the search, so it cannot stop early.
    images = search(source, target, bijective, first_only=mode == "first")
    maps = [Mapping(source, target, im) for im in images]
    if bijective:
        maps = [h for h in maps if is_homomorphism(h.inverse())]
    return maps


def find_isomorphism(a: Structure, b: Structure):
    maps = enumerate_homomorphisms(a, b, "iso")
    return maps[0] if maps else None
