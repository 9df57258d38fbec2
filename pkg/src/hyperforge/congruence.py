"""Congruences, quotients, natural maps and nested quotients.

An :class:`EquivRelation` is stored as a class label per element.  Labels are
normalized to first-occurrence order (element 0 is in class 0, the next new
class is 1, ...), which also fixes the element order of quotient structures.

Two subsets A, B are related when every element of each has a related
partner in the other, i.e. when their sets of classes coincide.  That is the
form used throughout; :func:`subsets_related` exposes it.

"Strongly regular" follows the usual hyperstructure meaning: a congruence
under which all outputs of f on related input tuples lie in one class.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator

from .axioms import AxiomVerdict
from .core import HyperOpTable, OpTable, Structure, all_tuples, members
from .errors import ConsistencyError, DomainError, EmptySubsetError, PreconditionError, ResourceError
from .morphisms import Mapping, enumerate_homomorphisms
from .parallel import ordered_map


@dataclass(frozen=True)
class EquivRelation:
    class_of: tuple[int, ...]

    def __post_init__(self):
        labels = tuple(self.class_of)
        if not labels:
            raise DomainError("a relation needs at least one element")
        if sorted(set(labels)) != list(range(len(set(labels)))):
            raise DomainError(f"class ids {list(labels)} are not contiguous from 0")
        renumber = {}
        for c in labels:
            renumber.setdefault(c, len(renumber))
        object.__setattr__(self, "class_of", tuple(renumber[c] for c in labels))

    @property
    def k(self) -> int:
        return len(self.class_of)

    @property
    def count(self) -> int:
        return max(self.class_of) + 1

    @classmethod
    def identity(cls, k: int) -> "EquivRelation":
        return cls(tuple(range(k)))

    @classmethod
    def universal(cls, k: int) -> "EquivRelation":
        return cls((0,) * k)

    def classes(self) -> list[int]:
        """Member mask of each class, indexed by class id."""
        out = [0] * self.count
        for x, c in enumerate(self.class_of):
            out[c] |= 1 << x
        return out

    def related(self, x: int, y: int) -> bool:
        return self.class_of[x] == self.class_of[y]

    def image(self, mask: int) -> int:
        """Mask of the classes meeting ``mask``."""
        out = 0
        for x in members(mask):
            out |= 1 << self.class_of[x]
        return out

    def refines(self, other: "EquivRelation") -> bool:
        """True iff every class of ``self`` lies inside a class of ``other``."""
        if other.k != self.k:
            return False
        seen = {}
        for a, b in zip(self.class_of, other.class_of):
            if seen.setdefault(a, b) != b:
                return False
        return True

    def to_json(self) -> list[int]:
        return list(self.class_of)


def _check_size(S, rel):
    if rel.k != S.k:
        raise DomainError(f"relation covers {rel.k} elements, structure has {S.k}")


def subsets_related(rel: EquivRelation, A: int, B: int) -> bool:
    if A == 0 or B == 0:
        raise EmptySubsetError("subset relation needs non-empty sides")
    return rel.image(A) == rel.image(B)


# -- congruence sweeps ------------------------------------------------------------

def _index(k, tup):
    idx = 0
    for x in tup:
        idx = idx * k + x
    return idx


def is_congruence(S: Structure, rel: EquivRelation) -> AxiomVerdict:
    """Compatibility of ``rel`` with f (via the subset lift) and with g.

    One coordinate is changed at a time; arbitrary componentwise-related
    tuples are reached by chaining such single changes, and both the subset
    relation and element relatedness are transitive.
    """
    _check_size(S, rel)
    k, cls = S.k, rel.class_of
    blocks = [members(c) for c in rel.classes()]
    ftab, gtab = S.f.table, S.g.table
    for arity, kind in ((S.m, "f"), (S.n, "g")):
        for idx, t in enumerate(all_tuples(k, arity)):
            for pos in range(arity):
                for y in blocks[cls[t[pos]]]:
                    if y <= t[pos]:
                        continue
                    u = list(t)
                    u[pos] = y
                    jdx = _index(k, u)
                    if kind == "f":
                        a, b = rel.image(ftab[idx]), rel.image(ftab[jdx])
                        lhs, rhs = list(members(ftab[idx])), list(members(ftab[jdx]))
                    else:
                        a, b = cls[gtab[idx]], cls[gtab[jdx]]
                        lhs, rhs = gtab[idx], gtab[jdx]
                    if a != b:
                        return AxiomVerdict("congruence", False, {
                            "axiom": "congruence", "operation": kind,
                            "tuple": list(t), "related_tuple": u, "lhs": lhs, "rhs": rhs})
    return AxiomVerdict("congruence", True)


def check_translation_lemma(S: Structure, rel: EquivRelation) -> AxiomVerdict:
    """f(x, a..) ~ f(y, a..) and g(a.., x, ..a) ~ g(a.., y, ..a) whenever x ~ y."""
    _check_size(S, rel)
    k = S.k
    pairs = [(x, y) for x in range(k) for y in range(k) if rel.related(x, y)]
    for x, y in pairs:
        for a in all_tuples(k, S.m - 1):
            fx, fy = S.f[(x, *a)], S.f[(y, *a)]
            if not subsets_related(rel, fx, fy):
                return AxiomVerdict("translation_lemma", False, {
                    "axiom": "translation_lemma", "operation": "f", "x": x, "y": y,
                    "params": list(a), "lhs": list(members(fx)), "rhs": list(members(fy))})
    for x, y in pairs:
        for i in range(S.n):
            for a in all_tuples(k, S.n - 1):
                gx = S.g[(*a[:i], x, *a[i:])]
                gy = S.g[(*a[:i], y, *a[i:])]
                if not rel.related(gx, gy):
                    return AxiomVerdict("translation_lemma", False, {
                        "axiom": "translation_lemma", "operation": "g", "slot": i + 1,
                        "x": x, "y": y, "params": list(a), "lhs": gx, "rhs": gy})
    return AxiomVerdict("translation_lemma", True)


def _related_tuples(blocks, cls, t) -> Iterator[tuple]:
    return itertools.product(*(blocks[cls[x]] for x in t))


def check_mixed_congruence(S: Structure, rel: EquivRelation) -> AxiomVerdict:
    """f(a_1..a_j, x_{j+1}..x_m) ~ f(b_1..b_j, y_{j+1}..y_m) for every split j."""
    _check_size(S, rel)
    k, m, cls = S.k, S.m, rel.class_of
    blocks = [members(c) for c in rel.classes()]
    for j in range(1, m + 1):
        for a in all_tuples(k, j):
            for x in all_tuples(k, m - j):
                lhs = S.f.table[_index(k, (*a, *x))]
                for b in _related_tuples(blocks, cls, a):
                    for y in _related_tuples(blocks, cls, x):
                        rhs = S.f.table[_index(k, (*b, *y))]
                        if rel.image(lhs) != rel.image(rhs):
                            return AxiomVerdict("mixed_congruence", False, {
                                "axiom": "mixed_congruence", "split": j,
                                "tuple": [*a, *x], "related_tuple": [*b, *y],
                                "lhs": list(members(lhs)), "rhs": list(members(rhs))})
    return AxiomVerdict("mixed_congruence", True)


def is_strongly_regular(S: Structure, rel: EquivRelation) -> bool:
    """Congruence whose related f-inputs all produce outputs in one common class.

    Given congruence, outputs of related tuples already meet the same classes,
    so it suffices that each single f entry stays inside one class.
    """
    if not is_congruence(S, rel):
        return False
    return all(rel.image(entry) & (rel.image(entry) - 1) == 0 for entry in S.f.table)


# -- quotients ------------------------------------------------------------------

def quotient(S: Structure, rel: EquivRelation, verify: bool = True) -> Structure:
    """Structure on the classes of ``rel``.

    f of a class tuple is the set of classes met by f of representatives; g is
    the class of g of representatives.  Each entry is computed from the least
    representatives and cross-checked against the greatest ones.
    """
    _check_size(S, rel)
    if verify and not is_congruence(S, rel):
        raise PreconditionError("quotient requires a congruence")
    blocks = [members(c) for c in rel.classes()]
    c = rel.count
    ftab, gtab = [], []
    for ct in all_tuples(c, S.m):
        lo = S.f[[blocks[i][0] for i in ct]]
        hi = S.f[[blocks[i][-1] for i in ct]]
        if rel.image(lo) != rel.image(hi):
            raise ConsistencyError(f"quotient f depends on representatives at {list(ct)}")
        ftab.append(rel.image(lo))
    for ct in all_tuples(c, S.n):
        lo = S.g[[blocks[i][0] for i in ct]]
        hi = S.g[[blocks[i][-1] for i in ct]]
        if rel.class_of[lo] != rel.class_of[hi]:
            raise ConsistencyError(f"quotient g depends on representatives at {list(ct)}")
        gtab.append(rel.class_of[lo])
    return Structure(HyperOpTable(S.m, c, tuple(ftab)), OpTable(S.n, c, tuple(gtab)))


def natural_map(S: Structure, rel: EquivRelation) -> Mapping:
    return Mapping(S, quotient(S, rel), rel.class_of)


def relation_quotient(sigma: EquivRelation, rho: EquivRelation, S: Structure) -> EquivRelation:
    """sigma/rho as a partition of the rho-classes (the elements of S/rho)."""
    _check_size(S, sigma)
    _check_size(S, rho)
    if not rho.refines(sigma):
        raise DomainError("rho must be contained in sigma")
    if not is_congruence(S, rho) or not is_congruence(S, sigma):
        raise PreconditionError("rho and sigma must both be congruences")
    reps = [members(c)[0] for c in rho.classes()]
    return EquivRelation(tuple(sigma.class_of[x] for x in reps))


def check_double_quotient_iso(S: Structure, sigma: EquivRelation, rho: EquivRelation) -> bool:
    """(S/rho)/(sigma/rho) is isomorphic to S/sigma."""
    outer = relation_quotient(sigma, rho, S)
    left = quotient(quotient(S, rho), outer)
    right = quotient(S, sigma)
    return bool(enumerate_homomorphisms(left, right, "iso"))


# -- enumeration ----------------------------------------------------------------

def bell(k: int) -> int:
    row = [1]
    for _ in range(k):
        nxt = [row[-1]]
        for v in row:
            nxt.append(nxt[-1] + v)
        row = nxt
    return row[0]


def set_partitions(k: int) -> Iterator[tuple[int, ...]]:
    """Restricted growth strings of length k, in lexicographic order."""
    labels = [0] * k

    def rec(pos, top):
        if pos == k:
            yield tuple(labels)
            return
        for c in range(top + 2):
            labels[pos] = c
            yield from rec(pos + 1, max(top, c))

    if k == 0:
        return
    yield from rec(1, 0)


def _congruent(args):
    S, labels = args
    return bool(is_congruence(S, EquivRelation(labels)))


def enumerate_congruences(S: Structure, cap: int = 115975, jobs: int = 1) -> list[EquivRelation]:
    """Every congruence on S, in lexicographic label order."""
    if bell(S.k) > cap:
        raise ResourceError(
            f"Bell({S.k}) = {bell(S.k)} partitions exceed cap {cap}")
    parts = list(set_partitions(S.k))
    flags = ordered_map(_congruent, [(S, p) for p in parts], jobs)
    return [EquivRelation(p) for p, ok in zip(parts, flags) if ok]
