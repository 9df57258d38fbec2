"""Sub-semihyperrings and the hyperideal taxonomy.

Every hyperideal kind presupposes that the candidate is closed under f (an
m-ary sub-semihypergroup).  :func:`ideal_report` keeps that closure result
separate from the absorption results so callers can tell "not a candidate"
from "candidate that does not absorb".
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import Structure, all_tuples, is_subset, members
from .errors import EmptySubsetError, ResourceError
from .parallel import ordered_map

KINDS = ("sub", "left", "right", "two", "weak")


@dataclass(frozen=True)
class IdealReport:
    subset: int
    f_closed: bool
    sub_semihyperring: bool
    left: bool
    right: bool
    two_sided: bool
    weak_left: bool

    def has(self, kind: str) -> bool:
        return {"sub": self.sub_semihyperring, "left": self.left, "right": self.right,
                "two": self.two_sided, "weak": self.weak_left}[kind]

    def to_json(self) -> dict:
        return {
            "subset": list(members(self.subset)),
            "kinds": {"sub_semihyperring": self.sub_semihyperring, "left": self.left,
                      "right": self.right, "two_sided": self.two_sided,
                      "weak_left": self.weak_left},
        }


def _require(subset):
    if subset == 0:
        raise EmptySubsetError("hyperideal candidates must be non-empty")


def _g_index(S, tup):
    idx = 0
    for x in tup:
        idx = idx * S.k + x
    return idx


def is_f_closed(S: Structure, R: int) -> bool:
    """f(R, ..., R) is contained in R."""
    _require(R)
    k, table = S.k, S.f.table
    elems = members(R)
    for t in all_tuples(len(elems), S.m):
        idx = 0
        for j in t:
            idx = idx * k + elems[j]
        if table[idx] & ~R:
            return False
    return True


def _g_closed(S, R):
    elems = members(R)
    table = S.g.table
    for t in all_tuples(len(elems), S.n):
        if not R >> table[_g_index(S, [elems[j] for j in t])] & 1:
            return False
    return True


def is_sub_semihyperring(S: Structure, R: int) -> bool:
    _require(R)
    return is_f_closed(S, R) and _g_closed(S, R)


def _absorbs(S, I, last):
    table = S.g.table
    for i in members(I):
        for a in all_tuples(S.k, S.n - 1):
            t = (*a, i) if last else (i, *a)
            if not I >> table[_g_index(S, t)] & 1:
                return False
    return True


def is_left_hyperideal(S: Structure, I: int) -> bool:
    """f-closed and g(a_1, ..., a_{n-1}, i) in I for all a in H, i in I."""
    _require(I)
    return is_f_closed(S, I) and _absorbs(S, I, last=True)


def is_right_hyperideal(S: Structure, I: int) -> bool:
    """f-closed and g(i, a_1, ..., a_{n-1}) in I for all a in H, i in I."""
    _require(I)
    return is_f_closed(S, I) and _absorbs(S, I, last=False)


def is_hyperideal(S: Structure, I: int) -> bool:
    _require(I)
    return is_f_closed(S, I) and _absorbs(S, I, True) and _absorbs(S, I, False)


def _weak_condition(S, I):
    for i in members(I):
        for x in all_tuples(S.k, S.m - 1):
            triggered = (is_subset(S.f[(i, *x)], I) or is_subset(S.f[(*x, i)], I))
            if triggered and not all(I >> v & 1 for v in x):
                return False
    return True


def is_weak_left_hyperideal(S: Structure, I: int) -> bool:
    """A left hyperideal where f(i, x..) or f(x.., i) inside I forces every x into I."""
    return is_left_hyperideal(S, I) and _weak_condition(S, I)


def ideal_report(S: Structure, subset: int) -> IdealReport:
    _require(subset)
    closed = is_f_closed(S, subset)
    if not closed:
        return IdealReport(subset, False, False, False, False, False, False)
    left = _absorbs(S, subset, True)
    right = _absorbs(S, subset, False)
    return IdealReport(
        subset, True,
        sub_semihyperring=_g_closed(S, subset),
        left=left, right=right, two_sided=left and right,
        weak_left=left and _weak_condition(S, subset))


_PREDICATES = {
    "sub": is_sub_semihyperring,
    "left": is_left_hyperideal,
    "right": is_right_hyperideal,
    "two": is_hyperideal,
    "weak": is_weak_left_hyperideal,
}


def _scan(args):
    S, kind, lo, hi = args
    pred = _PREDICATES[kind]
    return [ideal_report(S, mask) for mask in range(lo, hi) if pred(S, mask)]


def enumerate_hyperideals(S: Structure, kind: str = "two", cap_k: int = 24,
                          jobs: int = 1) -> list[IdealReport]:
    """Every non-empty subset of the requested kind, ascending by mask."""
    if kind not in _PREDICATES:
        raise ValueError(f"unknown kind {kind!r}; expected one of {KINDS}")
    if S.k > cap_k:
        raise ResourceError(
            f"k={S.k} means 2^{S.k} subsets; above the cap of k={cap_k} "
            f"(raise cap_k if you really want this sweep)")
    total = 1 << S.k
    chunk = max(1, total // (8 * max(jobs, 1)))
    ranges = [(S, kind, lo, min(lo + chunk, total)) for lo in range(1, total, chunk)]
    return [r for part in ordered_map(_scan, ranges, jobs) for r in part]
