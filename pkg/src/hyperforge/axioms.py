"""Axiom checkers for (m,n)-semihyperrings.

Every checker sweeps all relevant tuples in flat-index order and stops at the
first violation unless ``all_witnesses=True``.  A failing verdict carries a
witness dict with the decoded tuple(s) and both sides of the identity, which
tests re-evaluate independently.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .core import HyperOpTable, OpTable, Structure, all_tuples, members
from .errors import HyperforgeError, PreconditionError


@dataclass(frozen=True)
class AxiomVerdict:
    axiom: str
    holds: bool
    witness: Optional[dict] = None
    note: Optional[str] = None
    all_witnesses: tuple = field(default=(), compare=False)

    def __post_init__(self):
        if self.holds != (self.witness is None):
            raise ValueError("verdict holds iff witness is absent")

    def __bool__(self):
        return self.holds

    def to_json(self) -> dict:
        out = {"axiom": self.axiom, "holds": self.holds}
        if self.witness is not None:
            out["witness"] = self.witness
        if self.note is not None:
            out["note"] = self.note
        return out


class AmbiguousZeroError(HyperforgeError):
    """More than one element satisfies the zero conditions."""


def _verdict(axiom, witnesses, note=None):
    if not witnesses:
        return AxiomVerdict(axiom, True, note=note)
    return AxiomVerdict(axiom, False, witnesses[0], note, tuple(witnesses))


def _cached(name):
    def wrap(fn):
        def checker(S: Structure, all_witnesses: bool = False):
            if all_witnesses:
                return fn(S, True)
            if name not in S.cache:
                S.cache[name] = fn(S, False)
            return S.cache[name]
        checker.__name__ = fn.__name__
        checker.__doc__ = fn.__doc__
        checker.__wrapped__ = fn
        return checker
    return wrap


def _strides(k, length):
    return [k ** (length - 1 - p) for p in range(length)]


# -- associativity ------------------------------------------------------------

@_cached("m_ary_semihypergroup")
def check_m_ary_semihypergroup(S: Structure, all_witnesses: bool = False) -> AxiomVerdict:
    """Nested associativity of f for every insertion position.

    Each (2m-1)-tuple is evaluated with the inner f at every position and all
    results are compared with the first one, which covers every pair (i, j).
    """
    k, m, table = S.k, S.m, S.f.table
    stride = _strides(k, m)
    witnesses = []
    for x in all_tuples(k, 2 * m - 1):
        results = []
        for p in range(m):
            inner_idx = 0
            for v in x[p:p + m]:
                inner_idx = inner_idx * k + v
            inner = table[inner_idx]
            base = 0
            for q, v in enumerate(x[:p]):
                base += v * stride[q]
            for q, v in enumerate(x[p + m:]):
                base += v * stride[p + 1 + q]
            out = 0
            for u in members(inner):
                out |= table[base + u * stride[p]]
            results.append(out)
        for p in range(1, m):
            if results[p] != results[0]:
                witnesses.append({
                    "axiom": "m_ary_semihypergroup", "i": 1, "j": p + 1,
                    "tuple": list(x), "lhs": list(members(results[0])),
                    "rhs": list(members(results[p]))})
                if not all_witnesses:
                    return _verdict("m_ary_semihypergroup", witnesses)
                break
    return _verdict("m_ary_semihypergroup", witnesses)


@_cached("n_ary_semigroup")
def check_n_ary_semigroup(S: Structure, all_witnesses: bool = False) -> AxiomVerdict:
    """Nested associativity of g for every insertion position."""
    k, n, table = S.k, S.n, S.g.table
    stride = _strides(k, n)
    witnesses = []
    for x in all_tuples(k, 2 * n - 1):
        first = None
        for p in range(n):
            inner_idx = 0
            for v in x[p:p + n]:
                inner_idx = inner_idx * k + v
            idx = table[inner_idx] * stride[p]
            for q, v in enumerate(x[:p]):
                idx += v * stride[q]
            for q, v in enumerate(x[p + n:]):
                idx += v * stride[p + 1 + q]
            value = table[idx]
            if first is None:
                first = value
            elif value != first:
                witnesses.append({
                    "axiom": "n_ary_semigroup", "i": 1, "j": p + 1,
                    "tuple": list(x), "lhs": first, "rhs": value})
                if not all_witnesses:
                    return _verdict("n_ary_semigroup", witnesses)
                break
    return _verdict("n_ary_semigroup", witnesses)


# -- distributivity -----------------------------------------------------------

def _distributive_sweep(S, name, weak, all_witnesses):
    k, m, n = S.k, S.m, S.n
    ftab, gtab = S.f.table, S.g.table
    gstride = _strides(k, n)
    witnesses = []
    m_tuples = list(all_tuples(k, m))
    for i in range(n):
        for outer in all_tuples(k, n - 1):
            base = 0
            for q, v in enumerate(outer):
                base += v * gstride[q if q < i else q + 1]
            row = [gtab[base + u * gstride[i]] for u in range(k)]
            for a_idx, a in enumerate(m_tuples):
                lhs = 0
                for u in members(ftab[a_idx]):
                    lhs |= 1 << row[u]
                rhs_idx = 0
                for v in a:
                    rhs_idx = rhs_idx * k + row[v]
                rhs = ftab[rhs_idx]
                ok = (lhs & ~rhs == 0) if weak else lhs == rhs
                if not ok:
                    witnesses.append({
                        "axiom": name, "slot": i + 1, "a": list(a),
                        "outer": list(outer), "lhs": list(members(lhs)),
                        "rhs": list(members(rhs))})
                    if not all_witnesses:
                        return _verdict(name, witnesses)
    return _verdict(name, witnesses)


@_cached("distributive")
def check_distributive(S: Structure, all_witnesses: bool = False) -> AxiomVerdict:
    """g(x.., f(a_1..a_m), ..x) equals f(g(x.., a_1, ..x), ..., g(x.., a_m, ..x)).

    The witness names the 1-based ``slot`` of g receiving f, the m-tuple ``a``
    and the remaining n-1 ``outer`` arguments in order.
    """
    return _distributive_sweep(S, "distributive", False, all_witnesses)


@_cached("weak_distributive")
def check_weak_distributive(S: Structure, all_witnesses: bool = False) -> AxiomVerdict:
    """As :func:`check_distributive` with equality relaxed to inclusion."""
    return _distributive_sweep(S, "weak_distributive", True, all_witnesses)


@_cached("mn_semihyperring")
def check_mn_semihyperring(S: Structure, all_witnesses: bool = False) -> AxiomVerdict:
    for check in (check_m_ary_semihypergroup, check_n_ary_semigroup, check_distributive):
        verdict = check(S, all_witnesses)
        if not verdict.holds:
            return AxiomVerdict("mn_semihyperring", False, verdict.witness,
                                f"fails {verdict.axiom}", verdict.all_witnesses)
    return AxiomVerdict("mn_semihyperring", True)


# -- distinguished elements ---------------------------------------------------

def _with_slot(fill, arity, pos, x):
    t = [fill] * arity
    t[pos] = x
    return t


def find_hyperadditive_identities(S: Structure) -> int:
    """Mask of every e with x in f(e,..,e,x,e,..,e) for all x and all slots."""
    found = 0
    for e in range(S.k):
        if all(S.f[_with_slot(e, S.m, pos, x)] >> x & 1
               for pos in range(S.m) for x in range(S.k)):
            found |= 1 << e
    return found


def find_multiplicative_identities(S: Structure) -> int:
    found = 0
    for e in range(S.k):
        if all(S.g[_with_slot(e, S.n, pos, y)] == y
               for pos in range(S.n) for y in range(S.k)):
            found |= 1 << e
    return found


def _zero_candidates(S):
    out = []
    for z in range(S.k):
        f_ok = all(S.f[[z] * (S.m - 1) + [x]] == 1 << x and
                   S.f[[x] + [z] * (S.m - 1)] == 1 << x for x in range(S.k))
        g_ok = f_ok and all(S.g[[z] * (S.n - 1) + [y]] == z and
                            S.g[[y] + [z] * (S.n - 1)] == z for y in range(S.k))
        if g_ok:
            out.append(z)
    return out


def find_zero(S: Structure) -> Optional[int]:
    """The zero element, or None.

    The f-condition f(0,..,0,x) = f(x,0,..,0) = x is read as equality with the
    singleton {x}.  Raises :class:`AmbiguousZeroError` if two elements qualify.
    """
    candidates = _zero_candidates(S)
    if len(candidates) > 1:
        raise AmbiguousZeroError(f"elements {candidates} all satisfy the zero conditions")
    return candidates[0] if candidates else None


def check_zero_sum_free(S: Structure, zero: Optional[int] = None) -> AxiomVerdict:
    """0 in f(x_1..x_m) only when every x_i is 0.

    ``zero`` designates the element to use; by default it is found with
    :func:`find_zero`, and the check holds vacuously (with a note) without one.
    """
    if zero is None:
        try:
            zero = find_zero(S)
        except AmbiguousZeroError as exc:
            return AxiomVerdict("zero_sum_free", True, note=f"vacuous: {exc}")
        if zero is None:
            return AxiomVerdict("zero_sum_free", True, note="vacuous: no zero element")
    for idx, t in enumerate(all_tuples(S.k, S.m)):
        if S.f.table[idx] >> zero & 1 and any(x != zero for x in t):
            return AxiomVerdict("zero_sum_free", False, {
                "axiom": "zero_sum_free", "zero": zero, "tuple": list(t),
                "lhs": list(members(S.f.table[idx]))})
    return AxiomVerdict("zero_sum_free", True)


def check_additively_idempotent(S: Structure, strict: bool = False) -> AxiomVerdict:
    """x in f(x,..,x) for every x; with ``strict``, f(x,..,x) = {x}."""
    name = "additively_idempotent_strict" if strict else "additively_idempotent"
    for x in range(S.k):
        out = S.f[[x] * S.m]
        ok = out == 1 << x if strict else bool(out >> x & 1)
        if not ok:
            return AxiomVerdict(name, False, {
                "axiom": name, "tuple": [x] * S.m, "lhs": list(members(out)),
                "rhs": [x]})
    return AxiomVerdict(name, True)


def derived_binary_ops(S: Structure, e: int, e_mul: int) -> tuple[HyperOpTable, OpTable]:
    """Binary tables <x,y> = f(x,e,..,e,y) and x*y = g(x,e',..,e',y)."""
    if not find_hyperadditive_identities(S) >> e & 1:
        raise PreconditionError(f"{e} is not a hyperadditive identity")
    if not find_multiplicative_identities(S) >> e_mul & 1:
        raise PreconditionError(f"{e_mul} is not a multiplicative identity")
    k = S.k
    add = tuple(S.f[[x] + [e] * (S.m - 2) + [y]] for x, y in all_tuples(k, 2))
    mul = tuple(S.g[[x] + [e_mul] * (S.n - 2) + [y]] for x, y in all_tuples(k, 2))
    return HyperOpTable(2, k, add), OpTable(2, k, mul)


AXIOM_SUITE = {
    "m_ary_semihypergroup": check_m_ary_semihypergroup,
    "n_ary_semigroup": check_n_ary_semigroup,
    "distributive": check_distributive,
    "weak_distributive": check_weak_distributive,
    "mn_semihyperring": check_mn_semihyperring,
    "zero_sum_free": lambda S, all_witnesses=False: check_zero_sum_free(S),
    "additively_idempotent":
        lambda S, all_witnesses=False: check_additively_idempotent(S),
}


def run_suite(S: Structure, names=None, all_witnesses: bool = False) -> list[AxiomVerdict]:
    names = list(AXIOM_SUITE) if names is None else names
    return [AXIOM_SUITE[name](S, all_witnesses=all_witnesses) for name in names]
