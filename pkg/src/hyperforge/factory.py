"""Built-in constructions, seeded random tables, and small-model search."""

from __future__ import annotations

import itertools
from fractions import Fraction
from math import prod
from typing import Iterable

from . import axioms
from .core import HyperOpTable, OpTable, Structure, all_tuples, full_mask, mask_of, members
from .errors import DomainError, ResourceError
from .rng import SplitMix64


def b_construction(k: int, n: int, modulus_g: bool = True) -> Structure:
    """f(x, y) = {x, y} and g = n-ary product on {0, ..., k-1}.

    With ``modulus_g`` the product is taken mod k; otherwise it saturates at
    k - 1 (the integers truncated to an initial segment).
    """
    if k < 1 or n < 2:
        raise DomainError("need k >= 1 and n >= 2")
    if modulus_g:
        g = lambda *xs: prod(xs) % k
    else:
        g = lambda *xs: min(prod(xs), k - 1)
    return Structure.from_functions(k, 2, n, lambda x, y: (x, y), g)


def semiring_lift(add_table: OpTable, mul_table: OpTable) -> Structure:
    """Lift a binary semiring: f(x, y) = {x, y}, g = the multiplication."""
    if add_table.arity != 2 or mul_table.arity != 2:
        raise DomainError("semiring tables must be binary")
    if add_table.k != mul_table.k:
        raise DomainError("addition and multiplication disagree on k")
    k = mul_table.k
    f = HyperOpTable(2, k, tuple(mask_of((x, y)) for x, y in all_tuples(k, 2)))
    return Structure(f, mul_table)


def fibered(S: Structure, fiber: int = 2) -> Structure:
    """Product of S with Z_fiber, element p*fiber + q standing for (p, q).

    f returns whole fibers over the base f and g adds the fiber coordinates,
    so projection onto S is a congruence; it is strongly regular exactly when
    the base f is single-valued.  Semihyperring axioms carry over from S.
    """
    if fiber < 1 or S.k * fiber > 64:
        raise DomainError("need fiber >= 1 and k * fiber <= 64")
    block = full_mask(fiber)

    def f(*xs):
        out = 0
        for p in members(S.f[[x // fiber for x in xs]]):
            out |= block << (p * fiber)
        return members(out)

    def g(*xs):
        return S.g[[x // fiber for x in xs]] * fiber + sum(x % fiber for x in xs) % fiber
    return Structure.from_functions(S.k * fiber, S.m, S.n, f, g)


def binary_table(k: int, op) -> OpTable:
    return OpTable(2, k, tuple(op(x, y) for x, y in all_tuples(k, 2)))


def random_structure(seed: int, k: int, m: int, n: int,
                     density: Fraction = Fraction(1, 2)) -> Structure:
    """Deterministic random tables from a SplitMix64 stream.

    The f and g tables draw from two child streams split off ``seed`` in that
    order.  Each f entry includes every element independently with
    probability ``density``; an entry that comes out empty is replaced by a
    single uniformly drawn element.
    """
    try:
        density = Fraction(density)
    except (TypeError, ValueError, ZeroDivisionError) as exc:
        raise DomainError(f"density is not a rational number: {density!r}") from exc
    if not 0 < density <= 1:
        raise DomainError(f"density must lie in (0, 1], got {density}")
    root = SplitMix64(seed)
    frng, grng = root.split(), root.split()
    ftab = []
    for _ in range(k**m):
        entry = 0
        for z in range(k):
            if frng.bernoulli(density):
                entry |= 1 << z
        if entry == 0:
            entry = 1 << frng.below(k)
        ftab.append(entry)
    gtab = tuple(grng.below(k) for _ in range(k**n))
    return Structure(HyperOpTable(m, k, tuple(ftab)), OpTable(n, k, gtab))


# -- model search ---------------------------------------------------------------

_F_ONLY = {
    "f-assoc": axioms.check_m_ary_semihypergroup,
    "idempotent": lambda S: axioms.check_additively_idempotent(S),
}
_G_ONLY = {
    "g-assoc": axioms.check_n_ary_semigroup,
}
_JOINT = {
    "dist": axioms.check_distributive,
    "weak-dist": axioms.check_weak_distributive,
    "zero-sum-free": lambda S: axioms.check_zero_sum_free(S),
}
_ALIASES = {
    "assoc": ["f-assoc", "g-assoc"],
    "semihyperring": ["f-assoc", "g-assoc", "dist"],
    "weak-semihyperring": ["f-assoc", "g-assoc", "weak-dist"],
}
AXIOM_FLAGS = sorted([*_F_ONLY, *_G_ONLY, *_JOINT, *_ALIASES])


def parse_flags(flags: Iterable[str]) -> list[tuple[str, bool]]:
    """Expand flag names into (axiom, required truth) pairs.

    A leading ``!`` or ``no-`` negates a flag; aliases expand only positively.
    """
    out = []
    for raw in flags:
        raw = raw.strip()
        if not raw:
            continue
        want = True
        if raw.startswith("!"):
            want, raw = False, raw[1:]
        elif raw.startswith("no-"):
            want, raw = False, raw[3:]
        if raw in _ALIASES:
            if not want:
                raise DomainError(f"alias {raw!r} cannot be negated")
            out.extend((name, True) for name in _ALIASES[raw])
        elif raw in _F_ONLY or raw in _G_ONLY or raw in _JOINT:
            out.append((raw, want))
        else:
            raise DomainError(f"unknown axiom flag {raw!r}; known: {', '.join(AXIOM_FLAGS)}")
    return out


def _passes(S, checks):
    return all(bool(fn(S)) == want for fn, want in checks)


def structure_key(S: Structure) -> tuple:
    return (S.f.table, S.g.table)


def canonical_form(S: Structure) -> Structure:
    """Lexicographically least relabeling of ``S`` (by f table, then g table)."""
    best = S
    for perm in itertools.permutations(range(S.k)):
        T = S.relabel(perm)
        if structure_key(T) < structure_key(best):
            best = T
    return best


def search_models(k: int, m: int, n: int, flags: Iterable[str] = ("semihyperring",),
                  cap: int = 10**6, canonical: bool = True) -> list[Structure]:
    """Every (f, g) pair over k elements passing the requested axiom flags.

    f tables and g tables are filtered separately by the flags that involve
    only one of them before the joint flags are tried on the product.  With
    ``canonical`` only lexicographically least representatives of each
    isomorphism class are kept.
    """
    wanted = parse_flags(flags)
    space = (2**k - 1) ** (k**m) * k ** (k**n)
    if space > cap:
        raise ResourceError(
            f"search space of {space} table pairs exceeds cap {cap}; "
            f"lower k/m/n or raise the cap")
    f_checks = [(_F_ONLY[a], w) for a, w in wanted if a in _F_ONLY]
    g_checks = [(_G_ONLY[a], w) for a, w in wanted if a in _G_ONLY]
    joint = [(_JOINT[a], w) for a, w in wanted if a in _JOINT]

    # Probe partners let f-only and g-only checks run on a valid Structure.
    probe_g = OpTable(n, k, (0,) * k**n)
    probe_f = HyperOpTable(m, k, (full_mask(k),) * k**m)
    fs = []
    for ftab in itertools.product(range(1, 2**k), repeat=k**m):
        f = HyperOpTable(m, k, ftab)
        if _passes(Structure(f, probe_g), f_checks):
            fs.append(f)
    gs = []
    for gtab in itertools.product(range(k), repeat=k**n):
        g = OpTable(n, k, gtab)
        if _passes(Structure(probe_f, g), g_checks):
            gs.append(g)

    out = []
    for f in fs:
        for g in gs:
            S = Structure(f, g)
            if not _passes(S, joint):
                continue
            if canonical and structure_key(canonical_form(S)) != structure_key(S):
                continue
            out.append(S)
    return out


# -- corpus -----------------------------------------------------------------------

def corpus(max_k: int = 4, random_count: int = 12, seed: int = 2024) -> list[tuple[str, Structure]]:
    """Named structures used by property sweeps and the theorem suite.

    The non-random members are all verified (m,n)-semihyperrings.
    """
    items = []
    for k in range(1, max_k + 1):
        for n in (2, 3):
            items.append((f"b_mod_k{k}_n{n}", b_construction(k, n)))
        if k >= 3:
            items.append((f"b_sat_k{k}_n2", b_construction(k, 2, modulus_g=False)))
    items.append(("lift_bool", semiring_lift(binary_table(2, lambda x, y: x | y),
                                             binary_table(2, lambda x, y: x & y))))
    for k in range(2, max_k + 1):
        items.append((f"lift_z{k}", semiring_lift(binary_table(k, lambda x, y: (x + y) % k),
                                                  binary_table(k, lambda x, y: x * y % k))))
    for k in range(2, max_k + 1):
        for n in (2, 3):
            items.append((f"tupleset_k{k}_m3_n{n}", Structure.from_functions(
                k, 3, n, lambda *xs: xs, lambda *xs: prod(xs) % k)))
    if max_k >= 4:
        for m, n in ((2, 2), (2, 3), (3, 2)):
            crisp_or = Structure.from_functions(
                2, m, n, lambda *xs: (max(xs),), lambda *xs: min(xs))
            items.append((f"fiber_bool_m{m}_n{n}", fibered(crisp_or)))
        items.append(("fiber_b_mod_k2_n2", fibered(b_construction(2, 2))))
    if max_k >= 2:
        for m, n in ((2, 2), (3, 2), (2, 3)):
            for idx, S in enumerate(search_models(2, m, n, ["semihyperring"])):
                items.append((f"model_k2_m{m}_n{n}_{idx}", S))
    rng = SplitMix64(seed)
    for idx in range(random_count):
        k = 2 + rng.below(max_k - 1) if max_k >= 2 else 1
        m, n = 2 + rng.below(2), 2 + rng.below(2)
        items.append((f"random_{idx}", random_structure(rng.next_u64(), k, m, n)))
    return items


def verified_corpus(max_k: int = 4) -> list[tuple[str, Structure]]:
    return [(name, S) for name, S in corpus(max_k, random_count=0)
            if axioms.check_mn_semihyperring(S)]
