"""Fuzzy subsets, fuzzy hyperideals and graded (fuzzy) hyperoperations.

Grades are :class:`fractions.Fraction` values in [0, 1]; every comparison is
exact.  A fuzzy hyperoperation is a graded output distribution: for each
input tuple, a grade for every possible output.  Its associated crisp
structure keeps the outputs of strictly positive grade.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

from .axioms import AxiomVerdict
from .core import HyperOpTable, OpTable, Structure, all_tuples, members
from .errors import DomainError, PreconditionError
from .ideals import is_hyperideal
from .morphisms import Mapping, is_homomorphism, is_inclusion_homomorphism

ZERO, ONE = Fraction(0), Fraction(1)


def grade(value) -> Fraction:
    """Parse a grade from a Fraction, int or ``"p/q"`` string and range-check it."""
    try:
        g = Fraction(value)
    except (TypeError, ValueError, ZeroDivisionError) as exc:
        raise DomainError(f"not a rational grade: {value!r}") from exc
    if not ZERO <= g <= ONE:
        raise DomainError(f"grade {g} outside [0, 1]")
    return g


def grade_str(g: Fraction) -> str:
    return f"{g.numerator}/{g.denominator}"


@dataclass(frozen=True)
class FuzzySubset:
    grades: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "grades", tuple(grade(g) for g in self.grades))

    @property
    def k(self) -> int:
        return len(self.grades)

    def __getitem__(self, x: int) -> Fraction:
        return self.grades[x]

    def distinct_grades(self) -> list[Fraction]:
        return sorted(set(self.grades))

    def to_json(self) -> list[str]:
        return [grade_str(g) for g in self.grades]

    @classmethod
    def from_json(cls, data) -> "FuzzySubset":
        if not isinstance(data, list):
            raise DomainError("a fuzzy subset is a JSON array of grades")
        return cls(tuple(data))


def level_subset(mu: FuzzySubset, t) -> int:
    """Mask of { x : mu(x) >= t }."""
    t = grade(t)
    out = 0
    for x, g in enumerate(mu.grades):
        if g >= t:
            out |= 1 << x
    return out


def two_valued_fuzzy(I: int, s, t, k: int) -> FuzzySubset:
    """Grade s on I and t elsewhere, with 0 <= t < s <= 1."""
    s, t = grade(s), grade(t)
    if not t < s:
        raise DomainError(f"need t < s, got s={s}, t={t}")
    if I == 0:
        raise DomainError("I must be non-empty")
    return FuzzySubset(tuple(s if I >> x & 1 else t for x in range(k)))


# -- fuzzy sub-structures ---------------------------------------------------------

def _check_k(S, mu):
    if mu.k != S.k:
        raise DomainError(f"fuzzy subset has {mu.k} grades, structure has {S.k} elements")


def _f_condition(S, mu):
    g = mu.grades
    for idx, t in enumerate(all_tuples(S.k, S.m)):
        low = min(g[x] for x in t)
        inf = min(g[z] for z in members(S.f.table[idx]))
        if not low <= inf:
            return {"condition": "f", "tuple": list(t), "lhs": grade_str(low),
                    "rhs": grade_str(inf)}
    return None


def is_fuzzy_sub_semihyperring(S: Structure, mu: FuzzySubset) -> AxiomVerdict:
    """min mu(x_i) <= inf mu(f(x)) and min mu(y_j) <= mu(g(y)) for all tuples."""
    _check_k(S, mu)
    name = "fuzzy_sub_semihyperring"
    bad = _f_condition(S, mu)
    if bad is None:
        gr = mu.grades
        for idx, t in enumerate(all_tuples(S.k, S.n)):
            low = min(gr[y] for y in t)
            out = gr[S.g.table[idx]]
            if not low <= out:
                bad = {"condition": "g", "tuple": list(t), "lhs": grade_str(low),
                       "rhs": grade_str(out)}
                break
    return AxiomVerdict(name, True) if bad is None else AxiomVerdict(name, False, {"axiom": name, **bad})


def _slot_conditions(S, mu, slots, name):
    bad = _f_condition(S, mu)
    if bad is None:
        gr = mu.grades
        for idx, t in enumerate(all_tuples(S.k, S.n)):
            out = gr[S.g.table[idx]]
            for i in slots:
                if not gr[t[i]] <= out:
                    bad = {"condition": f"g slot {i + 1}", "tuple": list(t),
                           "lhs": grade_str(gr[t[i]]), "rhs": grade_str(out)}
                    break
            if bad is not None:
                break
    return AxiomVerdict(name, True) if bad is None else AxiomVerdict(name, False, {"axiom": name, **bad})


def is_fuzzy_hyperideal(S: Structure, mu: FuzzySubset) -> AxiomVerdict:
    """The f inequality plus mu(x_i) <= mu(g(x_1..x_n)) for every slot i."""
    _check_k(S, mu)
    return _slot_conditions(S, mu, range(S.n), "fuzzy_hyperideal")


def is_fuzzy_left_hyperideal(S: Structure, mu: FuzzySubset) -> AxiomVerdict:
    """The f inequality plus absorption through the last g slot only.

    This is the graded counterpart of a left hyperideal, where the ideal
    element sits in the last argument of g.
    """
    _check_k(S, mu)
    return _slot_conditions(S, mu, [S.n - 1], "fuzzy_left_hyperideal")


def _levels_are_hyperideals(S, mu, thresholds, allow_empty):
    for t in thresholds:
        level = level_subset(mu, t)
        if level == 0:
            if allow_empty:
                continue
            return False
        if not is_hyperideal(S, level):
            return False
    return True


def check_level_theorem(S: Structure, mu: FuzzySubset) -> bool:
    """Fuzzy hyperideal iff every non-empty level subset is a hyperideal.

    Between consecutive grades the level subset does not change, so the
    distinct grades (plus 0) cover every threshold in [0, 1].
    """
    _check_k(S, mu)
    fuzzy = is_fuzzy_hyperideal(S, mu).holds
    thresholds = sorted({ZERO, *mu.grades})
    crisp = _levels_are_hyperideals(S, mu, thresholds, allow_empty=True)
    return fuzzy == crisp


def threshold_corollary(S: Structure, mu: FuzzySubset, upper_bound: str = "max") -> bool:
    """The three equivalent statements evaluate identically.

    ``upper_bound="max"`` takes t_0 as the largest grade of mu; ``"one"``
    takes t_0 = 1, under which every threshold above the largest grade gives
    an empty level subset.
    """
    _check_k(S, mu)
    if upper_bound == "max":
        t0 = max(mu.grades)
    elif upper_bound == "one":
        t0 = ONE
    else:
        raise ValueError(f"unknown upper bound reading {upper_bound!r}")
    first = is_fuzzy_hyperideal(S, mu).holds
    second = _levels_are_hyperideals(S, mu, sorted({ZERO, *mu.grades}), allow_empty=True)
    # Any t in (g_i, g_{i+1}] gives the level of g_{i+1}; t0 itself is included.
    grid = sorted({ZERO, t0, *(g for g in mu.grades if g <= t0)})
    third = _levels_are_hyperideals(S, mu, grid, allow_empty=False)
    return first == second == third


# -- graded hyperoperations -------------------------------------------------------

def _graded_table(k, arity, data, what):
    if len(data) != k**arity:
        raise DomainError(f"{what} needs {k**arity} tuples, got {len(data)}")
    out = []
    for idx, dist in enumerate(data):
        clean = {}
        for z, g in dict(dist).items():
            if not 0 <= z < k:
                raise DomainError(f"{what} output {z} out of range at flat index {idx}")
            g = grade(g)
            if g > 0:
                clean[z] = g
        out.append(clean)
    return tuple(out)


@dataclass(frozen=True, eq=False)
class FuzzyHyperStructure:
    """Graded f and g: ``mu_f[idx][z]`` is the grade of output z at flat index idx.

    Only positive grades are stored.  Every f tuple must have some positive
    output; g outputs are checked for single-valued support when the crisp
    structure is built.
    """

    k: int
    m: int
    n: int
    mu_f: tuple
    mu_g: tuple

    def __post_init__(self):
        if self.m < 2 or self.n < 2:
            raise DomainError("arities must be >= 2")
        object.__setattr__(self, "mu_f", _graded_table(self.k, self.m, self.mu_f, "mu_f"))
        object.__setattr__(self, "mu_g", _graded_table(self.k, self.n, self.mu_g, "mu_g"))
        for idx, dist in enumerate(self.mu_f):
            if not dist:
                raise DomainError(f"mu_f has empty support at flat index {idx}")

    def __eq__(self, other):
        return (isinstance(other, FuzzyHyperStructure)
                and (self.k, self.m, self.n, self.mu_f, self.mu_g)
                == (other.k, other.m, other.n, other.mu_f, other.mu_g))

    def f_grade(self, idx: int, z: int) -> Fraction:
        return self.mu_f[idx].get(z, ZERO)

    def g_grade(self, idx: int, z: int) -> Fraction:
        return self.mu_g[idx].get(z, ZERO)

    @classmethod
    def from_structure(cls, S: Structure, f_grade=ONE, g_grade=ONE) -> "FuzzyHyperStructure":
        """Constant positive grades on the support of a crisp structure."""
        return cls(S.k, S.m, S.n,
                   tuple({z: f_grade for z in members(e)} for e in S.f.table),
                   tuple({z: g_grade} for z in S.g.table))

    def to_json(self) -> dict:
        def records(table, arity):
            return [{"tuple": list(t), "out": z, "grade": grade_str(g)}
                    for t, dist in zip(all_tuples(self.k, arity), table)
                    for z, g in sorted(dist.items())]
        return {"k": self.k, "m": self.m, "n": self.n,
                "f": records(self.mu_f, self.m), "g": records(self.mu_g, self.n)}

    @classmethod
    def from_json(cls, data) -> "FuzzyHyperStructure":
        try:
            k, m, n = data["k"], data["m"], data["n"]
            mu_f = [{} for _ in range(k**m)]
            mu_g = [{} for _ in range(k**n)]
            for key, arity, table in (("f", m, mu_f), ("g", n, mu_g)):
                for rec in data[key]:
                    t = rec["tuple"]
                    if len(t) != arity or any(not 0 <= x < k for x in t):
                        raise DomainError(f"bad {key} tuple {t}")
                    idx = 0
                    for x in t:
                        idx = idx * k + x
                    table[idx][rec["out"]] = rec["grade"]
        except (KeyError, TypeError) as exc:
            raise DomainError(f"malformed fuzzy structure: {exc}") from exc
        return cls(k, m, n, tuple(mu_f), tuple(mu_g))


def associated_structure(F: FuzzyHyperStructure) -> Structure:
    """Crisp structure keeping the outputs of strictly positive grade."""
    ftab = []
    for dist in F.mu_f:
        mask = 0
        for z in dist:
            mask |= 1 << z
        ftab.append(mask)
    gtab = []
    for idx, dist in enumerate(F.mu_g):
        if len(dist) != 1:
            raise DomainError(
                f"mu_g support at flat index {idx} has {len(dist)} outputs, need exactly 1")
        gtab.append(next(iter(dist)))
    return Structure(HyperOpTable(F.m, F.k, tuple(ftab)), OpTable(F.n, F.k, tuple(gtab)))


Image = Union[Mapping, Sequence[int]]


def _image(phi: Image, src, tgt):
    image = tuple(phi.image if isinstance(phi, Mapping) else phi)
    if len(image) != src.k or any(not 0 <= y < tgt.k for y in image):
        raise DomainError("map does not fit the source and target universes")
    return image


def _index(k, tup):
    idx = 0
    for x in tup:
        idx = idx * k + x
    return idx


def is_fuzzy_homomorphism(Fsrc: FuzzyHyperStructure, Ftgt: FuzzyHyperStructure,
                          phi: Image) -> bool:
    """Grades never drop along phi.

    For every input tuple x and output z:
    mu_src(x, z) <= mu_tgt(phi(x), phi(z)), for f and for g.
    """
    if (Fsrc.m, Fsrc.n) != (Ftgt.m, Ftgt.n):
        raise DomainError("arity mismatch between fuzzy structures")
    image = _image(phi, Fsrc, Ftgt)
    for arity, src_tab, tgt_tab in ((Fsrc.m, Fsrc.mu_f, Ftgt.mu_f),
                                    (Fsrc.n, Fsrc.mu_g, Ftgt.mu_g)):
        for t, dist in zip(all_tuples(Fsrc.k, arity), src_tab):
            target = tgt_tab[_index(Ftgt.k, [image[x] for x in t])]
            for z, g in dist.items():
                if not g <= target.get(image[z], ZERO):
                    return False
    return True


def check_fuzzy_to_crisp_hom(Fsrc: FuzzyHyperStructure, Ftgt: FuzzyHyperStructure,
                             phi: Image, strict: bool = False) -> bool:
    """A fuzzy homomorphism maps the associated crisp structures homomorphically.

    Grade monotonicity only yields support inclusion, so the default check is
    :func:`is_inclusion_homomorphism`; ``strict=True`` asks for the full
    set-equality homomorphism, which need not hold.
    """
    if not is_fuzzy_homomorphism(Fsrc, Ftgt, phi):
        raise PreconditionError("map is not a fuzzy homomorphism")
    src, tgt = associated_structure(Fsrc), associated_structure(Ftgt)
    mapping = Mapping(src, tgt, _image(phi, Fsrc, Ftgt))
    return is_homomorphism(mapping) if strict else is_inclusion_homomorphism(mapping)
