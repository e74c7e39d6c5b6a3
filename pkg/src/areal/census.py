"""The counting engine: equivalence-class censuses, bad-tuple counts,
nu histograms, f(g) moments, and the exact checkers behind each lemma.

All counts are exact integers (Fractions where a mean is involved); no
floating point enters any counting path.  Everything that touches a tuple
stream takes an explicit visit budget and raises BudgetExceeded rather
than silently truncating.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator

from .configs import pair_indices
from .linalg import Vec2, apply_mat, enumerate_sl2, perp_dot, sl2_order
from .rings import ModPrimePower, RingSpec

DEFAULT_BUDGET = 10 ** 9


class BudgetExceeded(Exception):
    def __init__(self, required: int, budget: int):
        super().__init__(
            f"enumeration needs {required} tuple visits but the budget is {budget}"
        )
        self.required = required
        self.budget = budget


class NotTransitive(Exception):
    """The supplied action is not transitive; carries a counterexample pair."""

    def __init__(self, pair, message="action is not transitive"):
        super().__init__(f"{message}: counterexample pair {pair}")
        self.pair = pair


def _check_budget(required: int, budget: int) -> None:
    if required > budget:
        raise BudgetExceeded(required, budget)


class PointSet:
    """A deduplicated, canonically sorted subset of the ring's plane."""

    def __init__(self, spec: RingSpec, points):
        self.spec = spec
        idx = spec.index
        self.points = tuple(sorted(set(points), key=lambda v: (idx(v[0]), idx(v[1]))))
        self.members = frozenset(self.points)

    def __len__(self):
        return len(self.points)

    def __contains__(self, v):
        return v in self.members

    def __iter__(self):
        return iter(self.points)

    def __eq__(self, other):
        return (
            isinstance(other, PointSet)
            and self.spec == other.spec
            and self.points == other.points
        )

    def to_csv(self) -> str:
        """Rows x1,x2 of canonical representatives (Galois field
        coefficients joined with ';')."""
        def rep(a):
            j = self.spec.element_to_json(a)
            return ";".join(str(c) for c in j) if isinstance(j, list) else str(j)

        lines = ["x1,x2"]
        lines.extend(f"{rep(x[0])},{rep(x[1])}" for x in self.points)
        return "\n".join(lines) + "\n"


def area_index_table(E: PointSet) -> list[list[int]]:
    """table[i][j] = canonical index of the area of (point i, point j)."""
    spec = E.spec
    pts = E.points
    return [[spec.index(perp_dot(spec, x, y)) for y in pts] for x in pts]


def valuation_table(E: PointSet) -> list[list[int]]:
    spec = E.spec
    pts = E.points
    return [
        [spec.valuation(perp_dot(spec, x, y)) for y in pts] for x in pts
    ]


def _key_width(spec: RingSpec) -> int:
    return max(1, ((spec.size() - 1).bit_length() + 7) // 8)


def signature_counts(
    E: PointSet, k: int, budget: int = DEFAULT_BUDGET, start: int = 0, stop=None
) -> Counter:
    """Counter mapping signature keys (packed area indexes, i < j order)
    to the number of tuples of E^{k+1} realizing them.

    The tuple stream is ordered lexicographically by point index; start
    and stop select a flat index range, so range partitions merge (by
    counter addition) to exactly the serial result."""
    n = len(E)
    total = n ** (k + 1)
    if stop is None:
        stop = total
    _check_budget(stop - start, budget)
    T = area_index_table(E)
    width = _key_width(E.spec)
    counts: Counter = Counter()
    if k == 2 and start == 0 and stop == total and width == 1:
        # hot path: census over triples dominates every verification run
        rng = range(n)
        for i in rng:
            Ti = T[i]
            for j in rng:
                a = Ti[j]
                Tj = T[j]
                for l in rng:
                    counts[bytes((a, Ti[l], Tj[l]))] += 1
        return counts
    pairs = pair_indices(k)
    stream = itertools.islice(itertools.product(range(n), repeat=k + 1), start, stop)
    if width == 1:
        for t in stream:
            counts[bytes(T[t[i]][t[j]] for i, j in pairs)] += 1
    else:
        for t in stream:
            counts[b"".join(T[t[i]][t[j]].to_bytes(width, "big") for i, j in pairs)] += 1
    return counts


def key_badness(spec: RingSpec, key: bytes) -> int:
    """Badness level of every tuple whose signature has this key."""
    width = _key_width(spec)
    m = spec.max_level
    for off in range(0, len(key), width):
        idx = int.from_bytes(key[off : off + width], "big")
        v = spec.valuation(spec.element(idx))
        if v < m:
            m = v
            if m == 0:
                return 0
    return m


@dataclass
class CensusReport:
    spec: RingSpec
    k: int
    set_size: int
    total_tuples: int
    tuples_by_level: dict[int, int]
    classes_by_level: dict[int, int]
    total_classes: int
    class_sizes: dict[bytes, int] = field(repr=False, default_factory=dict)
    class_levels: dict[bytes, int] = field(repr=False, default_factory=dict)

    def to_json(self) -> dict:
        return {
            "ring": self.spec.to_json(),
            "k": self.k,
            "set_size": str(self.set_size),
            "total_tuples": str(self.total_tuples),
            "tuples_by_level": {str(m): str(c) for m, c in sorted(self.tuples_by_level.items())},
            "classes_by_level": {str(m): str(c) for m, c in sorted(self.classes_by_level.items())},
            "total_classes": str(self.total_classes),
        }


def count_classes(E: PointSet, k: int, budget: int = DEFAULT_BUDGET) -> CensusReport:
    """Exact census of distinct area signatures over E^{k+1}, split by
    badness level (a class invariant)."""
    counts = signature_counts(E, k, budget)
    levels = {key: key_badness(E.spec, key) for key in counts}
    tuples_by_level: dict[int, int] = {}
    classes_by_level: dict[int, int] = {}
    for key, c in counts.items():
        m = levels[key]
        tuples_by_level[m] = tuples_by_level.get(m, 0) + c
        classes_by_level[m] = classes_by_level.get(m, 0) + 1
    return CensusReport(
        spec=E.spec,
        k=k,
        set_size=len(E),
        total_tuples=len(E) ** (k + 1),
        tuples_by_level=tuples_by_level,
        classes_by_level=classes_by_level,
        total_classes=len(counts),
        class_sizes=dict(counts),
        class_levels=levels,
    )


def count_bad_tuples(E: PointSet, k: int, budget: int = DEFAULT_BUDGET) -> dict[int, int]:
    """Tuple counts per badness level, via the precomputed valuation
    table (fast route; see count_bad_tuples_naive for the oracle)."""
    n = len(E)
    _check_budget(n ** (k + 1), budget)
    V = valuation_table(E)
    pairs = pair_indices(k)
    counts: dict[int, int] = {}
    for t in itertools.product(range(n), repeat=k + 1):
        m = min(V[t[i]][t[j]] for i, j in pairs)
        counts[m] = counts.get(m, 0) + 1
    return counts


def count_bad_tuples_naive(E: PointSet, k: int, budget: int = DEFAULT_BUDGET) -> dict[int, int]:
    """Independent oracle: recompute every pairwise area from scratch,
    no tables, no early exits shared with the fast route."""
    spec = E.spec
    n = len(E)
    _check_budget(n ** (k + 1), budget)
    pairs = pair_indices(k)
    counts: dict[int, int] = {}
    for t in itertools.product(E.points, repeat=k + 1):
        m = min(spec.valuation(perp_dot(spec, t[i], t[j])) for i, j in pairs)
        m = min(m, spec.max_level)
        counts[m] = counts.get(m, 0) + 1
    return counts


@dataclass
class NuHistogram:
    spec: RingSpec
    counts: dict  # ring element -> number of ordered pairs with that area

    def total(self) -> int:
        return sum(self.counts.values())

    def to_csv(self) -> str:
        def rep(a):
            j = self.spec.element_to_json(a)
            return ";".join(str(c) for c in j) if isinstance(j, list) else str(j)

        lines = ["t,count"]
        for a in self.spec.elements():
            if a in self.counts:
                lines.append(f"{rep(a)},{self.counts[a]}")
        return "\n".join(lines) + "\n"


def nu_histogram(E: PointSet, budget: int = DEFAULT_BUDGET) -> NuHistogram:
    """nu(t) = #{(x, y) in E x E : x . y^perp = t}; sums to |E|^2."""
    spec = E.spec
    _check_budget(len(E) ** 2, budget)
    counts: dict = {}
    for x in E.points:
        for y in E.points:
            t = perp_dot(spec, x, y)
            counts[t] = counts.get(t, 0) + 1
    return NuHistogram(spec, counts)


@dataclass
class FProfile:
    """f(g) = #{x in E : gx in E} for each g, in enumerate_sl2 order,
    with the exact moment data of the lifting lemma: mean A, max M, and
    R = sum f^2 - A^2 |S| (= sum (f - A)^2, hence nonnegative)."""

    spec: RingSpec
    values: tuple[int, ...] = field(repr=False)
    group_order: int
    sum_f: int
    mean: Fraction
    maximum: int
    second_moment_excess: Fraction

    def sum_power(self, exp: int) -> int:
        return sum(v ** exp for v in self.values)


def f_profile(E: PointSet, budget: int = DEFAULT_BUDGET) -> FProfile:
    spec = E.spec
    order = sl2_order(spec)
    _check_budget(order * max(1, len(E)), budget)
    members = E.members
    values = []
    for g in enumerate_sl2(spec):
        values.append(sum(1 for x in E.points if apply_mat(spec, g, x) in members))
    sum_f = sum(values)
    mean = Fraction(sum_f, order)
    excess = sum(v * v for v in values) - mean * mean * order
    return FProfile(
        spec=spec,
        values=tuple(values),
        group_order=order,
        sum_f=sum_f,
        mean=mean,
        maximum=max(values) if values else 0,
        second_moment_excess=excess,
    )


@dataclass
class MomentLiftResult:
    k: int
    c_k: int
    size: int
    mean: Fraction
    maximum: Fraction
    excess: Fraction
    lhs: Fraction
    rhs: Fraction
    ok: bool


def moment_lift_check(values, k: int) -> MomentLiftResult:
    """Exact check of the lifting inequality
    sum F^{k+1} <= c_k (M^{k-1} R + A^{k+1} |S|) with c_k = 2^{k^2},
    for any finite table of nonnegative values."""
    vals = [Fraction(v) for v in values]
    if not vals:
        raise ValueError("the table must be nonempty")
    if any(v < 0 for v in vals):
        raise ValueError("values must be nonnegative")
    if k < 1:
        raise ValueError("k must be >= 1")
    size = len(vals)
    mean = sum(vals) / size
    maximum = max(vals)
    excess = sum(v * v for v in vals) - mean * mean * size
    c_k = 2 ** (k * k)
    lhs = sum(v ** (k + 1) for v in vals)
    rhs = c_k * (maximum ** (k - 1) * excess + mean ** (k + 1) * size)
    return MomentLiftResult(
        k=k, c_k=c_k, size=size, mean=mean, maximum=maximum, excess=excess,
        lhs=lhs, rhs=rhs, ok=lhs <= rhs,
    )


def designated_orbit(spec: RingSpec) -> list[Vec2]:
    """The transitive SL_2 orbit used by the counting lemma: nonzero
    vectors for fields, vectors with at least one unit coordinate for
    Z/p^l Z (the orbit of (1, 0))."""
    zero = spec.zero
    out = []
    for a in spec.elements():
        for b in spec.elements():
            if isinstance(spec, ModPrimePower):
                if spec.is_unit(a) or spec.is_unit(b):
                    out.append((a, b))
            elif (a, b) != (zero, zero):
                out.append((a, b))
    return out


def transitivity_constant(spec: RingSpec, budget: int = DEFAULT_BUDGET) -> int:
    """Verifies phi(x, y) = #{g : gx = y} is the same for every pair of
    the designated orbit and returns its value |G| / |X|."""
    X = designated_orbit(spec)
    order = sl2_order(spec)
    _check_budget(order * len(X), budget)
    index = {x: i for i, x in enumerate(X)}
    nx = len(X)
    phi = [0] * (nx * nx)
    for g in enumerate_sl2(spec):
        for x in X:
            y = apply_mat(spec, g, x)
            phi[index[x] * nx + index[y]] += 1
    expected, rem = divmod(order, nx)
    if rem != 0:
        raise NotTransitive((X[0], X[0]), "group order is not divisible by orbit size")
    for i, c in enumerate(phi):
        if c != expected:
            raise NotTransitive((X[i // nx], X[i % nx]))
    return expected


@dataclass
class FlemmaReport:
    good_tuples: int
    good_classes: int
    equivalent_good_pairs: int
    f_power_sum: int
    cauchy_schwarz_ok: bool
    f_bound_ok: bool

    @property
    def ok(self) -> bool:
        return self.cauchy_schwarz_ok and self.f_bound_ok


def flemma_check(E: PointSet, k: int, budget: int = DEFAULT_BUDGET) -> FlemmaReport:
    """Both exact inequalities behind the class-count lower bound:
    |G|^2 <= (#good classes) * #{(x, y) in G x G : x ~ y}  and
    #{(x, y) in G x G : x ~ y} <= sum_g f(g)^{k+1},
    where G is the set of good tuples of E^{k+1}."""
    census = count_classes(E, k, budget)
    good_tuples = census.tuples_by_level.get(0, 0)
    good_classes = census.classes_by_level.get(0, 0)
    eq_pairs = sum(
        c * c for key, c in census.class_sizes.items() if census.class_levels[key] == 0
    )
    prof = f_profile(E, budget)
    f_power_sum = prof.sum_power(k + 1)
    return FlemmaReport(
        good_tuples=good_tuples,
        good_classes=good_classes,
        equivalent_good_pairs=eq_pairs,
        f_power_sum=f_power_sum,
        cauchy_schwarz_ok=good_tuples ** 2 <= good_classes * eq_pairs,
        f_bound_ok=eq_pairs <= f_power_sum,
    )


@dataclass
class MomentIdentityReport:
    f_square_sum: int
    stabilizer_sum: int
    matched_part: int
    collinear_part: int
    matched_quadruples: int
    unique_on_good: bool

    @property
    def ok(self) -> bool:
        return (
            self.f_square_sum == self.stabilizer_sum
            and self.unique_on_good
            and self.matched_part == self.matched_quadruples
        )


def moment_identity_check(E: PointSet, budget: int = DEFAULT_BUDGET) -> MomentIdentityReport:
    """Exact identity sum_g f(g)^2 = sum over quadruples (x1,x2,y1,y2) of
    #{g : gx1 = y1, gx2 = y2}, with the right side enumerated quadruple
    by quadruple and decomposed into the part where (x1, x2) has unit
    area (each such matched quadruple contributes exactly one g) and the
    remaining non-unit-area part."""
    spec = E.spec
    n = len(E)
    order = sl2_order(spec)
    _check_budget(max(n ** 4, order * n * n), budget)
    group = list(enumerate_sl2(spec))
    prof = f_profile(E, budget)
    lhs = prof.sum_power(2)
    stabilizer_sum = 0
    matched_part = 0
    collinear_part = 0
    matched_quads = 0
    unique_on_good = True
    for x1 in E.points:
        for y1 in E.points:
            movers = [g for g in group if apply_mat(spec, g, x1) == y1]
            for x2 in E.points:
                t = perp_dot(spec, x1, x2)
                good_pair = spec.is_unit(t)
                for y2 in E.points:
                    c = sum(1 for g in movers if apply_mat(spec, g, x2) == y2)
                    stabilizer_sum += c
                    if good_pair:
                        matched_part += c
                        if perp_dot(spec, y1, y2) == t:
                            matched_quads += 1
                            if c != 1:
                                unique_on_good = False
                    else:
                        collinear_part += c
    return MomentIdentityReport(
        f_square_sum=lhs,
        stabilizer_sum=stabilizer_sum,
        matched_part=matched_part,
        collinear_part=collinear_part,
        matched_quadruples=matched_quads,
        unique_on_good=unique_on_good,
    )


def _power(p: int, exponent: int) -> Fraction:
    return Fraction(p ** exponent) if exponent >= 0 else Fraction(1, p ** (-exponent))


@dataclass
class MBadLevelReport:
    m: int
    class_count: int
    tuple_count: int
    min_class_size: int
    size_bound: int
    count_shape: Fraction
    count_constant: Fraction
    size_ok: bool


@dataclass
class MBadReport:
    spec: RingSpec
    k: int
    good_classes: int
    good_tuples: int
    group_order: int
    good_free_action_ok: bool
    levels: list[MBadLevelReport]

    @property
    def ok(self) -> bool:
        return self.good_free_action_ok and all(
            lvl.size_ok and lvl.count_constant <= 4 for lvl in self.levels
        )


def mbad_class_size_check(spec: ModPrimePower, k: int, budget: int = DEFAULT_BUDGET) -> MBadReport:
    """Full-plane census over (Z/p^l Z)^2: good classes carry a free
    SL_2 action (size exactly |SL_2|, count x order = tuple count), and
    every m-bad class has at least p^{3l - 2m} members; per-m class
    counts are compared against the shape p^{l(2k-1) + (2-k)m} with the
    constant reported."""
    if not isinstance(spec, ModPrimePower):
        raise TypeError("m-badness analysis needs a mod-prime-power ring")
    E = PointSet(spec, [(a, b) for a in spec.elements() for b in spec.elements()])
    census = count_classes(E, k, budget)
    order = sl2_order(spec)
    p, ell = spec.p, spec.ell
    good_classes = census.classes_by_level.get(0, 0)
    good_tuples = census.tuples_by_level.get(0, 0)
    good_free = good_classes * order == good_tuples and all(
        c == order
        for key, c in census.class_sizes.items()
        if census.class_levels[key] == 0
    )
    levels = []
    for m in range(1, ell + 1):
        sizes = [
            c for key, c in census.class_sizes.items() if census.class_levels[key] == m
        ]
        if not sizes:
            continue
        size_bound = p ** (3 * ell - 2 * m)
        shape = _power(p, ell * (2 * k - 1) + (2 - k) * m)
        levels.append(
            MBadLevelReport(
                m=m,
                class_count=len(sizes),
                tuple_count=census.tuples_by_level[m],
                min_class_size=min(sizes),
                size_bound=size_bound,
                count_shape=shape,
                count_constant=Fraction(len(sizes)) / shape,
                size_ok=min(sizes) >= size_bound,
            )
        )
    return MBadReport(
        spec=spec,
        k=k,
        good_classes=good_classes,
        good_tuples=good_tuples,
        group_order=order,
        good_free_action_ok=good_free,
        levels=levels,
    )


def good_class_members(
    E: PointSet, k: int, budget: int = DEFAULT_BUDGET
) -> dict[bytes, list[tuple]]:
    """Good tuples of E^{k+1} grouped by signature key.  Memory is the
    number of good tuples, so keep to small instances."""
    from .configs import signature

    n = len(E)
    _check_budget(n ** (k + 1), budget)
    spec = E.spec
    out: dict[bytes, list[tuple]] = {}
    for t in itertools.product(E.points, repeat=k + 1):
        sig = signature(spec, t)
        if any(spec.is_unit(a) for a in sig.areas):
            out.setdefault(sig.encode(), []).append(t)
    return out


def full_plane_points(spec: RingSpec) -> Iterator[Vec2]:
    for a in spec.elements():
        for b in spec.elements():
            yield (a, b)
