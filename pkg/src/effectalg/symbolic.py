"""Finitely described infinite concrete orthomodular posets.

Five constructions over region-tagged ground sets, each realizing one
counterexample: membership, inclusion, disjointness, disjoint union and
complement are all computable on finitely described elements.  An element
stores, per region, either a finite set of indices or a cofinite set given
by its finite missing part.  Refuters return constructive evidence objects
and re-verify their own output through the symbolic order before
returning it.

Global negative claims about these algebras (say, failure of the
maximality property as a universal statement) are deliberately exposed
only through refuters that defeat a given candidate, never as booleans
computed by scanning an infinite carrier.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Optional, Sequence

CONSTRUCTIONS = (
    "omp-unot-sod",
    "omp-not-m",
    "chain-finite-lattice",
    "finite-cofinite",
    "balanced",
)


@dataclass(frozen=True, order=True)
class Point:
    region: str
    index: int

    def __str__(self) -> str:
        return f"{self.region}:{self.index}"


@dataclass(frozen=True)
class Region:
    name: str
    infinite: bool
    min_index: int = 0
    size: int = 0  # finite regions only

    def valid_index(self, i: int) -> bool:
        if self.infinite:
            return i >= self.min_index
        return 0 <= i < self.size

    def all_indices(self) -> frozenset[int]:
        assert not self.infinite
        return frozenset(range(self.size))


@dataclass(frozen=True)
class RegionPart:
    """A subset of one region: the finite set `points`, or its complement
    within the region when `cofinite` is set (infinite regions only)."""

    cofinite: bool
    points: frozenset[int]


@dataclass(frozen=True)
class SymbolicElement:
    parts: tuple[RegionPart, ...]


@dataclass(frozen=True)
class Refutation:
    kind: str  # no-maximal | no-upper-bound | no-supremum | not-SOD
    claim: str
    witness: object
    checks: tuple[str, ...]

    def lines(self) -> list[str]:
        out = [f"refutation kind={self.kind}", f"claim: {self.claim}", f"witness: {self.witness}"]
        out.extend(f"check: {c}" for c in self.checks)
        return out


class SymbolicAlgebra:
    """Shared per-region set calculus; subclasses fix the membership rule."""

    construction: str
    regions: tuple[Region, ...]
    point_state_regions: tuple[str, ...] = ()  # regions whose singletons lie in E

    def region(self, name: str) -> Region:
        for r in self.regions:
            if r.name == name:
                return r
        raise ValueError(f"unknown region {name!r} in {self.construction}")

    def _region_pos(self, name: str) -> int:
        for k, r in enumerate(self.regions):
            if r.name == name:
                return k
        raise ValueError(f"unknown region {name!r} in {self.construction}")

    # -- structure -------------------------------------------------------------

    def is_member(self, e: SymbolicElement) -> bool:
        return self._well_formed(e) and self._rule(e)

    def _rule(self, e: SymbolicElement) -> bool:
        raise NotImplementedError

    def _well_formed(self, e: SymbolicElement) -> bool:
        if len(e.parts) != len(self.regions):
            return False
        for part, region in zip(e.parts, self.regions):
            if part.cofinite and not region.infinite:
                return False
            if not all(region.valid_index(i) for i in part.points):
                return False
        return True

    def zero(self) -> SymbolicElement:
        return SymbolicElement(tuple(RegionPart(False, frozenset()) for _ in self.regions))

    def one(self) -> SymbolicElement:
        parts = []
        for region in self.regions:
            if region.infinite:
                parts.append(RegionPart(True, frozenset()))
            else:
                parts.append(RegionPart(False, region.all_indices()))
        return SymbolicElement(tuple(parts))

    def from_points(self, points: Iterable[Point]) -> SymbolicElement:
        per: dict[str, set[int]] = {r.name: set() for r in self.regions}
        for p in points:
            region = self.region(p.region)
            if not region.valid_index(p.index):
                raise ValueError(f"point {p} outside region {p.region}")
            per[p.region].add(p.index)
        return SymbolicElement(
            tuple(RegionPart(False, frozenset(per[r.name])) for r in self.regions)
        )

    def contains_point(self, e: SymbolicElement, p: Point) -> bool:
        part = e.parts[self._region_pos(p.region)]
        inside = p.index in part.points
        return not inside if part.cofinite else inside

    # -- order and sum ----------------------------------------------------------

    def leq(self, u: SymbolicElement, v: SymbolicElement) -> bool:
        for pu, pv, region in zip(u.parts, v.parts, self.regions):
            if not pu.cofinite and not pv.cofinite:
                if not pu.points <= pv.points:
                    return False
            elif not pu.cofinite and pv.cofinite:
                if pu.points & pv.points:
                    return False
            elif pu.cofinite and not pv.cofinite:
                return False  # cofinite part of an infinite region
            else:
                if not pv.points <= pu.points:
                    return False
        return True

    def disjoint(self, u: SymbolicElement, v: SymbolicElement) -> bool:
        for pu, pv in zip(u.parts, v.parts):
            if not pu.cofinite and not pv.cofinite:
                if pu.points & pv.points:
                    return False
            elif not pu.cofinite and pv.cofinite:
                if not pu.points <= pv.points:
                    return False
            elif pu.cofinite and not pv.cofinite:
                if not pv.points <= pu.points:
                    return False
            else:
                return False
        return True

    def oplus(self, u: SymbolicElement, v: SymbolicElement) -> Optional[SymbolicElement]:
        """Disjoint union; None when the operands overlap."""
        if not (self.is_member(u) and self.is_member(v)):
            raise ValueError("operands must belong to the construction")
        if not self.disjoint(u, v):
            return None
        parts = []
        for pu, pv in zip(u.parts, v.parts):
            if not pu.cofinite and not pv.cofinite:
                parts.append(RegionPart(False, pu.points | pv.points))
            elif pu.cofinite:
                parts.append(RegionPart(True, pu.points - pv.points))
            else:
                parts.append(RegionPart(True, pv.points - pu.points))
        out = SymbolicElement(tuple(parts))
        assert self.is_member(out), "family must be closed under disjoint union"
        return out

    def complement(self, e: SymbolicElement) -> SymbolicElement:
        parts = []
        for part, region in zip(e.parts, self.regions):
            if region.infinite:
                parts.append(RegionPart(not part.cofinite, part.points))
            else:
                parts.append(RegionPart(False, region.all_indices() - part.points))
        out = SymbolicElement(tuple(parts))
        assert self.is_member(out), "family must be closed under complement"
        return out

    def point_in_difference(
        self, u: SymbolicElement, v: SymbolicElement
    ) -> Optional[Point]:
        """Some ground point of u outside v, if any."""
        for pu, pv, region in zip(u.parts, v.parts, self.regions):
            name = region.name
            if not pu.cofinite and not pv.cofinite:
                extra = pu.points - pv.points
                if extra:
                    return Point(name, min(extra))
            elif not pu.cofinite and pv.cofinite:
                hit = pu.points & pv.points
                if hit:
                    return Point(name, min(hit))
            elif pu.cofinite and not pv.cofinite:
                return Point(name, _fresh_index(region, pu.points | pv.points))
            else:
                gap = pv.points - pu.points
                if gap:
                    return Point(name, min(gap))
        return None

    def element_str(self, e: SymbolicElement) -> str:
        chunks = []
        for part, region in zip(e.parts, self.regions):
            if part.cofinite:
                if part.points:
                    chunks.append(f"{region.name}\\{{{_idx_str(part.points)}}}")
                else:
                    chunks.append(region.name)
            elif part.points:
                if not region.infinite and part.points == region.all_indices():
                    chunks.append(region.name)
                else:
                    chunks.append(
                        "{" + ",".join(f"{region.name}:{i}" for i in sorted(part.points)) + "}"
                    )
        return " U ".join(chunks) if chunks else "{}"


def _idx_str(points: frozenset[int]) -> str:
    return ",".join(map(str, sorted(points)))


def _fresh_index(region: Region, used: frozenset[int]) -> int:
    i = region.min_index
    while i in used:
        i += 1
    return i


def leq_sym(alg: SymbolicAlgebra, u: SymbolicElement, v: SymbolicElement) -> bool:
    return alg.leq(u, v)


def oplus_sym(
    alg: SymbolicAlgebra, u: SymbolicElement, v: SymbolicElement
) -> Optional[SymbolicElement]:
    return alg.oplus(u, v)


# -- the quadrant constructions --------------------------------------------------

# Blocks of the seed family over the four regions, as presence bits.
_QUAD_PATTERNS = {
    (False, False, False, False): "empty",
    (True, True, False, False): "X12",
    (False, True, True, False): "X23",
    (False, False, True, True): "X34",
    (True, False, False, True): "X41",
    (True, True, True, True): "full",
}
_QUAD_BASES = {name: bits for bits, name in _QUAD_PATTERNS.items()}


class QuadrantAlgebra(SymbolicAlgebra):
    """Symmetric differences of the six seed blocks over regions X1..X4 by
    finite correction sets.  `correction_regions` limits where corrections
    may live; everywhere else an element must agree exactly with its base
    block."""

    def __init__(self, construction: str, regions: tuple[Region, ...], correction_regions):
        self.construction = construction
        self.regions = regions
        self.correction_regions = tuple(correction_regions)
        self.point_state_regions = self.correction_regions

    def _rule(self, e: SymbolicElement) -> bool:
        bits = []
        for part, region in zip(e.parts, self.regions):
            if region.infinite:
                bits.append(part.cofinite)
            else:
                if part.points not in (frozenset(), region.all_indices()):
                    return False
                bits.append(part.points == region.all_indices())
            if region.name not in self.correction_regions:
                exceptional = part.points if region.infinite else None
                if exceptional:
                    return False
        return tuple(bits) in _QUAD_PATTERNS

    def base(self, name: str) -> SymbolicElement:
        if name not in _QUAD_BASES:
            raise ValueError(f"unknown base block {name!r}")
        return self.with_correction(name, ())

    def with_correction(self, base_name: str, points: Iterable[Point]) -> SymbolicElement:
        """The symmetric difference of a seed block and a finite set."""
        bits = _QUAD_BASES[base_name]
        per: dict[str, set[int]] = {r.name: set() for r in self.regions}
        for p in points:
            if p.region not in self.correction_regions:
                raise ValueError(f"corrections may not touch region {p.region}")
            if not self.region(p.region).valid_index(p.index):
                raise ValueError(f"point {p} outside its region")
            per[p.region].add(p.index)
        parts = []
        for bit, region in zip(bits, self.regions):
            pts = frozenset(per[region.name])
            if region.infinite:
                parts.append(RegionPart(bit, pts))
            else:
                parts.append(RegionPart(False, region.all_indices() if bit else frozenset()))
        e = SymbolicElement(tuple(parts))
        assert self.is_member(e)
        return e


class FiniteCofiniteAlgebra(SymbolicAlgebra):
    """All finite and cofinite subsets of one countable ground set."""

    construction = "finite-cofinite"
    regions = (Region("X", infinite=True),)
    point_state_regions = ("X",)

    def _rule(self, e: SymbolicElement) -> bool:
        return True


class BalancedAlgebra(SymbolicAlgebra):
    """Finite sets meeting X and Y in equally many points, plus their
    complements.  X is enumerated from 1 so that y0 has no partner."""

    construction = "balanced"
    regions = (Region("X", infinite=True, min_index=1), Region("Y", infinite=True))

    def _rule(self, e: SymbolicElement) -> bool:
        px, py = e.parts
        return px.cofinite == py.cofinite and len(px.points) == len(py.points)

    def bound_a(self) -> SymbolicElement:
        # everything except x1 and its partner y1
        return SymbolicElement(
            (RegionPart(True, frozenset({1})), RegionPart(True, frozenset({1})))
        )

    def bound_b(self) -> SymbolicElement:
        # everything except x1 and the reserved y0
        return SymbolicElement(
            (RegionPart(True, frozenset({1})), RegionPart(True, frozenset({0})))
        )

    def chain_element(self, n: int) -> SymbolicElement:
        """{x2, .., xn} with partners {y2, .., yn}; defined for n >= 2."""
        if n < 2:
            raise ValueError("chain elements start at n = 2")
        idx = frozenset(range(2, n + 1))
        return SymbolicElement((RegionPart(False, idx), RegionPart(False, idx)))


class PairCoverAlgebra(SymbolicAlgebra):
    """The infinite chain-finite lattice: the empty set, the pairs {x, y},
    the sets X minus one point, and the whole X plus y."""

    construction = "chain-finite-lattice"
    regions = (Region("X", infinite=True), Region("Y", infinite=False, size=1))

    def _rule(self, e: SymbolicElement) -> bool:
        px, py = e.parts
        with_y = bool(py.points)
        if not px.cofinite:
            # only the empty set and the pairs {x, y}; {y} alone is no block
            return len(px.points) == (1 if with_y else 0)
        return len(px.points) == (0 if with_y else 1)

    def bottom(self) -> SymbolicElement:
        return self.zero()

    def top(self) -> SymbolicElement:
        return self.one()

    def pair(self, i: int) -> SymbolicElement:
        return SymbolicElement(
            (RegionPart(False, frozenset({i})), RegionPart(False, frozenset({0})))
        )

    def copair(self, i: int) -> SymbolicElement:
        return SymbolicElement(
            (RegionPart(True, frozenset({i})), RegionPart(False, frozenset()))
        )


def build(construction_id: str) -> SymbolicAlgebra:
    if construction_id == "omp-unot-sod":
        return QuadrantAlgebra(
            "omp-unot-sod",
            (
                Region("X1", infinite=True),
                Region("X2", infinite=False, size=1),
                Region("X3", infinite=True),
                Region("X4", infinite=False, size=1),
            ),
            correction_regions=("X1", "X3"),
        )
    if construction_id == "omp-not-m":
        return QuadrantAlgebra(
            "omp-not-m",
            tuple(Region(f"X{i}", infinite=True) for i in (1, 2, 3, 4)),
            correction_regions=("X1", "X2", "X3", "X4"),
        )
    if construction_id == "chain-finite-lattice":
        return PairCoverAlgebra()
    if construction_id == "finite-cofinite":
        return FiniteCofiniteAlgebra()
    if construction_id == "balanced":
        return BalancedAlgebra()
    raise ValueError(f"unknown construction {construction_id!r}")


# -- point states -----------------------------------------------------------------


def point_state_value(alg: SymbolicAlgebra, x: Point, e: SymbolicElement) -> int:
    """The two-valued state carried by x, evaluated at e."""
    return 1 if alg.contains_point(e, x) else 0


def jp_point_witness(
    alg: SymbolicAlgebra, x: Point, a: SymbolicElement, b: SymbolicElement
) -> SymbolicElement:
    """For s_x(a) = s_x(b) = 1 produce c <= a, b with s_x(c) = 1, namely
    the singleton {x}; works whenever singletons of x's region belong to
    the construction."""
    if x.region not in alg.point_state_regions:
        raise ValueError(f"no point state available for region {x.region}")
    if not (alg.contains_point(a, x) and alg.contains_point(b, x)):
        raise ValueError("point state does not pin both elements")
    c = alg.from_points([x])
    assert alg.is_member(c) and alg.leq(c, a) and alg.leq(c, b)
    assert point_state_value(alg, x, c) == 1
    return c


def unital_point_witness(alg: SymbolicAlgebra, e: SymbolicElement) -> Optional[Point]:
    """A point x with a point state pinning e, scanning only regions whose
    singletons belong to the construction."""
    for part, region in zip(e.parts, alg.regions):
        if region.name not in alg.point_state_regions:
            continue
        if part.cofinite:
            return Point(region.name, _fresh_index(region, part.points))
        if part.points:
            return Point(region.name, min(part.points))
    return None


def jp_minimal_witness_for_support(
    alg: SymbolicAlgebra, support: Sequence[Point]
) -> SymbolicElement:
    """Minimal Jauch-Piron witness for a finite-support convex combination
    of X1 point states, at the pinned pair (X1+X2, X4+X1).

    Such a combination assigns 1 to both blocks, and any common lower
    bound carrying value 1 must contain the whole support; the minimal one
    is the support itself, so the witness grows without bound along any
    increasing sequence of supports.  That growth is the finite-support
    shadow of the failure for combinations with infinite support, which
    have no finitely describable witness at all and stay out of scope.
    """
    if alg.construction != "omp-not-m":
        raise ValueError("the witness-growth demonstration lives on omp-not-m")
    if not support or any(x.region != "X1" for x in support):
        raise ValueError("support must be a nonempty set of X1 points")
    witness = alg.from_points(support)
    b1, b2 = alg.base("X12"), alg.base("X41")
    assert alg.leq(witness, b1) and alg.leq(witness, b2)
    # minimality: dropping any support point drops that point's state value
    for x in support:
        rest = [y for y in support if y != x]
        if rest:
            assert not alg.contains_point(alg.from_points(rest), x)
    return witness


# -- refuters ---------------------------------------------------------------------


def no_maximal_refuter(alg: SymbolicAlgebra, candidate: SymbolicElement) -> Refutation:
    """Defeat any candidate for a maximal element of the lower cone below
    the blocks X1+X2 and X4+X1: the cone consists of the finite subsets of
    X1, so adding one fresh X1 point stays inside and is strictly larger."""
    if alg.construction != "omp-not-m":
        raise ValueError("maximality refuter belongs to the omp-not-m construction")
    b1 = alg.base("X12")
    b2 = alg.base("X41")
    if not alg.is_member(candidate):
        raise ValueError("candidate is not a member of the construction")
    if not (alg.leq(candidate, b1) and alg.leq(candidate, b2)):
        raise ValueError("candidate is outside the lower cone")
    x1_part = candidate.parts[0]
    assert not x1_part.cofinite, "cone members are finite subsets of X1"
    fresh = Point("X1", _fresh_index(alg.region("X1"), x1_part.points))
    larger = alg.from_points(
        [Point("X1", i) for i in x1_part.points] + [fresh]
    )
    assert alg.is_member(larger)
    assert alg.leq(candidate, larger) and candidate != larger
    assert alg.leq(larger, b1) and alg.leq(larger, b2)
    return Refutation(
        kind="no-maximal",
        claim=f"{alg.element_str(candidate)} is maximal in the cone below "
        f"{alg.element_str(b1)} and {alg.element_str(b2)}",
        witness=larger,
        checks=(
            f"candidate <= witness: {alg.leq(candidate, larger)}",
            f"witness strictly larger: {candidate != larger}",
            f"witness <= {alg.element_str(b1)}: {alg.leq(larger, b1)}",
            f"witness <= {alg.element_str(b2)}: {alg.leq(larger, b2)}",
        ),
    )


def not_sod_witness(
    alg: SymbolicAlgebra, sample_points: Sequence[Point] = ()
) -> Refutation:
    """The pair (X4+X1, X1+X2): not below one another, yet every point
    state from X1+X3 pinning the first also pins the second.  The sample
    points are run through that implication as a spot check."""
    if alg.construction != "omp-unot-sod":
        raise ValueError("the not-SOD witness belongs to the omp-unot-sod construction")
    a = alg.base("X41")
    b = alg.base("X12")
    assert not alg.leq(a, b)
    if not sample_points:
        sample_points = tuple(Point("X1", i) for i in range(3)) + tuple(
            Point("X3", i) for i in range(3)
        )
    checks = [f"{alg.element_str(a)} <= {alg.element_str(b)}: {alg.leq(a, b)}"]
    for x in sample_points:
        if x.region not in ("X1", "X3"):
            raise ValueError(f"sample point {x} outside X1 and X3")
        sa = point_state_value(alg, x, a)
        if sa == 1:
            assert x.region == "X1", "only X1 points can pin X4+X1 within X1+X3"
            sb = point_state_value(alg, x, b)
            assert sb == 1
            checks.append(f"s[{x}]({alg.element_str(a)}) = 1 forces value 1 on {alg.element_str(b)}")
        else:
            checks.append(f"s[{x}]({alg.element_str(a)}) = 0, vacuous")
    return Refutation(
        kind="not-SOD",
        claim="point states of X1 and X3 strongly order determine the family",
        witness=(a, b),
        checks=tuple(checks),
    )


def chain_no_upper_bound_refuter(
    alg: SymbolicAlgebra, candidate: SymbolicElement
) -> tuple[int, Refutation]:
    """Defeat a candidate upper bound for the chain {x2..xn, y2..yn} inside
    the cone below bound_a and bound_b: return n with chain(n) not below
    the candidate."""
    if alg.construction != "balanced":
        raise ValueError("the chain refuter belongs to the balanced construction")
    assert isinstance(alg, BalancedAlgebra)
    a, b = alg.bound_a(), alg.bound_b()
    if not alg.is_member(candidate):
        raise ValueError("candidate is not a member of the construction")
    if not (alg.leq(candidate, a) and alg.leq(candidate, b)):
        raise ValueError("candidate is outside the interval")
    px, py = candidate.parts
    if not px.cofinite:
        # finite balanced set of 2k points: chain(k+2) has 2(k+1) points
        n = len(px.points) + 2
    else:
        # the missing part must contain x1, y0, y1 and stay balanced, so a
        # second X point is missing; the chain reaches it
        missing_x = px.points - {1}
        assert missing_x, "balanced cofinite members of the interval miss a second X point"
        n = min(missing_x)
        assert n >= 2
    cn = alg.chain_element(n)
    assert alg.leq(cn, a) and alg.leq(cn, b)
    assert not alg.leq(cn, candidate)
    return n, Refutation(
        kind="no-upper-bound",
        claim=f"{alg.element_str(candidate)} bounds the whole chain inside the interval",
        witness=n,
        checks=(
            f"chain({n}) = {alg.element_str(cn)}",
            f"chain({n}) <= interval bounds: True",
            f"chain({n}) <= candidate: {alg.leq(cn, candidate)}",
        ),
    )


def no_supremum_refuter(
    alg: SymbolicAlgebra,
    candidate: SymbolicElement,
    system: Callable[[int], bool] = lambda i: i % 2 == 0,
    system_name: str = "even-index points",
) -> tuple[SymbolicElement, Refutation]:
    """Given an upper bound of the orthogonal system of singletons from an
    infinite, co-infinite decidable point set, produce a strictly smaller
    upper bound; hence no candidate is the supremum."""
    if alg.construction != "finite-cofinite":
        raise ValueError("the supremum refuter belongs to the finite-cofinite construction")
    part = candidate.parts[0]
    if not part.cofinite:
        raise ValueError("a finite set cannot bound an infinite orthogonal system")
    if any(system(i) for i in part.points):
        raise ValueError("candidate misses a system point, so it is not an upper bound")
    z = 0
    while z in part.points or system(z):
        z += 1
    smaller = SymbolicElement((RegionPart(True, part.points | {z}),))
    assert alg.is_member(smaller)
    assert alg.leq(smaller, candidate) and smaller != candidate
    sample = []
    i, found = 0, 0
    while found < 3:
        if system(i):
            sample.append(i)
            found += 1
        i += 1
    for d in sample:
        assert alg.leq(alg.from_points([Point("X", d)]), smaller)
    return smaller, Refutation(
        kind="no-supremum",
        claim=f"{alg.element_str(candidate)} is the least upper bound of the system of {system_name}",
        witness=smaller,
        checks=(
            f"witness < candidate: True (drops X:{z}, outside the system)",
            f"witness still above sampled partial sums {sample}: True",
        ),
    )


def chain_bound(alg: SymbolicAlgebra, sample_indices: Sequence[int] = (0, 1, 2)) -> int:
    """Maximum chain cardinality of the chain-finite lattice, verified on a
    sample: below the top, pairs and copairs form an antichain each, so
    every chain has at most three elements."""
    if alg.construction != "chain-finite-lattice":
        raise ValueError("chain_bound belongs to the chain-finite-lattice construction")
    assert isinstance(alg, PairCoverAlgebra)
    sample = [alg.bottom(), alg.top()]
    sample += [alg.pair(i) for i in sample_indices]
    sample += [alg.copair(i) for i in sample_indices]
    # longest chain within the sample by dynamic programming
    order = sorted(range(len(sample)), key=lambda k: sum(
        alg.leq(sample[j], sample[k]) for j in range(len(sample))
    ))
    height = [1] * len(sample)
    for pos, k in enumerate(order):
        for j in order[:pos]:
            if sample[j] != sample[k] and alg.leq(sample[j], sample[k]):
                height[k] = max(height[k], height[j] + 1)
    longest = max(height)
    assert longest == 3, f"sampled chain length {longest}, expected 3"
    for i in sample_indices:
        for j in sample_indices:
            if i != j:
                assert not alg.leq(alg.pair(i), alg.pair(j))
                assert not alg.leq(alg.copair(i), alg.copair(j))
            # pairs contain y, which every copair misses
            assert not alg.leq(alg.pair(i), alg.copair(j))
    return 3
