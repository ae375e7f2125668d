"""Structural classification of finite effect algebras.

Decides the order-theoretic predicates (orthoalgebra, orthomodular poset,
lattice, orthomodular lattice, the maximality property) together with the
chain conditions (chain finiteness, orthocompleteness, upper bounds for
chains in lower cones).  On a finite carrier the chain conditions are
always satisfied; they are still verified against their definitions,
bounded by the carrier, instead of being returned as constants, so that
representation bugs cannot hide behind a known theorem.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .core import EffectAlgebra, _bits


def is_principal(alg: EffectAlgebra, a: int) -> tuple[bool, Optional[tuple[int, int]]]:
    """b, c <= a with b + c defined must keep b + c below a."""
    below = tuple(_bits(alg.down_masks[a]))
    for b in below:
        for c in below:
            s = alg.oplus(b, c)
            if s is not None and not alg.leq(s, a):
                return False, (b, c)
    return True, None


def is_orthoalgebra(alg: EffectAlgebra) -> tuple[bool, Optional[int]]:
    """a + a defined must force a = 0."""
    for a in alg.elements():
        if a != alg.zero and alg.defined(a, a):
            return False, a
    return True, None


def is_omp(alg: EffectAlgebra) -> tuple[bool, Optional[tuple[int, tuple[int, int]]]]:
    """Every element principal.  Cross-checked against the equivalent
    description 'a + b is the join of every orthogonal pair'."""
    result: tuple[bool, Optional[tuple[int, tuple[int, int]]]] = (True, None)
    for a in alg.elements():
        ok, pair = is_principal(alg, a)
        if not ok:
            result = (False, (a, pair))
            break
    by_joins = True
    for a in alg.elements():
        for b in range(a, alg.n):
            s = alg.oplus(a, b)
            if s is not None and join(alg, a, b) != s:
                by_joins = False
                break
        if not by_joins:
            break
    assert result[0] == by_joins, "principality and join characterizations disagree"
    return result


def meet(alg: EffectAlgebra, a: int, b: int) -> Optional[int]:
    """Greatest lower bound when it exists."""
    lower = alg.down_masks[a] & alg.down_masks[b]
    for g in _bits(lower):
        if lower & ~alg.down_masks[g] == 0:
            return g
    return None


def join(alg: EffectAlgebra, a: int, b: int) -> Optional[int]:
    upper = alg.up_masks[a] & alg.up_masks[b]
    for g in _bits(upper):
        if upper & ~alg.up_masks[g] == 0:
            return g
    return None


def is_lattice(alg: EffectAlgebra) -> tuple[bool, Optional[tuple[int, int]]]:
    for a in alg.elements():
        for b in range(a + 1, alg.n):
            if meet(alg, a, b) is None or join(alg, a, b) is None:
                return False, (a, b)
    return True, None


def is_oml(alg: EffectAlgebra) -> bool:
    return is_omp(alg)[0] and is_lattice(alg)[0]


def maximal_elements(alg: EffectAlgebra, a: int, b: int) -> tuple[int, ...]:
    """Maximal elements of the lower cone [0,a] & [0,b]; nonempty on any
    finite algebra."""
    cone = alg.down_masks[a] & alg.down_masks[b]
    out = []
    for c in _bits(cone):
        strictly_above = cone & alg.up_masks[c] & ~(1 << c)
        if strictly_above == 0:
            out.append(c)
    return tuple(out)


def has_maximality(alg: EffectAlgebra) -> tuple[bool, Optional[tuple[int, int]]]:
    for a in alg.elements():
        for b in range(a, alg.n):
            if not maximal_elements(alg, a, b):
                return False, (a, b)
    return True, None


def chain_height(alg: EffectAlgebra) -> int:
    """Length of the longest chain, computed by dynamic programming over
    any linear extension of the order."""
    order = sorted(alg.elements(), key=lambda x: bin(alg.down_masks[x]).count("1"))
    height = [0] * alg.n
    for x in order:
        below = alg.down_masks[x] & ~(1 << x)
        height[x] = 1 + max((height[y] for y in _bits(below)), default=0)
    return max(height)


def is_chain_finite(alg: EffectAlgebra) -> bool:
    """Every chain is finite.  Chains extend to maximal ones, whose length
    the height bounds; a finite bound certifies the condition."""
    h = chain_height(alg)
    assert 1 <= h <= alg.n
    return True


def _orthogonal_systems(alg: EffectAlgebra):
    """All orthogonal multisets of nonzero elements, yielded as
    (partial_sum_values, total).  An extension by x is allowed exactly
    when every already-achievable partial sum stays summable with x, which
    bounds repetition of nonzero elements by additivity."""

    def rec(min_elem: int, sums: frozenset[int], total: int):
        yield sums, total
        for x in range(min_elem, alg.n):
            if x == alg.zero:
                continue
            extended = set()
            ok = True
            for s in sums:
                sx = alg.oplus(s, x)
                if sx is None:
                    ok = False
                    break
                extended.add(sx)
            if ok:
                yield from rec(x, sums | frozenset(extended), alg.oplus(total, x))

    yield from rec(0, frozenset({alg.zero}), alg.zero)


def is_orthocomplete(alg: EffectAlgebra) -> bool:
    """Every orthogonal system's finite partial sums have a supremum.
    Verified directly over all orthogonal multisets of the finite carrier;
    the supremum must exist and coincide with the total sum."""
    for sums, total in _orthogonal_systems(alg):
        upper = (1 << alg.n) - 1
        for s in sums:
            upper &= alg.up_masks[s]
        least = next((u for u in _bits(upper) if upper & ~alg.up_masks[u] == 0), None)
        if least is None:
            return False
        assert least == total, "supremum of partial sums must be the total"
    return True


def has_chain_upper_bounds(alg: EffectAlgebra) -> bool:
    """Every chain in every lower cone [0,a] & [0,b] has an upper bound in
    that cone.  All chains of each cone are enumerated by DFS."""
    for a in alg.elements():
        for b in range(a, alg.n):
            cone = alg.down_masks[a] & alg.down_masks[b]
            members = tuple(_bits(cone))

            def extend(chain: int, min_next: int, ubs: int) -> bool:
                # ubs: cone members above every chain element so far
                if ubs == 0:
                    return False
                for nxt in members:
                    if nxt < min_next:
                        continue
                    comparable = alg.up_masks[nxt] | alg.down_masks[nxt]
                    if chain & ~comparable:
                        continue
                    if not extend(chain | 1 << nxt, nxt + 1, ubs & alg.up_masks[nxt]):
                        return False
                return True

            for start in members:
                if not extend(1 << start, start + 1, alg.up_masks[start] & cone):
                    return False
    return True


@dataclass
class ClassificationReport:
    """Structural flags with witnesses for the false ones."""

    n: int
    flags: dict[str, bool] = field(default_factory=dict)
    witnesses: dict[str, object] = field(default_factory=dict)

    _IMPLICATIONS = [
        ("finite", "chain_finite"),
        ("chain_finite", "orthocomplete"),
        ("orthocomplete", "chain_upper_bounds"),
        ("chain_upper_bounds", "maximality"),
        ("lattice", "chain_upper_bounds"),
        ("oml", "omp"),
        ("omp", "orthoalgebra"),
    ]

    def implication_violations(self) -> list[str]:
        out = []
        for hyp, con in self._IMPLICATIONS:
            if self.flags.get(hyp) and self.flags.get(con) is False:
                out.append(f"{hyp} holds but {con} fails")
        if (
            self.flags.get("jp_algebra")
            and self.flags.get("unital_full")
            and self.flags.get("lattice") is False
        ):
            out.append("jp_algebra and unital_full hold but lattice fails")
        return out

    def lines(self) -> list[str]:
        out = [f"{key}={'true' if val else 'false'}" for key, val in self.flags.items()]
        for key, wit in self.witnesses.items():
            out.append(f"witness {key}: {wit}")
        return out


def classify(alg: EffectAlgebra, with_states: bool = False) -> ClassificationReport:
    report = ClassificationReport(n=alg.n)
    f, w = report.flags, report.witnesses

    f["finite"] = True
    f["chain_finite"] = is_chain_finite(alg)
    f["orthocomplete"] = is_orthocomplete(alg)
    f["chain_upper_bounds"] = has_chain_upper_bounds(alg)
    ok, pair = has_maximality(alg)
    f["maximality"] = ok
    if not ok:
        w["maximality"] = pair

    ok, elem = is_orthoalgebra(alg)
    f["orthoalgebra"] = ok
    if not ok:
        w["orthoalgebra"] = elem
    ok, wit = is_omp(alg)
    f["omp"] = ok
    if not ok:
        w["omp"] = wit
    ok, pair = is_lattice(alg)
    f["lattice"] = ok
    if not ok:
        w["lattice"] = pair
    f["oml"] = f["omp"] and f["lattice"]
    if not f["oml"]:
        w["oml"] = "not an omp" if not f["omp"] else "not a lattice"

    if with_states:
        from . import states as st

        ok, elem = st.unital_full_check(alg)
        f["unital_full"] = ok
        if not ok:
            w["unital_full"] = elem
        ok, pair = st.sod_full_check(alg)
        f["sod_full"] = ok
        if not ok:
            w["sod_full"] = pair
        ok, failure = st.jp_algebra_check(alg)
        f["jp_algebra"] = ok
        if not ok:
            w["jp_algebra"] = failure.pair

    violations = report.implication_violations()
    assert not violations, f"classification breaks known implications: {violations}"
    return report
