"""States on finite effect algebras, decided with exact arithmetic.

A state assigns a rational in [0,1] to every element, sends one to 1 and
is additive over defined sums.  All decisions here are exact: two-valued
states come from backtracking with constraint propagation, and the
full-state-space properties (unitality, strong order determination,
Jauch-Pironness) reduce to rational LP feasibility and optimization over
the state polytope.  No floating point is used anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from . import simplex
from .core import EffectAlgebra, ParseError, _bits

_ZERO = Fraction(0)
_ONE = Fraction(1)


@dataclass(frozen=True)
class State:
    """Total valuation on an algebra's carrier, element id -> rational."""

    values: tuple[Fraction, ...]

    def __getitem__(self, i: int) -> Fraction:
        return self.values[i]

    def __len__(self) -> int:
        return len(self.values)


def is_state(alg: EffectAlgebra, values: Sequence[Fraction] | State) -> tuple[bool, Optional[str]]:
    """Exact check of the state axioms; returns the first violated
    constraint as text."""
    vals = values.values if isinstance(values, State) else tuple(Fraction(v) for v in values)
    if len(vals) != alg.n:
        return False, f"expected {alg.n} values, got {len(vals)}"
    for a, v in enumerate(vals):
        if not (0 <= v <= 1):
            return False, f"s({a}) = {v} outside [0,1]"
    if vals[alg.one] != 1:
        return False, f"s(one) = {vals[alg.one]} != 1"
    for a, b, c in alg.sum_pairs():
        if vals[a] + vals[b] != vals[c]:
            return False, f"s({a}) + s({b}) != s({c})"
    return True, None


def _sum_triples(alg: EffectAlgebra) -> list[tuple[int, int, int]]:
    """Defined sums (a, b, c) with a <= b and neither operand zero."""
    return [
        (a, b, c)
        for a, b, c in alg.sum_pairs()
        if a != alg.zero and b != alg.zero
    ]


# -- two-valued states ---------------------------------------------------------


def two_valued_states(alg: EffectAlgebra) -> list[State]:
    """All {0,1}-valued states, by backtracking with eager propagation.

    Branches on the least-index undecided element, value 0 before 1, so the
    output is deterministic (lexicographic in the value vectors).
    """
    triples = _sum_triples(alg)
    by_elem: list[list[int]] = [[] for _ in range(alg.n)]
    for t, (a, b, c) in enumerate(triples):
        for x in {a, b, c}:
            by_elem[x].append(t)

    results: list[State] = []
    vals = [-1] * alg.n

    def assign(x: int, v: int, queue: list[int], trail: list[int]) -> bool:
        if vals[x] == v:
            return True
        if vals[x] != -1:
            return False
        vals[x] = v
        trail.append(x)
        queue.append(x)
        return True

    def propagate(queue: list[int], trail: list[int]) -> bool:
        def put(x: int, v: int) -> bool:
            return assign(x, v, queue, trail)

        while queue:
            x = queue.pop()
            for t in by_elem[x]:
                a, b, c = triples[t]
                va, vb, vc = vals[a], vals[b], vals[c]
                if a == b:
                    # 2 s(a) = s(c) over {0,1} forces both to zero
                    if not (put(a, 0) and put(c, 0)):
                        return False
                    continue
                if va == 1:
                    if not (put(b, 0) and put(c, 1)):
                        return False
                elif vb == 1:
                    if not (put(a, 0) and put(c, 1)):
                        return False
                if vc == 0:
                    if not (put(a, 0) and put(b, 0)):
                        return False
                va, vb, vc = vals[a], vals[b], vals[c]
                if va == 0 and vb != -1:
                    if not put(c, vb):
                        return False
                if vb == 0 and va != -1:
                    if not put(c, va):
                        return False
                if vc != -1 and va == 0:
                    if not put(b, vc):
                        return False
                if vc != -1 and vb == 0:
                    if not put(a, vc):
                        return False
                va, vb, vc = vals[a], vals[b], vals[c]
                if -1 not in (va, vb, vc) and va + vb != vc:
                    return False
        return True

    def undo(trail: list[int]) -> None:
        for x in trail:
            vals[x] = -1

    def search(start: int) -> None:
        x = start
        while x < alg.n and vals[x] != -1:
            x += 1
        if x == alg.n:
            state = State(tuple(_ONE if v == 1 else _ZERO for v in vals))
            ok, why = is_state(alg, state)
            assert ok, f"solver produced a non-state: {why}"
            results.append(state)
            return
        for v in (0, 1):
            queue: list[int] = []
            trail: list[int] = []
            if assign(x, v, queue, trail) and propagate(queue, trail):
                search(x + 1)
            undo(trail)

    seed_queue: list[int] = []
    seed_trail: list[int] = []
    if assign(alg.zero, 0, seed_queue, seed_trail) and assign(
        alg.one, 1, seed_queue, seed_trail
    ) and propagate(seed_queue, seed_trail):
        search(0)
    return results


# -- state polytope queries ----------------------------------------------------


@dataclass(frozen=True)
class StateQuery:
    """Equality pins plus an optional extremization target."""

    pins: tuple[tuple[int, Fraction], ...] = ()
    objective: Optional[int] = None
    sense: str = "min"


def _state_rows(alg: EffectAlgebra, pins: Iterable[tuple[int, Fraction]]):
    rows = []
    seen = set()

    def add(coeffs: list[Fraction], rhs: Fraction) -> None:
        key = (tuple(coeffs), rhs)
        if key not in seen:
            seen.add(key)
            rows.append((coeffs, rhs))

    base = lambda: [_ZERO] * alg.n
    r = base()
    r[alg.zero] = _ONE
    add(r, _ZERO)
    r = base()
    r[alg.one] = _ONE
    add(r, _ONE)
    for a, b, c in _sum_triples(alg):
        r = base()
        r[a] += _ONE
        r[b] += _ONE
        r[c] -= _ONE
        add(r, _ZERO)
    for elem, value in pins:
        value = Fraction(value)
        if not 0 <= value <= 1:
            raise ValueError(f"pin s({elem}) = {value} outside [0,1]")
        r = base()
        r[elem] = _ONE
        add(r, value)
    return rows


def lp_feasible(
    alg: EffectAlgebra, pins: Iterable[tuple[int, Fraction]] = ()
) -> Optional[State]:
    """A state satisfying the pins, or None.  Upper bounds s(x) <= 1 are
    implied by the supplement rows s(x) + s(x') = 1 and nonnegativity."""
    res = simplex.solve(alg.n, _state_rows(alg, pins))
    if res.status != simplex.OPTIMAL:
        return None
    state = State(res.x)
    ok, why = is_state(alg, state)
    assert ok, f"LP returned a non-state: {why}"
    return state


def lp_extremize(
    alg: EffectAlgebra,
    target: int,
    sense: str = "min",
    pins: Iterable[tuple[int, Fraction]] = (),
) -> Optional[tuple[Fraction, State]]:
    """Exact optimum of s(target) over the pinned face, with an attaining
    state; None when the face is empty."""
    objective = [_ZERO] * alg.n
    objective[target] = _ONE
    res = simplex.solve(alg.n, _state_rows(alg, pins), objective, sense)
    if res.status == simplex.INFEASIBLE:
        return None
    assert res.status == simplex.OPTIMAL, "state polytope cannot be unbounded"
    state = State(res.x)
    ok, why = is_state(alg, state)
    assert ok, f"LP returned a non-state: {why}"
    return res.value, state


def run_query(alg: EffectAlgebra, query: StateQuery):
    if query.objective is None:
        return lp_feasible(alg, query.pins)
    return lp_extremize(alg, query.objective, query.sense, query.pins)


# -- state-space properties ----------------------------------------------------


def unital_set_check(
    alg: EffectAlgebra, states: Sequence[State]
) -> tuple[bool, Optional[int]]:
    """Every nonzero element must be pinned to 1 by some member."""
    for a in alg.elements():
        if a == alg.zero:
            continue
        if not any(s[a] == 1 for s in states):
            return False, a
    return True, None


def unital_full_check(alg: EffectAlgebra) -> tuple[bool, Optional[int]]:
    """Unitality of the whole state space, one feasibility LP per element."""
    for a in alg.elements():
        if a == alg.zero:
            continue
        if lp_feasible(alg, pins=[(a, _ONE)]) is None:
            return False, a
    return True, None


def sod_set_check(
    alg: EffectAlgebra, states: Sequence[State]
) -> tuple[bool, Optional[tuple[int, int]]]:
    """Strong order determination: a not<= b needs s(a) = 1 > s(b)."""
    for a in alg.elements():
        for b in alg.elements():
            if a == b or alg.leq(a, b):
                continue
            if not any(s[a] == 1 and s[b] < 1 for s in states):
                return False, (a, b)
    return True, None


def sod_full_check(alg: EffectAlgebra) -> tuple[bool, Optional[tuple[int, int]]]:
    """Full-space version: a witness for (a, b) exists iff minimizing s(b)
    over the face s(a) = 1 is feasible with optimum < 1; exact arithmetic
    makes the strict comparison sound."""
    for a in alg.elements():
        for b in alg.elements():
            if a == b or alg.leq(a, b):
                continue
            res = lp_extremize(alg, b, "min", pins=[(a, _ONE)])
            if res is None or res[0] >= 1:
                return False, (a, b)
    return True, None


def jp_state_check(
    alg: EffectAlgebra, state: State
) -> tuple[bool, Optional[tuple[int, int]]]:
    """Jauch-Piron property of one state: whenever s(a) = s(b) = 1 some
    common lower bound c has s(c) = 1."""
    pinned = [a for a in alg.elements() if state[a] == 1]
    for i, a in enumerate(pinned):
        for b in pinned[i + 1 :]:
            if not any(state[c] == 1 for c in alg.lower_cone(a, b)):
                return False, (a, b)
    return True, None


@dataclass(frozen=True)
class JPFailure:
    pair: tuple[int, int]
    state: State  # explicit non-Jauch-Piron witness


def jp_algebra_check(alg: EffectAlgebra) -> tuple[bool, Optional[JPFailure]]:
    """Whether EVERY state is Jauch-Piron, via the face covering argument.

    For a pair (a, b) the face F = {s : s(a) = s(b) = 1} is a polytope and
    each {s in F : s(c) = 1} is a face of F.  A nonempty polytope is not a
    finite union of proper faces, so all of F satisfies the Jauch-Piron
    condition at (a, b) iff min over F of s(c) equals 1 for a single
    common lower bound c.  When no such c exists, averaging one minimizer
    per c yields an explicit state violating the condition, which is
    returned and re-verified.  This reduction is cross-validated against a
    sampling oracle in the test suite.
    """
    for a in alg.elements():
        for b in alg.elements():
            if b <= a or alg.leq(a, b) or alg.leq(b, a):
                # comparable pairs are witnessed by the smaller element
                continue
            pins = [(a, _ONE), (b, _ONE)]
            if lp_feasible(alg, pins) is None:
                continue
            cone = alg.lower_cone(a, b)
            minimizers = []
            certified = False
            for c in cone:
                res = lp_extremize(alg, c, "min", pins)
                assert res is not None, "face vanished between queries"
                value, minimizer = res
                if value == 1:
                    certified = True
                    break
                minimizers.append(minimizer)
            if certified:
                continue
            weight = Fraction(1, len(minimizers))
            witness = convex_combine(minimizers, [weight] * len(minimizers))
            ok, fail_pair = jp_state_check(alg, witness)
            assert not ok and fail_pair is not None, "witness must refute Jauch-Piron"
            return False, JPFailure(pair=(a, b), state=witness)
    return True, None


def convex_combine(states: Sequence[State], weights: Sequence[Fraction]) -> State:
    """Finite convex combination with strictly positive weights."""
    if len(states) != len(weights) or not states:
        raise ValueError("need equally many states and weights, at least one")
    weights = [Fraction(w) for w in weights]
    if any(w <= 0 for w in weights):
        raise ValueError("weights must be positive")
    if sum(weights) != 1:
        raise ValueError(f"weights sum to {sum(weights)}, not 1")
    n = len(states[0])
    vals = [_ZERO] * n
    for s, w in zip(states, weights):
        if len(s) != n:
            raise ValueError("state length mismatch")
        for i in range(n):
            vals[i] += w * s[i]
    return State(tuple(vals))


# -- .st text format -----------------------------------------------------------
#
#   state <name>
#   val <i> <p>/<q>
#
# Omitted elements are filled in only when derivable from the given ones:
# s(zero) = 0 and s(x') = 1 - s(x).  Anything else left open is an error.


def parse_states(text: str, alg: EffectAlgebra) -> list[tuple[str, State]]:
    out: list[tuple[str, State]] = []
    name: Optional[str] = None
    given: dict[int, Fraction] = {}

    def flush() -> None:
        if name is None:
            return
        vals: list[Optional[Fraction]] = [None] * alg.n
        vals[alg.zero] = _ZERO
        for i, v in given.items():
            vals[i] = v
        changed = True
        while changed:
            changed = False
            for i in range(alg.n):
                j = alg.supplement(i)
                if vals[i] is not None and vals[j] is None:
                    vals[j] = 1 - vals[i]
                    changed = True
        missing = [i for i, v in enumerate(vals) if v is None]
        if missing:
            raise ParseError(
                f"state {name!r}: value for element {missing[0]} neither given nor derivable"
            )
        out.append((name, State(tuple(vals))))

    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        try:
            if parts[0] == "state":
                flush()
                name = " ".join(parts[1:]) or f"state{len(out)}"
                given = {}
            elif parts[0] == "val":
                if name is None:
                    raise ParseError(f"line {lineno}: 'val' before 'state'")
                i = int(parts[1])
                if not 0 <= i < alg.n:
                    raise ParseError(f"line {lineno}: element {i} out of range")
                v = Fraction(parts[2])
                if i in given and given[i] != v:
                    raise ParseError(f"line {lineno}: conflicting value for element {i}")
                given[i] = v
            else:
                raise ParseError(f"line {lineno}: unknown keyword {parts[0]!r}")
        except ParseError:
            raise
        except Exception as exc:
            raise ParseError(f"line {lineno}: {raw.strip()!r}: {exc}") from None
    flush()
    return out


def load_states(path: str, alg: EffectAlgebra, require_valid: bool = True) -> list[tuple[str, State]]:
    with open(path, "r", encoding="utf-8") as fh:
        named = parse_states(fh.read(), alg)
    if require_valid:
        for label, state in named:
            ok, why = is_state(alg, state)
            if not ok:
                raise ParseError(f"state {label!r} is not a state: {why}")
    return named
