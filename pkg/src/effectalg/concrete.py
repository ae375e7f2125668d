"""Concrete orthomodular posets built from set systems.

A set system is a family of subsets of {0, .., m-1}, stored as bitmasks,
that is closed under complement and under union of disjoint members.  Such
a family carries an effect algebra whose sum is disjoint union, whose
order is inclusion and whose orthosupplement is the set complement; every
element is principal, so the algebra is an orthomodular poset.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from . import core
from .states import State
from fractions import Fraction

# Dense closure explores up to 2^m candidate blocks.
MAX_GROUND = 24


@dataclass(frozen=True)
class SystemViolation:
    kind: str  # "complement" | "disjoint-union"
    blocks: tuple[int, ...]

    def __str__(self) -> str:
        masks = ",".join(format(b, "b") for b in self.blocks)
        return f"{self.kind}[{masks}]"


@dataclass(frozen=True, eq=False)
class SetSystem:
    """Validated block family; blocks sorted by (popcount, mask)."""

    m: int
    blocks: tuple[int, ...]
    labels: tuple[str, ...]

    def full(self) -> int:
        return (1 << self.m) - 1

    def index(self, mask: int) -> int:
        return self.blocks.index(mask)

    def block_label(self, i: int) -> str:
        return self.labels[i]


def _block_order(blocks: Iterable[int]) -> tuple[int, ...]:
    return tuple(sorted(set(blocks), key=lambda b: (bin(b).count("1"), b)))


def _default_label(mask: int, m: int) -> str:
    if mask == 0:
        return "{}"
    if mask == (1 << m) - 1:
        return "X"
    return "{" + ",".join(str(i) for i in range(m) if mask >> i & 1) + "}"


def check_system(m: int, blocks: Sequence[int]) -> list[SystemViolation]:
    """List every missing complement and disjoint union."""
    if not (1 <= m <= MAX_GROUND):
        raise ValueError(f"ground size {m} outside supported range [1, {MAX_GROUND}]")
    full = (1 << m) - 1
    fam = set(blocks)
    if not fam:
        raise ValueError("block family must be nonempty")
    for b in fam:
        if b & ~full:
            raise ValueError(f"block {b:#x} exceeds {m} ground points")
    out: list[SystemViolation] = []
    for b in sorted(fam):
        if full ^ b not in fam:
            out.append(SystemViolation("complement", (b,)))
    for a in sorted(fam):
        for b in sorted(fam):
            if a < b and a & b == 0 and a | b not in fam:
                out.append(SystemViolation("disjoint-union", (a, b)))
    return out


def validate_system(
    m: int, blocks: Sequence[int], labels: Optional[dict[int, str]] = None
) -> SetSystem:
    violations = check_system(m, blocks)
    if violations:
        raise core.AxiomError([core.Violation(v.kind, v.blocks) for v in violations])
    ordered = _block_order(blocks)
    labels = labels or {}
    names = tuple(labels.get(b, _default_label(b, m)) for b in ordered)
    return SetSystem(m=m, blocks=ordered, labels=names)


def closure(m: int, seed_blocks: Sequence[int]) -> SetSystem:
    """Least family containing the seeds, the empty set and the full set,
    closed under complement and disjoint union.  Terminates because there
    are at most 2^m blocks."""
    if not (1 <= m <= MAX_GROUND):
        raise ValueError(f"ground size {m} outside supported range [1, {MAX_GROUND}]")
    full = (1 << m) - 1
    fam = set(seed_blocks) | {0, full}
    for b in fam:
        if b & ~full:
            raise ValueError(f"seed block {b:#x} exceeds {m} ground points")
    changed = True
    while changed:
        changed = False
        for b in list(fam):
            if full ^ b not in fam:
                fam.add(full ^ b)
                changed = True
        current = sorted(fam)
        for i, a in enumerate(current):
            for b in current[i + 1 :]:
                if a & b == 0 and a | b not in fam:
                    fam.add(a | b)
                    changed = True
    return validate_system(m, sorted(fam))


def to_algebra(system: SetSystem) -> core.EffectAlgebra:
    """Disjoint union as the partial sum; element ids follow block order."""
    idx = {b: i for i, b in enumerate(system.blocks)}
    entries = []
    for i, a in enumerate(system.blocks):
        for j in range(i, len(system.blocks)):
            b = system.blocks[j]
            if a & b == 0:
                entries.append((i, j, idx[a | b]))
    table = core.SumTable.from_entries(
        len(system.blocks), idx[system.full()], entries
    )
    return core.validate(table, names=system.labels)


def point_state(system: SetSystem, x: int) -> State:
    """The two-valued state carried by ground point x: 1 on blocks
    containing x, 0 elsewhere.  Values align with to_algebra element ids."""
    if not 0 <= x < system.m:
        raise ValueError(f"point {x} outside ground set of size {system.m}")
    one, zero = Fraction(1), Fraction(0)
    return State(tuple(one if b >> x & 1 else zero for b in system.blocks))


def even_subsets(m: int) -> SetSystem:
    """All even-cardinality subsets of an m-point ground set.  Rejects odd
    m: the complement of an even set would be odd."""
    if m % 2:
        raise ValueError("even_subsets needs an even ground size")
    blocks = [b for b in range(1 << m) if bin(b).count("1") % 2 == 0]
    return validate_system(m, blocks)


def powerset(m: int) -> SetSystem:
    return validate_system(m, list(range(1 << m)))


# -- .omp text format ----------------------------------------------------------
#
#   base <m>
#   block <label>: <i> <j> ...
#
# '#' starts a comment.  Points are integers in [0, m); the CLI may route
# the parsed blocks through closure().


def parse_omp(text: str) -> tuple[int, list[int], dict[int, str]]:
    m: Optional[int] = None
    blocks: list[int] = []
    labels: dict[int, str] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split(None, 1)
        kw = parts[0]
        rest = parts[1] if len(parts) > 1 else ""
        try:
            if kw == "base":
                m = int(rest)
            elif kw == "block":
                if m is None:
                    raise core.ParseError(f"line {lineno}: 'block' before 'base'")
                if ":" not in rest:
                    raise core.ParseError(f"line {lineno}: expected 'block <label>: points'")
                label, pts = rest.split(":", 1)
                mask = 0
                for tok in pts.split():
                    p = int(tok)
                    if not 0 <= p < m:
                        raise core.ParseError(f"line {lineno}: point {p} out of range")
                    mask |= 1 << p
                blocks.append(mask)
                labels.setdefault(mask, label.strip())
            else:
                raise core.ParseError(f"line {lineno}: unknown keyword {kw!r}")
        except core.ParseError:
            raise
        except Exception as exc:
            raise core.ParseError(f"line {lineno}: {raw.strip()!r}: {exc}") from None
    if m is None:
        raise core.ParseError("missing 'base <m>' header")
    if not blocks:
        raise core.ParseError("no blocks given")
    return m, blocks, labels


def load_omp(path: str, close: bool = False) -> SetSystem:
    with open(path, "r", encoding="utf-8") as fh:
        m, blocks, labels = parse_omp(fh.read())
    if close:
        sys_ = closure(m, blocks)
        named = {b: labels[b] for b in labels if b in sys_.blocks}
        return validate_system(sys_.m, sys_.blocks, named)
    return validate_system(m, blocks, labels)
