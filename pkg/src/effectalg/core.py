"""Finite effect algebras represented as partial sum tables.

An algebra lives on a carrier {0, .., n-1} with distinguished zero and one
and a symmetric partial binary sum.  ``validate`` checks the defining
axioms (commutativity, associativity including existence propagation,
unique orthosupplement, the zero-one law) and derives the order, the
orthosupplement map and the partial difference that every other module
consumes.  Validated algebras are immutable and safe to share between
threads; validation itself is single-threaded.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Mapping, Optional, Sequence

MAX_CARRIER = 4096

# Derived-structure sanity checks are O(n^3); skipped above this size.
_SANITY_LIMIT = 64


class ParseError(ValueError):
    """Malformed .ea / .omp / .st input."""


class AxiomError(ValueError):
    """Raised by validate() when a table breaks the axioms."""

    def __init__(self, violations: Sequence["Violation"]):
        self.violations = list(violations)
        shown = "; ".join(str(v) for v in self.violations[:8])
        more = "" if len(self.violations) <= 8 else f" (+{len(self.violations) - 8} more)"
        super().__init__(f"{len(self.violations)} axiom violation(s): {shown}{more}")


@dataclass(frozen=True)
class Violation:
    """One broken axiom, naming the offending elements."""

    axiom: str
    elements: tuple[int, ...]
    detail: str = ""

    def __str__(self) -> str:
        els = ",".join(map(str, self.elements))
        if self.detail:
            return f"{self.axiom}[{els}]: {self.detail}"
        return f"{self.axiom}[{els}]"


@dataclass(frozen=True)
class SumTable:
    """Raw partial sum table before validation.

    ``sums`` maps normalized pairs (i, j), i <= j, to the sum element.
    Sums with zero are implicit (the validator inserts a + 0 = a); an
    explicit entry disagreeing with that is kept aside as a conflict and
    reported as a violation rather than an exception.
    """

    n: int
    one: int
    sums: Mapping[tuple[int, int], int]
    zero: int = 0
    conflicts: tuple[tuple[int, int, int, int], ...] = ()

    @classmethod
    def from_entries(
        cls,
        n: int,
        one: int,
        entries: Sequence[tuple[int, int, int]],
        zero: int = 0,
    ) -> "SumTable":
        """Build a table from (i, j, i+j) triples, collecting duplicates
        with conflicting values instead of silently overwriting them."""
        if not (0 <= zero < n and 0 <= one < n):
            raise ValueError(f"zero/one out of range for carrier size {n}")
        sums: dict[tuple[int, int], int] = {}
        conflicts: list[tuple[int, int, int, int]] = []
        for i, j, k in entries:
            if not (0 <= i < n and 0 <= j < n and 0 <= k < n):
                raise ValueError(f"sum entry ({i},{j})={k} out of range")
            key = (i, j) if i <= j else (j, i)
            if key in sums and sums[key] != k:
                conflicts.append((key[0], key[1], sums[key], k))
            else:
                sums[key] = k
        return cls(n=n, one=one, sums=sums, zero=zero, conflicts=tuple(conflicts))


def check_table(table: SumTable) -> list[Violation]:
    """Exhaustively collect axiom violations; empty list means valid."""
    n, zero, one = table.n, table.zero, table.one
    if n < 2 or n > MAX_CARRIER:
        raise ValueError(f"carrier size {n} outside supported range [2, {MAX_CARRIER}]")
    if zero == one:
        raise ValueError("zero and one must differ")

    out: list[Violation] = []
    for i, j, kept, clash in table.conflicts:
        out.append(Violation("conflicting-entry", (i, j), f"values {kept} and {clash}"))

    matrix: list[list[Optional[int]]] = [[None] * n for _ in range(n)]
    for x in range(n):
        matrix[zero][x] = x
        matrix[x][zero] = x
    for (i, j), k in sorted(table.sums.items()):
        if i == zero or j == zero:
            a = j if i == zero else i
            if k != a:
                out.append(Violation("zero-sum", (i, j), f"a + 0 must be a, got {k}"))
            continue
        matrix[i][j] = k
        matrix[j][i] = k

    # Zero-one law: a + 1 defined forces a = 0.
    for a in range(n):
        if a != zero and matrix[a][one] is not None:
            out.append(Violation("zero-one-law", (a, one), "a + 1 defined with a != 0"))

    # Commutativity holds by the symmetric storage; re-assert anyway.
    for a in range(n):
        for b in range(a + 1, n):
            if matrix[a][b] != matrix[b][a]:
                out.append(Violation("commutativity", (a, b)))

    # Unique orthosupplement.
    for a in range(n):
        partners = [x for x in range(n) if matrix[a][x] == one]
        if not partners:
            out.append(Violation("orthosupplement-existence", (a,), "no x with a + x = 1"))
        elif len(partners) > 1:
            out.append(
                Violation(
                    "orthosupplement-uniqueness",
                    (a, *partners),
                    "several x with a + x = 1",
                )
            )

    # Associativity with existence propagation: if (a+b)+c exists then
    # b+c and a+(b+c) exist and agree with it.  Scanning all ordered
    # triples also covers the mirrored direction via commutativity.
    for a in range(n):
        row_a = matrix[a]
        for b in range(n):
            s = row_a[b]
            if s is None:
                continue
            row_s = matrix[s]
            row_b = matrix[b]
            for c in range(n):
                t = row_s[c]
                if t is None:
                    continue
                u = row_b[c]
                if u is None:
                    out.append(
                        Violation("associativity", (a, b, c), "(a+b)+c exists, b+c does not")
                    )
                elif row_a[u] is None:
                    out.append(
                        Violation("associativity", (a, b, c), "(a+b)+c exists, a+(b+c) does not")
                    )
                elif row_a[u] != t:
                    out.append(
                        Violation("associativity", (a, b, c), "parenthesizations disagree")
                    )
    return out


@dataclass(frozen=True, eq=False)
class EffectAlgebra:
    """A validated effect algebra with its derived order structure."""

    n: int
    zero: int
    one: int
    sum_of: tuple[tuple[Optional[int], ...], ...]
    supplements: tuple[int, ...]
    up_masks: tuple[int, ...]
    down_masks: tuple[int, ...]
    diff: Mapping[tuple[int, int], int]
    names: tuple[str, ...]

    # -- primitive operations -------------------------------------------------

    def elements(self) -> range:
        return range(self.n)

    def oplus(self, a: int, b: int) -> Optional[int]:
        return self.sum_of[a][b]

    def defined(self, a: int, b: int) -> bool:
        return self.sum_of[a][b] is not None

    def leq(self, a: int, b: int) -> bool:
        return bool(self.up_masks[a] >> b & 1)

    def supplement(self, a: int) -> int:
        return self.supplements[a]

    def ominus(self, b: int, a: int) -> int:
        """b - a, defined exactly when a <= b."""
        try:
            return self.diff[(b, a)]
        except KeyError:
            raise ValueError(f"ominus undefined: {a} is not below {b}") from None

    def orthogonal(self, a: int, b: int) -> bool:
        return self.sum_of[a][b] is not None

    def lower_cone(self, a: int, b: int) -> tuple[int, ...]:
        """All c with c <= a and c <= b; always contains zero."""
        return tuple(_bits(self.down_masks[a] & self.down_masks[b]))

    def below(self, a: int) -> tuple[int, ...]:
        return tuple(_bits(self.down_masks[a]))

    def label(self, a: int) -> str:
        return self.names[a]

    def sum_pairs(self) -> Iterator[tuple[int, int, int]]:
        """All defined sums as (a, b, a+b) with a <= b, zero rows included."""
        for a in range(self.n):
            for b in range(a, self.n):
                c = self.sum_of[a][b]
                if c is not None:
                    yield (a, b, c)

    def hasse_covers(self) -> list[tuple[int, int]]:
        """All pairs a < b with nothing strictly between."""
        covers = []
        for a in range(self.n):
            strict_up = self.up_masks[a] & ~(1 << a)
            for b in _bits(strict_up):
                between = strict_up & self.down_masks[b] & ~(1 << b)
                if between == 0:
                    covers.append((a, b))
        return covers

    def table_text(self) -> str:
        """Render as .ea lines (explicit sums only, zero row omitted)."""
        lines = [f"ea {self.n}", f"one {self.one}"]
        for a, b, c in self.sum_pairs():
            if a != self.zero and b != self.zero:
                lines.append(f"sum {a} {b} {c}")
        for i, name in enumerate(self.names):
            if name != str(i):
                lines.append(f"name {i} {name}")
        return "\n".join(lines) + "\n"


def _bits(mask: int) -> Iterator[int]:
    i = 0
    while mask:
        if mask & 1:
            yield i
        mask >>= 1
        i += 1


def validate(table: SumTable, names: Optional[Sequence[str]] = None) -> EffectAlgebra:
    """Validate a sum table and derive the order structure.

    Raises AxiomError carrying every violation found; use check_table for
    the non-raising variant.
    """
    violations = check_table(table)
    if violations:
        raise AxiomError(violations)

    n, zero, one = table.n, table.zero, table.one
    matrix: list[list[Optional[int]]] = [[None] * n for _ in range(n)]
    for x in range(n):
        matrix[zero][x] = x
        matrix[x][zero] = x
    for (i, j), k in table.sums.items():
        if i != zero and j != zero:
            matrix[i][j] = k
            matrix[j][i] = k

    supplements = [0] * n
    for a in range(n):
        supplements[a] = next(x for x in range(n) if matrix[a][x] == one)

    up = [0] * n
    diff: dict[tuple[int, int], int] = {}
    for a in range(n):
        for c in range(n):
            b = matrix[a][c]
            if b is None:
                continue
            up[a] |= 1 << b
            prev = diff.get((b, a))
            if prev is not None and prev != c:
                # Cancellation makes the difference unique; reaching this
                # would mean check_table let an invalid table through.
                raise AssertionError(f"non-unique difference for ({b},{a})")
            diff[(b, a)] = c
    down = [0] * n
    for a in range(n):
        for b in _bits(up[a]):
            down[b] |= 1 << a

    _derived_sanity(n, zero, one, matrix, supplements, up, diff)

    if names is None:
        names = tuple(str(i) for i in range(n))
    else:
        if len(names) != n:
            raise ValueError("names length must match carrier size")
        names = tuple(names)

    return EffectAlgebra(
        n=n,
        zero=zero,
        one=one,
        sum_of=tuple(tuple(row) for row in matrix),
        supplements=tuple(supplements),
        up_masks=tuple(up),
        down_masks=tuple(down),
        diff=diff,
        names=names,
    )


def _derived_sanity(n, zero, one, matrix, supplements, up, diff) -> None:
    """Theorem-backed consequences of the axioms.  A failure here is an
    internal error, not a user error, hence assertions."""
    for a in range(n):
        assert up[zero] >> a & 1, "zero must be least"
        assert up[a] >> one & 1, "one must be greatest"
        assert supplements[supplements[a]] == a, "supplement must be an involution"
    if n > _SANITY_LIMIT:
        return
    for a in range(n):
        for b in range(n):
            if a != b and up[a] >> b & 1:
                assert not up[b] >> a & 1, "antisymmetry"
            if up[a] >> b & 1:
                assert up[supplements[b]] >> supplements[a] & 1, "a<=b implies b'<=a'"
                # transitivity: everything above b is above a
                assert up[b] & ~up[a] == 0, "transitivity"
    # cancellation: a+b <= a+c forces b <= c
    for a in range(n):
        for b in range(n):
            ab = matrix[a][b]
            if ab is None:
                continue
            for c in range(n):
                ac = matrix[a][c]
                if ac is None or not up[ab] >> ac & 1:
                    continue
                assert up[b] >> c & 1, "cancellation"
    # orthogonality: a+b defined iff a <= b'
    for a in range(n):
        for b in range(n):
            assert (matrix[a][b] is not None) == bool(up[a] >> supplements[b] & 1), (
                "orthogonality must match a <= b'"
            )


# -- .ea text format ----------------------------------------------------------
#
#   ea <n>            carrier size; element 0 is zero by convention
#   one <k>           which element is one
#   sum <i> <j> <k>   a defined sum (symmetric entry implied)
#   name <i> <label>  optional display label
#
# '#' starts a comment, tokens are whitespace separated.


def parse_ea(text: str) -> tuple[SumTable, tuple[str, ...]]:
    n: Optional[int] = None
    one: Optional[int] = None
    entries: list[tuple[int, int, int]] = []
    names: dict[int, str] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        kw, args = parts[0], parts[1:]
        try:
            if kw == "ea":
                (n,) = map(int, args)
            elif kw == "one":
                (one,) = map(int, args)
            elif kw == "sum":
                i, j, k = map(int, args)
                entries.append((i, j, k))
            elif kw == "name":
                idx = int(args[0])
                names[idx] = " ".join(args[1:])
            else:
                raise ParseError(f"line {lineno}: unknown keyword {kw!r}")
        except ParseError:
            raise
        except Exception as exc:
            raise ParseError(f"line {lineno}: {raw.strip()!r}: {exc}") from None
    if n is None:
        raise ParseError("missing 'ea <n>' header")
    if one is None:
        raise ParseError("missing 'one <k>' line")
    try:
        table = SumTable.from_entries(n, one, entries)
    except ValueError as exc:
        raise ParseError(str(exc)) from None
    for idx in names:
        if not 0 <= idx < n:
            raise ParseError(f"name index {idx} out of range")
    label_list = tuple(names.get(i, str(i)) for i in range(n))
    return table, label_list


def load_ea(path: str) -> tuple[SumTable, tuple[str, ...]]:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_ea(fh.read())


def hasse_dot(alg: EffectAlgebra) -> str:
    """Hasse diagram in DOT syntax: nodes, edges and labels only."""
    lines = ["digraph hasse {"]
    for a in alg.elements():
        lines.append(f'  n{a} [label="{alg.label(a)}"];')
    for a, b in alg.hasse_covers():
        lines.append(f"  n{a} -> n{b};")
    lines.append("}")
    return "\n".join(lines) + "\n"
