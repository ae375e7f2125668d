"""Pure-Python enumeration kernel: backtracking fill of partial sum tables.

Convention shared with the compiled kernel (_tablesearch.pyx): the carrier
is {0, .., n-1} with zero = 0 and one = 1; only cells (i, j) with
2 <= i <= j < n are searched, in row-major order; sums with zero are
implicit and one+x is undefined for x != 0 by the zero-one law.  A table is
encoded as the tuple of its cell values in that order, -1 meaning
undefined.  Canonical form is the minimum encoding over all permutations
of the middle elements (zero and one stay fixed).

The search prunes on sound partial criteria only (supplement uniqueness
and availability, associativity over already-final cells, values that the
cancellation law forbids); completed tables are fully re-checked, so the
output is exactly the set of canonical valid tables, sorted.
"""

from __future__ import annotations

from itertools import permutations

UNDEF = -1


def middle_cells(n: int) -> list[tuple[int, int]]:
    return [(i, j) for i in range(2, n) for j in range(i, n)]


def search_tables(n: int) -> list[tuple[int, ...]]:
    if n < 2:
        raise ValueError("carrier needs at least the elements zero and one")
    cells = middle_cells(n)
    ncells = len(cells)
    pos = {}
    last_pos = {x: -1 for x in range(2, n)}
    for k, (i, j) in enumerate(cells):
        pos[(i, j)] = k
        last_pos[i] = max(last_pos[i], k)
        last_pos[j] = max(last_pos[j], k)

    T = [[UNDEF] * n for _ in range(n)]
    for x in range(n):
        T[0][x] = x
        T[x][0] = x
    supp = [UNDEF] * n
    supp[0] = 1
    supp[1] = 0

    def is_final(x: int, y: int, limit: int) -> bool:
        if x > y:
            x, y = y, x
        if x <= 1:
            return True
        return pos[(x, y)] < limit

    def assoc_ok(limit: int) -> bool:
        # (a+b)+c defined forces b+c and a+(b+c) defined and equal; cells
        # not yet final defer their constraints to a later rescan.
        for a in range(n):
            row_a = T[a]
            for b in range(n):
                s = row_a[b]
                if s < 0:
                    continue
                row_s = T[s]
                row_b = T[b]
                for c in range(n):
                    t = row_s[c]
                    if t < 0:
                        continue
                    u = row_b[c]
                    if u < 0:
                        if is_final(b, c, limit):
                            return False
                        continue
                    v = row_a[u]
                    if v < 0:
                        if is_final(a, u, limit):
                            return False
                        continue
                    if v != t:
                        return False
        return True

    results: list[tuple[int, ...]] = []
    perms = list(permutations(range(2, n)))

    def canonical(enc: tuple[int, ...]) -> tuple[int, ...]:
        best = enc
        for perm in perms:
            sigma = list(range(n))
            inverse = list(range(n))
            for src, dst in zip(range(2, n), perm):
                sigma[src] = dst
                inverse[dst] = src
            mapped = []
            for i, j in cells:
                v = T[inverse[i]][inverse[j]]
                mapped.append(sigma[v] if v >= 2 else v)
            tup = tuple(mapped)
            if tup < best:
                best = tup
        return best

    def emit() -> None:
        enc = tuple(T[i][j] for i, j in cells)
        if enc == canonical(enc):
            results.append(enc)

    def fill(k: int) -> None:
        if k == ncells:
            if all(supp[x] != UNDEF for x in range(2, n)) and assoc_ok(ncells):
                emit()
            return
        i, j = cells[k]
        for v in range(UNDEF, n):
            # a+b cannot be zero nor either operand (cancellation)
            if v in (0, i, j):
                continue
            touched = []
            if v == 1:
                if supp[i] not in (UNDEF, j) or supp[j] not in (UNDEF, i):
                    continue
                if supp[i] == UNDEF:
                    supp[i] = j
                    touched.append(i)
                if supp[j] == UNDEF:
                    supp[j] = i
                    touched.append(j)
            T[i][j] = v
            T[j][i] = v
            dead = False
            for x in (i, j) if i != j else (i,):
                if last_pos[x] == k and supp[x] == UNDEF:
                    dead = True
            if not dead and assoc_ok(k + 1):
                fill(k + 1)
            T[i][j] = UNDEF
            T[j][i] = UNDEF
            for x in touched:
                supp[x] = UNDEF

    fill(0)
    results.sort()
    return results
