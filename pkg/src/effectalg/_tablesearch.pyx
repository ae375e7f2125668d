# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled enumeration kernel: backtracking fill of partial sum tables.

Same contract as _tablesearch_py.search_tables (cell order, encoding,
canonical form, pruning rules); see that module for the documentation.
The pure-Python twin stays authoritative for semantics and the test suite
checks the two produce identical output.
"""

DEF MAXN = 8
DEF MAXCELLS = 36   # cells over at most MAXN - 2 middle elements
DEF MAXPERMS = 720  # (MAXN - 2)!

UNDEF = -1


cdef class _Search:
    cdef int n, ncells, nperms
    cdef int T[MAXN][MAXN]
    cdef int supp[MAXN]
    cdef int cell_i[MAXCELLS]
    cdef int cell_j[MAXCELLS]
    cdef int pos[MAXN][MAXN]
    cdef int last_pos[MAXN]
    cdef int perms[MAXPERMS][MAXN]     # sigma per permutation, full maps
    cdef int inv_perms[MAXPERMS][MAXN]
    cdef list results

    def __init__(self, int n):
        cdef int i, j, k, p, t
        if n < 2 or n > MAXN:
            raise ValueError("carrier size outside the compiled kernel's range")
        self.n = n
        self.results = []
        k = 0
        for i in range(2, n):
            for j in range(i, n):
                self.cell_i[k] = i
                self.cell_j[k] = j
                k += 1
        self.ncells = k
        for i in range(n):
            for j in range(n):
                self.pos[i][j] = -2
                self.T[i][j] = -1
            self.T[0][i] = i
            self.T[i][0] = i
            self.supp[i] = -1
            self.last_pos[i] = -1
        for k in range(self.ncells):
            i = self.cell_i[k]
            j = self.cell_j[k]
            self.pos[i][j] = k
            self.pos[j][i] = k
            if k > self.last_pos[i]:
                self.last_pos[i] = k
            if k > self.last_pos[j]:
                self.last_pos[j] = k
        self.supp[0] = 1
        self.supp[1] = 0

        # permutations of the middle elements, as full carrier maps
        import itertools
        cdef int src
        p = 0
        for perm in itertools.permutations(range(2, n)):
            self.perms[p][0] = 0
            self.perms[p][1] = 1
            self.inv_perms[p][0] = 0
            self.inv_perms[p][1] = 1
            for t in range(n - 2):
                src = 2 + t
                self.perms[p][src] = <int> perm[t]
                self.inv_perms[p][<int> perm[t]] = src
            p += 1
        self.nperms = p

    cdef bint is_final(self, int x, int y, int limit):
        if x <= 1 or y <= 1:
            return True
        return self.pos[x][y] < limit

    cdef bint assoc_ok(self, int limit):
        cdef int a, b, c, s, t, u, v
        for a in range(self.n):
            for b in range(self.n):
                s = self.T[a][b]
                if s < 0:
                    continue
                for c in range(self.n):
                    t = self.T[s][c]
                    if t < 0:
                        continue
                    u = self.T[b][c]
                    if u < 0:
                        if self.is_final(b, c, limit):
                            return False
                        continue
                    v = self.T[a][u]
                    if v < 0:
                        if self.is_final(a, u, limit):
                            return False
                        continue
                    if v != t:
                        return False
        return True

    cdef bint is_canonical(self):
        cdef int p, k, i, j, v, mapped, own
        for p in range(self.nperms):
            for k in range(self.ncells):
                i = self.inv_perms[p][self.cell_i[k]]
                j = self.inv_perms[p][self.cell_j[k]]
                v = self.T[i][j]
                mapped = self.perms[p][v] if v >= 2 else v
                own = self.T[self.cell_i[k]][self.cell_j[k]]
                if mapped != own:
                    if mapped < own:
                        return False
                    break
        return True

    cdef void emit(self):
        cdef int k
        if not self.is_canonical():
            return
        enc = []
        for k in range(self.ncells):
            enc.append(self.T[self.cell_i[k]][self.cell_j[k]])
        self.results.append(tuple(enc))

    cdef void fill(self, int k):
        cdef int i, j, v, x, touched_i, touched_j
        cdef bint dead
        if k == self.ncells:
            for x in range(2, self.n):
                if self.supp[x] < 0:
                    return
            if self.assoc_ok(self.ncells):
                self.emit()
            return
        i = self.cell_i[k]
        j = self.cell_j[k]
        for v in range(-1, self.n):
            # a+b cannot be zero nor either operand (cancellation)
            if v == 0 or v == i or v == j:
                continue
            touched_i = 0
            touched_j = 0
            if v == 1:
                if self.supp[i] not in (-1, j) or self.supp[j] not in (-1, i):
                    continue
                if self.supp[i] == -1:
                    self.supp[i] = j
                    touched_i = 1
                if self.supp[j] == -1:
                    self.supp[j] = i
                    touched_j = 1
            self.T[i][j] = v
            self.T[j][i] = v
            dead = False
            if self.last_pos[i] == k and self.supp[i] < 0:
                dead = True
            if self.last_pos[j] == k and self.supp[j] < 0:
                dead = True
            if not dead and self.assoc_ok(k + 1):
                self.fill(k + 1)
            self.T[i][j] = -1
            self.T[j][i] = -1
            if touched_i:
                self.supp[i] = -1
            if touched_j:
                self.supp[j] = -1


def search_tables(int n):
    cdef _Search s = _Search(n)
    s.fill(0)
    s.results.sort()
    return s.results
