# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled implementations of the combinatorial hot loops.

Mirrors ``monoclose._kernels_py`` exactly: same functions, same outputs on
every accepted input.  Arithmetic runs on int64, which is safe because the
dispatcher in ``monoclose.kernels`` only routes vectors with coordinates
below 2**30 here.  Separating functionals arrive through the membership
callback and are not pre-screened, so ``box_closure_scan`` checks each one
before caching it and silently declines any whose dot products could leave
int64; the oracle is then simply consulted more often, results do not change.
"""

from cpython.mem cimport PyMem_Free, PyMem_Malloc

from .errors import GeneratorBudgetError

BACKEND_NAME = "c"

# Worst-case cached dot products must stay below this.
cdef long long _SAFE_LIMIT = (<long long>1) << 62


cdef long long* _alloc(Py_ssize_t count) except NULL:
    cdef long long* buf = <long long*>PyMem_Malloc(count * sizeof(long long))
    if buf == NULL:
        raise MemoryError()
    return buf


cdef int _fill_flat(long long* buf, list vectors, Py_ssize_t n) except -1:
    # Rows must all have length n; caller guarantees it.
    cdef Py_ssize_t i = 0, j
    cdef tuple v
    for v in vectors:
        for j in range(n):
            buf[i] = v[j]
            i += 1
    return 0


def minimal_antichain(vectors):
    """Return the componentwise-minimal elements of ``vectors``, lex-sorted."""
    distinct = sorted(set(vectors), key=lambda v: (sum(v), v))
    cdef Py_ssize_t total = len(distinct)
    if total == 0:
        return []
    cdef Py_ssize_t n = len(distinct[0])
    if n == 0:
        return [()]
    cdef long long* flat = _alloc(total * n)
    cdef long long* degs = <long long*>NULL
    cdef Py_ssize_t* kept = <Py_ssize_t*>NULL
    cdef Py_ssize_t kept_len = 0
    cdef Py_ssize_t i, jj, j, c
    cdef long long dv
    cdef bint dominated, ok
    out = []
    try:
        _fill_flat(flat, distinct, n)
        degs = _alloc(total)
        for i in range(total):
            dv = 0
            for c in range(n):
                dv += flat[i * n + c]
            degs[i] = dv
        kept = <Py_ssize_t*>PyMem_Malloc(total * sizeof(Py_ssize_t))
        if kept == NULL:
            raise MemoryError()
        for i in range(total):
            dv = degs[i]
            dominated = False
            for jj in range(kept_len):
                j = kept[jj]
                if degs[j] >= dv:
                    break
                ok = True
                for c in range(n):
                    if flat[j * n + c] > flat[i * n + c]:
                        ok = False
                        break
                if ok:
                    dominated = True
                    break
            if not dominated:
                kept[kept_len] = i
                kept_len += 1
                out.append(distinct[i])
    finally:
        PyMem_Free(flat)
        PyMem_Free(degs)
        PyMem_Free(kept)
    out.sort()
    return out


def pair_sums_antichain(left, right):
    """Minimal antichain of all pairwise sums ``a + b``."""
    cdef list ls = list(left)
    cdef list rs = list(right)
    if not ls or not rs:
        return minimal_antichain(
            {tuple(x + y for x, y in zip(a, b)) for a in ls for b in rs}
        )
    cdef Py_ssize_t nl = len(ls), nr = len(rs)
    cdef Py_ssize_t n = len(ls[0])
    cdef long long* lf = _alloc(max(nl * n, 1))
    cdef long long* rf = <long long*>NULL
    cdef Py_ssize_t i, j, c
    sums = set()
    try:
        _fill_flat(lf, ls, n)
        rf = _alloc(max(nr * n, 1))
        _fill_flat(rf, rs, n)
        for i in range(nl):
            for j in range(nr):
                sums.add(
                    tuple(
                        [lf[i * n + c] + rf[j * n + c] for c in range(n)]
                    )
                )
    finally:
        PyMem_Free(lf)
        PyMem_Free(rf)
    return minimal_antichain(sums)


def dominates_any(gens, v):
    """True if some g in gens satisfies g <= v componentwise."""
    cdef tuple vv = tuple(v)
    cdef Py_ssize_t n = len(vv)
    cdef Py_ssize_t c
    cdef long long target, coord
    cdef bint ok
    cdef tuple g
    for g in gens:
        ok = True
        for c in range(n):
            coord = g[c]
            target = vv[c]
            if coord > target:
                ok = False
                break
        if ok:
            return True
    return False


cdef class _Scan:
    """State for one box walk: domination list, separator cache, output."""

    cdef Py_ssize_t n
    cdef long long* bounds
    cdef long long* prefix
    cdef long long* dom      # flattened vectors, dom_len rows
    cdef Py_ssize_t dom_len, dom_cap
    cdef long long* seps     # rows of (n nums, den, n+1 suffix maxima)
    cdef Py_ssize_t sep_len, sep_cap, sep_row
    cdef long long* swap_tmp
    cdef object member
    cdef object budget
    cdef list found

    def __cinit__(self):
        self.bounds = NULL
        self.prefix = NULL
        self.dom = NULL
        self.seps = NULL
        self.swap_tmp = NULL

    def __dealloc__(self):
        PyMem_Free(self.bounds)
        PyMem_Free(self.prefix)
        PyMem_Free(self.dom)
        PyMem_Free(self.seps)
        PyMem_Free(self.swap_tmp)

    cdef int setup(self, tuple bounds, list seeds, object member, object budget) except -1:
        cdef Py_ssize_t i
        self.n = len(bounds)
        self.member = member
        self.budget = budget
        self.found = []
        self.sep_row = 2 * self.n + 2
        self.bounds = _alloc(self.n)
        self.prefix = _alloc(self.n)
        self.swap_tmp = _alloc(self.sep_row)
        for i in range(self.n):
            self.bounds[i] = bounds[i]
            self.prefix[i] = 0
        self.dom_len = 0
        self.dom_cap = max(len(seeds) * 2, 16)
        self.dom = _alloc(self.dom_cap * self.n)
        for s in seeds:
            self.push_dom(s)
        self.sep_len = 0
        self.sep_cap = 16
        self.seps = _alloc(self.sep_cap * self.sep_row)
        return 0

    cdef int push_dom(self, object vec) except -1:
        cdef Py_ssize_t i
        cdef long long* grown
        if self.dom_len == self.dom_cap:
            grown = _alloc(self.dom_cap * 2 * self.n)
            for i in range(self.dom_len * self.n):
                grown[i] = self.dom[i]
            PyMem_Free(self.dom)
            self.dom = grown
            self.dom_cap *= 2
        for i in range(self.n):
            self.dom[self.dom_len * self.n + i] = vec[i]
        self.dom_len += 1
        return 0

    cdef bint dominated(self) except? -1:
        # Checks self.prefix; hits are swapped to the front of the list
        # (consecutive box points tend to share a dominator).
        cdef Py_ssize_t idx, c
        cdef long long tmp
        cdef bint ok
        for idx in range(self.dom_len):
            ok = True
            for c in range(self.n):
                if self.dom[idx * self.n + c] > self.prefix[c]:
                    ok = False
                    break
            if ok:
                if idx:
                    for c in range(self.n):
                        tmp = self.dom[c]
                        self.dom[c] = self.dom[idx * self.n + c]
                        self.dom[idx * self.n + c] = tmp
                return True
        return False

    cdef bint outside_by_cache(self) except? -1:
        cdef Py_ssize_t idx, c, base
        cdef long long acc, tmp
        for idx in range(self.sep_len):
            base = idx * self.sep_row
            acc = 0
            for c in range(self.n):
                acc += self.seps[base + c] * self.prefix[c]
            if acc < self.seps[base + self.n]:
                if idx:
                    for c in range(self.sep_row):
                        tmp = self.seps[c]
                        self.seps[c] = self.seps[base + c]
                        self.seps[base + c] = tmp
                return True
        return False

    cdef int push_sep(self, object nums, object den) except -1:
        # Decline separators whose cached dot products might not fit int64;
        # the pure backend would keep them, but dropping one only means the
        # oracle answers a few more queries.  Output is unaffected.
        cdef Py_ssize_t i, base
        cdef long long* grown
        suffix = [0] * (self.n + 1)
        for i in range(self.n - 1, -1, -1):
            coef = nums[i]
            if coef < 0 or coef >= _SAFE_LIMIT:
                return 0
            suffix[i] = suffix[i + 1] + coef * self.bounds[i]
        if den >= _SAFE_LIMIT or suffix[0] >= _SAFE_LIMIT:
            return 0
        if self.sep_len == self.sep_cap:
            grown = _alloc(self.sep_cap * 2 * self.sep_row)
            for i in range(self.sep_len * self.sep_row):
                grown[i] = self.seps[i]
            PyMem_Free(self.seps)
            self.seps = grown
            self.sep_cap *= 2
        base = self.sep_len * self.sep_row
        for i in range(self.n):
            self.seps[base + i] = nums[i]
        self.seps[base + self.n] = den
        for i in range(self.n + 1):
            self.seps[base + self.n + 1 + i] = suffix[i]
        self.sep_len += 1
        return 0

    cdef int walk(self, Py_ssize_t depth) except -1:
        cdef long long t
        cdef Py_ssize_t idx, i, base
        cdef long long acc
        cdef bint skip
        cdef tuple v
        if depth == self.n - 1:
            for t in range(self.bounds[depth] + 1):
                self.prefix[depth] = t
                if self.dominated():
                    break
                if self.outside_by_cache():
                    continue
                v = tuple([self.prefix[i] for i in range(self.n)])
                inside, sep = self.member(v)
                if inside:
                    self.found.append(v)
                    if self.budget is not None and len(self.found) > self.budget:
                        raise GeneratorBudgetError(
                            f"more than {self.budget} new generators in box scan"
                        )
                    self.push_dom(v)
                    break
                if sep is not None:
                    self.push_sep(sep[0], sep[1])
            return 0
        for t in range(self.bounds[depth] + 1):
            self.prefix[depth] = t
            skip = False
            for idx in range(self.sep_len):
                base = idx * self.sep_row
                acc = 0
                for i in range(depth + 1):
                    acc += self.seps[base + i] * self.prefix[i]
                if acc + self.seps[base + self.n + 1 + depth + 1] < self.seps[base + self.n]:
                    skip = True
                    break
            if not skip:
                self.walk(depth + 1)
        return 0


def box_closure_scan(bounds, seeds, member, budget=None):
    """Find the minimal lattice points of an up-closed region inside a box.

    Same contract as the pure version: walk the box lexicographically,
    consult ``member`` only when neither a known dominator nor a cached
    separator settles the point, and return the new minimal points in lex
    order.  ``budget`` caps the number of found points.
    """
    cdef tuple b = tuple(bounds)
    if len(b) == 0:
        return []
    cdef _Scan scan = _Scan()
    scan.setup(b, list(seeds), member, budget)
    scan.walk(0)
    scan.found.sort()
    return scan.found
