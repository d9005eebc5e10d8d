# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled polynomial kernels over a finite field.

Same interface as ``_pykernels``; only the ``prime`` (p < 2**31) and
``table`` descriptor modes are handled here.
"""

from libc.stdlib cimport malloc, free
cimport numpy as cnp
import numpy as np

cnp.import_array()

ctypedef long long i64


cdef class _Field:
    cdef int table
    cdef i64 p
    cdef i64 q
    cdef const int[::1] zecht
    cdef const int[::1] negt
    cdef const int[::1] expt
    cdef const int[::1] logt
    cdef const int[::1] invt

    def __init__(self, F):
        self.q = F.q
        self.p = F.p
        if F.mode == "prime":
            self.table = 0
        elif F.mode == "table":
            self.table = 1
            self.zecht = F.zech_np
            self.negt = F.neg_np
            self.expt = F.exp_np
            self.logt = F.log_np
            self.invt = F.inv_np
        else:
            raise ValueError("generic fields are handled by the Python kernels")

    cdef inline i64 add(self, i64 a, i64 b) noexcept nogil:
        cdef i64 la, d, z
        if self.table:
            if a == 0:
                return b
            if b == 0:
                return a
            la = self.logt[a]
            d = self.logt[b] - la
            if d < 0:
                d += self.q - 1
            z = self.zecht[d]
            if z < 0:
                return 0
            return self.expt[la + z]
        a += b
        return a - self.p if a >= self.p else a

    cdef inline i64 sub(self, i64 a, i64 b) noexcept nogil:
        if self.table:
            return self.add(a, self.negt[b])
        a -= b
        return a + self.p if a < 0 else a

    cdef inline i64 mul(self, i64 a, i64 b) noexcept nogil:
        if self.table:
            if a == 0 or b == 0:
                return 0
            return self.expt[self.logt[a] + self.logt[b]]
        return (a * b) % self.p

    cdef i64 inv(self, i64 a):
        cdef i64 result = 1, base = a % self.p, e = self.p - 2
        if self.table:
            return self.invt[a]
        while e > 0:
            if e & 1:
                result = (result * base) % self.p
            base = (base * base) % self.p
            e >>= 1
        return result


cdef dict _cache = {}


cdef _Field _field(F):
    key = id(F)
    cached = _cache.get(key)
    if cached is not None and cached[0] is F:
        return cached[1]
    fld = _Field(F)
    _cache[key] = (F, fld)
    return fld


cdef i64* _load(list a, Py_ssize_t n) except NULL:
    cdef i64* buf = <i64*> malloc((n if n > 0 else 1) * sizeof(i64))
    cdef Py_ssize_t i
    if buf == NULL:
        raise MemoryError()
    for i in range(n):
        buf[i] = a[i] if i < len(a) else 0
    return buf


cdef list _store(i64* buf, Py_ssize_t n):
    while n > 0 and buf[n - 1] == 0:
        n -= 1
    return [buf[i] for i in range(n)]


cdef Py_ssize_t _mul_into(_Field f, i64* a, Py_ssize_t na, i64* b, Py_ssize_t nb, i64* out) noexcept nogil:
    cdef Py_ssize_t i, j
    cdef i64 x
    for i in range(na + nb - 1):
        out[i] = 0
    if f.table:
        for i in range(na):
            x = a[i]
            if x == 0:
                continue
            for j in range(nb):
                if b[j]:
                    out[i + j] = f.add(out[i + j], f.mul(x, b[j]))
    elif _lazy_ok(f, na if na < nb else nb):
        # products are below p^2, so whole columns can be summed before reducing
        for i in range(na):
            x = a[i]
            if x == 0:
                continue
            for j in range(nb):
                out[i + j] += x * b[j]
        for i in range(na + nb - 1):
            out[i] %= f.p
    else:
        for i in range(na):
            x = a[i]
            if x == 0:
                continue
            for j in range(nb):
                out[i + j] = (out[i + j] + x * b[j]) % f.p
    return na + nb - 1


cdef inline bint _lazy_ok(_Field f, Py_ssize_t terms) noexcept nogil:
    """True when `terms` products of residues can be summed without overflow."""
    cdef i64 pm = f.p - 1
    if pm >= (<i64>1) << 31:
        return False
    return terms < ((<i64>1) << 62) // (pm * pm + 1)


cdef Py_ssize_t _rem_inplace(_Field f, i64* r, Py_ssize_t nr, i64* b, Py_ssize_t nb, i64 inv_lc, i64* quot) noexcept nogil:
    """Reduce r (length nr) modulo b in place; return the new length."""
    cdef Py_ssize_t i, j, base, db = nb - 1
    cdef i64 c
    cdef bint lazy = not f.table and _lazy_ok(f, nr + 1)
    for i in range(nr - 1, db - 1, -1):
        c = r[i]
        if lazy:
            # entries drift outside [0, p) between pivots; normalize on use
            c %= f.p
            if c < 0:
                c += f.p
        if c:
            c = f.mul(c, inv_lc)
            base = i - db
            if quot != NULL:
                quot[base] = c
            if lazy:
                for j in range(db):
                    r[base + j] -= c * b[j]
            else:
                for j in range(db):
                    if b[j]:
                        r[base + j] = f.sub(r[base + j], f.mul(c, b[j]))
        elif quot != NULL:
            quot[i - db] = 0
        r[i] = 0
    if lazy:
        for i in range(db if nr > db else nr):
            r[i] %= f.p
            if r[i] < 0:
                r[i] += f.p
    if nr > db:
        nr = db
    while nr > 0 and r[nr - 1] == 0:
        nr -= 1
    return nr


def mul(F, list a, list b):
    if not a or not b:
        return []
    cdef _Field f = _field(F)
    cdef Py_ssize_t na = len(a), nb = len(b)
    cdef i64* x = _load(a, na)
    cdef i64* y = _load(b, nb)
    cdef i64* out = <i64*> malloc((na + nb) * sizeof(i64))
    try:
        n = _mul_into(f, x, na, y, nb, out)
        return _store(out, n)
    finally:
        free(x); free(y); free(out)


def divmod_(F, list a, list b):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    cdef Py_ssize_t na = len(a), nb = len(b)
    if na < nb:
        return [], list(a)
    cdef _Field f = _field(F)
    cdef i64* r = _load(a, na)
    cdef i64* y = _load(b, nb)
    cdef i64* quot = <i64*> malloc((na - nb + 1) * sizeof(i64))
    cdef i64 inv_lc = f.inv(b[nb - 1])
    try:
        nr = _rem_inplace(f, r, na, y, nb, inv_lc, quot)
        return _store(quot, na - nb + 1), _store(r, nr)
    finally:
        free(r); free(y); free(quot)


def rem(F, list a, list b):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    cdef Py_ssize_t na = len(a), nb = len(b)
    if na < nb:
        return list(a)
    cdef _Field f = _field(F)
    cdef i64* r = _load(a, na)
    cdef i64* y = _load(b, nb)
    cdef i64 inv_lc = f.inv(b[nb - 1])
    try:
        nr = _rem_inplace(f, r, na, y, nb, inv_lc, NULL)
        return _store(r, nr)
    finally:
        free(r); free(y)


cdef Py_ssize_t _mulmod_raw(_Field f, i64* a, Py_ssize_t na, i64* b, Py_ssize_t nb,
                            i64* m, Py_ssize_t nm, i64 inv_lc, i64* scratch, i64* out) noexcept nogil:
    cdef Py_ssize_t n, i
    if na == 0 or nb == 0:
        return 0
    n = _mul_into(f, a, na, b, nb, scratch)
    n = _rem_inplace(f, scratch, n, m, nm, inv_lc, NULL)
    for i in range(n):
        out[i] = scratch[i]
    return n


def mulmod(F, list a, list b, list m):
    cdef _Field f = _field(F)
    cdef Py_ssize_t nm = len(m), na = len(a), nb = len(b)
    if nm == 0:
        raise ZeroDivisionError("polynomial division by zero")
    cdef i64* x = _load(a, na)
    cdef i64* y = _load(b, nb)
    cdef i64* mm = _load(m, nm)
    cdef i64* scratch = <i64*> malloc((na + nb + 1) * sizeof(i64))
    cdef i64 inv_lc = f.inv(m[nm - 1])
    cdef Py_ssize_t n
    try:
        if na == 0 or nb == 0:
            return []
        n = _mul_into(f, x, na, y, nb, scratch)
        n = _rem_inplace(f, scratch, n, mm, nm, inv_lc, NULL)
        return _store(scratch, n)
    finally:
        free(x); free(y); free(mm); free(scratch)


def powmod(F, list a, e, list m):
    cdef _Field f = _field(F)
    cdef Py_ssize_t nm = len(m), d = nm - 1, nb, nr, i
    if nm == 0:
        raise ZeroDivisionError("polynomial division by zero")
    if d == 0:
        return []
    cdef i64 inv_lc = f.inv(m[nm - 1])
    cdef i64* mm = _load(m, nm)
    cdef Py_ssize_t cap = max(len(a), 2 * d) + 1
    cdef i64* base = _load(a, cap)
    cdef i64* res = <i64*> malloc(cap * sizeof(i64))
    cdef i64* scratch = <i64*> malloc(2 * cap * sizeof(i64))
    try:
        nb = _rem_inplace(f, base, len(a), mm, nm, inv_lc, NULL)
        res[0] = 1
        nr = 1
        e = int(e)
        while e > 0:
            if e & 1:
                nr = _mulmod_raw(f, res, nr, base, nb, mm, nm, inv_lc, scratch, res)
            e >>= 1
            if e:
                nb = _mulmod_raw(f, base, nb, base, nb, mm, nm, inv_lc, scratch, base)
        return _store(res, nr)
    finally:
        free(mm); free(base); free(res); free(scratch)


def monic(F, list a):
    cdef Py_ssize_t n = len(a)
    if n == 0 or a[n - 1] == 1:
        return list(a)
    cdef _Field f = _field(F)
    cdef i64 c = f.inv(a[n - 1])
    return [f.mul(x, c) for x in a]


def gcd(F, list a, list b):
    cdef _Field f = _field(F)
    cdef Py_ssize_t na = len(a), nb = len(b), nt, i
    cdef Py_ssize_t cap = max(na, nb) + 1
    cdef i64* x = _load(a, cap)
    cdef i64* y = _load(b, cap)
    cdef i64* tmp
    try:
        while na > 0 and x[na - 1] == 0:
            na -= 1
        while nb > 0 and y[nb - 1] == 0:
            nb -= 1
        if na < nb:
            tmp = x; x = y; y = tmp
            nt = na; na = nb; nb = nt
        while nb > 0:
            na = _rem_inplace(f, x, na, y, nb, f.inv(y[nb - 1]), NULL)
            tmp = x; x = y; y = tmp
            nt = na; na = nb; nb = nt
        out = _store(x, na)
    finally:
        free(x); free(y)
    return monic(F, out)


def frobenius_matrix(F, list m):
    """Rows x^(q j) mod m, j < deg m, packed into a d x d int64 array."""
    cdef Py_ssize_t d = len(m) - 1, j, i
    if d <= 0:
        return np.zeros((0, 0), dtype=np.int64)
    cdef cnp.ndarray[cnp.int64_t, ndim=2] mat = np.zeros((d, d), dtype=np.int64)
    xq = powmod(F, [0, 1], F.q, m)
    row = [1]
    for j in range(d):
        if j:
            row = mulmod(F, row, xq, m)
        for i in range(len(row)):
            mat[j, i] = row[i]
    return mat


def frobenius_apply(F, rows, list h):
    """h(x)^q mod m given ``frobenius_matrix(F, m)``."""
    cdef _Field f = _field(F)
    cdef const i64[:, ::1] mat = rows
    cdef Py_ssize_t d = mat.shape[0], nh = len(h), j, i
    if d == 0:
        return []
    if nh > d:
        raise ValueError("h must be reduced modulo m")
    cdef i64* hv = _load(h, nh)
    cdef i64* acc = <i64*> malloc(d * sizeof(i64))
    cdef i64 c, v
    try:
        with nogil:
            for i in range(d):
                acc[i] = 0
            if not f.table and _lazy_ok(f, nh):
                for j in range(nh):
                    c = hv[j]
                    if c:
                        for i in range(d):
                            acc[i] += c * mat[j, i]
                for i in range(d):
                    acc[i] %= f.p
            else:
                for j in range(nh):
                    c = hv[j]
                    if c == 0:
                        continue
                    for i in range(d):
                        v = mat[j, i]
                        if v:
                            acc[i] = f.add(acc[i], f.mul(c, v))
        return _store(acc, d)
    finally:
        free(hv); free(acc)


def functional_graph(succ):
    cdef Py_ssize_t n = len(succ), start, v, u, idx, k
    cdef cnp.ndarray[cnp.int64_t, ndim=1] s = np.asarray(succ, dtype=np.int64)
    cdef cnp.ndarray[cnp.int64_t, ndim=1] tail = np.full(n, -1, dtype=np.int64)
    cdef cnp.ndarray[cnp.int64_t, ndim=1] cyc = np.zeros(n, dtype=np.int64)
    cdef cnp.ndarray[cnp.int8_t, ndim=1] state = np.zeros(n, dtype=np.int8)
    cdef cnp.ndarray[cnp.int64_t, ndim=1] path = np.zeros(n + 1, dtype=np.int64)
    cdef Py_ssize_t plen, clen
    for start in range(n):
        if state[start]:
            continue
        plen = 0
        v = start
        while state[v] == 0:
            state[v] = 1
            path[plen] = v
            plen += 1
            v = s[v]
        if state[v] == 1:
            idx = plen - 1
            while path[idx] != v:
                idx -= 1
            clen = plen - idx
            for k in range(idx, plen):
                u = path[k]
                tail[u] = 0
                cyc[u] = clen
                state[u] = 2
            plen = idx
        for k in range(plen - 1, -1, -1):
            u = path[k]
            v = s[u]
            tail[u] = tail[v] + 1
            cyc[u] = cyc[v]
            state[u] = 2
    return tail.tolist(), cyc.tolist()
