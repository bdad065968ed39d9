# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
# distutils: language = c++
"""Compiled kernels.  Mirrors ``_pykernels`` function by function."""

from array import array

from libcpp.unordered_set cimport unordered_set
from libcpp.vector cimport vector
from libc.stdint cimport int64_t

from .errors import BudgetExceeded

ctypedef int64_t i64


cdef vector[int] _flat_act(act):
    cdef vector[int] out
    for row in act:
        for x in row:
            out.push_back(x)
    return out


cdef inline void _decode(i64 code, int m, int n, int* digits) noexcept nogil:
    cdef int p
    for p in range(m - 1, -1, -1):
        digits[p] = <int>(code % n)
        code //= n


cdef void _neighbours(i64 code, int m, int n, int l, int size,
                      const int* act, const i64* pw, int* digits,
                      vector[i64]& out) noexcept nogil:
    cdef int pos, q, s
    cdef i64 base, new
    out.clear()
    _decode(code, m, n, digits)
    for pos in range(m - l + 1):
        base = code
        for q in range(l):
            base -= digits[pos + q] * pw[pos + q]
        for s in range(1, size):
            new = base
            for q in range(l):
                new += act[s * n + digits[pos + q]] * pw[pos + q]
            out.push_back(new)


cdef vector[i64] _powers(int m, int n):
    cdef vector[i64] pw
    cdef int p
    cdef i64 v = 1
    pw.resize(m)
    for p in range(m - 1, -1, -1):
        pw[p] = v
        v *= n
    return pw


def closure_codes(i64 code, int m, int n, int l, act, i64 cap):
    cdef int size = len(act)
    if m < l or size == 1:
        return [code]
    cdef vector[int] flat = _flat_act(act)
    cdef vector[i64] pw = _powers(m, n)
    cdef vector[int] digits
    digits.resize(m)
    cdef unordered_set[i64] seen
    cdef vector[i64] stack
    cdef vector[i64] nbs
    cdef i64 cur, nb
    cdef size_t k
    cdef bint over = False
    seen.insert(code)
    stack.push_back(code)
    with nogil:
        while stack.size() > 0 and not over:
            cur = stack.back()
            stack.pop_back()
            _neighbours(cur, m, n, l, size, flat.data(), pw.data(), digits.data(), nbs)
            for k in range(nbs.size()):
                nb = nbs[k]
                if seen.count(nb) == 0:
                    seen.insert(nb)
                    if <i64>seen.size() > cap:
                        over = True
                        break
                    stack.push_back(nb)
    if over:
        raise BudgetExceeded(f"equivalence class exceeds cap of {cap} members")
    return sorted(seen)


def label_words(int m, int n, int l, act, i64 budget):
    cdef int size = len(act)
    cdef i64 total = 1
    cdef int p
    for p in range(m):
        total *= n
        if total > budget:
            raise BudgetExceeded(f"{n}^{m} words exceeds enumeration budget {budget}")
    labels = array("q", [-1]) * total
    cdef i64[:] lab = labels
    cdef i64 c
    if m < l or size == 1:
        for c in range(total):
            lab[c] = c
        return labels, total
    cdef vector[int] flat = _flat_act(act)
    cdef vector[i64] pw = _powers(m, n)
    cdef vector[int] digits
    digits.resize(m)
    cdef vector[i64] stack
    cdef vector[i64] nbs
    cdef i64 nclasses = 0
    cdef i64 start, cur, nb
    cdef size_t k
    with nogil:
        for start in range(total):
            if lab[start] >= 0:
                continue
            lab[start] = nclasses
            stack.push_back(start)
            while stack.size() > 0:
                cur = stack.back()
                stack.pop_back()
                _neighbours(cur, m, n, l, size, flat.data(), pw.data(), digits.data(), nbs)
                for k in range(nbs.size()):
                    nb = nbs[k]
                    if lab[nb] < 0:
                        lab[nb] = nclasses
                        stack.push_back(nb)
            nclasses += 1
    return labels, nclasses


def sweep_equal(u, v, int l, act, mul):
    cdef int t = len(u)
    if t != len(v):
        return False
    if t < l:
        return tuple(u) == tuple(v)
    cdef int size = len(act)
    cdef int n = len(act[0])
    cdef vector[int] flat = _flat_act(act)
    cdef vector[int] mt = _flat_act(mul)
    cdef vector[int] uu, vv
    for x in u:
        uu.push_back(x)
    for x in v:
        vv.push_back(x)
    cdef int last = t - l
    cdef int width = l - 1
    # a state packs the open windows' group elements, oldest first, base ``size``
    cdef int q
    cdef vector[i64] frontier, nxt
    cdef unordered_set[i64] seen
    cdef int p, tau, prod, z, x0, y0, nopen, a
    cdef i64 st, s2, new
    cdef size_t k
    cdef bint ok = True
    frontier.push_back(0)
    with nogil:
        for p in range(t):
            x0 = uu[p]
            y0 = vv[p]
            nxt.clear()
            seen.clear()
            nopen = _open_windows(p, l, last)
            for k in range(frontier.size()):
                st = frontier[k]
                prod = 0
                s2 = st
                for q in range(nopen):
                    a = <int>(s2 % size)
                    s2 //= size
                    prod = mt[prod * size + a]
                z = flat[prod * n + x0]
                if p <= last:
                    for tau in range(size):
                        if flat[tau * n + z] == y0:
                            new = _push(st, nopen, tau, size, p >= width)
                            if seen.count(new) == 0:
                                seen.insert(new)
                                nxt.push_back(new)
                elif z == y0:
                    new = _drop(st, size, p >= width)
                    if seen.count(new) == 0:
                        seen.insert(new)
                        nxt.push_back(new)
            if nxt.size() == 0:
                ok = False
                break
            frontier.swap(nxt)
    return ok


cdef inline int _open_windows(int p, int l, int last) noexcept nogil:
    # windows k with max(0, p-l+1) <= k <= min(p-1, last)
    cdef int lo = p - l + 1
    cdef int hi = p - 1
    if lo < 0:
        lo = 0
    if hi > last:
        hi = last
    return hi - lo + 1 if hi >= lo else 0


cdef inline i64 _push(i64 st, int nopen, int tau, int size, bint drop) noexcept nogil:
    # digit j of the state (least significant first) is the j-th oldest window
    cdef i64 place = 1
    cdef int q
    for q in range(nopen):
        place *= size
    st += tau * place
    if drop:
        st //= size
    return st


cdef inline i64 _drop(i64 st, int size, bint drop) noexcept nogil:
    if drop:
        return st // size
    return st
