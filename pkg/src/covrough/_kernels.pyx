# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled bitmask kernels; same contract as ``_purekernels`` for n <= 64."""

from libc.stdint cimport uint64_t
from libc.stdlib cimport malloc, free

BACKEND = "cython"


cdef extern from *:
    int __builtin_ctzll(unsigned long long) nogil


cdef inline int _ctz(uint64_t v) nogil:
    return __builtin_ctzll(v)


cdef uint64_t* _load(seq, Py_ssize_t *count) except NULL:
    cdef Py_ssize_t m = len(seq), i
    cdef uint64_t* buf = <uint64_t*>malloc((m if m > 0 else 1) * sizeof(uint64_t))
    if buf == NULL:
        raise MemoryError()
    for i in range(m):
        buf[i] = <uint64_t>seq[i]
    count[0] = m
    return buf


cdef inline uint64_t _full(int n) nogil:
    return 0xFFFFFFFFFFFFFFFFULL if n >= 64 else ((<uint64_t>1 << n) - 1)


def neighborhoods(members, int n):
    cdef Py_ssize_t m, j
    cdef uint64_t* mem = _load(members, &m)
    cdef uint64_t* out = <uint64_t*>malloc(n * sizeof(uint64_t))
    cdef uint64_t c, rest, full = _full(n)
    cdef int i
    try:
        for i in range(n):
            out[i] = full
        for j in range(m):
            c = mem[j]
            rest = c
            while rest:
                out[_ctz(rest)] &= c
                rest &= rest - 1
        return [out[i] for i in range(n)]
    finally:
        free(mem)
        free(out)


def lower(members, x):
    cdef Py_ssize_t m, j
    cdef uint64_t* mem = _load(members, &m)
    cdef uint64_t xs = x, acc = 0
    try:
        for j in range(m):
            if mem[j] & ~xs == 0:
                acc |= mem[j]
        return acc
    finally:
        free(mem)


def upper_neigh(nbhd, x):
    cdef Py_ssize_t n
    cdef uint64_t* nb = _load(nbhd, &n)
    cdef uint64_t xs = x, acc = 0
    try:
        while xs:
            acc |= nb[_ctz(xs)]
            xs &= xs - 1
        return acc
    finally:
        free(nb)


def upper_def3(members, nbhd, x):
    cdef Py_ssize_t m, n, j
    cdef uint64_t* mem = _load(members, &m)
    cdef uint64_t* nb = _load(nbhd, &n)
    cdef uint64_t xs = x, low = 0, rest, acc
    try:
        for j in range(m):
            if mem[j] & ~xs == 0:
                low |= mem[j]
        acc = low
        rest = xs & ~low
        while rest:
            acc |= nb[_ctz(rest)]
            rest &= rest - 1
        return acc
    finally:
        free(mem)
        free(nb)


cdef uint64_t* _family_unions(uint64_t* mem, Py_ssize_t m) except NULL:
    cdef size_t total = (<size_t>1) << m, fam
    cdef uint64_t* unions = <uint64_t*>malloc(total * sizeof(uint64_t))
    if unions == NULL:
        raise MemoryError()
    unions[0] = 0
    for fam in range(1, total):
        unions[fam] = unions[fam & (fam - 1)] | mem[_ctz(fam)]
    return unions


def upper_subcov(members, x, int n):
    cdef Py_ssize_t m
    cdef uint64_t* mem = _load(members, &m)
    cdef uint64_t* unions = NULL
    cdef uint64_t xs = x, acc = _full(n), u
    cdef size_t fam, total
    try:
        unions = _family_unions(mem, m)
        total = (<size_t>1) << m
        for fam in range(total):
            u = unions[fam]
            if xs & ~u == 0:
                acc &= u
        return acc
    finally:
        free(mem)
        free(unions)


def lower_table(members, int n):
    cdef Py_ssize_t m, j
    cdef uint64_t* mem = _load(members, &m)
    cdef size_t size = (<size_t>1) << n, s
    cdef uint64_t* acc = <uint64_t*>malloc(size * sizeof(uint64_t))
    cdef uint64_t bit
    cdef int i
    try:
        for s in range(size):
            acc[s] = 0
        for j in range(m):
            acc[mem[j]] |= mem[j]
        for i in range(n):
            bit = (<uint64_t>1) << i
            for s in range(size):
                if s & bit:
                    acc[s] |= acc[s ^ bit]
        return [acc[s] for s in range(size)]
    finally:
        free(mem)
        free(acc)


def upper_neigh_table(nbhd, int n):
    cdef Py_ssize_t nn
    cdef uint64_t* nb = _load(nbhd, &nn)
    cdef size_t size = (<size_t>1) << n, s
    cdef uint64_t* acc = <uint64_t*>malloc(size * sizeof(uint64_t))
    try:
        acc[0] = 0
        for s in range(1, size):
            acc[s] = acc[s & (s - 1)] | nb[_ctz(s)]
        return [acc[s] for s in range(size)]
    finally:
        free(nb)
        free(acc)


def upper_def3_table(members, nbhd, int n):
    cdef Py_ssize_t m, nn, j
    cdef uint64_t* mem = _load(members, &m)
    cdef uint64_t* nb = _load(nbhd, &nn)
    cdef size_t size = (<size_t>1) << n, s
    cdef uint64_t* out = <uint64_t*>malloc(size * sizeof(uint64_t))
    cdef uint64_t low, rest, acc
    try:
        for s in range(size):
            low = 0
            for j in range(m):
                if mem[j] & ~(<uint64_t>s) == 0:
                    low |= mem[j]
            acc = low
            rest = s & ~low
            while rest:
                acc |= nb[_ctz(rest)]
                rest &= rest - 1
            out[s] = acc
        return [out[s] for s in range(size)]
    finally:
        free(mem)
        free(nb)
        free(out)


def upper_subcov_table(members, int n):
    cdef Py_ssize_t m
    cdef uint64_t* mem = _load(members, &m)
    cdef uint64_t* unions = NULL
    cdef size_t size = (<size_t>1) << n, s, fam, total
    cdef uint64_t* acc = <uint64_t*>malloc(size * sizeof(uint64_t))
    cdef uint64_t full = _full(n), bit
    cdef int i
    try:
        unions = _family_unions(mem, m)
        total = (<size_t>1) << m
        for s in range(size):
            acc[s] = full
        for fam in range(total):
            acc[unions[fam]] = unions[fam]
        for i in range(n):
            bit = (<uint64_t>1) << i
            for s in range(size):
                if not (s & bit):
                    acc[s] &= acc[s | bit]
        return [acc[s] for s in range(size)]
    finally:
        free(mem)
        free(unions)
        free(acc)


def covering_families(int n):
    cdef size_t k = ((<size_t>1) << n) - 1
    cdef size_t total = (<size_t>1) << k, fam
    cdef uint64_t full = k, u
    cdef uint64_t* unions = <uint64_t*>malloc(total * sizeof(uint64_t))
    if unions == NULL:
        raise MemoryError()
    out = []
    try:
        unions[0] = 0
        for fam in range(1, total):
            u = unions[fam & (fam - 1)] | (<uint64_t>(_ctz(fam) + 1))
            unions[fam] = u
            if u == full:
                out.append(fam)
        return out
    finally:
        free(unions)


def upper_subcov_proper_table(members, int n):
    cdef Py_ssize_t m
    cdef uint64_t* mem = _load(members, &m)
    cdef uint64_t* unions = NULL
    cdef size_t size = (<size_t>1) << n, s, fam, total
    cdef uint64_t* acc = <uint64_t*>malloc(size * sizeof(uint64_t))
    cdef unsigned char* hit = <unsigned char*>malloc(size)
    cdef uint64_t full = _full(n), bit
    cdef int i
    try:
        unions = _family_unions(mem, m)
        total = (<size_t>1) << m
        for s in range(size):
            acc[s] = full
            hit[s] = 0
        for fam in range(total - 1):
            acc[unions[fam]] = unions[fam]
            hit[unions[fam]] = 1
        for i in range(n):
            bit = (<uint64_t>1) << i
            for s in range(size):
                if not (s & bit):
                    acc[s] &= acc[s | bit]
                    hit[s] |= hit[s | bit]
        return [acc[s] if hit[s] else None for s in range(size)]
    finally:
        free(mem)
        free(unions)
        free(acc)
        free(hit)
