# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled bitset kernels; same contract as ``_kernels_py``.

Masks cross the boundary as Python ints and are unpacked into little-endian
byte buffers (bit ``i`` of the universe is bit ``i & 7`` of byte ``i >> 3``).
"""
from libc.stdlib cimport malloc, free
from libc.string cimport memset

BACKEND = "cython"

ctypedef unsigned long long u64


cdef inline int _get(const unsigned char* buf, u64 i) noexcept nogil:
    return (buf[i >> 3] >> (i & 7)) & 1


cdef inline void _set(unsigned char* buf, u64 i) noexcept nogil:
    buf[i >> 3] |= <unsigned char>(1 << (i & 7))


cdef u64 _prod(radices, Py_ssize_t lo, Py_ssize_t hi):
    cdef u64 p = 1
    cdef Py_ssize_t k
    for k in range(lo, hi):
        p *= <u64>radices[k]
    return p


cdef bytes _unpack(mask, u64 n):
    return (<object>mask).to_bytes(<Py_ssize_t>((n + 7) >> 3), "little")


def quantify(mask, radices, Py_ssize_t axis, bint universal):
    cdef Py_ssize_t k = len(radices)
    cdef u64 r = <u64>radices[axis]
    cdef u64 inner = _prod(radices, axis + 1, k)
    cdef u64 outer = _prod(radices, 0, axis)
    cdef u64 n = outer * r * inner
    cdef u64 m = outer * inner
    if mask == 0:
        return 0
    cdef bytes src_b = _unpack(mask, n)
    cdef const unsigned char* src = src_b
    cdef bytearray out_b = bytearray((m + 7) >> 3)
    cdef unsigned char* out = out_b
    cdef u64 o, i, d, base, j
    cdef int hit
    if inner % 64 == 0:
        _quantify_words(<const u64*>src, <u64*>out, outer, r, inner >> 6, universal)
        return int.from_bytes(out_b, "little")
    with nogil:
        for o in range(outer):
            base = o * r * inner
            for i in range(inner):
                if universal:
                    hit = 1
                    for d in range(r):
                        if not _get(src, base + d * inner + i):
                            hit = 0
                            break
                else:
                    hit = 0
                    for d in range(r):
                        if _get(src, base + d * inner + i):
                            hit = 1
                            break
                if hit:
                    j = o * inner + i
                    _set(out, j)
    return int.from_bytes(out_b, "little")


cdef void _quantify_words(const u64* src, u64* out, u64 outer, u64 r, u64 words,
                          bint universal) noexcept nogil:
    # blocks of ``words`` 64-bit words; little-endian word order matches bit order
    cdef u64 o, d, w, acc, base
    for o in range(outer):
        base = o * r * words
        for w in range(words):
            acc = src[base + w]
            for d in range(1, r):
                if universal:
                    acc &= src[base + d * words + w]
                else:
                    acc |= src[base + d * words + w]
            out[o * words + w] = acc


def project(mask, radices, keep):
    keep = tuple(keep)
    if list(keep) != sorted(set(keep)):
        raise ValueError("keep axes must be strictly increasing")
    cdef Py_ssize_t k = len(radices)
    cdef Py_ssize_t nk = len(keep)
    cdef u64 n = _prod(radices, 0, k)
    if mask == 0:
        return 0
    cdef u64* src_stride = <u64*>malloc(sizeof(u64) * (nk + 1))
    cdef u64* rad = <u64*>malloc(sizeof(u64) * (nk + 1))
    cdef u64* dst_stride = <u64*>malloc(sizeof(u64) * (nk + 1))
    cdef Py_ssize_t a, t
    cdef u64 mout = 1
    try:
        for t in range(nk - 1, -1, -1):
            a = keep[t]
            rad[t] = <u64>radices[a]
            src_stride[t] = _prod(radices, a + 1, k)
            dst_stride[t] = mout
            mout *= rad[t]
        src_b = _unpack(mask, n)
        out_b = bytearray((mout + 7) >> 3)
        _project_loop(src_b, out_b, n, nk, src_stride, rad, dst_stride)
        return int.from_bytes(out_b, "little")
    finally:
        free(src_stride)
        free(rad)
        free(dst_stride)


cdef void _project_loop(const unsigned char* src, unsigned char* out, u64 n,
                        Py_ssize_t nk, u64* src_stride, u64* rad,
                        u64* dst_stride) noexcept:
    cdef u64 i, j
    cdef Py_ssize_t t
    with nogil:
        for i in range(n):
            if src[i >> 3] == 0:
                continue
            if _get(src, i):
                j = 0
                for t in range(nk):
                    j += ((i // src_stride[t]) % rad[t]) * dst_stride[t]
                _set(out, j)


def extend(mask, src_radices, dst_radices, placement):
    if len(placement) != len(src_radices):
        raise ValueError("placement length differs from source rank")
    for i, a in enumerate(placement):
        if dst_radices[a] != src_radices[i]:
            raise ValueError("radix mismatch between placed axes")
    cdef Py_ssize_t ks = len(src_radices)
    cdef Py_ssize_t kd = len(dst_radices)
    cdef u64 n_src = _prod(src_radices, 0, ks)
    cdef u64 n_dst = _prod(dst_radices, 0, kd)
    if mask == 0:
        return 0
    cdef u64* drad = <u64*>malloc(sizeof(u64) * (kd + 1))
    cdef u64* step = <u64*>malloc(sizeof(u64) * (kd + 1))
    cdef Py_ssize_t t
    try:
        for t in range(kd):
            drad[t] = <u64>dst_radices[t]
            step[t] = 0
        for t in range(ks):
            step[placement[t]] = _prod(src_radices, t + 1, ks)
        src_b = _unpack(mask, n_src)
        out_b = bytearray((n_dst + 7) >> 3)
        _extend_loop(src_b, out_b, n_dst, kd, drad, step)
        return int.from_bytes(out_b, "little")
    finally:
        free(drad)
        free(step)


cdef void _extend_loop(const unsigned char* src, unsigned char* out, u64 n_dst,
                       Py_ssize_t kd, u64* drad, u64* step) noexcept:
    # mixed-radix counter over destination digits; a placed digit moves the
    # source index by its stride, a free digit leaves it alone
    cdef u64 j, i = 0
    cdef Py_ssize_t t
    cdef u64* digit = <u64*>malloc(sizeof(u64) * (kd + 1))
    with nogil:
        for t in range(kd):
            digit[t] = 0
        for j in range(n_dst):
            if _get(src, i):
                _set(out, j)
            t = kd - 1
            while t >= 0:
                digit[t] += 1
                i += step[t]
                if digit[t] < drad[t]:
                    break
                digit[t] = 0
                i -= step[t] * drad[t]
                t -= 1
    free(digit)
