"""Pure-Python bitset kernels.

A run set over a universe with per-axis radices ``(r0, r1, ..., rk)`` is an
int whose bit ``i`` is set when the run with mixed-radix index ``i`` (axis 0
most significant) is a member.  Each axis is one port; its digit is the index
of the port's whole history.

Bit strings are handled MSB-first via ``format``/``int(.., 2)`` so that slicing
stays linear in the universe size; repeated big-int shifts would not.
"""
from math import prod

BACKEND = "python"


def _bits(mask, n):
    # MSB-first string of exactly n characters; bit i lives at position n-1-i
    return format(mask, "b").zfill(n) if n else ""


def _hi_strides(radices):
    strides = [1] * len(radices)
    for k in range(len(radices) - 2, -1, -1):
        strides[k] = strides[k + 1] * radices[k + 1]
    return strides


def quantify(mask, radices, axis, universal):
    """Eliminate ``axis``: keep index j iff all (or any) digits of the axis hit."""
    r = radices[axis]
    inner = prod(radices[axis + 1:])
    outer = prod(radices[:axis])
    n = outer * r * inner
    if mask == 0:
        return 0
    bits = _bits(mask, n)
    block = r * inner
    out = []
    # MSB-first: outer blocks from highest index to lowest
    for o in range(outer - 1, -1, -1):
        hi = n - o * block
        if universal:
            acc = (1 << inner) - 1
            for d in range(r):
                end = hi - d * inner
                acc &= int(bits[end - inner:end], 2)
                if not acc:
                    break
        else:
            acc = 0
            for d in range(r):
                end = hi - d * inner
                acc |= int(bits[end - inner:end], 2)
        out.append(format(acc, "b").zfill(inner))
    return int("".join(out), 2) if out else 0


def project(mask, radices, keep):
    """Existential projection onto the (increasing) axes in ``keep``."""
    keep = tuple(keep)
    if list(keep) != sorted(set(keep)):
        raise ValueError("keep axes must be strictly increasing")
    rad = list(radices)
    for axis in range(len(radices) - 1, -1, -1):
        if axis in keep:
            continue
        mask = quantify(mask, tuple(rad), axis, False)
        del rad[axis]
    return mask


def _permute(mask, radices, order):
    # order[k] = source axis placed at position k of the result
    src_strides = _hi_strides(radices)
    new_rad = [radices[a] for a in order]
    new_strides = _hi_strides(new_rad)
    dst_stride_of = [0] * len(radices)
    for k, a in enumerate(order):
        dst_stride_of[a] = new_strides[k]
    out = 0
    m = mask
    while m:
        low = m & -m
        i = low.bit_length() - 1
        m ^= low
        j = 0
        for a in range(len(radices)):
            j += (i // src_strides[a]) % radices[a] * dst_stride_of[a]
        out |= 1 << j
    return out


def extend(mask, src_radices, dst_radices, placement):
    """Cylindrical extension.

    ``placement[i]`` is the destination axis of source axis ``i``; destination
    axes not named are free.  Index ``j`` of the result is set iff the source
    index obtained by reading the placed digits of ``j`` is set.
    """
    if len(placement) != len(src_radices):
        raise ValueError("placement length differs from source rank")
    for i, a in enumerate(placement):
        if dst_radices[a] != src_radices[i]:
            raise ValueError("radix mismatch between placed axes")
    order = sorted(range(len(placement)), key=lambda i: placement[i])
    if order != list(range(len(placement))):
        mask = _permute(mask, src_radices, order)
        src_radices = tuple(src_radices[i] for i in order)
        placement = tuple(sorted(placement))
    n_dst = prod(dst_radices)
    if mask == 0:
        return 0
    # insert free axes one at a time, from lowest-significance upward
    cur = list(src_radices)
    cur_bits = _bits(mask, prod(cur))
    placed = list(placement)
    for a in range(len(dst_radices) - 1, -1, -1):
        if a in placement:
            continue
        # position in cur where the new axis goes: count placed axes < a
        pos = sum(1 for p in placed if p < a)
        inner = prod(cur[pos:])
        r = dst_radices[a]
        n = len(cur_bits)
        pieces = [cur_bits[s:s + inner] * r for s in range(0, n, inner)]
        cur_bits = "".join(pieces)
        cur.insert(pos, r)
        placed = [p for p in placed]
        placed.insert(pos, a)
    assert len(cur_bits) == n_dst
    return int(cur_bits, 2)
