"""Compiled inner loops.

Bit vectors are little-endian arrays of ``uint64`` words: position ``p``
(1-indexed) lives in bit ``(p - 1) % 64`` of word ``(p - 1) // 64``. Every
word array carries at least one zero word past its last semantic bit so a
funnel read of ``w[q + 1]`` never leaves the buffer.

Kernels that locate take ``emit`` plus two output arrays; with ``emit`` false
the arrays are ignored and only the count is returned. Callers size the
output by running the same kernel once with ``emit`` false.
"""

import numpy as np
from llvmlite import ir
from numba import njit, types
from numba.extending import intrinsic

_ALL = np.uint64(0xFFFFFFFFFFFFFFFF)
_ONE = np.uint64(1)
_BLOCK = 2048


@intrinsic
def popcnt64(typingctx, x):
    sig = types.uint64(types.uint64)

    def codegen(context, builder, signature, args):
        fn = builder.module.declare_intrinsic("llvm.ctpop", [ir.IntType(64)])
        return builder.call(fn, args)

    return sig, codegen


@intrinsic
def cttz64(typingctx, x):
    sig = types.uint64(types.uint64)

    def codegen(context, builder, signature, args):
        fn = builder.module.declare_intrinsic(
            "llvm.cttz", [ir.IntType(64), ir.IntType(1)]
        )
        return builder.call(fn, [args[0], ir.Constant(ir.IntType(1), 0)])

    return sig, codegen


@njit(inline="always")
def _read(w, bit):
    """64 bits of ``w`` starting at 0-based bit offset ``bit``."""
    q = bit >> 6
    r = np.uint64(bit & 63)
    if r == 0:
        return w[q]
    return (w[q] >> r) | (w[q + 1] << (np.uint64(64) - r))


@njit(inline="always")
def _tail_mask(length):
    rem = length & 63
    if rem == 0:
        return _ALL
    return (_ONE << np.uint64(rem)) - _ONE


@njit(nogil=True, cache=True)
def shift_low(w, s, length, out):
    """``out[i] = w[i + s]`` for the first ``length - s`` bits, zero above."""
    keep = length - s
    nwords = (keep + 63) >> 6
    for t in range(out.shape[0]):
        out[t] = 0
    for t in range(nwords):
        out[t] = _read(w, (t << 6) + s)
    if nwords > 0:
        out[nwords - 1] &= _tail_mask(keep)


@njit(nogil=True, cache=True)
def popcount(w):
    total = 0
    for t in range(w.shape[0]):
        total += np.int64(popcnt64(w[t]))
    return total


@njit(inline="always")
def _and_into(out, w, bit, t0, t1, first):
    """``out[t] (&)= 64 bits of w from bit + 64 t`` for ``t0 <= t < t1``.

    One pass per term with a fixed shift lets LLVM vectorize the loop.
    """
    q = bit >> 6
    r = np.uint64(bit & 63)
    if r == 0:
        if first:
            for t in range(t0, t1):
                out[t] = w[q + t]
        else:
            for t in range(t0, t1):
                out[t] &= w[q + t]
        return
    l = np.uint64(64) - r
    if first:
        for t in range(t0, t1):
            out[t] = (w[q + t] >> r) | (w[q + t + 1] << l)
    else:
        for t in range(t0, t1):
            out[t] &= (w[q + t] >> r) | (w[q + t + 1] << l)


@njit(inline="always")
def _fill_anded(rows, sel, offs, length, out):
    nwords = (length + 63) >> 6
    # blocks keep the slice of out being ANDed resident in L1
    for t0 in range(0, nwords, _BLOCK):
        t1 = min(t0 + _BLOCK, nwords)
        for j in range(sel.shape[0]):
            _and_into(out, rows[sel[j]], offs[j], t0, t1, j == 0)
    if nwords > 0:
        out[nwords - 1] &= _tail_mask(length)
    return nwords


@njit(nogil=True, cache=True)
def and_shifted(rows, sel, offs, length, out):
    """Window of ``length`` bits: AND over j of ``rows[sel[j]]`` read from ``offs[j]``.

    Requires ``offs[j] + length <= bit length of rows``.
    """
    nwords = _fill_anded(rows, sel, offs, length, out)
    for t in range(nwords, out.shape[0]):
        out[t] = 0


@njit(inline="always")
def _window(n, k, d, cadence):
    """0-based start bit and length of the candidate window for distance d."""
    if not cadence:
        return 0, n - (k - 1) * d
    lo = n - k * d + 1
    if lo < 1:
        lo = 1
    hi = d
    # starts beyond n-(k-1)d would read past the text: those bits are zero
    if hi > n - (k - 1) * d:
        hi = n - (k - 1) * d
    return lo - 1, hi - lo + 1


@njit(nogil=True, cache=True)
def scan_progressions(rows, sel, n, dlo, dhi, cadence, emit, out_i, out_d):
    """Bit-parallel count/locate of ``(i, d)`` with ``T[i + j d]`` in row ``sel[j]``.

    For each distance the terms ``rows[sel[j]] << j d`` are ANDed over the
    candidate window only (the whole text for progressions, the cadence
    window ``n - kd < i <= d`` otherwise).
    """
    k = sel.shape[0]
    offs = np.empty(k, dtype=np.int64)
    buf = np.empty(rows.shape[1], dtype=np.uint64)
    total = 0
    for d in range(dlo, dhi + 1):
        start, length = _window(n, k, d, cadence)
        if length <= 0:
            continue
        for j in range(k):
            offs[j] = start + j * d
        nwords = _fill_anded(rows, sel, offs, length, buf)
        for t in range(nwords):
            acc = buf[t]
            if not emit:
                total += np.int64(popcnt64(acc))
                continue
            while acc:
                low = acc & (~acc + _ONE)
                out_i[total] = start + (t << 6) + np.int64(cttz64(low)) + 1
                out_d[total] = d
                total += 1
                acc ^= low
    return total


@njit(nogil=True, cache=True)
def scan_split(data, k, only, dlo, dhi, cadence, emit, out_i, out_d):
    """Runs of one byte of length >= k along every d-skip string.

    Each residue class is scanned separately, so a run never crosses from one
    skip string into the next. ``only`` restricts to one byte value (-1: all).
    """
    n = data.shape[0]
    total = 0
    for d in range(dlo, dhi + 1):
        for r in range(d):
            run = 0
            prev = -1
            for p in range(r, n, d):
                ch = np.int64(data[p])
                if ch == prev:
                    run += 1
                else:
                    run = 1
                    prev = ch
                if run >= k and (only < 0 or ch == only):
                    i = p - (k - 1) * d + 1
                    if cadence and not (i <= d and i + k * d > n):
                        continue
                    if emit:
                        out_i[total] = i
                        out_d[total] = d
                    total += 1
    return total


@njit(nogil=True, cache=True)
def scan_pairs(data, pos, k, dlo, dhi, cadence, emit, out_i, out_d):
    """Pair enumeration over the occurrence list ``pos`` (1-indexed) of one byte.

    The smaller position of a pair fixes ``i`` and the difference fixes ``d``;
    the remaining ``k - 2`` positions are checked directly.
    """
    n = data.shape[0]
    total = 0
    cnt = pos.shape[0]
    for a in range(cnt):
        i = pos[a]
        c = data[i - 1]
        for b in range(a + 1, cnt):
            d = pos[b] - i
            if d > dhi or i + (k - 1) * d > n:
                break
            if d < dlo:
                continue
            if cadence and not (i <= d and i + k * d > n):
                continue
            ok = True
            for j in range(2, k):
                if data[i - 1 + j * d] != c:
                    ok = False
                    break
            if ok:
                if emit:
                    out_i[total] = i
                    out_d[total] = d
                total += 1
    return total


@njit(nogil=True, cache=True)
def kmp_failure(pat):
    """``f[q]`` = length of the longest proper border of ``pat[:q + 1]``."""
    m = pat.shape[0]
    f = np.zeros(m, dtype=np.int64)
    b = 0
    for q in range(1, m):
        while b > 0 and pat[q] != pat[b]:
            b = f[b - 1]
        if pat[q] == pat[b]:
            b += 1
        f[q] = b
    return f


@njit(inline="always")
def _kmp_run(data, start, step, pat, fail, d, emit, out_i, out_d, total):
    m = pat.shape[0]
    q = 0
    n = data.shape[0]
    for p in range(start, n, step):
        ch = data[p]
        while q > 0 and pat[q] != ch:
            q = fail[q - 1]
        if pat[q] == ch:
            q += 1
        if q == m:
            if emit:
                out_i[total] = p - (m - 1) * step + 1
                out_d[total] = d
            total += 1
            q = fail[q - 1]
    return total


@njit(nogil=True, cache=True)
def kmp_search(data, pat, fail, emit, out_i):
    scratch = np.empty(out_i.shape[0], dtype=np.int64)
    return _kmp_run(data, 0, 1, pat, fail, 0, emit, out_i, scratch, 0)


@njit(nogil=True, cache=True)
def scan_split_kmp(data, pat, fail, dlo, dhi, emit, out_i, out_d):
    """KMP over every d-skip string, residue by residue."""
    total = 0
    for d in range(dlo, dhi + 1):
        for r in range(d):
            total = _kmp_run(data, r, d, pat, fail, d, emit, out_i, out_d, total)
    return total
