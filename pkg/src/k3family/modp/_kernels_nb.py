"""numba-jitted kernels, mirroring _kernels_py function by function.

All values live in int64 (field elements stay below 2^62, sums below 2^63),
except the splitmix RNG state which needs genuine uint64 wraparound.  The
61-bit Mersenne default prime gets a dedicated multiply-reduce path built on
31/30-bit limb splitting; any other prime below 2^62 takes the shift-and-add
path.  Polynomials are int64 arrays, ascending powers, no trailing zeros.
"""

from __future__ import annotations

import numpy as np
from numba import njit

M61 = 2305843009213693951  # 2^61 - 1
MASK30 = (1 << 30) - 1
MASK31 = (1 << 31) - 1

_EMPTY = np.empty(0, dtype=np.int64)


@njit(cache=True)
def mulmod(a, b, p):
    a = a % p
    b = b % p
    if p == M61:
        a1 = a >> 31
        a0 = a & MASK31
        b1 = b >> 31
        b0 = b & MASK31
        hi = a1 * b1  # < 2^60
        mid = a1 * b0 + a0 * b1  # < 2^62
        lo = a0 * b0  # < 2^62
        r = (hi << 1) + (mid >> 30) + ((mid & MASK30) << 31) + (lo & M61) + (lo >> 61)
        r = (r & M61) + (r >> 61)
        if r >= M61:
            r -= M61
        return r
    res = 0
    while b > 0:
        if b & 1:
            res += a
            if res >= p:
                res -= p
        a += a
        if a >= p:
            a -= p
        b >>= 1
    return res


@njit(cache=True)
def powmod(a, e, p):
    a = a % p
    r = 1
    while e > 0:
        if e & 1:
            r = mulmod(r, a, p)
        a = mulmod(a, a, p)
        e >>= 1
    return r


@njit(cache=True)
def invmod(a, p):
    return powmod(a, p - 2, p)


@njit(cache=True)
def _trim(A):
    n = A.shape[0]
    while n > 0 and A[n - 1] == 0:
        n -= 1
    return A[:n].copy()


@njit(cache=True)
def poly_mul(A, B, p):
    la = A.shape[0]
    lb = B.shape[0]
    if la == 0 or lb == 0:
        return np.empty(0, dtype=np.int64)
    out = np.zeros(la + lb - 1, dtype=np.int64)
    for i in range(la):
        ai = A[i]
        if ai == 0:
            continue
        for j in range(lb):
            if B[j] != 0:
                out[i + j] = (out[i + j] + mulmod(ai, B[j], p)) % p
    return _trim(out)


@njit(cache=True)
def poly_divmod(A, B, p):
    B = _trim(B)
    R = _trim(A)
    db = B.shape[0] - 1
    if R.shape[0] - 1 < db:
        return np.empty(0, dtype=np.int64), R
    Q = np.zeros(R.shape[0] - db, dtype=np.int64)
    inv_lb = invmod(B[db], p)
    dr = R.shape[0] - 1
    while dr >= db:
        q = mulmod(R[dr], inv_lb, p)
        k = dr - db
        Q[k] = q
        for i in range(db + 1):
            R[k + i] = (R[k + i] - mulmod(q, B[i], p)) % p
        while dr >= 0 and R[dr] == 0:
            dr -= 1
    return _trim(Q), R[: dr + 1].copy()


@njit(cache=True)
def poly_gcd(A, B, p):
    A = _trim(A)
    B = _trim(B)
    while B.shape[0] > 0:
        _, R = poly_divmod(A, B, p)
        A, B = B, R
    if A.shape[0] == 0:
        return A
    out = A.copy()
    inv = invmod(out[out.shape[0] - 1], p)
    for i in range(out.shape[0]):
        out[i] = mulmod(out[i], inv, p)
    return out


@njit(cache=True)
def poly_eval(A, x, p):
    acc = 0
    for i in range(A.shape[0] - 1, -1, -1):
        acc = (mulmod(acc, x, p) + A[i]) % p
    return acc


@njit(cache=True)
def _bitlen(e):
    n = 0
    while e > 0:
        n += 1
        e >>= 1
    return n


@njit(cache=True)
def x_pow_mod(e, M, p):
    M = _trim(M)
    result = np.ones(1, dtype=np.int64)
    if e == 0:
        return result
    for i in range(_bitlen(e) - 1, -1, -1):
        result = poly_mul(result, result, p)
        _, result = poly_divmod(result, M, p)
        if (e >> i) & 1:
            shifted = np.zeros(result.shape[0] + 1, dtype=np.int64)
            shifted[1:] = result
            _, result = poly_divmod(shifted, M, p)
    return result


@njit(cache=True)
def poly_pow_mod(base_in, e, M, p):
    _, base = poly_divmod(base_in, M, p)
    result = np.ones(1, dtype=np.int64)
    for i in range(_bitlen(e) - 1, -1, -1):
        result = poly_mul(result, result, p)
        _, result = poly_divmod(result, M, p)
        if (e >> i) & 1:
            result = poly_mul(result, base, p)
            _, result = poly_divmod(result, M, p)
    return result


@njit(cache=True)
def lagrange_interp(xs, ys, p):
    k = xs.shape[0]
    if k == 0:
        return np.empty(0, dtype=np.int64)
    N = np.zeros(k + 1, dtype=np.int64)
    N[0] = 1
    ln = 1
    for t in range(k):
        xi = xs[t]
        nxt = np.zeros(k + 1, dtype=np.int64)
        for i in range(ln):
            c = N[i]
            if c != 0:
                nxt[i + 1] = (nxt[i + 1] + c) % p
                nxt[i] = (nxt[i] - mulmod(c, xi, p)) % p
        N = nxt
        ln += 1
    out = np.zeros(k, dtype=np.int64)
    Q = np.zeros(k, dtype=np.int64)
    for t in range(k):
        xi = xs[t]
        carry = 0
        for i in range(ln - 1, 0, -1):
            carry = (N[i] + mulmod(carry, xi, p)) % p
            Q[i - 1] = carry
        qx = poly_eval(Q, xi, p)
        scale = mulmod(ys[t], invmod(qx, p), p)
        for i in range(k):
            out[i] = (out[i] + mulmod(scale, Q[i], p)) % p
    return _trim(out)


@njit(cache=True)
def sylvester_det(A, B, p):
    n = A.shape[0] - 1
    m = B.shape[0] - 1
    size = n + m
    if size == 0:
        return 1
    M = np.zeros((size, size), dtype=np.int64)
    for i in range(m):
        for j in range(n + 1):
            M[i, i + j] = A[n - j]
    for i in range(n):
        for j in range(m + 1):
            M[m + i, i + j] = B[m - j]
    det = 1
    neg = False
    for col in range(size):
        piv = -1
        for row in range(col, size):
            if M[row, col] != 0:
                piv = row
                break
        if piv < 0:
            return 0
        if piv != col:
            for j in range(col, size):
                tmp = M[col, j]
                M[col, j] = M[piv, j]
                M[piv, j] = tmp
            neg = not neg
        pv = M[col, col]
        det = mulmod(det, pv, p)
        inv = invmod(pv, p)
        for row in range(col + 1, size):
            f = M[row, col]
            if f == 0:
                continue
            f = mulmod(f, inv, p)
            for j in range(col, size):
                M[row, j] = (M[row, j] - mulmod(f, M[col, j], p)) % p
    if neg:
        det = (p - det) % p
    return det


@njit(cache=True)
def _splitmix(state):
    # state: uint64; genuine wraparound needed here
    s = state + np.uint64(0x9E3779B97F4A7C15)
    z = s
    z = (z ^ (z >> np.uint64(30))) * np.uint64(0xBF58476D1CE4E5B9)
    z = (z ^ (z >> np.uint64(27))) * np.uint64(0x94D049BB133111EB)
    z = z ^ (z >> np.uint64(31))
    return s, z


@njit(cache=True)
def linear_roots(H, p, seed):
    H = _trim(H)
    d = H.shape[0] - 1
    roots = np.empty(16, dtype=np.int64)
    nroots = 0
    if d <= 0:
        return roots[:0].copy(), roots[:0].copy(), 0

    xp = x_pow_mod(p, H, p)
    w = np.zeros(max(xp.shape[0], 2), dtype=np.int64)
    w[: xp.shape[0]] = xp
    w[1] = (w[1] - 1) % p
    g = poly_gcd(H, _trim(w), p)

    state = np.uint64(seed)
    # explicit stack of polynomials (degree <= 15 here)
    stack = np.zeros((64, 16), dtype=np.int64)
    lens = np.zeros(64, dtype=np.int64)
    top = 0
    stack[0, : g.shape[0]] = g
    lens[0] = g.shape[0]
    top = 1
    half = (p - 1) // 2
    xc = np.zeros(2, dtype=np.int64)
    while top > 0:
        top -= 1
        lf = lens[top]
        f = stack[top, :lf].copy()
        df = lf - 1
        if df <= 0:
            continue
        if df == 1:
            roots[nroots] = (p - f[0]) % p
            nroots += 1
            continue
        while True:
            state, z = _splitmix(state)
            c = np.int64(z % np.uint64(p))
            xc[0] = c
            xc[1] = 1
            t = poly_pow_mod(xc, half, f, p)
            if t.shape[0] == 0:
                t = np.zeros(1, dtype=np.int64)
            tt = t.copy()
            tt[0] = (tt[0] - 1) % p
            h = poly_gcd(f, _trim(tt), p)
            dh = h.shape[0] - 1
            if 0 < dh < df:
                q, rem = poly_divmod(f, h, p)
                if rem.shape[0] != 0:
                    # cannot happen: h | f by construction
                    return roots[:0].copy(), roots[:0].copy(), -1
                stack[top, : h.shape[0]] = h
                lens[top] = h.shape[0]
                top += 1
                stack[top, : q.shape[0]] = q
                lens[top] = q.shape[0]
                top += 1
                break

    rs = np.sort(roots[:nroots])
    mults = np.zeros(nroots, dtype=np.int64)
    total = 0
    for idx in range(nroots):
        r0 = rs[idx]
        cur = H.copy()
        mcount = 0
        while cur.shape[0] > 0 and poly_eval(cur, r0, p) == 0:
            nxt = np.zeros(cur.shape[0] - 1, dtype=np.int64)
            carry = 0
            for i in range(cur.shape[0] - 1, 0, -1):
                carry = (cur[i] + mulmod(carry, r0, p)) % p
                nxt[i - 1] = carry
            cur = nxt
            mcount += 1
        mults[idx] = mcount
        total += mcount
    return rs, mults, d - total
