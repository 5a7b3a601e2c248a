"""Pure-Python kernels for dense univariate arithmetic over GF(p).

Reference implementation of the hot paths: big-int arithmetic, plain lists.
The numba backend must agree with this module bit-for-bit; tests enforce it.
Polynomials are dense coefficient lists, index i = coefficient of x^i, with
no trailing zeros (the zero polynomial is the empty list).
"""

from __future__ import annotations

MASK64 = (1 << 64) - 1


def mulmod(a: int, b: int, p: int) -> int:
    return a * b % p


def powmod(a: int, e: int, p: int) -> int:
    return pow(a % p, e, p)


def invmod(a: int, p: int) -> int:
    return pow(a % p, p - 2, p)


def _trim(A: list[int]) -> list[int]:
    n = len(A)
    while n > 0 and A[n - 1] == 0:
        n -= 1
    return A[:n]


def poly_mul(A: list[int], B: list[int], p: int) -> list[int]:
    la, lb = len(A), len(B)
    if la == 0 or lb == 0:
        return []
    out = [0] * (la + lb - 1)
    for i in range(la):
        ai = A[i]
        if ai == 0:
            continue
        for j in range(lb):
            out[i + j] = (out[i + j] + ai * B[j]) % p
    return _trim(out)


def poly_divmod(A: list[int], B: list[int], p: int) -> tuple[list[int], list[int]]:
    B = _trim(list(B))
    if not B:
        raise ZeroDivisionError("polynomial division by zero")
    R = _trim(list(A))
    db = len(B) - 1
    if len(R) - 1 < db:
        return [], R
    Q = [0] * (len(R) - db)
    inv_lb = invmod(B[db], p)
    for k in range(len(R) - 1 - db, -1, -1):
        if len(R) - 1 == db + k and R:
            q = R[-1] * inv_lb % p
            Q[k] = q
            for i in range(db + 1):
                R[k + i] = (R[k + i] - q * B[i]) % p
            R = _trim(R)
        # degree may drop by more than one; lower k just passes through
    return _trim(Q), R


def poly_gcd(A: list[int], B: list[int], p: int) -> list[int]:
    A, B = _trim(list(A)), _trim(list(B))
    while B:
        _, R = poly_divmod(A, B, p)
        A, B = B, R
    if not A:
        return []
    inv = invmod(A[-1], p)
    return [c * inv % p for c in A]


def poly_eval(A: list[int], x: int, p: int) -> int:
    acc = 0
    for c in reversed(A):
        acc = (acc * x + c) % p
    return acc


def x_pow_mod(e: int, M: list[int], p: int) -> list[int]:
    """x^e mod M(x) over GF(p); deg M >= 1 required."""
    M = _trim(list(M))
    if len(M) <= 1:
        raise ValueError("modulus must have positive degree")
    result = [1]
    if e == 0:
        return result
    # left-to-right on x directly: square, multiply by x when bit set
    for i in range(e.bit_length() - 1, -1, -1):
        result = poly_mul(result, result, p)
        _, result = poly_divmod(result, M, p)
        if (e >> i) & 1:
            result = [0] + result  # multiply by x
            _, result = poly_divmod(result, M, p)
    return result


def poly_pow_mod(Bse: list[int], e: int, M: list[int], p: int) -> list[int]:
    """Bse^e mod M over GF(p)."""
    _, base = poly_divmod(Bse, M, p)
    result = [1]
    for i in range(e.bit_length() - 1, -1, -1):
        result = poly_mul(result, result, p)
        _, result = poly_divmod(result, M, p)
        if (e >> i) & 1:
            result = poly_mul(result, base, p)
            _, result = poly_divmod(result, M, p)
    return result


def lagrange_interp(xs: list[int], ys: list[int], p: int) -> list[int]:
    """Coefficients of the unique interpolant through (xs, ys) over GF(p)."""
    k = len(xs)
    if k == 0:
        return []
    N = [1]
    for xi in xs:
        nxt = [0] * (len(N) + 1)
        for i, c in enumerate(N):
            nxt[i + 1] = (nxt[i + 1] + c) % p
            nxt[i] = (nxt[i] - c * xi) % p
        N = nxt
    out = [0] * k
    for xi, yi in zip(xs, ys):
        Q = [0] * (len(N) - 1)
        carry = 0
        for i in range(len(N) - 1, 0, -1):
            carry = (N[i] + carry * xi) % p
            Q[i - 1] = carry
        scale = yi * invmod(poly_eval(Q, xi, p), p) % p
        for i, c in enumerate(Q):
            out[i] = (out[i] + scale * c) % p
    return _trim(out)


def sylvester_det(A: list[int], B: list[int], p: int) -> int:
    """Determinant of the Sylvester matrix of A (formal degree len(A)-1) and
    B (formal degree len(B)-1) over GF(p), by Gaussian elimination."""
    n, m = len(A) - 1, len(B) - 1
    if n < 0 or m < 0:
        raise ValueError("empty input polynomial")
    size = n + m
    if size == 0:
        return 1
    ar = list(reversed(A))
    br = list(reversed(B))
    M = []
    for i in range(m):
        M.append([0] * i + ar + [0] * (m - 1 - i))
    for i in range(n):
        M.append([0] * i + br + [0] * (n - 1 - i))
    det = 1
    for col in range(size):
        piv = -1
        for row in range(col, size):
            if M[row][col] != 0:
                piv = row
                break
        if piv < 0:
            return 0
        if piv != col:
            M[col], M[piv] = M[piv], M[col]
            det = (-det) % p
        pv = M[col][col]
        det = det * pv % p
        inv = invmod(pv, p)
        for row in range(col + 1, size):
            f = M[row][col]
            if f == 0:
                continue
            f = f * inv % p
            Mr, Mc = M[row], M[col]
            for j in range(col, size):
                Mr[j] = (Mr[j] - f * Mc[j]) % p
    return det


def _splitmix(state: int) -> tuple[int, int]:
    state = (state + 0x9E3779B97F4A7C15) & MASK64
    z = state
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    z = z ^ (z >> 31)
    return state, z


def linear_roots(H: list[int], p: int, seed: int) -> tuple[list[int], list[int], int]:
    """All roots of H in GF(p) with multiplicities, plus the residual degree
    (degree mass of irreducible factors of degree >= 2).

    Distinct roots come from gcd(H, x^p - x); the squarefree product of the
    linear factors is then split by seeded Cantor-Zassenhaus.  Roots are
    returned sorted ascending.  Requires p odd.
    """
    H = _trim(list(H))
    d = len(H) - 1
    if d <= 0:
        return [], [], 0
    xp = x_pow_mod(p, H, p)
    # x^p - x
    w = list(xp)
    while len(w) < 2:
        w.append(0)
    w[1] = (w[1] - 1) % p
    g = poly_gcd(H, _trim(w), p)

    roots: list[int] = []
    state = seed & MASK64
    stack = [g]
    half = (p - 1) // 2
    while stack:
        f = stack.pop()
        df = len(f) - 1
        if df <= 0:
            continue
        if df == 1:
            # monic: x + f[0]
            roots.append((-f[0]) % p)
            continue
        while True:
            state, z = _splitmix(state)
            c = z % p
            t = poly_pow_mod([c, 1], half, f, p)
            t = list(t)
            if not t:
                t = [0]
            t[0] = (t[0] - 1) % p
            h = poly_gcd(f, _trim(t), p)
            if 0 < len(h) - 1 < df:
                q, rem = poly_divmod(f, h, p)
                assert not rem
                stack.append(h)
                stack.append(q)
                break

    roots.sort()
    mults = []
    total = 0
    for r0 in roots:
        cur = H
        m = 0
        while poly_eval(cur, r0, p) == 0:
            # synthetic division by (x - r0)
            nxt = [0] * (len(cur) - 1)
            carry = 0
            for i in range(len(cur) - 1, 0, -1):
                carry = (cur[i] + carry * r0) % p
                nxt[i - 1] = carry
            cur = nxt
            m += 1
            if not cur:
                break
        mults.append(m)
        total += m
    return roots, mults, d - total
