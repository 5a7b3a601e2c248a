"""Dense univariate arithmetic over GF(p) with selectable kernels.

Two interchangeable kernel sets live below this package: `_kernels_py`
(pure Python, arbitrary prime size) and `_kernels_nb` (numba-jitted int64
code, primes below 2^62).  The environment variable K3FAMILY_JIT picks one:

    K3FAMILY_JIT=0      force the pure Python kernels
    K3FAMILY_JIT=1      require numba (ImportError if unavailable)
    K3FAMILY_JIT=auto   default: numba when importable, Python otherwise

Public functions take and return plain Python ints and lists (coefficients
ascending, no trailing zeros); conversion to int64 arrays happens here.
Calls that the jitted kernels cannot represent (prime at or above 2^62, or
a root-finding modulus of degree above 15) are routed to the Python kernels
regardless of backend, so every function is total over valid inputs.
"""

from __future__ import annotations

import os

import numpy as np

from . import _kernels_py as _py

_NB_PRIME_LIMIT = 1 << 62
_NB_ROOTS_MAX_DEGREE = 15

_choice = os.environ.get("K3FAMILY_JIT", "auto").strip().lower()
if _choice in ("0", "off", "false", "py", "python"):
    _nb = None
    _BACKEND = "python"
elif _choice in ("1", "on", "true", "nb", "numba"):
    from . import _kernels_nb as _nb

    _BACKEND = "numba"
else:
    try:
        from . import _kernels_nb as _nb

        _BACKEND = "numba"
    except ImportError:
        _nb = None
        _BACKEND = "python"


def backend_name():
    """Return which kernel set is active, "numba" or "python"."""
    return _BACKEND


def _use_py(p):
    return _nb is None or p >= _NB_PRIME_LIMIT


def _arr(A, p):
    return np.asarray([int(x) % p for x in A], dtype=np.int64)


def mulmod(a, b, p):
    if _use_py(p):
        return _py.mulmod(a % p, b % p, p)
    return int(_nb.mulmod(a % p, b % p, p))


def powmod(a, e, p):
    if _use_py(p):
        return _py.powmod(a % p, e, p)
    return int(_nb.powmod(a % p, int(e), p))


def invmod(a, p):
    if a % p == 0:
        raise ZeroDivisionError("inverse of zero mod %d" % p)
    if _use_py(p):
        return _py.invmod(a % p, p)
    return int(_nb.invmod(a % p, p))


def poly_mul(A, B, p):
    if _use_py(p):
        return _py.poly_mul([x % p for x in A], [x % p for x in B], p)
    return _nb.poly_mul(_arr(A, p), _arr(B, p), p).tolist()


def poly_divmod(A, B, p):
    if not any(x % p for x in B):
        raise ZeroDivisionError("division by zero polynomial")
    if _use_py(p):
        return _py.poly_divmod([x % p for x in A], [x % p for x in B], p)
    Q, R = _nb.poly_divmod(_arr(A, p), _arr(B, p), p)
    return Q.tolist(), R.tolist()


def poly_gcd(A, B, p):
    if _use_py(p):
        return _py.poly_gcd([x % p for x in A], [x % p for x in B], p)
    return _nb.poly_gcd(_arr(A, p), _arr(B, p), p).tolist()


def poly_eval(A, x, p):
    if _use_py(p):
        return _py.poly_eval([c % p for c in A], x % p, p)
    return int(_nb.poly_eval(_arr(A, p), x % p, p))


def x_pow_mod(e, M, p):
    if len(_py._trim([x % p for x in M])) < 2:
        raise ValueError("modulus must have degree >= 1")
    if _use_py(p):
        return _py.x_pow_mod(int(e), [x % p for x in M], p)
    return _nb.x_pow_mod(int(e), _arr(M, p), p).tolist()


def poly_pow_mod(B, e, M, p):
    if len(_py._trim([x % p for x in M])) < 2:
        raise ValueError("modulus must have degree >= 1")
    if _use_py(p):
        return _py.poly_pow_mod([x % p for x in B], int(e), [x % p for x in M], p)
    return _nb.poly_pow_mod(_arr(B, p), int(e), _arr(M, p), p).tolist()


def lagrange_interp(xs, ys, p):
    if len(xs) != len(ys):
        raise ValueError("node and value lists differ in length")
    if len(set(x % p for x in xs)) != len(xs):
        raise ValueError("interpolation nodes collide mod %d" % p)
    if _use_py(p):
        return _py.lagrange_interp([x % p for x in xs], [y % p for y in ys], p)
    return _nb.lagrange_interp(_arr(xs, p), _arr(ys, p), p).tolist()


def sylvester_det(A, B, p):
    if len(A) == 0 or len(B) == 0:
        raise ValueError("formal degree requires a nonempty coefficient list")
    if _use_py(p):
        return _py.sylvester_det([x % p for x in A], [x % p for x in B], p)
    return int(_nb.sylvester_det(_arr(A, p), _arr(B, p), p))


def linear_roots(H, p, seed):
    """Roots of H in GF(p) with multiplicities.

    Returns (roots, mults, residual) where roots is sorted ascending,
    mults[i] is the multiplicity of roots[i] in H, and residual is the
    degree of the part of H with no linear factor over GF(p).
    """
    Ht = _py._trim([x % p for x in H])
    if len(Ht) - 1 > _NB_ROOTS_MAX_DEGREE or _use_py(p):
        return _py.linear_roots(Ht, p, int(seed) & ((1 << 64) - 1))
    rs, ms, residual = _nb.linear_roots(
        _arr(Ht, p), p, np.uint64(int(seed) & ((1 << 64) - 1))
    )
    if residual < 0:
        raise AssertionError("equal-degree split produced a non-divisor")
    return rs.tolist(), ms.tolist(), int(residual)
