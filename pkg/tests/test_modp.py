"""Dense GF(p) kernels: scalar ops, polynomial ops, roots, backend parity."""

import os
import subprocess
import sys

import pytest

from k3family import DEFAULT_PRIME
from k3family import modp
from k3family.modp import _kernels_py as kpy

import oracle_data as od

try:
    from k3family.modp import _kernels_nb as knb

    HAVE_NUMBA = True
except ImportError:
    knb = None
    HAVE_NUMBA = False

M61 = DEFAULT_PRIME
P63 = 9223372036854775783  # above the int64 kernel limit: exercises the Python path
PRIMES = (101, 1000003, M61, P63)


# -- scalar ops ------------------------------------------------------------------


@pytest.mark.parametrize("p", PRIMES)
def test_mulmod_matches_bigint(p):
    pairs = [(2, 3), (p - 1, p - 1), (p - 2, p - 1), (123456789 % p, 987654321 % p), (0, p - 1)]
    for a, b in pairs:
        assert modp.mulmod(a, b, p) == (a * b) % p


@pytest.mark.parametrize("p", PRIMES)
def test_powmod_matches_builtin(p):
    for a, e in ((3, 0), (2, 61), (p - 1, 2), (p - 2, p - 1), (17, 10**9)):
        assert modp.powmod(a, e, p) == pow(a % p, e, p)


@pytest.mark.parametrize("p", PRIMES)
def test_invmod_inverts(p):
    for a in (1, 2, 27, p - 1, 123456 % p):
        inv = modp.invmod(a, p)
        assert (a * inv) % p == 1


def test_invmod_zero_raises():
    with pytest.raises(ZeroDivisionError):
        modp.invmod(0, 101)
    with pytest.raises(ZeroDivisionError):
        modp.invmod(202, 101)


def test_inputs_are_reduced_first():
    assert modp.mulmod(-1, 1, 7) == 6
    assert modp.powmod(-2, 2, 7) == 4


# -- polynomial ops ---------------------------------------------------------------


def naive_mul(A, B, p):
    out = [0] * (len(A) + len(B) - 1)
    for i, a in enumerate(A):
        for j, b in enumerate(B):
            out[i + j] = (out[i + j] + a * b) % p
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return out


@pytest.mark.parametrize("p", (101, M61))
def test_poly_mul_matches_naive(p):
    A = [3, 0, p - 1, 7]
    B = [p - 2, 5, 11]
    assert modp.poly_mul(A, B, p) == naive_mul(A, B, p)


def test_poly_mul_by_constant():
    assert modp.poly_mul([1, 2, 3], [5], 101) == [5, 10, 15]


@pytest.mark.parametrize("p", (101, M61))
def test_poly_divmod_reconstructs(p):
    A = [4, 0, 1, 9, 3, p - 1, 2]
    B = [7, p - 3, 1]
    Q, R = modp.poly_divmod(A, B, p)
    recon = naive_mul(Q, B, p)
    full = [(x + (R[i] if i < len(R) else 0)) % p for i, x in enumerate(recon + [0] * (len(A) - len(recon)))]
    while len(full) > 1 and full[-1] == 0:
        full.pop()
    At = list(A)
    while len(At) > 1 and At[-1] == 0:
        At.pop()
    assert full == At
    assert len(R) < len(B)


def test_poly_divmod_zero_divisor():
    with pytest.raises(ZeroDivisionError):
        modp.poly_divmod([1, 2], [0, 0], 101)
    with pytest.raises(ZeroDivisionError):
        modp.poly_divmod([1, 2], [101], 101)  # zero after reduction


@pytest.mark.parametrize("p", (101, M61))
def test_poly_gcd_of_shared_factor(p):
    # (x - 3) common to both; gcd is monic
    f = naive_mul([p - 3, 1], [1, 0, 1], p)
    g = naive_mul([p - 3, 1], [5, 1], p)
    assert modp.poly_gcd(f, g, p) == [p - 3, 1]


def test_poly_gcd_coprime_is_one():
    assert modp.poly_gcd([1, 0, 1], [3, 1], 101) == [1]


@pytest.mark.parametrize("p", (101, M61))
def test_poly_eval_horner(p):
    A = [7, 0, 3, 1]  # 7 + 3x^2 + x^3
    for x in (0, 1, 5, p - 2):
        assert modp.poly_eval(A, x, p) == (7 + 3 * x * x + x**3) % p


@pytest.mark.parametrize("p", (101, M61))
def test_x_pow_mod(p):
    M = [1, 0, 0, 1]  # x^3 + 1: x^5 = x^2 * x^3 = -x^2
    assert modp.x_pow_mod(5, M, p) == [0, 0, p - 1]
    assert modp.x_pow_mod(0, M, p) == [1]


def test_x_pow_mod_constant_modulus_rejected():
    with pytest.raises(ValueError):
        modp.x_pow_mod(5, [3], 101)
    with pytest.raises(ValueError):
        modp.poly_pow_mod([1, 1], 5, [3], 101)


@pytest.mark.parametrize("p", (101, M61))
def test_poly_pow_mod_matches_repeated_multiplication(p):
    B = [2, 1]
    M = [1, 0, 0, 0, 1]  # x^4 + 1
    acc = [1]
    for _ in range(6):
        acc = modp.poly_divmod(naive_mul(acc, B, p), M, p)[1]
    assert modp.poly_pow_mod(B, 6, M, p) == acc


# -- interpolation ------------------------------------------------------------------


@pytest.mark.parametrize("p", (101, M61))
def test_lagrange_round_trip(p):
    coeffs = [3, 0, p - 5, 7, 2]
    xs = list(range(len(coeffs)))
    ys = [modp.poly_eval(coeffs, x, p) for x in xs]
    assert modp.lagrange_interp(xs, ys, p) == coeffs


def test_lagrange_validation():
    with pytest.raises(ValueError):
        modp.lagrange_interp([0, 1], [1], 101)
    with pytest.raises(ValueError):
        modp.lagrange_interp([0, 101], [1, 2], 101)  # nodes collide mod p


# -- Sylvester determinants -----------------------------------------------------------


def test_sylvester_det_against_symbolic_route():
    from k3family import GF, PolyRing
    from k3family.elimination import resultant
    from k3family.poly import from_univariate

    p = 1000003
    A = [3, 1, 4, 1, 5]  # formal degree = len-1 with nonzero lead
    B = [2, 7, 1, 8, 2, 8, 1]
    ring = PolyRing(("u",), GF(p))
    pa = from_univariate([ring.const(c) for c in A], "u", ring)
    pb = from_univariate([ring.const(c) for c in B], "u", ring)
    want = resultant(pa, pb, "u").constant()
    assert modp.sylvester_det(A, B, p) == want


def test_sylvester_det_formal_degrees_from_list_length():
    # trailing zero in A raises the formal degree; against u^7+c style pad
    p = 101
    A = [0, 0, 0, 0, 1]  # u^4
    B = [9] + [0] * 6 + [1]  # u^7 + 9
    assert modp.sylvester_det(A, B, p) == pow(9, 4, p)


def test_sylvester_det_empty_rejected():
    with pytest.raises(ValueError):
        modp.sylvester_det([], [1, 2], 101)


def test_sylvester_det_common_root_gives_zero():
    p = 101
    A = naive_mul([p - 4, 1], [1, 1], p)
    B = naive_mul([p - 4, 1], [3, 0, 1], p)
    assert modp.sylvester_det(A, B, p) == 0


# -- root finding ---------------------------------------------------------------------


def dense_from_pairs(pairs, extra, p):
    out = [1]
    for root, mult in pairs:
        for _ in range(mult):
            out = naive_mul(out, [(-root) % p, 1], p)
    out = naive_mul(out, extra, p)
    return out


def test_linear_roots_frozen_cases():
    p = od.MODP_ROOTS_PRIME
    for coeffs, expected in od.MODP_ROOTS_CASES:
        roots, mults, residual = modp.linear_roots(coeffs, p, seed=5)
        assert list(zip(roots, mults)) == expected
        assert residual == (len(coeffs) - 1) - sum(m for _, m in expected)


def test_linear_roots_exhaustive_small_field():
    p = 101
    H = [7, 3, 0, 1, 9, 1]
    roots, mults, residual = modp.linear_roots(H, p, seed=0)
    brute = [x for x in range(p) if modp.poly_eval(H, x, p) == 0]
    assert roots == brute
    for x, m in zip(roots, mults):
        # multiplicity via derivative chain
        d = H
        for k in range(m):
            assert modp.poly_eval(d, x, p) == 0
            d = [(i * c) % p for i, c in enumerate(d)][1:]
        assert modp.poly_eval(d, x, p) != 0


def test_linear_roots_constructed_case_at_m61():
    pairs = [(5, 1), (17, 2), (9001, 1)]
    H = dense_from_pairs(pairs, [1, 0, 1], M61)  # x^2+1 stays rootless: M61 % 4 == 3
    roots, mults, residual = modp.linear_roots(H, M61, seed=42)
    assert list(zip(roots, mults)) == pairs
    assert residual == 2


def test_linear_roots_seed_independent_result():
    p = 10007
    H = dense_from_pairs([(3, 3), (9999, 1)], [1, 1, 1], p)
    results = {tuple(map(tuple, modp.linear_roots(H, p, seed=s)[:2])) for s in range(6)}
    assert len(results) == 1
    (roots, mults) = next(iter(results))
    assert list(zip(roots, mults)) == [(3, 3), (9999, 1)]


def test_linear_roots_rootless_and_constant():
    assert modp.linear_roots([1, 0, 1], 10007, seed=0) == ([], [], 2)
    assert modp.linear_roots([5], 101, seed=0) == ([], [], 0)


def test_linear_roots_full_splitting():
    p = 101
    H = dense_from_pairs([(i, 1) for i in (2, 30, 77, 90)], [1], p)
    roots, mults, residual = modp.linear_roots(H, p, seed=1)
    assert roots == [2, 30, 77, 90]
    assert mults == [1, 1, 1, 1]
    assert residual == 0


def test_linear_roots_high_degree_routes_to_python():
    # degree 16 exceeds the jitted root-finder cap; wrapper must still answer
    p = 1000003
    H = dense_from_pairs([(11, 16)], [1], p)
    roots, mults, residual = modp.linear_roots(H, p, seed=0)
    assert (roots, mults, residual) == ([11], [16], 0)


# -- backend selection and parity ----------------------------------------------------


def test_backend_name_is_valid():
    assert modp.backend_name() in ("python", "numba")


def test_env_flag_forces_python_backend():
    out = subprocess.run(
        [sys.executable, "-c", "import k3family.modp as m; print(m.backend_name())"],
        capture_output=True,
        text=True,
        env={**os.environ, "K3FAMILY_JIT": "0"},
        check=True,
    )
    assert out.stdout.strip() == "python"


@pytest.mark.skipif(not HAVE_NUMBA, reason="numba backend unavailable")
def test_kernel_parity_python_vs_numba():
    import numpy as np

    p = 1000003

    def arr(A):
        return np.asarray(A, dtype=np.int64)

    A = [5, 0, 3, 2, 8, 1]
    B = [7, 1, 4]
    assert kpy.poly_mul(A, B, p) == knb.poly_mul(arr(A), arr(B), p).tolist()
    qp, rp = kpy.poly_divmod(A, B, p)
    qn, rn = knb.poly_divmod(arr(A), arr(B), p)
    assert (qp, rp) == (qn.tolist(), rn.tolist())
    assert kpy.poly_gcd(A, B, p) == knb.poly_gcd(arr(A), arr(B), p).tolist()
    assert kpy.sylvester_det(A, B, p) == int(knb.sylvester_det(arr(A), arr(B), p))
    xs, ys = [0, 1, 2, 3], [9, 8, 7, 1]
    assert kpy.lagrange_interp(xs, ys, p) == knb.lagrange_interp(arr(xs), arr(ys), p).tolist()


@pytest.mark.skipif(not HAVE_NUMBA, reason="numba backend unavailable")
def test_root_finder_parity_python_vs_numba():
    import numpy as np

    p = 10007
    H = dense_from_pairs([(3, 2), (500, 1)], [1, 0, 1], p)
    got_py = kpy.linear_roots(H, p, 7)
    rs, ms, res = knb.linear_roots(np.asarray(H, dtype=np.int64), p, np.uint64(7))
    assert got_py == (rs.tolist(), ms.tolist(), int(res))


def test_wrapper_handles_63_bit_prime_via_python_path():
    # P63 >= 2^62, so even a numba build must answer through the Python kernels
    a = P63 - 2
    assert modp.mulmod(a, a, P63) == (a * a) % P63
    H = dense_from_pairs([(123456789, 2)], [1], P63)
    assert modp.linear_roots(H, P63, seed=0) == ([123456789], [2], 0)
