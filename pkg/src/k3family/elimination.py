"""Sylvester matrices, resultants, discriminants, and vanishing orders.

Two independent resultant strategies are kept live and cross-checked:

* ``fraction_free``: exact single-step Bareiss elimination on the Sylvester
  matrix over the coefficient ring itself (polynomial entries allowed), with
  shortest-entry pivoting to damp intermediate swell;
* ``modular_interp``: evaluate the coefficients at consecutive integer nodes,
  take univariate resultants over the ground field, and reconstruct by
  Lagrange interpolation (at most one symbolic parameter besides the
  eliminated variable).

Both must agree wherever both apply; the verification suite treats any
disagreement as a failure, never as something to paper over.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .domains import GF, QQ, ZZ, Domain, PrimeField
from .poly import (
    ContextError,
    MultiPoly,
    NotDivisibleError,
    PolyRing,
    as_univariate,
    eval_poly,
    exact_div,
    from_univariate,
)


class NeedsMorePointsError(Exception):
    """The field ran out of evaluation nodes for the requested bound."""


class SamplingError(Exception):
    """Duplicate or invalid interpolation nodes."""


# -- generic fraction-free determinant ----------------------------------------


class _PolyOps:
    def __init__(self, ring: PolyRing):
        self.ring = ring
        self.zero = ring.zero()
        self.one = ring.one()

    def is_zero(self, a):
        return a.is_zero()

    def mul(self, a, b):
        return a * b

    def sub(self, a, b):
        return a - b

    def neg(self, a):
        return -a

    def exact_div(self, a, b):
        return exact_div(a, b)

    def size(self, a):
        return len(a.terms)


class _ScalarOps:
    def __init__(self, dom: Domain):
        self.dom = dom
        self.zero = dom.zero
        self.one = dom.one

    def is_zero(self, a):
        return self.dom.is_zero(a)

    def mul(self, a, b):
        return self.dom.mul(a, b)

    def sub(self, a, b):
        return self.dom.sub(a, b)

    def neg(self, a):
        return self.dom.neg(a)

    def exact_div(self, a, b):
        return self.dom.exact_div(a, b)

    def size(self, a):
        if isinstance(a, Fraction):
            return a.numerator.bit_length() + a.denominator.bit_length()
        return abs(a).bit_length() if isinstance(a, int) else 1


def bareiss_det(rows: list[list], ops) -> object:
    """Fraction-free determinant (single-step Bareiss).

    Every interior division is exact by the Sylvester identity; pivoting
    picks the shortest nonzero entry of the column.  Works over any integral
    domain, including polynomial rings.
    """
    n = len(rows)
    if n == 0:
        return ops.one
    M = [list(r) for r in rows]
    if any(len(r) != n for r in M):
        raise ValueError("matrix must be square")
    sign = 1
    prev = ops.one
    for r in range(n):
        best_i, best_sz = -1, None
        for i in range(r, n):
            e = M[i][r]
            if not ops.is_zero(e):
                sz = ops.size(e)
                if best_sz is None or sz < best_sz:
                    best_i, best_sz = i, sz
        if best_i < 0:
            return ops.zero
        if best_i != r:
            M[r], M[best_i] = M[best_i], M[r]
            sign = -sign
        piv = M[r][r]
        for i in range(r + 1, n):
            head = M[i][r]
            for j in range(r + 1, n):
                num = ops.sub(ops.mul(piv, M[i][j]), ops.mul(head, M[r][j]))
                M[i][j] = ops.exact_div(num, prev)
            M[i][r] = ops.zero
        prev = piv
    det = M[n - 1][n - 1]
    return det if sign == 1 else ops.neg(det)


def int_matrix_det(rows: list[list[int]]) -> int:
    """Exact determinant of an integer matrix (Bareiss)."""
    return bareiss_det(rows, _ScalarOps(ZZ))


# -- Sylvester matrices --------------------------------------------------------


@dataclass
class SylvesterMatrix:
    rows: list[list[MultiPoly]]
    p: MultiPoly
    q: MultiPoly
    var: str
    deg_p: int
    deg_q: int

    @property
    def size(self) -> int:
        return self.deg_p + self.deg_q

    def det(self) -> MultiPoly:
        return bareiss_det(self.rows, _PolyOps(self.p.ring))

    def row_strings(self) -> list[list[str]]:
        from .poly import to_str

        return [[to_str(e) for e in row] for row in self.rows]


def _dense_coeffs(p: MultiPoly, v: str, formal_degree: int | None = None) -> list[MultiPoly]:
    cs = as_univariate(p, v)
    if formal_degree is not None:
        if len(cs) - 1 > formal_degree:
            raise ContextError("actual degree exceeds formal degree")
        cs = cs + [p.ring.zero()] * (formal_degree + 1 - len(cs))
    return cs


def sylvester_formal(p: MultiPoly, q: MultiPoly, v: str, n: int, m: int) -> SylvesterMatrix:
    """Sylvester matrix at declared formal degrees (n for p, m for q).

    With q monic of true degree m, the determinant equals the true resultant
    for every specialization, even where p's leading coefficients vanish;
    this is what makes r(t) a single polynomial function of the parameters.
    """
    ring = p.ring
    zero = ring.zero()
    a = list(reversed(_dense_coeffs(p, v, n)))  # a[0] = formal lc
    b = list(reversed(_dense_coeffs(q, v, m)))
    size = n + m
    rows = []
    for i in range(m):
        rows.append([zero] * i + a + [zero] * (m - 1 - i))
    for i in range(n):
        rows.append([zero] * i + b + [zero] * (n - 1 - i))
    assert all(len(r) == size for r in rows)
    return SylvesterMatrix(rows=rows, p=p, q=q, var=v, deg_p=n, deg_q=m)


def sylvester(p: MultiPoly, q: MultiPoly, v: str) -> SylvesterMatrix:
    """Standard Sylvester matrix at the true degrees in v."""
    if p.is_zero() or q.is_zero():
        raise ContextError("sylvester of a zero polynomial is undefined")
    n, m = p.degree(v), q.degree(v)
    if n == 0 and m == 0:
        raise ContextError("both inputs have degree 0 in " + v)
    return sylvester_formal(p, q, v, n, m)


# -- resultants ----------------------------------------------------------------


def resultant(p: MultiPoly, q: MultiPoly, v: str, strategy: str = "fraction_free") -> MultiPoly:
    if strategy == "fraction_free":
        return sylvester(p, q, v).det()
    if strategy == "modular_interp":
        return _resultant_interp(p, q, v)
    raise ValueError(f"unknown strategy {strategy!r}")


def _resultant_interp(p: MultiPoly, q: MultiPoly, v: str) -> MultiPoly:
    """Evaluation/interpolation route; at most one free parameter besides v."""
    if p.is_zero() or q.is_zero():
        raise ContextError("resultant of a zero polynomial is undefined")
    ring = p.ring
    dom = ring.domain
    n, m = p.degree(v), q.degree(v)
    if n == 0 and m == 0:
        raise ContextError("both inputs have degree 0 in " + v)

    extra = sorted((set(p.variables_used()) | set(q.variables_used())) - {v})
    if len(extra) > 1:
        raise ContextError(
            "modular_interp supports at most one parameter besides the "
            f"eliminated variable; got {extra}"
        )

    pc = [c for c in as_univariate(p, v)]
    qc = [c for c in as_univariate(q, v)]

    if not extra:
        a = [c.constant() for c in pc]
        b = [c.constant() for c in qc]
        val = _uni_resultant(a, b, dom)
        return ring.const(val)

    s = extra[0]
    dps = max(c.degree(s) for c in pc)
    dqs = max(c.degree(s) for c in qc)
    bound = n * max(dqs, 0) + m * max(dps, 0)

    # dense: coeff_of_v[k] as dense list in s
    def dense2(cs):
        return [[x.constant() for x in as_univariate(c, s)] or [dom.zero] for c in cs]

    P2, Q2 = dense2(pc), dense2(qc)

    def eval_at(node):
        a = [_eval_dense(row, node, dom) for row in P2]
        b = [_eval_dense(row, node, dom) for row in Q2]
        return a, b

    if isinstance(dom, PrimeField):
        field = dom
        max_nodes = field.p
    else:
        field = QQ
        max_nodes = None

    xs: list = []
    ys: list = []
    node = 0
    while len(xs) < bound + 1:
        if max_nodes is not None and node >= max_nodes:
            raise NeedsMorePointsError(
                f"need {bound + 1} good nodes but the field has only {max_nodes} elements"
            )
        nv = field.of(node)
        a, b = eval_at(nv)
        node += 1
        # a fallen leading coefficient changes the resultant of the
        # specialization; skip such nodes and extend the run
        if field.is_zero(a[-1]) or field.is_zero(b[-1]):
            continue
        xs.append(nv)
        ys.append(_uni_resultant(a, b, field))

    coeffs = _lagrange(xs, ys, field)
    out_coeffs = []
    for c in coeffs:
        if isinstance(dom, PrimeField) or dom is QQ:
            out_coeffs.append(ring.const(c))
        else:  # ZZ: interpolation of an integer polynomial must come out integral
            out_coeffs.append(ring.const(dom.of(c)))
    return from_univariate(out_coeffs, s, ring)


def _eval_dense(coeffs: list, x, dom) -> object:
    acc = dom.zero
    for c in reversed(coeffs):
        acc = dom.add(dom.mul(acc, x), c)
    return acc


def _uni_resultant(a: list, b: list, dom) -> object:
    """Resultant of dense univariate polynomials over a domain (via Bareiss
    on the numeric Sylvester matrix)."""

    def trim(c):
        c = list(c)
        while c and dom.is_zero(c[-1]):
            c.pop()
        return c

    a, b = trim(a), trim(b)
    if not a or not b:
        raise ContextError("resultant of a zero polynomial is undefined")
    n, m = len(a) - 1, len(b) - 1
    if n == 0 and m == 0:
        raise ContextError("both inputs are constants")
    ar, br = list(reversed(a)), list(reversed(b))
    zero = dom.zero
    rows = []
    for i in range(m):
        rows.append([zero] * i + ar + [zero] * (m - 1 - i))
    for i in range(n):
        rows.append([zero] * i + br + [zero] * (n - 1 - i))
    return bareiss_det(rows, _ScalarOps(dom))


def _lagrange(xs: list, ys: list, dom) -> list:
    """Dense coefficients of the unique interpolant (O(k^2))."""
    k = len(xs)
    if len(set(xs)) != k:
        raise SamplingError("duplicate interpolation nodes")
    # full product N(x) = prod (x - xi)
    N = [dom.one]
    for xi in xs:
        # multiply by (x - xi)
        nxt = [dom.zero] * (len(N) + 1)
        for i, c in enumerate(N):
            nxt[i + 1] = dom.add(nxt[i + 1], c)
            nxt[i] = dom.sub(nxt[i], dom.mul(c, xi))
        N = nxt
    out = [dom.zero] * k
    for xi, yi in zip(xs, ys):
        # Qi = N / (x - xi) by synthetic division; then add yi/Qi(xi) * Qi
        Q = [dom.zero] * (len(N) - 1)
        carry = dom.zero
        for i in range(len(N) - 1, 0, -1):
            carry = dom.add(N[i], dom.mul(carry, xi))
            Q[i - 1] = carry
        qx = _eval_dense(Q, xi, dom)
        scale = dom.exact_div(yi, qx)
        for i, c in enumerate(Q):
            out[i] = dom.add(out[i], dom.mul(scale, c))
    while out and dom.is_zero(out[-1]):
        out.pop()
    return out


# -- discriminants and orders ---------------------------------------------------


def discriminant(p: MultiPoly, v: str, strategy: str = "fraction_free") -> MultiPoly:
    """disc(p) = (-1)^(n(n-1)/2) * Res(p, p') / lc(p).

    The classical convention: disc(x^2+bx+c) = b^2-4c and
    disc(y^3+py+q) = -4p^3-27q^2.
    """
    from .poly import derivative, leading_coeff

    n = p.degree(v)
    if n < 2:
        raise ContextError("discriminant needs degree >= 2")
    lc = leading_coeff(p, v)
    res = resultant(p, derivative(p, v), v, strategy=strategy)
    try:
        quot = exact_div(res, lc)
    except NotDivisibleError as exc:  # cannot happen for true resultants
        raise AssertionError(f"internal consistency: lc does not divide Res: {exc}")
    return quot if n % 4 in (0, 1) else -quot


def formal_discriminant(p: MultiPoly, v: str, formal_degree: int, lam: str = "lam") -> MultiPoly:
    """Discriminant of p treated as a polynomial of the given formal degree.

    Adjoins the symbolic leading coefficient `lam` (already a ring variable),
    computes disc(lam*v^n + p) and substitutes lam = 0.  This is the right
    object when a family of degree-n polynomials degenerates to lower degree
    on a locus: the specialized formal discriminant keeps track of the root
    that escaped to infinity.
    """
    from .poly import derivative

    ring = p.ring
    n = formal_degree
    if p.degree(v) >= n:
        raise ContextError("polynomial must have degree below the formal degree")
    if p.degree(lam) > 0:
        raise ContextError(f"input already involves {lam}")
    plam = p + ring.var(lam) * ring.var(v) ** n
    res = resultant(plam, derivative(plam, v), v)
    quot = exact_div(res, ring.var(lam))
    disc_lam = quot if n % 4 in (0, 1) else -quot
    return eval_poly(disc_lam, {lam: 0})


def vanishing_order(p: MultiPoly, along: MultiPoly) -> int:
    """Largest e with along^e | p, by repeated certified division."""
    if p.is_zero():
        raise ContextError("vanishing order of the zero polynomial is undefined")
    if along.is_zero() or along.is_constant():
        raise ContextError("order along a constant is undefined")
    e = 0
    cur = p
    while True:
        try:
            cur = exact_div(cur, along)
        except NotDivisibleError:
            return e
        e += 1


# -- interpolation of black-box restrictions ------------------------------------


def interp_univariate(F, degree_bound: int, prime: int, var: str = "s") -> MultiPoly:
    """Reconstruct a univariate polynomial over GF(prime) from evaluations.

    F maps a field element (int) to a field element; nodes are the
    consecutive integers 0..degree_bound.  The result is exact when the
    restriction really has degree <= degree_bound.
    """
    field = GF(prime)
    k = degree_bound + 1
    if k > prime:
        raise SamplingError(f"degree bound {degree_bound} needs {k} distinct nodes, field has {prime}")
    from . import modp

    xs = list(range(k))
    ys = [int(F(x)) % prime for x in xs]
    coeffs = modp.lagrange_interp(xs, ys, prime)
    ring = PolyRing((var,), field)
    return from_univariate([ring.const(int(c)) for c in coeffs], var, ring)
