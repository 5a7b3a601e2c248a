"""Sparse multivariate polynomials over an exact coefficient domain.

Canonical form: a term map exponent-vector -> nonzero coefficient; no zero
coefficient is ever stored, so equality is equality of term maps.  Monomial
order is graded reverse-lexicographic with respect to the declared variable
order; it drives canonical printing, deterministic iteration, and the lead
term used by exact division.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Mapping

from .domains import Domain, DomainError, ZZ


class ContextError(Exception):
    """Operands from different ring contexts, or an unknown variable."""


class NotDivisibleError(Exception):
    """exact_div received a non-multiple; callers treat this as a signal."""


def grevlex_key(exp: tuple[int, ...]):
    """Sort key: ascending by this key == ascending grevlex.

    a > b in grevlex iff deg a > deg b, or degrees tie and the rightmost
    nonzero entry of a-b is negative.
    """
    return (sum(exp), tuple(-e for e in reversed(exp)))


class PolyRing:
    """Ring context: ordered variable names plus a coefficient domain."""

    __slots__ = ("vars", "domain", "_index", "_zero_exp")

    def __init__(self, variables: Iterable[str], domain: Domain = ZZ):
        vs = tuple(variables)
        if len(set(vs)) != len(vs):
            raise ContextError(f"duplicate variable in {vs}")
        for v in vs:
            if not re.fullmatch(r"[A-Za-z_][A-Za-z0-9_]*", v):
                raise ContextError(f"bad variable name {v!r}")
        self.vars = vs
        self.domain = domain
        self._index = {v: i for i, v in enumerate(vs)}
        self._zero_exp = (0,) * len(vs)

    def __eq__(self, other):
        return (
            isinstance(other, PolyRing)
            and self.vars == other.vars
            and self.domain == other.domain
        )

    def __hash__(self):
        return hash((self.vars, id(type(self.domain)), getattr(self.domain, "p", 0)))

    def __repr__(self):
        return f"PolyRing({','.join(self.vars)}; {self.domain.name})"

    def index(self, v: str) -> int:
        try:
            return self._index[v]
        except KeyError:
            raise ContextError(f"variable {v!r} not in ring {self.vars}") from None

    # -- constructors -------------------------------------------------------

    def zero(self) -> "MultiPoly":
        return MultiPoly(self, {})

    def one(self) -> "MultiPoly":
        return self.const(self.domain.one)

    def const(self, c) -> "MultiPoly":
        c = self.domain.of(c) if not self._is_elem(c) else c
        if self.domain.is_zero(c):
            return self.zero()
        return MultiPoly(self, {self._zero_exp: c})

    def var(self, v: str) -> "MultiPoly":
        i = self.index(v)
        exp = tuple(1 if j == i else 0 for j in range(len(self.vars)))
        return MultiPoly(self, {exp: self.domain.one})

    def monomial(self, c, exps: Mapping[str, int]) -> "MultiPoly":
        c = self.domain.of(c)
        if self.domain.is_zero(c):
            return self.zero()
        e = [0] * len(self.vars)
        for v, k in exps.items():
            if k < 0:
                raise ContextError(f"negative exponent for {v}")
            e[self.index(v)] = k
        return MultiPoly(self, {tuple(e): c})

    def from_terms(self, terms: Mapping[tuple[int, ...], object]) -> "MultiPoly":
        clean = {}
        for exp, c in terms.items():
            c = self.domain.of(c) if not self._is_elem(c) else c
            if not self.domain.is_zero(c):
                clean[tuple(exp)] = c
        return MultiPoly(self, clean)

    def _is_elem(self, c) -> bool:
        # cheap structural check; domains coerce ints/Fractions themselves
        if isinstance(c, bool):
            return False
        if self.domain.name == "ZZ":
            return isinstance(c, int)
        if self.domain.name == "QQ":
            return isinstance(c, Fraction)
        return isinstance(c, int)

    def parse(self, text: str) -> "MultiPoly":
        return _parse(self, text)


class MultiPoly:
    """Immutable sparse polynomial in a PolyRing.  Do not mutate .terms."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: PolyRing, terms: dict):
        self.ring = ring
        self.terms = terms

    # -- basic queries -------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and self.ring._zero_exp in self.terms)

    def constant(self):
        """The value of a constant polynomial as a domain element."""
        if self.is_zero():
            return self.ring.domain.zero
        if not self.is_constant():
            raise ContextError("polynomial is not constant")
        return self.terms[self.ring._zero_exp]

    def coeff(self, exps: Mapping[str, int]):
        e = [0] * len(self.ring.vars)
        for v, k in exps.items():
            e[self.ring.index(v)] = k
        return self.terms.get(tuple(e), self.ring.domain.zero)

    def degree(self, v: str) -> int:
        """Degree in one variable; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        i = self.ring.index(v)
        return max(e[i] for e in self.terms)

    def total_degree(self) -> int:
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def variables_used(self) -> tuple[str, ...]:
        used = [False] * len(self.ring.vars)
        for e in self.terms:
            for i, k in enumerate(e):
                if k:
                    used[i] = True
        return tuple(v for i, v in enumerate(self.ring.vars) if used[i])

    def sorted_terms(self, reverse: bool = True):
        return sorted(self.terms.items(), key=lambda kv: grevlex_key(kv[0]), reverse=reverse)

    def lead_term(self):
        """(exponent, coefficient) maximal in grevlex; errors on zero."""
        if not self.terms:
            raise ContextError("zero polynomial has no lead term")
        exp = max(self.terms, key=grevlex_key)
        return exp, self.terms[exp]

    def __len__(self):
        return len(self.terms)

    def __eq__(self, other):
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        return hash((self.ring, frozenset(self.terms.items())))

    def __repr__(self):
        return f"<{to_str(self)}>"

    # -- arithmetic ----------------------------------------------------------

    def _check(self, other: "MultiPoly"):
        if not isinstance(other, MultiPoly):
            raise ContextError(f"expected MultiPoly, got {type(other).__name__}")
        if other.ring != self.ring:
            raise ContextError(f"ring mismatch: {self.ring} vs {other.ring}")

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.ring.const(other)
        self._check(other)
        dom = self.ring.domain
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = dom.add(out.get(e, dom.zero), c)
            if dom.is_zero(s):
                out.pop(e, None)
            else:
                out[e] = s
        return MultiPoly(self.ring, out)

    def __radd__(self, other):
        return self.__add__(other)

    def __neg__(self):
        dom = self.ring.domain
        return MultiPoly(self.ring, {e: dom.neg(c) for e, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.ring.const(other)
        return self.__add__(other.__neg__())

    def __rsub__(self, other):
        return self.__neg__().__add__(self.ring.const(other))

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        self._check(other)
        dom = self.ring.domain
        a, b = self.terms, other.terms
        if len(a) > len(b):
            a, b = b, a
        out: dict = {}
        for ea, ca in a.items():
            for eb, cb in b.items():
                e = tuple(x + y for x, y in zip(ea, eb))
                prod = dom.mul(ca, cb)
                s = dom.add(out.get(e, dom.zero), prod)
                if dom.is_zero(s):
                    out.pop(e, None)
                else:
                    out[e] = s
        return MultiPoly(self.ring, out)

    def __rmul__(self, other):
        return self.__mul__(other)

    def scale(self, c) -> "MultiPoly":
        dom = self.ring.domain
        c = dom.of(c)
        if dom.is_zero(c):
            return self.ring.zero()
        out = {}
        for e, v in self.terms.items():
            p = dom.mul(v, c)
            if not dom.is_zero(p):
                out[e] = p
        return MultiPoly(self.ring, out)

    def __pow__(self, n: int):
        if n < 0:
            raise ContextError("negative power")
        result = self.ring.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result


def arith(a: MultiPoly, b: MultiPoly, op: str) -> MultiPoly:
    """Named ring operation; op in {add, sub, mul}."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown op {op!r}")


def eval_poly(p: MultiPoly, assignment: Mapping[str, object]) -> MultiPoly:
    """Substitution homomorphism.  Values may be domain elements (or raw
    ints/Fractions) or MultiPoly in the same ring.  Partial assignments leave
    the other variables alone; full assignments produce a constant poly."""
    ring = p.ring
    dom = ring.domain
    subs: dict[int, MultiPoly] = {}
    for v, val in assignment.items():
        i = ring.index(v)
        if isinstance(val, MultiPoly):
            if val.ring != ring:
                raise ContextError("substitution value from a different ring")
            subs[i] = val
        else:
            subs[i] = ring.const(dom.of(val))

    if not subs:
        return p

    # per-variable power cache keeps repeated exponents cheap
    pow_cache: dict[tuple[int, int], MultiPoly] = {}

    def power(i: int, k: int) -> MultiPoly:
        got = pow_cache.get((i, k))
        if got is None:
            got = subs[i] ** k
            pow_cache[(i, k)] = got
        return got

    out = ring.zero()
    for e, c in p.terms.items():
        residual = tuple(0 if i in subs else k for i, k in enumerate(e))
        term = MultiPoly(ring, {residual: c})
        for i, k in enumerate(e):
            if k and i in subs:
                term = term * power(i, k)
        out = out + term
    return out


def exact_div(a: MultiPoly, b: MultiPoly) -> MultiPoly:
    """Certified exact division: returns q with a = b*q, else raises
    NotDivisibleError.  Works over any integral domain via lead-term
    reduction in grevlex order."""
    a._check(b)
    if b.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    ring = a.ring
    dom = ring.domain
    if a.is_zero():
        return ring.zero()

    lb_exp, lb_c = b.lead_term()
    q_terms: dict = {}
    rem = dict(a.terms)

    while rem:
        exp = max(rem, key=grevlex_key)
        c = rem[exp]
        qe = tuple(x - y for x, y in zip(exp, lb_exp))
        if any(x < 0 for x in qe):
            raise NotDivisibleError("lead monomial not divisible")
        try:
            qc = dom.exact_div(c, lb_c)
        except DomainError as exc:
            raise NotDivisibleError(str(exc)) from None
        q_terms[qe] = qc
        # rem -= qc * x^qe * b
        for eb, cb in b.terms.items():
            e = tuple(x + y for x, y in zip(qe, eb))
            s = dom.sub(rem.get(e, dom.zero), dom.mul(qc, cb))
            if dom.is_zero(s):
                rem.pop(e, None)
            else:
                rem[e] = s
    return MultiPoly(ring, q_terms)


def divides(b: MultiPoly, a: MultiPoly) -> bool:
    try:
        exact_div(a, b)
        return True
    except NotDivisibleError:
        return False


def derivative(p: MultiPoly, v: str) -> MultiPoly:
    ring = p.ring
    dom = ring.domain
    i = ring.index(v)
    out: dict = {}
    for e, c in p.terms.items():
        k = e[i]
        if k == 0:
            continue
        ne = tuple(x - 1 if j == i else x for j, x in enumerate(e))
        nc = dom.mul(c, dom.of(k))
        if not dom.is_zero(nc):
            s = dom.add(out.get(ne, dom.zero), nc)
            if dom.is_zero(s):
                out.pop(ne, None)
            else:
                out[ne] = s
    return MultiPoly(ring, out)


# -- dense univariate view ---------------------------------------------------


def as_univariate(p: MultiPoly, v: str) -> list[MultiPoly]:
    """Dense coefficient list [c0, c1, ..., cd] with ci a MultiPoly free of v.

    The dense view is the internal representation for gcd, Sylvester
    construction, and interpolation.
    """
    ring = p.ring
    i = ring.index(v)
    d = p.degree(v)
    if d < 0:
        return []
    coeffs: list[dict] = [dict() for _ in range(d + 1)]
    for e, c in p.terms.items():
        k = e[i]
        rest = tuple(0 if j == i else x for j, x in enumerate(e))
        coeffs[k][rest] = c
    return [MultiPoly(ring, t) for t in coeffs]


def from_univariate(coeffs: list[MultiPoly], v: str, ring: PolyRing) -> MultiPoly:
    i = ring.index(v)
    out: dict = {}
    dom = ring.domain
    for k, c in enumerate(coeffs):
        if c is None or (isinstance(c, MultiPoly) and c.is_zero()):
            continue
        if not isinstance(c, MultiPoly):
            c = ring.const(c)
        if c.degree(v) > 0:
            raise ContextError(f"coefficient {k} involves {v}")
        for e, val in c.terms.items():
            ne = tuple(x + k if j == i else x for j, x in enumerate(e))
            s = dom.add(out.get(ne, dom.zero), val)
            if dom.is_zero(s):
                out.pop(ne, None)
            else:
                out[ne] = s
    return MultiPoly(ring, out)


def leading_coeff(p: MultiPoly, v: str) -> MultiPoly:
    """Leading coefficient of p in v, as a MultiPoly free of v."""
    cs = as_univariate(p, v)
    if not cs:
        raise ContextError("zero polynomial has no leading coefficient")
    return cs[-1]


def is_univariate_in(p: MultiPoly, v: str) -> bool:
    i = p.ring.index(v)
    return all(all(k == 0 for j, k in enumerate(e) if j != i) for e in p.terms)


def vanishing_order_at(p: MultiPoly, v: str, value) -> int:
    """ord_{v=value}(p) for p viewed in v; p must be nonzero."""
    if p.is_zero():
        raise ContextError("vanishing order of the zero polynomial is undefined")
    ring = p.ring
    dom = ring.domain
    value = dom.of(value)
    if dom.is_zero(value):
        shifted = p
    else:
        shifted = eval_poly(p, {v: ring.var(v) + ring.const(value)})
    for k, c in enumerate(as_univariate(shifted, v)):
        if not c.is_zero():
            return k
    raise AssertionError("nonzero polynomial with all-zero coefficients")


# -- gcd ----------------------------------------------------------------------


def _content_zz(coeffs: list[int]) -> int:
    from math import gcd

    g = 0
    for c in coeffs:
        g = gcd(g, c)
    return g


def univariate_gcd(a: MultiPoly, b: MultiPoly, v: str) -> MultiPoly:
    """gcd of univariate polynomials via a subresultant remainder sequence.

    Over a field the result is monic; over ZZ it is primitive with positive
    leading coefficient.  Both inputs zero is undefined.
    """
    if a.is_zero() and b.is_zero():
        raise ContextError("gcd(0, 0) is undefined")
    ring = a.ring
    a._check(b)
    if not (is_univariate_in(a, v) and is_univariate_in(b, v)):
        raise ContextError(f"inputs must be univariate in {v}")
    dom = ring.domain

    def dense(p: MultiPoly) -> list:
        return [c.constant() for c in as_univariate(p, v)]

    A, B = dense(a), dense(b)

    if dom.is_field:
        g = _gcd_field(A, B, dom)
    else:
        g = _gcd_subresultant_zz(A, B)
    return from_univariate([ring.const(c) for c in g], v, ring)


def _trim(c: list) -> list:
    while c and (c[-1] == 0):
        c.pop()
    return c


def _gcd_field(A: list, B: list, dom) -> list:
    A, B = _trim(list(A)), _trim(list(B))
    while B:
        A, B = B, _poly_mod_field(A, B, dom)
    if not A:
        return []
    inv = dom.invert(A[-1])
    return [dom.mul(c, inv) for c in A]


def _poly_mod_field(A: list, B: list, dom) -> list:
    A = list(A)
    db, lb = len(B) - 1, B[-1]
    inv = dom.invert(lb)
    while len(A) - 1 >= db and A:
        k = len(A) - 1 - db
        q = dom.mul(A[-1], inv)
        for i, c in enumerate(B):
            A[k + i] = dom.sub(A[k + i], dom.mul(q, c))
        _trim(A)
    return A


def _pseudo_rem_zz(A: list[int], B: list[int]) -> list[int]:
    """prem(A, B): lc(B)^(degA-degB+1) * A mod B, all-integer."""
    A = list(A)
    db, lb = len(B) - 1, B[-1]
    delta = len(A) - 1 - db
    for k in range(delta, -1, -1):
        if len(A) - 1 == db + k:
            lead = A[-1]
            A = [c * lb for c in A]
            for i, c in enumerate(B):
                A[k + i] -= lead * c
            _trim(A)
        else:
            A = [c * lb for c in A]
            _trim(A)
    return A


def _gcd_subresultant_zz(A: list[int], B: list[int]) -> list[int]:
    A, B = _trim(list(A)), _trim(list(B))
    if not A:
        A, B = B, A
    if not B:
        g = _content_zz(A)
        out = [c // g for c in A] if g else A
        if out and out[-1] < 0:
            out = [-c for c in out]
        return out
    if len(A) < len(B):
        A, B = B, A

    def primitive(c: list[int]) -> list[int]:
        g = _content_zz(c)
        return [x // g for x in c] if g > 1 else list(c)

    contA, contB = _content_zz(A), _content_zz(B)
    from math import gcd as igcd

    cont = igcd(contA, contB)
    A, B = primitive(A), primitive(B)

    g, h = 1, 1
    while True:
        delta = (len(A) - 1) - (len(B) - 1)
        R = _pseudo_rem_zz(A, B)
        if not R:
            break
        if len(R) == 1:
            B = R
            break
        divisor = g * h**delta
        A, B = B, [c // divisor for c in R]
        g = A[-1]
        if delta >= 1:
            h = g**delta // h ** (delta - 1)
        # delta == 0 leaves h unchanged

    if len(B) == 1 and B[0] != 0:
        return [cont] if cont else [1]
    out = primitive(B)
    if out[-1] < 0:
        out = [-c for c in out]
    return [c * cont for c in out] if cont > 1 else out


# -- canonical text form ------------------------------------------------------


def _coeff_str(c, dom) -> str:
    return dom.to_str(c)


def to_str(p: MultiPoly) -> str:
    """Canonical text: terms descending in grevlex, `^` powers, `*` separators,
    variable factors within a term sorted by name."""
    if p.is_zero():
        return "0"
    dom = p.ring.domain
    vs = p.ring.vars
    pieces = []
    for exp, c in p.sorted_terms():
        factors = []
        for v, k in sorted(zip(vs, exp)):
            if k == 1:
                factors.append(v)
            elif k > 1:
                factors.append(f"{v}^{k}")
        cs = _coeff_str(c, dom)
        neg = cs.startswith("-")
        mag = cs[1:] if neg else cs
        if factors:
            body = "*".join(factors) if mag == "1" else f"{mag}*" + "*".join(factors)
        else:
            body = mag
        pieces.append(("-" if neg else "+", body))
    sign, body = pieces[0]
    out = ("-" if sign == "-" else "") + body
    for sign, body in pieces[1:]:
        out += f" {'-' if sign == '-' else '+'} {body}"
    return out


_TOKEN = re.compile(
    r"\s*(?:(?P<num>\d+(?:/\d+)?)|(?P<var>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>[-+*^()]))"
)


def _parse(ring: PolyRing, text: str):
    """Whitespace-insensitive parser for the canonical format (sums of
    coefficient*monomial terms; no parentheses)."""
    dom = ring.domain
    pos = 0
    tokens = []
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            if text[pos:].strip() == "":
                break
            raise ContextError(f"parse error at {text[pos:pos+20]!r}")
        pos = m.end()
        if m.group("num") is not None:
            tokens.append(("num", m.group("num")))
        elif m.group("var") is not None:
            tokens.append(("var", m.group("var")))
        else:
            tokens.append(("op", m.group("op")))
    tokens.append(("end", ""))

    result = ring.zero()
    i = 0

    def peek():
        return tokens[i]

    while peek()[0] != "end":
        sign = 1
        while peek() == ("op", "+") or peek() == ("op", "-"):
            if peek() == ("op", "-"):
                sign = -sign
            i += 1
        # one term: factors separated by '*'
        coeff = Fraction(sign)
        exps: dict[str, int] = {}
        expect_factor = True
        while True:
            kind, val = peek()
            if kind == "num" and expect_factor:
                coeff *= Fraction(val)
                i += 1
            elif kind == "var" and expect_factor:
                name = val
                ring.index(name)  # raises on unknown variable
                i += 1
                k = 1
                if peek() == ("op", "^"):
                    i += 1
                    kind2, val2 = peek()
                    if kind2 != "num" or "/" in val2:
                        raise ContextError("exponent must be a nonnegative integer")
                    k = int(val2)
                    i += 1
                exps[name] = exps.get(name, 0) + k
            else:
                raise ContextError(f"unexpected token {val!r} in term")
            expect_factor = False
            if peek() == ("op", "*"):
                i += 1
                expect_factor = True
                continue
            break
        kind, val = peek()
        if not (kind == "end" or (kind == "op" and val in "+-")):
            raise ContextError(f"expected '+', '-' or end after term, got {val!r}")
        result = result + ring.monomial(dom.of(coeff), exps)
    return result
