"""Kodaira fiber types from local order triples, plus whole-fibration scans.

A fiber of the Weierstrass model is classified by the vanishing orders
(a, b, d) of (g2, g3, Delta) at the place, with Delta taken as
h = 4 g2^3 + 27 g3^2 (local orders do not see the scalar normalization).
The place at infinity is read off the P(1,4,6,1) model, where g2, g3, h are
sections of O(8), O(12), O(24): its orders are (8 - deg_u g2, 12 - deg_u g3,
24 - deg_u h).  For every family member deg_u g3 = 7 and deg_u h = 14 with
constant leading coefficients, so infinity always carries (>=4, 5, 10),
type II*.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .domains import QQ, PrimeField
from .family import FamilyPoint, WeierstrassData, _dense_order, build_family, build_h
from .poly import ContextError, as_univariate

INF = float("inf")  # order of the identically-zero section


class InconsistentOrdersError(Exception):
    """An order triple matching no classification row."""


@dataclass(frozen=True)
class OrderTriple:
    """a = ord(g2), b = ord(g3), d = ord(Delta) at one place.

    Orders are nonnegative integers, or INF for an identically-zero
    section.  Since Delta = 4 g2^3 + 27 g3^2, consistency demands
    d >= min(3a, 2b), with equality whenever 3a != 2b.
    """

    a: float
    b: float
    d: float

    def is_consistent(self) -> bool:
        m = min(3 * self.a, 2 * self.b)
        if 3 * self.a != 2 * self.b:
            return self.d == m
        return self.d >= m

    def as_json(self):
        enc = lambda v: "infinity" if v == INF else int(v)
        return [enc(self.a), enc(self.b), enc(self.d)]


@dataclass(frozen=True)
class KodairaType:
    """A fiber type tag plus its Euler number.

    Tags: I0, In (n >= 1), II, III, IV, I0*, In* (n >= 1), IV*, III*, II*,
    NonMinimal.  In every classified case the Euler number equals ord(Delta)
    (for In* that is 6 + n); NonMinimal records ord(Delta) as well.
    """

    tag: str
    euler: int

    def __str__(self):
        return self.tag


def classify(o: OrderTriple) -> KodairaType:
    """Table lookup on the order triple.

    Rows: I0 (d=0); In (a=b=0, d=n); II (a>=1, b=1, d=2); III (a=1, b>=2,
    d=3); IV (a>=2, b=2, d=4); I0* (a>=2, b>=3, d=6); In* (a=2, b=3,
    d=6+n); IV* (a>=3, b=4, d=8); III* (a=3, b>=5, d=9); II* (a>=4, b=5,
    d=10); NonMinimal (a>=4, b>=6, d>=12).
    """
    a, b, d = o.a, o.b, o.d
    if d == INF:
        raise InconsistentOrdersError("Delta vanishes identically")
    d = int(d)
    if d == 0:
        return KodairaType("I0", 0)
    if a == 0 and b == 0:
        return KodairaType(f"I{d}", d)
    if b == 1 and d == 2 and a >= 1:
        return KodairaType("II", 2)
    if a == 1 and d == 3 and b >= 2:
        return KodairaType("III", 3)
    if b == 2 and d == 4 and a >= 2:
        return KodairaType("IV", 4)
    if a >= 2 and b >= 3 and d == 6:
        return KodairaType("I0*", 6)
    if a == 2 and b == 3 and d >= 7:
        return KodairaType(f"I{d - 6}*", d)
    if b == 4 and d == 8 and a >= 3:
        return KodairaType("IV*", 8)
    if a == 3 and d == 9 and b >= 5:
        return KodairaType("III*", 9)
    if b == 5 and d == 10 and a >= 4:
        return KodairaType("II*", 10)
    if a >= 4 and b >= 6 and d >= 12:
        return KodairaType("NonMinimal", d)
    raise InconsistentOrdersError(f"no classification row matches (a,b,d) = ({a},{b},{d})")


@dataclass(frozen=True)
class FiberRecord:
    place: object  # field element, or the string "infinity"
    orders: OrderTriple
    kind: KodairaType

    def as_json(self):
        place = self.place if self.place == "infinity" else str(self.place)
        return {
            "place": place,
            "orders": self.orders.as_json(),
            "type": self.kind.tag,
            "euler": self.kind.euler,
        }


@dataclass(frozen=True)
class ScanResult:
    fibers: tuple[FiberRecord, ...]  # finite rational places, ascending
    infinity: FiberRecord
    residual: int  # Delta-degree at places not rational over the field

    def euler_sum(self) -> int:
        """Total Euler number of the accounted places (full 24 for a K3 only
        when the residual is 0)."""
        return sum(f.kind.euler for f in self.fibers) + self.infinity.kind.euler

    def to_json(self) -> str:
        return json.dumps(
            {
                "fibers": [f.as_json() for f in self.fibers],
                "infinity": self.infinity.as_json(),
                "residual": self.residual,
            },
            indent=2,
        )


def _dense_order_or_zero(coeffs, u0, dom):
    stripped = list(coeffs)
    while stripped and dom.is_zero(stripped[-1]):
        stripped.pop()
    if not stripped:
        return INF
    return _dense_order(stripped, u0, dom)


def orders_at(wd: WeierstrassData, u0) -> OrderTriple:
    """Local orders of (g2, g3, h) at the finite place u = u0."""
    wd = wd.dehomogenized()
    dom = wd.ring.domain
    u0 = dom.of(u0)
    g2d = [c.constant() for c in as_univariate(wd.g2, "u")]
    g3d = [c.constant() for c in as_univariate(wd.g3, "u")]
    h = build_h(wd)
    hd = [c.constant() for c in as_univariate(h, "u")]
    return OrderTriple(
        a=_dense_order_or_zero(g2d, u0, dom),
        b=_dense_order_or_zero(g3d, u0, dom),
        d=_dense_order_or_zero(hd, u0, dom),
    )


def orders_at_infinity(wd: WeierstrassData) -> OrderTriple:
    """Orders at w = 0 on the P(1,4,6,1) model: g2, g3, h are sections of
    O(8), O(12), O(24) over the base, so the orders are the degree
    deficits."""
    wd = wd.dehomogenized()
    dg2 = wd.g2.degree("u")
    dg3 = wd.g3.degree("u")
    dh = build_h(wd).degree("u")
    return OrderTriple(
        a=INF if dg2 < 0 else 8 - dg2,
        b=INF if dg3 < 0 else 12 - dg3,
        d=INF if dh < 0 else 24 - dh,
    )


def _rational_roots_qq(coeffs) -> list:
    """All rational roots of a dense QQ polynomial (rational root theorem)."""
    from fractions import Fraction
    from math import gcd

    # clear denominators to a primitive integer polynomial
    den = 1
    for c in coeffs:
        den = den * c.denominator // gcd(den, c.denominator)
    ints = [int(c * den) for c in coeffs]
    roots = []
    # strip powers of u
    shift = 0
    while ints and ints[0] == 0:
        ints.pop(0)
        shift += 1
    if shift:
        roots.append(Fraction(0))
    if not ints or len(ints) == 1:
        return roots

    def divisors(n: int):
        n = abs(n)
        out = []
        i = 1
        while i * i <= n:
            if n % i == 0:
                out.append(i)
                out.append(n // i)
            i += 1
        return sorted(set(out))

    a0, an = ints[0], ints[-1]
    for p in divisors(a0):
        for q in divisors(an):
            if gcd(p, q) != 1:
                continue
            for cand in (Fraction(p, q), Fraction(-p, q)):
                acc = Fraction(0)
                for c in reversed(ints):
                    acc = acc * cand + c
                if acc == 0 and cand not in roots:
                    roots.append(cand)
    return sorted(roots)


def scan_fibers(wd: WeierstrassData, seed: int = 0) -> ScanResult:
    """Classify every field-rational singular fiber of the member, plus the
    place at infinity; Delta-degree hiding in non-rational places comes back
    as the residual.

    Supported coefficient fields: prime fields (root finding by equal-degree
    splitting, deterministic under the seed) and the rationals (rational
    root theorem)."""
    wd = wd.dehomogenized()
    dom = wd.ring.domain
    h = build_h(wd)
    hd = [c.constant() for c in as_univariate(h, "u")]
    if not hd:
        raise ContextError("h vanishes identically; not a family member")

    if isinstance(dom, PrimeField):
        from . import modp

        roots, _, residual = modp.linear_roots([int(c) for c in hd], dom.p, seed)
        roots = [dom.of(r) for r in roots]
    elif dom is QQ or dom.name == "QQ":
        roots = _rational_roots_qq(hd)
        deg = len(hd) - 1
        accounted = sum(_dense_order(hd, r, dom) for r in roots)
        residual = deg - accounted
    else:
        raise ContextError(f"scan_fibers needs a prime field or QQ, got {dom.name}")

    records = []
    for u0 in roots:
        triple = orders_at(wd, u0)
        records.append(FiberRecord(place=u0, orders=triple, kind=classify(triple)))
    inf_triple = orders_at_infinity(wd)
    infinity = FiberRecord(place="infinity", orders=inf_triple, kind=classify(inf_triple))
    return ScanResult(fibers=tuple(records), infinity=infinity, residual=int(residual))


def scan_point(t: FamilyPoint, seed: int = 0) -> ScanResult:
    wd, _ = build_family(t)
    return scan_fibers(wd, seed=seed)
