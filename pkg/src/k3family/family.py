"""The weighted elliptic-K3 family and its derived objects.

The family lives in P(6,14,21,1) with coordinates (x, y, z, w):

    f = z^2 + y^3 + g2(x,w;t) y + g3(x,w;t)

where g2 runs over the five parameters of weights 4,10,16,22,28 and g3 over
the six of weights 12,18,24,30,36,42, normalized so that the dehomogenized
g3(u) (u = x/w^6) is monic of degree 7 with vanishing u^6 coefficient.  The
eleven parameter weights sum to 242.  Derived objects: h = 4 g2^3 + 27 g3^2,
the resultant r(t) = Res_u(g2, g3) taken at formal degrees (4, 7), and the
discriminant k(t) = disc_u(h), plus the worse-than-rational-double-point
parametrization and its detector.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from .domains import GF, QQ, ZZ, Domain, DomainError, PrimeField
from .elimination import discriminant, resultant, sylvester_formal
from .grading import ALPHA, ALPHA_INV, WeightVector
from .poly import (
    ContextError,
    MultiPoly,
    PolyRing,
    as_univariate,
    eval_poly,
    exact_div,
    from_univariate,
    to_str,
)
from .rng import Stream

PARAM_NAMES = ("t4", "t10", "t12", "t16", "t18", "t22", "t24", "t28", "t30", "t36", "t42")
PARAM_WEIGHTS = tuple(int(n[1:]) for n in PARAM_NAMES)
WEIGHT_SUM = sum(PARAM_WEIGHTS)  # 242

AMBIENT = WeightVector({"x": 6, "y": 14, "z": 21, "w": 1})
PARAMETER = WeightVector({n: w for n, w in zip(PARAM_NAMES, PARAM_WEIGHTS)})
# the torus acts by t_i -> alpha^i t_i together with w -> alpha^(-1) w
COMBINED_ACTION = WeightVector({**{n: w for n, w in zip(PARAM_NAMES, PARAM_WEIGHTS)}, "w": -1})

# dehomogenized coefficient layout (ascending powers of u)
G2_COEFF_NAMES = ("t28", "t22", "t16", "t10", "t4")  # g2 = t4 u^4 + ... + t28
G3_COEFF_NAMES = ("t42", "t36", "t30", "t24", "t18", "t12", None, None)  # u^6 coeff 0, u^7 coeff 1

DEFAULT_SLICES = ((4, 42), (4, 28, 42), (10, 36))

BASE_VARS = ("u", "x", "y", "z", "w")


def param_name(weight: int) -> str:
    name = f"t{weight}"
    if name not in PARAM_NAMES:
        raise ContextError(f"no parameter of weight {weight}")
    return name


class FamilyPoint:
    """One parameter tuple t = (t4, ..., t42).

    Components are coefficient-domain elements for numeric points, or
    MultiPoly symbols for slice points.  Exactly 11 components keyed by the
    canonical names; the all-zero tuple is excluded (the family is defined
    over A^11 minus the origin).
    """

    __slots__ = ("values", "domain", "ring")

    def __init__(self, values, domain: Domain = ZZ, ring: PolyRing | None = None):
        if set(values) != set(PARAM_NAMES):
            missing = set(PARAM_NAMES) - set(values)
            extra = set(values) - set(PARAM_NAMES)
            raise ContextError(f"bad parameter keys: missing {sorted(missing)}, extra {sorted(extra)}")
        vals: dict = {}
        any_nonzero = False
        for name in PARAM_NAMES:
            v = values[name]
            if isinstance(v, MultiPoly):
                if ring is None:
                    ring = v.ring
                elif v.ring != ring:
                    raise ContextError("symbolic components from different rings")
                vals[name] = v
                any_nonzero = any_nonzero or not v.is_zero()
            else:
                v = domain.of(v)
                vals[name] = v
                any_nonzero = any_nonzero or not domain.is_zero(v)
        if not any_nonzero:
            raise ContextError("the zero tuple is not a family point")
        self.values = vals
        self.domain = domain
        self.ring = ring

    def __getitem__(self, key):
        if isinstance(key, int):
            key = param_name(key)
        return self.values[key]

    def is_numeric(self) -> bool:
        return self.ring is None

    def __eq__(self, other):
        if not isinstance(other, FamilyPoint):
            return NotImplemented
        return self.values == other.values and self.domain == other.domain

    def __repr__(self):
        inner = ", ".join(
            f"{n}={to_str(v) if isinstance(v, MultiPoly) else self.domain.to_str(v)}"
            for n, v in self.values.items()
        )
        return f"FamilyPoint({inner})"

    def scaled(self, alpha) -> "FamilyPoint":
        """The torus translate alpha . t = (alpha^i t_i); numeric points only."""
        if not self.is_numeric():
            raise ContextError("scaled() needs a numeric point")
        dom = self.domain
        a = dom.of(alpha)
        out = {}
        for name, w in zip(PARAM_NAMES, PARAM_WEIGHTS):
            power = dom.one
            for _ in range(w):
                power = dom.mul(power, a)
            out[name] = dom.mul(self.values[name], power)
        return FamilyPoint(out, dom)

    def to_json(self) -> str:
        if not self.is_numeric():
            raise ContextError("only numeric points serialize to JSON")
        return json.dumps(
            {n: self.domain.to_str(v) for n, v in self.values.items()},
            indent=2,
            sort_keys=False,
        )

    @classmethod
    def from_json(cls, text: str, domain: Domain | None = None) -> "FamilyPoint":
        raw = json.loads(text)
        if not isinstance(raw, dict):
            raise ContextError("family point JSON must be an object")
        vals = {}
        saw_fraction = False
        for k, v in raw.items():
            fr = Fraction(str(v))
            saw_fraction = saw_fraction or fr.denominator != 1
            vals[k] = fr
        if domain is None:
            domain = QQ if saw_fraction else ZZ
        return cls({k: domain.of(v) for k, v in vals.items()}, domain)


def random_point(stream: Stream, prime: int, nonzero: tuple[str, ...] = ()) -> FamilyPoint:
    """Seeded uniform point over GF(prime); named components redrawn until nonzero."""
    dom = GF(prime)
    vals = {}
    for name in PARAM_NAMES:
        if name in nonzero:
            vals[name] = stream.nonzero_below(prime)
        else:
            vals[name] = stream.below(prime)
    if all(v == 0 for v in vals.values()):
        vals["t4"] = 1 + stream.below(prime - 1)
    return FamilyPoint(vals, dom)


def symbolic_point(domain: Domain = ZZ, extra_vars: tuple[str, ...] = ()) -> FamilyPoint:
    """Fully symbolic point: every component its own ring variable."""
    ring = PolyRing(BASE_VARS + PARAM_NAMES + tuple(extra_vars), domain)
    return FamilyPoint({n: ring.var(n) for n in PARAM_NAMES}, domain, ring)


def slice_point(weights, domain: Domain = ZZ, extra_vars: tuple[str, ...] = ()) -> FamilyPoint:
    """Symbolic on the named weights, zero elsewhere.

    The interesting slices keep full symbolic k(t) computable; the shipped
    defaults are (4,42), (4,28,42), and (10,36).
    """
    names = tuple(param_name(w) for w in weights)
    if not names:
        raise ContextError("a slice needs at least one active weight")
    ring = PolyRing(BASE_VARS + names + tuple(extra_vars), domain)
    vals: dict = {}
    for n in PARAM_NAMES:
        vals[n] = ring.var(n) if n in names else domain.zero
    return FamilyPoint(vals, domain, ring)


@dataclass(frozen=True)
class WeierstrassData:
    """The pair (g2, g3), either homogeneous in (x, w) or dehomogenized in u."""

    g2: MultiPoly
    g3: MultiPoly
    form: str  # "xw" or "u"

    def __post_init__(self):
        if self.form not in ("xw", "u"):
            raise ContextError(f"unknown form {self.form!r}")

    @property
    def ring(self) -> PolyRing:
        return self.g2.ring

    def dehomogenized(self) -> "WeierstrassData":
        """Substitute x = u, w = 1 (the chart u = x/w^6)."""
        if self.form == "u":
            return self
        ring = self.ring
        sub = {"x": ring.var("u"), "w": ring.one()}
        return WeierstrassData(
            g2=eval_poly(self.g2, sub), g3=eval_poly(self.g3, sub), form="u"
        )


def _coerce(ring: PolyRing, v) -> MultiPoly:
    if isinstance(v, MultiPoly):
        if v.ring != ring:
            raise ContextError("component from the wrong ring")
        return v
    return ring.const(v)


def _point_ring(t: FamilyPoint, extra_vars: tuple[str, ...] = ()) -> PolyRing:
    if t.ring is not None:
        return t.ring
    return PolyRing(BASE_VARS + tuple(extra_vars), t.domain)


def build_family(t: FamilyPoint | None = None, extra_vars: tuple[str, ...] = ()):
    """(WeierstrassData in (x,w) form, f) for the point t.

    t = None builds the fully symbolic family.  f = z^2 + y^3 + g2 y + g3 is
    (6,14,21,1)-homogeneous of degree 42; g2 and g3 are homogeneous of
    degrees 28 and 42.
    """
    if t is None:
        t = symbolic_point(extra_vars=extra_vars)
    ring = _point_ring(t, extra_vars)
    x, w = ring.var("x"), ring.var("w")
    # g2: coefficient of x^i w^(28-6i) is the weight-(28-6i) parameter
    g2 = ring.zero()
    for i, name in enumerate(G2_COEFF_NAMES):
        g2 = g2 + _coerce(ring, t[name]) * x**i * w ** (28 - 6 * i)
    # g3: monic x^7 plus parameter terms; the x^6 w^6 coefficient is 0
    g3 = x**7
    for i, name in enumerate(G3_COEFF_NAMES):
        if name is not None:
            g3 = g3 + _coerce(ring, t[name]) * x**i * w ** (42 - 6 * i)
    y, z = ring.var("y"), ring.var("z")
    f = z**2 + y**3 + g2 * y + g3
    return WeierstrassData(g2=g2, g3=g3, form="xw"), f


def build_h(wd: WeierstrassData) -> MultiPoly:
    """h = 4 g2^3 + 27 g3^2; degree 84 in (x,w), degree 14 in u with leading
    coefficient 27."""
    return 4 * wd.g2**3 + 27 * wd.g3**2


def _dense_g2_g3(t: FamilyPoint):
    """Dense u-coefficient lists of (g2, g3) as raw domain elements."""
    dom = t.domain
    g2 = [t[name] for name in G2_COEFF_NAMES]
    g3 = [t[name] if name is not None else dom.zero for name in G3_COEFF_NAMES]
    g3[6] = dom.zero
    g3[7] = dom.one
    return g2, g3


def dense_h(t: FamilyPoint) -> list:
    """Dense u-coefficients of h at a numeric point (length 15, lc 27)."""
    if not t.is_numeric():
        raise ContextError("dense_h needs a numeric point")
    dom = t.domain
    g2, g3 = _dense_g2_g3(t)

    def mul(a, b):
        out = [dom.zero] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if dom.is_zero(ai):
                continue
            for j, bj in enumerate(b):
                out[i + j] = dom.add(out[i + j], dom.mul(ai, bj))
        return out

    g2sq = mul(g2, g2)
    g2cu = mul(g2sq, g2)
    g3sq = mul(g3, g3)
    out = [dom.zero] * 15
    for i, c in enumerate(g2cu):
        out[i] = dom.add(out[i], dom.mul(dom.of(4), c))
    for i, c in enumerate(g3sq):
        out[i] = dom.add(out[i], dom.mul(dom.of(27), c))
    return out


def _mod_values(t: FamilyPoint) -> tuple[list[int], list[int], int]:
    dom = t.domain
    if not isinstance(dom, PrimeField):
        raise ContextError("fast modular path needs a prime-field point")
    g2, g3 = _dense_g2_g3(t)
    return [int(c) for c in g2], [int(c) for c in g3], dom.p


def compute_r(t: FamilyPoint, strategy: str = "fraction_free"):
    """r(t) = Res_u(g2, g3) at formal degrees (4, 7).

    g3 is monic of true degree 7, so the formal-degree determinant equals
    the honest resultant at every specialization; that is what makes r a
    single polynomial of weighted degree 196 in the parameters.  Returns a
    domain element at numeric points, a MultiPoly on symbolic slices.
    """
    if t.is_numeric():
        if isinstance(t.domain, PrimeField):
            from . import modp

            g2, g3, p = _mod_values(t)
            return t.domain.of(modp.sylvester_det(g2, g3, p))
        wd = build_family(t)[0].dehomogenized()
        det = sylvester_formal(wd.g2, wd.g3, "u", 4, 7).det()
        return det.constant()
    wd = build_family(t)[0].dehomogenized()
    if strategy == "modular_interp":
        return resultant(wd.g2, wd.g3, "u", strategy="modular_interp")
    return sylvester_formal(wd.g2, wd.g3, "u", 4, 7).det()


def compute_k(t: FamilyPoint, strategy: str = "fraction_free"):
    """k(t) = disc_u(h).  The u-leading coefficient of h is the constant 27,
    so deg_u h = 14 identically and no formal-degree bookkeeping is needed.
    Weighted degree 1092 = 14*13*6 when symbolic."""
    if t.is_numeric():
        if isinstance(t.domain, PrimeField):
            from . import modp

            p = t.domain.p
            H = [int(c) for c in dense_h(t)]
            Hp = [(i * c) % p for i, c in enumerate(H)][1:]
            res = modp.sylvester_det(H, Hp, p)
            # disc = (-1)^(14*13/2) Res(h, h')/lc = -Res/27
            return t.domain.of(-res * modp.invmod(27, p))
        dom = t.domain
        ring = PolyRing(("u",), dom)
        H = from_univariate([ring.const(c) for c in dense_h(t)], "u", ring)
        return discriminant(H, "u").constant()
    wd = build_family(t)[0].dehomogenized()
    return discriminant(build_h(wd), "u", strategy=strategy)


def delta_T_on_restriction(k_restricted: MultiPoly, r_restricted: MultiPoly) -> MultiPoly:
    """The cofactor k / r^3 on a restriction.

    NotDivisibleError propagates to the caller: a failed division here is a
    falsified claim, never something to absorb.
    """
    return exact_div(k_restricted, r_restricted**3)


def nonrdp_param(a, b, domain: Domain = QQ) -> FamilyPoint:
    """The worse-than-RDP locus, parametrized by [a : b] of weights (4, 6):

        g2(u) = a (u - b)^4,   g3(u) = (u - b)^6 (u + 6 b).

    Component of weight 16 is 6 a b^2 (weight 4 + 2*6); the printed form
    with a bare b there is not weighted-homogeneous.
    """
    a = domain.of(a)
    b = domain.of(b)
    if domain.is_zero(a) and domain.is_zero(b):
        raise ContextError("(a, b) = (0, 0) is outside the parameter space")

    def n(k: int):
        return domain.neg(domain.of(k))

    bp = [domain.one]
    for _ in range(7):
        bp.append(domain.mul(bp[-1], b))
    vals = {
        "t4": a,
        "t10": domain.mul(n(4), domain.mul(a, bp[1])),
        "t12": domain.mul(n(21), bp[2]),
        "t16": domain.mul(domain.of(6), domain.mul(a, bp[2])),
        "t18": domain.mul(domain.of(70), bp[3]),
        "t22": domain.mul(n(4), domain.mul(a, bp[3])),
        "t24": domain.mul(n(105), bp[4]),
        "t28": domain.mul(a, bp[4]),
        "t30": domain.mul(domain.of(84), bp[5]),
        "t36": domain.mul(n(35), bp[6]),
        "t42": domain.mul(domain.of(6), bp[7]),
    }
    return FamilyPoint(vals, domain)


def _dense_order(coeffs: list, u0, dom) -> int:
    """Vanishing order of a dense nonzero polynomial at u0."""
    cur = list(coeffs)
    while cur and dom.is_zero(cur[-1]):
        cur.pop()
    if not cur:
        raise ContextError("order of the zero polynomial")
    order = 0
    while True:
        # synthetic division by (u - u0); remainder is the value
        rem = dom.zero
        quot = [dom.zero] * (len(cur) - 1)
        for i in range(len(cur) - 1, 0, -1):
            rem = dom.add(cur[i], dom.mul(rem, u0))
            quot[i - 1] = rem
        rem = dom.add(cur[0], dom.mul(rem, u0))
        if not dom.is_zero(rem):
            return order
        order += 1
        cur = quot
        if not cur:
            raise AssertionError("nonzero polynomial exhausted")


def _multiplicity_candidates(coeffs: list, dom, need: int) -> list:
    """Roots of multiplicity >= need of a dense polynomial, via the gcd of
    the first need-1 derivatives.  Only called where deg < 2*need, so the
    gcd is linear or constant and no factorization is required."""
    from .poly import univariate_gcd

    ring = PolyRing(("u",), dom if dom.is_field else QQ)
    conv = (lambda c: c) if dom.is_field else (lambda c: Fraction(c))
    polys = []
    cur = [conv(c) for c in coeffs]
    for _ in range(need):
        p = from_univariate([ring.const(c) for c in cur], "u", ring)
        if p.is_zero():
            break
        polys.append(p)
        cur = [ring.domain.mul(ring.domain.of(i), c) for i, c in enumerate(cur)][1:]
    if not polys:
        return []
    g = polys[0]
    for q in polys[1:]:
        if q.is_zero():
            break
        g = univariate_gcd(g, q, "u")
    if g.degree("u") != 1:
        return []
    c1 = g.coeff({"u": 1})
    c0 = g.coeff({"u": 0})
    root = ring.domain.mul(ring.domain.neg(c0), ring.domain.invert(c1))
    if not dom.is_field:
        if root.denominator != 1:
            return []
        root = dom.of(root)
    return [root]


def detect_nonrdp(wd: WeierstrassData, exhaustive: bool = False):
    """Base points u0 where ord(g2) >= 4 and ord(g3) >= 6 (the
    worse-than-RDP condition; the second bound concerns g3).

    Returns [(u0, (ord_g2, ord_g3)), ...] sorted; ord_g2 is None when g2 is
    identically zero.  The default search is exact and complete: with
    deg g2 <= 4 a point of order >= 4 is the unique root of the linear
    gcd(g2, g2', g2'', g2'''), and with deg g3 = 7 a point of order >= 6 is
    the unique root of the corresponding five-derivative gcd, so candidate
    extraction plus order verification covers every field point.
    exhaustive=True scans every element of a small prime field instead.
    """
    wd = wd.dehomogenized()
    dom = wd.ring.domain
    g2d = [c.constant() for c in as_univariate(wd.g2, "u")]
    g3d = [c.constant() for c in as_univariate(wd.g3, "u")]

    if exhaustive:
        if not isinstance(dom, PrimeField):
            raise ContextError("exhaustive scan needs a prime field")
        if dom.p > 1_000_000:
            raise ContextError("exhaustive scan over a field this large is not practical")
        candidates = [dom.of(i) for i in range(dom.p)]
    else:
        candidates = []
        if g2d:
            candidates += _multiplicity_candidates(g2d, dom, 4)
        candidates += _multiplicity_candidates(g3d, dom, 6)

    out = []
    seen = set()
    for u0 in candidates:
        if u0 in seen:
            continue
        seen.add(u0)
        a = None if not g2d else _dense_order(g2d, u0, dom)
        b = _dense_order(g3d, u0, dom)
        if (a is None or a >= 4) and b >= 6:
            out.append((u0, (a, b)))
    out.sort(key=lambda item: item[0])
    return out


def generic_point_membership() -> tuple[bool, bool, bool]:
    """f vanishes identically (all t) at the three distinguished points
    [0:-1:1:0], [-1:0:1:0], [1:-1:0:0] of the weighted projective space."""
    _, f = build_family()
    pts = ((0, -1, 1, 0), (-1, 0, 1, 0), (1, -1, 0, 0))
    out = []
    for x0, y0, z0, w0 in pts:
        v = eval_poly(f, {"x": x0, "y": y0, "z": z0, "w": w0})
        out.append(v.is_zero())
    return tuple(out)


# -- constructed witnesses for the divisor components --------------------------


def euler_split_point(domain: Domain = ZZ) -> FamilyPoint:
    """A family member whose h splits into rational roots over every field
    of characteristic > 5:

        g2 = -3 u^2 (u-1)^2,  g3 = u^3 (u-1)^3 (u+3),
        h  = 27 u^6 (u-1)^6 (u+1) (u+5),

    giving fibers I0* + I0* + I1 + I1 at u = 0, 1, -1, -5 and II* at
    infinity, with Euler numbers summing to 6+6+1+1+10 = 24."""
    vals = dict.fromkeys(PARAM_NAMES, 0)
    vals.update({"t4": -3, "t10": 6, "t16": -3, "t12": -6, "t18": 8, "t24": -3})
    return FamilyPoint({k: domain.of(v) for k, v in vals.items()}, domain)


def d1_point(prime: int, stream: Stream) -> FamilyPoint:
    """A point on the locus where h has a double root but g2, g3 do not both
    vanish there (k = 0, r != 0): the generic component of the discriminant.

    Solve h(0) = h'(0) = 0 for (t28, t42): with s = t36/t22,
    t28 = -3 s^2 and t42 = -2 s^3 give 4 t28^3 + 27 t42^2 = 0 and
    12 t28^2 t22 + 54 t42 t36 = 0.  Redraws until the double root is exact
    (order 2) and r != 0."""
    p = prime
    dom = GF(p)
    for _ in range(64):
        vals = {name: stream.below(p) for name in PARAM_NAMES}
        t22 = stream.nonzero_below(p)
        t36 = stream.nonzero_below(p)
        s = t36 * pow(t22, -1, p) % p
        vals["t22"] = t22
        vals["t36"] = t36
        vals["t28"] = (-3 * s * s) % p
        vals["t42"] = (-2 * s * s * s) % p
        if vals["t28"] == 0 or vals["t42"] == 0:
            continue
        t = FamilyPoint(vals, dom)
        H = [int(c) for c in dense_h(t)]
        # need order exactly 2 at u = 0 and a nonzero resultant
        if H[0] != 0 or H[1] != 0 or H[2] == 0:
            continue
        if int(compute_r(t)) == 0:
            continue
        return t
    raise ContextError("no valid double-root point found in 64 draws")


def d2_point(prime: int, stream: Stream) -> FamilyPoint:
    """A point with g2(0) = g3(0) = 0 (t28 = t42 = 0): both vanish at u = 0,
    the fiber there is type II and r = 0."""
    p = prime
    dom = GF(p)
    for _ in range(64):
        vals = {name: stream.below(p) for name in PARAM_NAMES}
        vals["t28"] = 0
        vals["t42"] = 0
        vals["t22"] = stream.nonzero_below(p)
        vals["t36"] = stream.nonzero_below(p)
        t = FamilyPoint(vals, dom)
        H = [int(c) for c in dense_h(t)]
        if H[0] == 0 and H[1] == 0 and H[2] != 0:
            return t
    raise ContextError("no valid double-vanishing point found in 64 draws")
