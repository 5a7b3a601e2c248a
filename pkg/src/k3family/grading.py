"""Weighted degrees, homogeneity, and torus-scaling actions.

Two gradings coexist and are never merged: the ambient weights
(x:6, y:14, z:21, w:1) with all t-variables at weight 0, and the parameter
weights (t4:4, ..., t42:42).  The torus action t_i -> alpha^i t_i combined
with w -> alpha^(-1) w is realized by allowing weight -1 on w: the scaled
polynomial carries alpha / alphainv factors per term, and monomial
substitution lets the pair cancel exactly, so invariance statements are
polynomial identities, not conventions.
"""

from __future__ import annotations

from dataclasses import dataclass

from .poly import ContextError, MultiPoly
from .rng import Stream

ALPHA = "alpha"
ALPHA_INV = "alphainv"


class InconclusiveError(Exception):
    """A randomized probe could not find a nonzero sample."""


class WeightVector:
    """Map variable name -> integer weight.  Unlisted variables weigh 0."""

    def __init__(self, weights: dict[str, int]):
        for v, w in weights.items():
            if not isinstance(w, int):
                raise ContextError(f"weight of {v} must be an integer")
        self.weights = dict(weights)

    def __getitem__(self, v: str) -> int:
        return self.weights.get(v, 0)

    def items(self):
        return self.weights.items()

    def __repr__(self):
        inner = ",".join(f"{v}:{w}" for v, w in sorted(self.weights.items()))
        return f"WeightVector({inner})"

    @classmethod
    def parse(cls, text: str) -> "WeightVector":
        """`name:weight` comma list, e.g. "x:6,y:14,z:21,w:1"."""
        out = {}
        for piece in text.split(","):
            piece = piece.strip()
            if not piece:
                continue
            name, _, w = piece.partition(":")
            out[name.strip()] = int(w)
        return cls(out)


@dataclass(frozen=True)
class DegreeInfo:
    degree: int
    homogeneous: bool


def degree_info(p: MultiPoly, w: WeightVector) -> DegreeInfo:
    """Weighted degree (max over terms) plus a homogeneity flag."""
    if p.is_zero():
        raise ContextError("degree of the zero polynomial is undefined")
    ring = p.ring
    wts = [w[v] for v in ring.vars]
    degs = {sum(wt * e for wt, e in zip(wts, exp)) for exp in p.terms}
    return DegreeInfo(degree=max(degs), homogeneous=(len(degs) == 1))


def weighted_degree(p: MultiPoly, w: WeightVector) -> int:
    return degree_info(p, w).degree


def is_homogeneous(p: MultiPoly, w: WeightVector) -> bool:
    if p.is_zero():
        return True
    return degree_info(p, w).homogeneous


def scale_action(p: MultiPoly, w: WeightVector, direction: int = 1) -> MultiPoly:
    """Multiply each variable v by alpha^(direction*weight(v)).

    The ring must contain the distinguished symbols `alpha` and `alphainv`;
    negative net exponents land on alphainv, and opposite factors picked up
    along the way cancel termwise (the substitution is monomial, so this is
    exact, and scale(+1) then scale(-1) is the identity).
    """
    if direction not in (1, -1):
        raise ContextError("direction must be +1 or -1")
    ring = p.ring
    ia = ring.index(ALPHA)
    ii = ring.index(ALPHA_INV)
    wts = [w[v] for v in ring.vars]
    if wts[ia] or wts[ii]:
        raise ContextError("alpha symbols cannot carry weight")
    out: dict = {}
    dom = ring.domain
    for exp, c in p.terms.items():
        net = direction * sum(wt * e for wt, e in zip(wts, exp))
        # fold the new alpha power into whatever the term already carries
        net += exp[ia] - exp[ii]
        e = list(exp)
        e[ia] = net if net > 0 else 0
        e[ii] = -net if net < 0 else 0
        key = tuple(e)
        prev = out.get(key)
        out[key] = c if prev is None else dom.add(prev, c)
        if dom.is_zero(out[key]):
            del out[key]
    return MultiPoly(ring, out)


def numeric_degree_probe(
    F,
    w: WeightVector,
    claimed_degree: int,
    trials: int,
    prime: int,
    seed: int = 0,
    label: str = "degree-probe",
    var_names: tuple[str, ...] | None = None,
) -> bool:
    """Black-box scaling test: F(alpha . t) == alpha^claimed_degree * F(t)?

    F takes a dict var -> field element and returns a field element.  Each
    trial draws fresh (t, alpha) with alpha != 0,1; zero values F(t) are
    retried (a budget of 3*trials zeros, then InconclusiveError).  A false
    claim survives one trial with probability <= degree/prime.
    """
    if var_names is None:
        var_names = tuple(sorted(w.weights))
    rng = Stream(seed, label)
    p = prime
    zeros_budget = 3 * trials
    done = 0
    while done < trials:
        point = {v: rng.below(p) for v in var_names}
        base = F(point) % p
        if base == 0:
            zeros_budget -= 1
            if zeros_budget <= 0:
                raise InconclusiveError("all probe samples vanished")
            continue
        alpha = rng.int_range(2, p - 1)
        scaled = {v: val * pow(alpha, w[v], p) % p for v, val in point.items()}
        lhs = F(scaled) % p
        rhs = base * pow(alpha, claimed_degree, p) % p
        if lhs != rhs:
            return False
        done += 1
    return True
