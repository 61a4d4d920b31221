"""Schoening walks, anchored local search, and the budget mathematics.

A walk flips a random literal of the first violated clause.  Local
search repeats bounded walks from a fixed start; the anchored variant
draws the start from a Hamming annulus around an anchor and caps the
walk radius, so anything it finds is guaranteed to stay far from the
anchor.  Radii, repetition counts, and admissible delta ranges are kept
as exact fractions.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .cnf import Assignment

_MASK64 = (1 << 64) - 1


def entropy(x):
    """Binary entropy in bits; H(0) = H(1) = 0."""
    if not 0 <= x <= 1:
        raise ValueError("entropy argument must lie in [0, 1]")
    if x in (0, 1):
        return 0.0
    return -x * math.log2(x) - (1 - x) * math.log2(1 - x)


def inverse_entropy(y, tol=1e-12):
    """The unique x in [0, 1/2] with H(x) = y, by bisection."""
    if not 0 <= y <= 1:
        raise ValueError("inverse entropy argument must lie in [0, 1]")
    lo, hi = 0.0, 0.5
    while hi - lo > tol:
        mid = (lo + hi) / 2
        if entropy(mid) < y:
            lo = mid
        else:
            hi = mid
    return (lo + hi) / 2


@dataclass(frozen=True)
class LsVariant:
    """A parameterized local search: walks of stretched length, repeated
    ceil(c^t) times, finding a solution within ceil(alpha t) of the start."""

    name: str
    alpha: Fraction
    c: int

    def walk_stretch(self, t):
        return math.ceil(self.alpha * t)

    def repetitions(self, t):
        return self.c**t

    def delta_max(self):
        return min(Fraction(1), Fraction(2) * (1 + self.alpha) / (self.c - 1))


def variant_one(k):
    if k < 2:
        raise ValueError("variant v1 needs k >= 2")
    return LsVariant("v1", Fraction(1), k)


def variant_two(k):
    if k < 3:
        raise ValueError("variant v2 needs k >= 3")
    return LsVariant("v2", 1 + Fraction(2, k - 2), k - 1)


def get_variant(k, name):
    if name == "v1":
        return variant_one(k)
    if name == "v2":
        return variant_two(k)
    raise ValueError(f"unknown variant {name!r}")


@dataclass(frozen=True)
class BudgetPlan:
    """delta, the capped annulus radius R, and the per-radius repetition
    rule for an anchored search with parameters (alpha, c)."""

    n: int
    delta: Fraction
    alpha: Fraction
    c: Fraction
    R: int
    variant: LsVariant | None = None

    def walk_radius(self, r):
        return min(int(self.delta * r / (1 + self.alpha)), self.R)

    def annulus_size(self, r):
        t = self.walk_radius(r)
        lo = max(r - t, 0)
        hi = min(r + t, self.n)
        return sum(math.comb(self.n, x) for x in range(lo, hi + 1))

    def per_r_repetitions(self, r, effort=1.0):
        t = self.walk_radius(r)
        need = Fraction(self.annulus_size(r), math.comb(self.n, t))
        return max(1, math.ceil(effort * need))


def _plan_radius(n, delta, alpha):
    return int(delta * n / (2 * (1 + alpha + delta)))


def make_plan(n, k, delta, variant="v1"):
    """Budget plan for the CNF local-search variant `variant` of width k."""
    var = get_variant(k, variant)
    delta = Fraction(delta)
    if not 0 < delta <= var.delta_max():
        raise ValueError(
            f"delta must lie in (0, {var.delta_max()}] for {variant} at k={k}"
        )
    return BudgetPlan(
        n=n,
        delta=delta,
        alpha=var.alpha,
        c=Fraction(var.c),
        R=_plan_radius(n, delta, var.alpha),
        variant=var,
    )


def make_generic_plan(n, c, delta, alpha=Fraction(1)):
    """Budget plan for any (alpha, c) feasibility search (subset problems)."""
    delta, alpha, c = Fraction(delta), Fraction(alpha), Fraction(c)
    if c <= 1:
        raise ValueError("c must exceed 1")
    dmax = min(Fraction(1), 2 * (1 + alpha) / (c - 1))
    if not 0 < delta <= dmax:
        raise ValueError(f"delta must lie in (0, {dmax}]")
    return BudgetPlan(
        n=n, delta=delta, alpha=alpha, c=c, R=_plan_radius(n, delta, alpha)
    )


@dataclass(frozen=True)
class BudgetSummary:
    R: int
    tau: float
    base: float


def growth_base(c, alpha, delta):
    """Per-variable growth base 2 c^rho / 2^H(rho) of the anchored search."""
    c, alpha, delta = float(c), float(alpha), float(delta)
    if c <= 1:
        raise ValueError("c must exceed 1")
    if not 0 < delta <= min(1.0, 2 * (1 + alpha) / (c - 1)):
        raise ValueError("delta out of admissible range")
    rho = delta / (2 * (1 + alpha + delta))
    return 2 * c**rho / 2 ** entropy(rho)


def budget_math(n, delta, c=None, alpha=1, k=None, variant=None):
    """R, the total budget tau = 2^n c^R / C(n, R), and the growth base.

    Pass (k, variant) to use a built-in CNF variant, or (c, alpha)
    directly for a generic search.
    """
    if variant is not None:
        var = get_variant(k, variant)
        c, alpha = var.c, var.alpha
    if c is None:
        raise ValueError("either c or (k, variant) is required")
    plan = make_generic_plan(n, c, delta, alpha)
    tau = (2**n) * float(Fraction(plan.c) ** plan.R) / math.comb(n, plan.R)
    return BudgetSummary(R=plan.R, tau=tau, base=growth_base(c, alpha, delta))


def schoning_walk(formula, z, steps, rng):
    """Random walk: up to `steps` flips of a uniform literal of the first
    violated clause; returns the first satisfying assignment reached."""
    if steps < 0:
        raise ValueError("steps must be >= 0")
    bits = z.to_array()
    if formula.num_clauses == 0:
        return Assignment.from_array(bits)
    cvars, cneg, valid = formula.clause_arrays()
    for flips_done in range(steps + 1):
        sat = ((bits[cvars] ^ cneg) & valid).any(axis=1)
        if sat.all():
            return Assignment.from_array(bits)
        if flips_done == steps:
            return None
        clause = formula.clauses[int(np.argmax(~sat))]
        if not clause:
            return None  # empty clause: the walk cannot repair it
        lit = clause[int(rng.integers(len(clause)))]
        bits[abs(lit) - 1] = not bits[abs(lit) - 1]
    return None


def local_search(formula, y, t, variant, rng):
    """ceil(c^t) walks of the stretched length from y; any returned
    assignment lies within walk_stretch(t) <= ceil(alpha t) flips of y."""
    if t > formula.n:
        raise ValueError("t must not exceed n")
    length = variant.walk_stretch(t)
    for _ in range(variant.repetitions(t)):
        out = schoning_walk(formula, y, length, rng)
        if out is not None:
            assert y.distance(out) <= length, "walk escaped its radius"
            return out
    return None


def sample_annulus(z, lo, hi, rng):
    """Uniform point of {x : lo <= d_H(x, z) <= min(hi, n)}: draw the
    radius proportionally to C(n, radius), then flip that many
    uniformly random coordinates of z."""
    n = z.n
    if lo > n:
        raise ValueError("lo exceeds n")
    if not 0 <= lo <= hi:
        raise ValueError("need 0 <= lo <= hi")
    hi = min(hi, n)
    weights = [math.comb(n, x) for x in range(lo, hi + 1)]
    total = sum(weights)
    draw = int(rng.integers(total))
    radius = lo
    for w in weights:
        if draw < w:
            break
        draw -= w
        radius += 1
    out = z
    for position in rng.permutation(n)[:radius]:
        out = out.flip(int(position) + 1)
    return out


def anchored_ls(formula, z, r, plan, rng):
    """One anchored attempt: start in the annulus of radii r -+ t around
    the anchor and run the capped local search, so a satisfying return
    near a promised solution keeps distance about (1 - delta) r from z."""
    if not 0 <= r <= formula.n:
        raise ValueError("r out of range")
    t = plan.walk_radius(r)
    y = sample_annulus(z, max(r - t, 0), r + t, rng)
    return local_search(formula, y, t, plan.variant, rng)


def _anchored_argmax(n, plan, cfg, anchors, r_values, search, objective, accepts):
    """Shared (r, anchor, repetition) loop; every repetition is its own
    seeded task so the result is independent of evaluation order.  Best
    output by (objective, then lexicographically smallest); the first
    qualifying output is kept even at objective 0."""
    best = None  # (score, -key, Assignment)
    for r in r_values:
        t = plan.walk_radius(r)
        reps = plan.per_r_repetitions(r, cfg.effort)
        lo, hi = max(r - t, 0), r + t
        for ai, anchor in enumerate(anchors):
            for rep in range(reps):
                rng = np.random.default_rng(
                    np.random.SeedSequence([cfg.seed & _MASK64, r, ai, rep])
                )
                y = sample_annulus(anchor, lo, hi, rng)
                out = search(y, t, rng)
                if out is None or not accepts(out):
                    continue
                cand = (objective(out), -out.key, out)
                if best is None or cand[:2] > best[:2]:
                    best = cand
    return None if best is None else best[2]


def _weight_window(n, w, delta):
    if w == 0:
        return 0, n
    return (1 - delta) * w, (1 + delta) * w


def schoning_farthest_weighted(formula, anchors, w, plan, cfg):
    """Best satisfying output by min-distance to `anchors` whose weight
    lies in [(1-delta) W, (1+delta) W]; W=0 means no weight window.

    Anchoring at the all-zeros point alongside the given set is what
    ties output weight to W.
    """
    anchors = list(anchors)
    if not anchors:
        raise ValueError("anchor set must be non-empty")
    n = formula.n
    if not 0 <= w <= n:
        raise ValueError("W must lie in 0..n")
    lo_w, hi_w = _weight_window(n, w, plan.delta)

    def accepts(z):
        return lo_w <= z.weight() <= hi_w

    def objective(z):
        return min(z.distance(a) for a in anchors)

    return _anchored_argmax(
        n,
        plan,
        cfg,
        anchors + [Assignment.zeros(n)],
        range(1, n + 1),
        lambda y, t, rng: local_search(formula, y, t, plan.variant, rng),
        objective,
        accepts,
    )


def schoning_farthest_sum(formula, anchors, plan, cfg):
    """Best satisfying output by sum of distances to the multiset `anchors`."""
    anchors = list(anchors)
    if not anchors:
        raise ValueError("anchor set must be non-empty")
    n = formula.n

    def objective(z):
        return sum(z.distance(a) for a in anchors)

    return _anchored_argmax(
        n,
        plan,
        cfg,
        anchors,
        range(0, n + 1),
        lambda y, t, rng: local_search(formula, y, t, plan.variant, rng),
        objective,
        lambda z: True,
    )


def schoning_solve(formula, cfg):
    """Classic randomized solving: uniform restarts, 3n-step walks."""
    z, _ = schoning_solve_counted(formula, cfg)
    return z


def schoning_solve_counted(formula, cfg):
    """(solution or None, restarts consumed)."""
    n = formula.n
    k = max(formula.k, 2)
    auto = math.ceil(cfg.effort * 4 * n * n * (2 * (1 - 1 / k)) ** n)
    total = cfg.repetitions if cfg.repetitions is not None else max(1, auto)
    total = min(total, 1 << 26)
    for i in range(total):
        rng = np.random.default_rng(
            np.random.SeedSequence([cfg.seed & _MASK64, i])
        )
        start = Assignment(n, int(rng.integers(1 << n)))
        out = schoning_walk(formula, start, 3 * n, rng)
        if out is not None:
            return out, i + 1
    return None, total
