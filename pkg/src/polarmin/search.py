"""Volume minimization over the normalized class A(t) by exact local moves.

A(t) is the set of planar bodies with interior origin whose symmetral-polar
minima are (1/t, 1), attained at e1 and e2.  The search state is the primal
polygon's vertex list; dual edges are recomputed on demand via the polar.
Three moves are used, all solved exactly over a finite constraint set and
re-certified from scratch afterwards:

  * edge_push: a dual edge with no contact point in its relative interior is
    moved outward, i.e. the corresponding primal vertex shrinks toward the
    origin until a new constraint becomes tight.
  * edge_rotate: a dual edge with exactly one interior contact point u is
    rotated about u, i.e. the primal vertex slides along the line <x, u> = 1
    in the volume-decreasing direction until a lattice constraint, a minima
    witness constraint, or a vertex collision stops it.
  * balance: a triangle whose dual edges each carry two interior contacts
    belongs to a one-parameter family with constant contact structure on
    which single-edge moves are fixed points; the move jumps to the family's
    volume minimum (the balanced split t1 = t2 = 1/t) and re-verifies.

All comparisons are exact; the 1e-6 figure appears only in human-readable
gap summaries.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction

from .body import Body, as_body, apply_transform, central_symmetral, gauge, \
    polar, support, translate, Transform2
from .core import E1, E2, centroid, rat, vec
from .errors import BadParams, DegenerateInput, GeometryError, \
    InternalInvariantViolation, NoFeasibleStart, NoSlackEdge, NotRotatable
from .minima import MinimaCert, normalize_to_At, successive_minima

_MAX_AUGMENT = 16


def target_volume(t) -> Fraction:
    """Minimal volume over A(t): 2/t - 1/(2 t^2), attained by a triangle."""
    t = rat(t)
    return 2 / t - 1 / (2 * t * t)


@dataclass(frozen=True)
class Candidate:
    """Feasible search state: primal polygon, class parameter, certificate."""

    body: Body
    t: Fraction
    feasible: bool
    cert: MinimaCert
    volume: Fraction


@dataclass(frozen=True)
class SearchResult:
    best: Candidate
    target: Fraction
    trace: tuple  # ((iteration, volume), ...) of the best seed
    seed: int
    converged_seeds: int
    failed_seeds: tuple


def feasible(K, t):
    """Exact A(t) membership with the certificate that decides it."""
    t = rat(t)
    if t < 1:
        raise BadParams("t must be >= 1")
    K = as_body(K)
    dual = polar(central_symmetral(K))
    cert = successive_minima(dual)
    ok = (K.contains_origin("open")
          and cert.lambdas == (1 / t, Fraction(1))
          and gauge(dual, E1) == 1 / t
          and gauge(dual, E2) == 1)
    return ok, cert


def make_candidate(K, t) -> Candidate:
    """Re-center at the centroid (harmless: every A(t) constraint is
    translation invariant) and certify."""
    K = as_body(K)
    K = translate(K, -centroid(K.polygon))
    ok, cert = feasible(K, t)
    return Candidate(K, rat(t), ok, cert, K.volume())


# ---------------------------------------------------------------------------
# constraint machinery
#
# For a vertex move f -> f(tau) the support of any lattice point z is
# h(tau) = max(M_z, a_z + tau * b_z) with M_z the max over the fixed
# vertices, so each symmetral constraint (h(z) + h(-z))/2 >= bound is a
# convex piecewise-linear function of tau with at most two kinks.


def _constraint_reps(cand: Candidate):
    """Half-lattice representatives (m, n), n >= 1, from the certificate box
    plus a margin of one unit; the pair (z, -z) is handled jointly."""
    r, (e1, e2) = cand.cert.search_radius, cand.cert.extents
    m1 = math.floor(r * e1) + 1
    m2 = math.floor(r * e2) + 1
    return [vec(m, n) for n in range(1, m2 + 1) for m in range(-m1, m1 + 1)]


def _support_parts(vertices, i, z):
    """(a, M): moving vertex's inner product with z, and max over the rest."""
    a = vertices[i].dot(z)
    M = max(v.dot(z) for k, v in enumerate(vertices) if k != i)
    return a, M


def _segments(a, b, M, a2, b2, M2, hi):
    """Linear pieces of g(tau) = (max(M, a+tau b) + max(M2, a2+tau b2))/2 on
    [0, hi]: yields (start, end, value_at_start, slope)."""
    kinks = {Fraction(0), hi}
    for aa, bb, mm in ((a, b, M), (a2, b2, M2)):
        if bb != 0:
            k = (mm - aa) / bb
            if 0 < k < hi:
                kinks.add(k)
    ks = sorted(kinks)

    def val_slope(tau):
        v = Fraction(0)
        s = Fraction(0)
        for aa, bb, mm in ((a, b, M), (a2, b2, M2)):
            moving = aa + tau * bb
            if moving > mm or (moving == mm and bb > 0):
                v += moving
                s += bb
            else:
                v += mm
        return v / 2, s / 2

    for lo, hi_ in zip(ks, ks[1:]):
        mid = (lo + hi_) / 2
        _, slope = val_slope(mid)
        v_lo, _ = val_slope(lo)
        yield lo, hi_, v_lo, slope


_FAR = Fraction(10**9)


def _tau_limit(a, b, M, a2, b2, M2, bound, equality):
    """Largest tau in [0, FAR] keeping the pair constraint satisfied.

    For ">=" constraints this is the first downward crossing of the bound;
    for equality constraints it is the end of the initial flat stretch."""
    for lo, hi, v_lo, slope in _segments(a, b, M, a2, b2, M2, _FAR):
        if equality:
            if slope != 0:
                return lo
            continue
        if slope < 0:
            cross_at = lo + (v_lo - bound) / (-slope)
            if cross_at < hi:
                return max(cross_at, lo)
    return _FAR


def _contact_points_by_edge(cand: Candidate):
    """For each primal vertex index, the contact points of C(K) lying in the
    relative interior of its dual edge (= lattice points whose support is
    attained at that vertex only)."""
    body = cand.body
    vs = body.polygon.vertices
    dual = polar(central_symmetral(body))
    reps = [z for z in _constraint_reps(cand) if gauge(dual, z) == 1]
    pts = [z for z in reps] + [-z for z in reps] + [E1, -E1]
    by_edge = {i: set() for i in range(len(vs))}
    for z in pts:
        h = support(body, z)
        argmax = [i for i, v in enumerate(vs) if v.dot(z) == h]
        if len(argmax) == 1:
            by_edge[argmax[0]].add(z * (1 / h))
    return by_edge


def _lattice_constraints(cand: Candidate, extra=()):
    """(z, bound, equality) triples: the two witness equalities plus the
    gauge >= 1 constraints for every off-axis representative."""
    cons = [(E1, 1 / cand.t, True), (E2, Fraction(1), True)]
    seen = {(1, 0), (0, 1)}
    for z in list(_constraint_reps(cand)) + list(extra):
        key = (int(z.x), int(z.y))
        if key in seen or z.y == 0:
            continue
        seen.add(key)
        cons.append((z, Fraction(1), False))
    return cons


def _rebuild(cand: Candidate, vertices) -> Candidate:
    return make_candidate(Body.from_points(vertices), cand.t)


def _violating_reps(cand: Candidate):
    """Off-axis witnesses that break A(t) membership, for constraint-set
    augmentation after a move overshoots."""
    dual = polar(central_symmetral(cand.body))
    bad = []
    for w in cand.cert.witnesses:
        if w.y != 0 and gauge(dual, w) < 1:
            bad.append(w if w.y > 0 else -w)
    return bad


def edge_push(cand: Candidate) -> Candidate:
    """Shrink the primal vertex of the first slack dual edge toward the
    origin until a new contact constraint becomes tight.

    Raises NoSlackEdge when the relative interior of every dual edge already
    carries a contact point."""
    vs = cand.body.polygon.vertices
    contacts = _contact_points_by_edge(cand)
    slack = [i for i in range(len(vs)) if not contacts[i]]
    if not slack:
        raise NoSlackEdge("every dual edge carries a contact point")
    i = slack[0]
    f = vs[i]
    others = [v for k, v in enumerate(vs) if k != i]

    extra = []
    for _ in range(_MAX_AUGMENT):
        mu = Fraction(0)
        for z, bound, _eq in _lattice_constraints(cand, extra):
            for side in (z, -z):
                a, M = _support_parts(vs, i, side)
                a_op, M_op = _support_parts(vs, i, -side)
                floor_here = max(M, Fraction(0)) if a > 0 else M
                floor_op = max(M_op, Fraction(0)) if a_op > 0 else M_op
                if a <= 0 or (floor_here + floor_op) / 2 >= bound:
                    continue
                mu = max(mu, (2 * bound - M_op) / a)
        pts = others + ([f * mu] if mu > 0 else [vec(0, 0)])
        nxt = _rebuild(cand, pts)
        if nxt.feasible:
            return nxt
        extra.extend(_violating_reps(nxt))
        if not extra:
            raise InternalInvariantViolation("push overshoot with no violating witness")
    raise InternalInvariantViolation("push did not stabilize")


def _combinatorial_taus(vs, i, w):
    """Positive tau values at which the moving vertex becomes collinear with
    a neighboring edge or with the chord of its neighbors."""
    n = len(vs)
    f = vs[i]
    prev, nxt = vs[(i - 1) % n], vs[(i + 1) % n]
    pprev, nnxt = vs[(i - 2) % n], vs[(i + 2) % n]
    out = []
    for p, q in {(prev, nxt), (pprev, prev), (nxt, nnxt)}:
        d = q - p
        denom = d.cross(w)
        if denom != 0:
            tau = -d.cross(f - p) / denom
            if tau > 0:
                out.append(tau)
    return out


def rotatable_contact(cand: Candidate, edge_index: int):
    """The single interior contact of the dual edge, or None."""
    contacts = _contact_points_by_edge(cand).get(edge_index, set())
    if len(contacts) != 1:
        return None
    return next(iter(contacts))


def edge_rotate(cand: Candidate, edge_index: int, direction: int,
                explain: bool = False):
    """Rotate a dual edge about its unique interior contact point u.

    In primal terms the vertex slides along the rational line <x, u> = 1, so
    the stopping constraint is solved exactly; no trigonometry is involved.
    The volume is linear along the slide and must not increase in the
    requested direction.  Returns the input unchanged when the first
    constraint is tight already at tau = 0.  With explain=True the result is
    (candidate, stop_reason), naming the constraint that ended the move."""
    if direction not in (1, -1):
        raise ValueError("direction must be +1 or -1")
    vs = cand.body.polygon.vertices
    contacts = _contact_points_by_edge(cand).get(edge_index, set())
    if len(contacts) != 1:
        raise NotRotatable(
            "dual edge must contain exactly one contact point in its relative interior")
    u = next(iter(contacts))
    w = direction * u.perp()
    n = len(vs)
    i = edge_index
    f = vs[i]
    slope = w.cross(vs[(i + 1) % n] - vs[(i - 1) % n]) / 2
    if slope > 0:
        raise NotRotatable("requested direction increases the volume")
    others = [v for k, v in enumerate(vs) if k != i]

    extra = []
    for _ in range(_MAX_AUGMENT):
        tau = _FAR
        reason = None
        for z, bound, eq in _lattice_constraints(cand, extra):
            a, M = _support_parts(vs, i, z)
            a2, M2 = _support_parts(vs, i, -z)
            limit = _tau_limit(a, w.dot(z), M, a2, w.dot(-z), M2, bound, eq)
            if limit < tau:
                tau = limit
                if eq:
                    reason = "witness-e1" if z == E1 else "witness-e2"
                else:
                    reason = f"lattice-gauge({int(z.x)},{int(z.y)})"
        for comb in _combinatorial_taus(vs, i, w):
            if comb < tau:
                tau, reason = comb, "vertex-collision"
        if tau == _FAR:
            raise InternalInvariantViolation("rotation found no stopping constraint")
        if tau == 0:
            return (cand, reason) if explain else cand
        try:
            nxt = _rebuild(cand, others + [f + tau * w])
        except DegenerateInput:
            raise InternalInvariantViolation("rotation collapsed the polygon")
        if nxt.feasible:
            return (nxt, reason) if explain else nxt
        extra.extend(_violating_reps(nxt))
        if not extra:
            raise InternalInvariantViolation("rotation overshoot with no violating witness")
    raise InternalInvariantViolation("rotation did not stabilize")


def balance_triangle(cand: Candidate):
    """Jump to the balanced member of the two-contacts-per-edge triangle
    family (t1 = t2 = 1/t), which is the family's volume minimum; returns
    None unless the candidate is such a triangle and the jump improves."""
    vs = cand.body.polygon.vertices
    if len(vs) != 3:
        return None
    contacts = _contact_points_by_edge(cand)
    if not all(len(contacts[i]) >= 2 for i in range(3)):
        return None
    ti = 1 / cand.t
    nxt = _rebuild(cand, [vec(ti, 1), vec(-ti, 1 - ti), vec(0, -1)])
    if not nxt.feasible:
        raise InternalInvariantViolation("balanced triangle must be feasible")
    return nxt if nxt.volume < cand.volume else None


def _improving_move(cand: Candidate):
    try:
        nxt = edge_push(cand)
        if nxt.volume < cand.volume:
            return nxt
    except NoSlackEdge:
        pass
    vs = cand.body.polygon.vertices
    n = len(vs)
    for i in range(n):
        u = rotatable_contact(cand, i)
        if u is None:
            continue
        base = u.perp().cross(vs[(i + 1) % n] - vs[(i - 1) % n])
        if base == 0:
            continue  # volume-flat rotation: never an improvement
        direction = -1 if base > 0 else 1
        nxt = edge_rotate(cand, i, direction)
        if nxt.volume < cand.volume:
            return nxt
    return balance_triangle(cand)


def descend(cand: Candidate, iters: int):
    """Greedy strict descent; returns (final, trace, converged)."""
    target = target_volume(cand.t)
    trace = [(0, cand.volume)]
    converged = False
    for it in range(1, iters + 1):
        nxt = _improving_move(cand)
        if nxt is None:
            converged = True
            break
        if nxt.volume >= cand.volume or not nxt.feasible:
            raise InternalInvariantViolation("accepted move failed to improve")
        if nxt.volume < target:
            raise InternalInvariantViolation("candidate below the provable minimum")
        cand = nxt
        trace.append((it, cand.volume))
        if cand.volume == target:
            converged = True
            break
    return cand, trace, converged


def sample_feasible(rng: random.Random, t, budget: int = 400):
    """Rejection sampling of a feasible start.

    Random 3..6-gons in the bounding rectangle [-1/t, 1/t] x [-1, 1] with
    denominator-16 coordinates are normalized; when the sampled class
    parameter differs from the requested t, the x-axis is rescaled and the
    candidate re-tested (the rescaling can break minimality, hence the
    re-test)."""
    t = rat(t)
    for _ in range(budget):
        k = rng.randint(3, 6)
        pts = [vec(Fraction(rng.randint(-16, 16), 16) / t,
                   Fraction(rng.randint(-16, 16), 16)) for _ in range(k)]
        try:
            form = normalize_to_At(Body.from_points(pts))
        except GeometryError:
            continue
        K = form.body
        if form.t != t:
            alpha = form.t / t
            K = apply_transform(Transform2.linear(alpha, 0, 0, 1), K)
        cand = make_candidate(K, t)
        if cand.feasible:
            return cand
    return None


def multi_start(t, seeds, iters: int = 200, budget: int = 400) -> SearchResult:
    """Best volume over independent seeded descents.

    Individual seeds may stall at non-minimal fixed points of the strict
    moves, e.g. symmetric triangles of volume 2/t where every admissible
    rotation is volume-flat, or quadrilaterals of volume 4/t - 2/t²; the
    returned best is the minimum across seeds.  Deterministic per seed; the
    per-seed results are merged in seed order.  Raises NoFeasibleStart when
    every seed exhausts its sampling budget."""
    t = rat(t)
    if t < 1:
        raise BadParams("t must be >= 1")
    target = target_volume(t)
    best = None
    best_trace = None
    best_seed = None
    converged_count = 0
    failed = []
    for seed in seeds:
        rng = random.Random(f"at-search-{seed}")
        start = sample_feasible(rng, t, budget)
        if start is None:
            failed.append(seed)
            continue
        final, trace, converged = descend(start, iters)
        if final.volume < target:
            raise InternalInvariantViolation("seed descended below the provable minimum")
        converged_count += converged
        if best is None or final.volume < best.volume:
            best, best_trace, best_seed = final, trace, seed
    if best is None:
        raise NoFeasibleStart(f"no feasible start in {len(list(seeds))} seeds")
    return SearchResult(best, target, tuple(best_trace), best_seed,
                        converged_count, tuple(failed))
