"""Path-guided pushdown random walks with stack sentinels.

The engine runs a transition oracle for exactly N = A * (path_bound +
ceil(log2(1/epsilon))) steps over an implicit DAG of search states.  A
truthful oracle call either descends toward the target, pushes a duplicate
sentinel when standing on the target, or backtracks off a wrong path; with
per-call error probability below 1/15 the walk ends at the target with
probability at least 1 - epsilon.

Two oracles live here:

* `BstSearchOracle` — noisy binary search on an implicit balanced tree over a
  sorted sequence.  Each node checks the query against its two ancestor
  bounds (2 comparisons) and picks a child (1 comparison).

* `TangentOracle` — the double-binary-search decision tree for the upper
  tangent of two x-separated upper hulls.  A state is a pair of index ranges;
  probes sit at the range midpoints and the classical case analysis of the
  local turn directions (plus a separating-line test for the ambiguous
  cases) decides which range shrinks.  Path validity is checked by re-running
  the case analysis at the up-to-four ancestor states whose decisions set the
  current range boundaries; a state whose ranges exclude the tangent always
  carries at least one certificate that a truthful recheck refutes.

Noisy tests inside an oracle call are wrapped in a fixed odd repetition r,
chosen so the exact per-call error is below 1/15.  For speed, runs of clean
(error-free) calls are sampled in one draw from the exact geometric law, and
a dirty call samples its flip pattern from the exact conditional binomial;
this reproduces the per-test Bernoulli process distribution exactly while
keeping the simulation near O(number of errors) instead of O(N).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .geometry import CCW, CollinearInput, orient2d_exact
from .noise import binomial_majority_error, _threshold_u64

_TWO64 = 1 << 64

AT_TARGET = 0
DESCEND = 1
BACKTRACK = 2

_TGT = ("T", 0)
_BCK = ("B", 0)


def ceil_log2(x: Fraction) -> int:
    """Smallest t >= 0 with 2^t >= x, exact for rationals."""
    if x <= 1:
        return 0
    t = max(0, x.numerator.bit_length() - x.denominator.bit_length() - 1)
    while (1 << t) < x:
        t += 1
    return t


@dataclass(frozen=True)
class WalkBudget:
    """Total step budget N = constant * (path_bound + ceil(log2(1/epsilon)))."""

    path_bound: int
    epsilon: Fraction
    constant: int = 16

    @property
    def steps(self) -> int:
        eps = Fraction(self.epsilon)
        if eps <= 0:
            raise ValueError("epsilon must be positive")
        return self.constant * (self.path_bound + ceil_log2(1 / eps))


@dataclass
class WalkResult:
    node: object
    found: bool
    steps: int


def run_pushdown_walk(ctx, oracle, budget: WalkBudget) -> WalkResult:
    """Run the walk for exactly budget.steps oracle steps."""
    n_steps = budget.steps
    cur = oracle.root
    stack = []
    remaining = n_steps
    while remaining > 0:
        code, nxt, used = oracle.advance(ctx, cur, remaining)
        remaining -= used
        if code == AT_TARGET:
            if used == 1:
                stack.append(cur)
            else:
                stack.extend([cur] * used)
        elif code == DESCEND:
            stack.append(cur)
            cur = nxt
        else:
            if stack:
                cur = stack.pop()
    found = bool(stack) and stack[-1] is cur
    return WalkResult(cur, found, n_steps)


# ---------------------------------------------------------------------------
# Shared noise wrapping for oracle calls.


class WrapProfile:
    """Repetition level and sampling tables for one oracle family.

    r is the minimal odd repetition with exact per-call error below 1/15 when
    a call performs at most t_max wrapped tests at channel error p.
    """

    __slots__ = ("r", "q", "thr_test", "t_max", "_tables", "call_span")

    def __init__(self, p_exact: Fraction, t_max: int):
        self.t_max = t_max
        if p_exact == 0:
            self.r = 1
            self.q = Fraction(0)
        else:
            r = 1
            while True:
                q = binomial_majority_error(r, p_exact)
                if 1 - (1 - q) ** t_max < Fraction(1, 15):
                    break
                r += 2
            self.r = r
            self.q = q
        self.thr_test = _threshold_u64(self.q)
        self.call_span = 2 + (self.r - 1).bit_length()
        self._tables = {}

    def tables(self, t: int):
        """(dirty threshold, ln clean-prob, conditional flip-count thresholds)."""
        tab = self._tables.get(t)
        if tab is None:
            q = self.q
            rho = (1 - q) ** t
            thr_dirty = _threshold_u64(1 - rho)
            if q > 0:
                ln_rho = t * math.log1p(-float(q))
                dirty = 1 - rho
                cum = []
                acc = Fraction(0)
                for f in range(1, t + 1):
                    acc += math.comb(t, f) * q**f * (1 - q) ** (t - f) / dirty
                    cum.append(_threshold_u64(acc))
                cum[-1] = _TWO64
            else:
                ln_rho = 0.0
                cum = []
            tab = (thr_dirty, ln_rho, tuple(cum))
            self._tables[t] = tab
        return tab


def wrap_profile(model, t_max: int) -> WrapProfile:
    cache = getattr(model, "_wrap_profiles", None)
    if cache is None:
        cache = {}
        model._wrap_profiles = cache
    prof = cache.get(t_max)
    if prof is None:
        prof = WrapProfile(model.p_exact, t_max)
        cache[t_max] = prof
    return prof


class _NoisyOracle:
    """Base class: clean/dirty batching around per-state exact profiles.

    Subclasses provide state objects with attributes:
      n_tests          total wrapped tests per call at this state
      truthful         (code, next_state) for an error-free call
      is_selfloop      True when truthful code is AT_TARGET
    and a method `_dirty_action(ctx, state, flips)` mapping a sampled flip
    pattern (set of test positions) to (code, next_state).
    """

    __slots__ = ("root", "wrap", "_pending_dirty")

    def __init__(self, wrap: WrapProfile):
        self.wrap = wrap
        self._pending_dirty = False

    def _charge(self, meter, state, count: int):
        t = state.n_tests
        r = self.wrap.r
        if t:
            meter.logical_ops += t * count
            meter.raw_flips += t * r * count
            meter.work += (t * (2 * r - 1) + 1) * count
            meter.span += self.wrap.call_span * count
        else:
            meter.work += count
            meter.span += count

    def advance(self, ctx, state, remaining: int):
        t = state.n_tests
        wrap = self.wrap
        if self._pending_dirty:
            self._pending_dirty = False
            self._charge(ctx.meter, state, 1)
            flips = self._sample_flips(ctx, t)
            code, nxt = self._dirty_action(ctx, state, flips)
            return code, nxt, 1
        if t == 0 or wrap.thr_test == 0:
            code, nxt = state.truthful
            if code == AT_TARGET:
                self._charge(ctx.meter, state, remaining)
                return AT_TARGET, None, remaining
            self._charge(ctx.meter, state, 1)
            return code, nxt, 1
        thr_dirty, ln_rho, _ = wrap.tables(t)
        if thr_dirty == 0:
            code, nxt = state.truthful
            if code == AT_TARGET:
                self._charge(ctx.meter, state, remaining)
                return AT_TARGET, None, remaining
            self._charge(ctx.meter, state, 1)
            return code, nxt, 1
        code, nxt = state.truthful
        if code == AT_TARGET:
            # Sample the length of the clean self-loop run in one draw.
            u = ctx.draw_u64()
            frac = math.log((u + 1) / _TWO64)
            run = int(frac / ln_rho) if ln_rho < 0 else remaining
            if run >= remaining:
                self._charge(ctx.meter, state, remaining)
                return AT_TARGET, None, remaining
            if run > 0:
                self._pending_dirty = True
                self._charge(ctx.meter, state, run)
                return AT_TARGET, None, run
            self._charge(ctx.meter, state, 1)
            flips = self._sample_flips(ctx, t)
            code2, nxt2 = self._dirty_action(ctx, state, flips)
            return code2, nxt2, 1
        # State changes on a truthful step: sample clean/dirty per call.
        self._charge(ctx.meter, state, 1)
        if ctx.draw_u64() >= thr_dirty:
            return code, nxt, 1
        flips = self._sample_flips(ctx, t)
        code2, nxt2 = self._dirty_action(ctx, state, flips)
        return code2, nxt2, 1

    def _sample_flips(self, ctx, t: int):
        """Flip positions for one dirty call (conditioned on >= 1 flip)."""
        _, _, cum = self.wrap.tables(t)
        u = ctx.draw_u64()
        f = 1
        for thr in cum:
            if u < thr:
                break
            f += 1
        if f == 1:
            return (ctx.draw_u64() % t,)
        flips = set()
        while len(flips) < f:
            flips.add(ctx.draw_u64() % t)
        return tuple(flips)


# ---------------------------------------------------------------------------
# Oracle 1: noisy binary search on an implicit BST with ancestor bounds.


class _BstState:
    __slots__ = ("lo", "hi", "n_tests", "truthful", "bits", "layout", "mid")

    def __init__(self, lo, hi):
        self.lo = lo
        self.hi = hi


class BstSearchOracle(_NoisyOracle):
    """Search for the insertion position of `query` in sorted `keys`.

    `less` is the exact comparator; every invocation inside a call is pushed
    through the noise channel at the profile's repetition level.  States are
    element-index ranges; the empty range [g, g-1] is the gap (insertion
    position g).  Containment in the ancestor value bounds doubles as the
    path-validity check.
    """

    __slots__ = ("keys", "query", "less", "_memo")

    T_MAX = 3

    def __init__(self, model, keys, query, less=None):
        super().__init__(wrap_profile(model, self.T_MAX))
        self.keys = keys
        self.query = query
        self.less = less if less is not None else (lambda x, y: x < y)
        self._memo = {}
        self.root = self._state(0, len(keys) - 1)

    def _state(self, lo, hi):
        st = self._memo.get((lo, hi))
        if st is not None:
            return st
        st = _BstState(lo, hi)
        keys, q, less = self.keys, self.query, self.less
        n = len(keys)
        tests = []
        bits = []
        # Ancestor-bound containment: keys[lo-1] < q <= keys[hi+1].
        if lo > 0:
            tests.append(0)
            bits.append(less(keys[lo - 1], q))
        if hi < n - 1:
            tests.append(1)
            bits.append(not less(keys[hi + 1], q))
        leaf = lo > hi
        if not leaf:
            mid = (lo + hi) // 2
            st.mid = mid
            tests.append(2)
            bits.append(not less(keys[mid], q))  # True -> left child
        else:
            st.mid = lo
        st.layout = tuple(tests)
        st.bits = tuple(bits)
        st.n_tests = len(tests)
        contained = all(bits[: st.n_tests - (0 if leaf else 1)])
        if not contained:
            st.truthful = (BACKTRACK, None)
        elif leaf:
            st.truthful = (AT_TARGET, None)
        else:
            st.truthful = (DESCEND, None)  # child resolved lazily
        self._memo[(lo, hi)] = st
        if st.truthful[0] == DESCEND:
            st.truthful = (DESCEND, self._child(st, bits[-1]))
        return st

    def _child(self, st, go_left):
        mid = st.mid
        if go_left:
            return self._state(st.lo, mid - 1)
        return self._state(mid + 1, st.hi)

    def _dirty_action(self, ctx, st, flips):
        bits = list(st.bits)
        for pos in flips:
            bits[pos] = not bits[pos]
        leaf = st.lo > st.hi
        ncont = st.n_tests - (0 if leaf else 1)
        if not all(bits[:ncont]):
            return BACKTRACK, None
        if leaf:
            return AT_TARGET, None
        return DESCEND, self._child(st, bits[-1])

    def position_of(self, state) -> int:
        if state.lo > state.hi:
            return state.lo
        return state.mid


def noisy_binary_search_walk(ctx, keys, query, target_eps: Fraction, *, less=None, constant=16):
    """Walk-based noisy search; returns (position, WalkResult)."""
    n = len(keys)
    if n == 0:
        return 0, WalkResult(None, True, 0)
    oracle = BstSearchOracle(ctx.model, keys, query, less)
    path = max(1, n.bit_length()) + 1
    budget = WalkBudget(path, Fraction(target_eps), constant)
    res = run_pushdown_walk(ctx, oracle, budget)
    return oracle.position_of(res.node), res


# ---------------------------------------------------------------------------
# Upper hulls and the tangent oracle.


class UpperHull:
    """x-sorted hull vertex sequence; consecutive triples turn clockwise.

    The implicit balanced-tree view used by the walks is just midpoint
    splitting of the vertex array.
    """

    __slots__ = ("xs", "ys")

    def __init__(self, xs, ys):
        if len(xs) != len(ys) or not xs:
            raise ValueError("hull needs parallel non-empty coordinate arrays")
        self.xs = list(xs)
        self.ys = list(ys)

    def __len__(self):
        return len(self.xs)

    def point(self, i):
        return (self.xs[i], self.ys[i])

    def points(self):
        return list(zip(self.xs, self.ys))

    @classmethod
    def from_vertices(cls, pts):
        return cls([p[0] for p in pts], [p[1] for p in pts])

    def check_valid(self):
        xs, ys = self.xs, self.ys
        for i in range(1, len(xs)):
            if xs[i - 1] >= xs[i]:
                raise ValueError("hull x must increase strictly")
        for i in range(1, len(xs) - 1):
            s = orient2d_exact((xs[i - 1], ys[i - 1]), (xs[i], ys[i]), (xs[i + 1], ys[i + 1]))
            if s != -1:
                raise ValueError("hull triple is not a right turn")


class _TanState:
    __slots__ = (
        "alo", "ahi", "blo", "bhi", "a", "b",
        "bits", "layout", "c_cache", "own_action", "tainted",
        "prov", "sites", "n_tests", "truthful",
    )


class TangentOracle(_NoisyOracle):
    """Transition oracle for the upper tangent of x-separated upper hulls.

    A state holds candidate index ranges on both hulls.  Probes a (ceiling
    midpoint on A) and b (floor midpoint on B) classify each hull locally by
    whether the probe's neighbours lie above the line a-b; three of the nine
    side combinations are resolved by testing which side of the separating
    vertical line the intersection of the two local edge lines falls on.
    `prov` records, per range boundary, the ancestor state and decision that
    set it; a call re-derives those decisions (the four extra case-analysis
    invocations) and backtracks on any mismatch, which catches every state
    whose ranges exclude the true tangent pair.
    """

    __slots__ = ("A", "B", "sep2", "_memo")

    T_MAX = 25  # 4 boundary rechecks + own case analysis, 5 tests each

    def __init__(self, model, hull_a: UpperHull, hull_b: UpperHull):
        super().__init__(wrap_profile(model, self.T_MAX))
        if hull_a.xs[-1] >= hull_b.xs[0]:
            raise ValueError("hulls must be separated in x")
        self.A = hull_a
        self.B = hull_b
        self.sep2 = hull_a.xs[-1] + hull_b.xs[0]  # separator = sep2 / 2
        self._memo = {}
        self.root = self._make_state(0, len(hull_a) - 1, 0, len(hull_b) - 1, None, None)

    # -- exact geometry ----------------------------------------------------

    def _above(self, a_idx, b_idx, hull, p_idx):
        """Is hull.point(p_idx) strictly above the line A[a_idx] -> B[b_idx]?"""
        pa = (self.A.xs[a_idx], self.A.ys[a_idx])
        pb = (self.B.xs[b_idx], self.B.ys[b_idx])
        pc = (hull.xs[p_idx], hull.ys[p_idx])
        s = orient2d_exact(pa, pb, pc)
        if s == 0:
            raise CollinearInput(f"degenerate tangent probe {pa}, {pb}, {pc}")
        return s == CCW

    def _c_left(self, st, sa, sb):
        """Does the intersection of the two case edge-lines lie left of the
        separating line?  Exact rational comparison."""
        val = st.c_cache.get((sa, sb))
        if val is not None:
            return val
        A, B = self.A, self.B
        a, b = st.a, st.b
        if sa == 2:
            p1, p2 = (A.xs[a], A.ys[a]), (A.xs[a + 1], A.ys[a + 1])
        else:  # sa == 1 in case (T, L)
            p1, p2 = (A.xs[a - 1], A.ys[a - 1]), (A.xs[a], A.ys[a])
        if sb == 1:  # case (R, T)
            q1, q2 = (B.xs[b], B.ys[b]), (B.xs[b + 1], B.ys[b + 1])
        else:
            q1, q2 = (B.xs[b - 1], B.ys[b - 1]), (B.xs[b], B.ys[b])
        dx1, dy1 = p2[0] - p1[0], p2[1] - p1[1]
        dx2, dy2 = q2[0] - q1[0], q2[1] - q1[1]
        c1 = p1[0] * p2[1] - p1[1] * p2[0]
        c2 = q1[0] * q2[1] - q1[1] * q2[0]
        den = dx1 * dy2 - dy1 * dx2
        num = dx1 * c2 - dx2 * c1
        if den == 0:
            val = True  # parallel edge lines: only reachable on error paths
        else:
            if den < 0:
                num, den = -num, -den
            val = 2 * num <= self.sep2 * den
        st.c_cache[(sa, sb)] = val
        return val

    # -- case analysis -----------------------------------------------------

    @staticmethod
    def _sides(pa, na, pb, nb):
        sa = 2 if na else (0 if pa else 1)  # R / L / T
        sb = 2 if nb else (0 if pb else 1)
        return sa, sb

    def _case_action(self, st, pa, na, pb, nb, cget):
        a, b = st.a, st.b
        sa, sb = self._sides(pa, na, pb, nb)
        asing = st.alo == st.ahi
        bsing = st.blo == st.bhi
        if asing and bsing:
            return _TGT if (sa == 1 and sb == 1) else _BCK
        if bsing:
            if sa == 2:
                return ("AL", a + 1)
            if sa == 0:
                return ("AH", a - 1)
            return _TGT
        if asing:
            if sb == 0:
                return ("BH", b - 1)
            if sb == 2:
                return ("BL", b + 1)
            return _TGT
        if sa == 0:
            return ("AH", a - 1)
        if sb == 2:
            return ("BL", b + 1)
        if sa == 1 and sb == 1:
            return _TGT
        c = cget(sa, sb)
        if sa == 2 and sb == 0:
            return ("AL", a + 1) if c else ("BH", b - 1)
        if sa == 2:
            return ("AL", a + 1) if c else ("BH", b)
        return ("AL", a) if c else ("BH", b - 1)

    # -- state construction -------------------------------------------------

    def _make_state(self, alo, ahi, blo, bhi, parent, action):
        st = _TanState()
        st.alo, st.ahi, st.blo, st.bhi = alo, ahi, blo, bhi
        st.a = (alo + ahi + 1) // 2
        st.b = (blo + bhi) // 2
        st.c_cache = {}
        if parent is None:
            st.prov = (None, None, None, None)
            st.tainted = False
        else:
            slot = {"AL": 0, "AH": 1, "BL": 2, "BH": 3}[action[0]]
            prov = list(parent.prov)
            prov[slot] = (parent, action)
            st.prov = tuple(prov)
            st.tainted = parent.tainted or action != parent.own_action
        A, B = self.A, self.B
        a, b = st.a, st.b
        layout = []
        bits = []
        if a > 0:
            layout.append(0)
            bits.append(self._above(a, b, A, a - 1))
        if a < len(A) - 1:
            layout.append(1)
            bits.append(self._above(a, b, A, a + 1))
        if b > 0:
            layout.append(2)
            bits.append(self._above(a, b, B, b - 1))
        if b < len(B) - 1:
            layout.append(3)
            bits.append(self._above(a, b, B, b + 1))
        vals = {t: v for t, v in zip(layout, bits)}
        pa, na = vals.get(0, False), vals.get(1, False)
        pb, nb = vals.get(2, False), vals.get(3, False)
        sa, sb = self._sides(pa, na, pb, nb)
        needs_c = (
            st.alo != st.ahi
            and st.blo != st.bhi
            and sa != 0
            and sb != 2
            and (sa, sb) != (1, 1)
        )
        if needs_c:
            layout.append(4)
            bits.append(self._c_left(st, sa, sb))
        st.layout = tuple(layout)
        st.bits = tuple(bits)
        st.own_action = self._case_action(
            st, pa, na, pb, nb, lambda xa, xb: self._c_left(st, xa, xb)
        )
        st.sites = tuple(entry for entry in st.prov if entry is not None)
        st.n_tests = sum(len(site.layout) for site, _ in st.sites) + len(st.layout)
        if not st.tainted:
            self._memo[(alo, ahi, blo, bhi)] = st
        if st.tainted:
            # Reached through at least one erroneous decision: a truthful
            # verification pass rejects the path.
            st.truthful = (BACKTRACK, None)
        elif st.own_action[0] == "T":
            st.truthful = (AT_TARGET, None)
        elif st.own_action[0] == "B":
            st.truthful = (BACKTRACK, None)
        else:
            st.truthful = (DESCEND, self._child(st, st.own_action))
        return st

    def _child(self, st, action):
        kind, v = action
        alo, ahi, blo, bhi = st.alo, st.ahi, st.blo, st.bhi
        if kind == "AL":
            alo = v
        elif kind == "AH":
            ahi = v
        elif kind == "BL":
            blo = v
        else:
            bhi = v
        if alo > ahi or blo > bhi:
            return None
        if not st.tainted and action == st.own_action:
            cached = self._memo.get((alo, ahi, blo, bhi))
            if cached is not None:
                return cached
        return self._make_state(alo, ahi, blo, bhi, st, action)

    # -- noisy evaluation ----------------------------------------------------

    @staticmethod
    def _exact_case_key(site):
        vals = {t: v for t, v in zip(site.layout, site.bits)}
        pa, na = vals.get(0, False), vals.get(1, False)
        pb, nb = vals.get(2, False), vals.get(3, False)
        sa = 2 if na else (0 if pa else 1)
        sb = 2 if nb else (0 if pb else 1)
        return sa, sb

    def _eval_site(self, ctx, site, flips_at):
        """Re-derive a state's decision with the given test flips applied."""
        bits = list(site.bits)
        for pos in flips_at:
            bits[pos] = not bits[pos]
        vals = {t: v for t, v in zip(site.layout, bits)}
        pa, na = vals.get(0, False), vals.get(1, False)
        pb, nb = vals.get(2, False), vals.get(3, False)
        has_c = bool(site.layout) and site.layout[-1] == 4
        exact_case = self._exact_case_key(site) if has_c else None

        def cget(sa, sb):
            if has_c and (sa, sb) == exact_case:
                return vals[4]
            # The flipped sides routed into a case whose separator test was
            # not in the budgeted layout: draw one fresh wrapped test.
            exact = self._c_left(site, sa, sb)
            meter = ctx.meter
            r = self.wrap.r
            meter.logical_ops += 1
            meter.raw_flips += r
            meter.work += 2 * r - 1
            if self.wrap.thr_test and ctx.draw_u64() < self.wrap.thr_test:
                return not exact
            return exact

        return self._case_action(site, pa, na, pb, nb, cget)

    def _dirty_action(self, ctx, st, flips):
        # Flip positions are indices into the concatenation of the recheck
        # sites' layouts followed by this state's own layout.
        offset = 0
        for site, expected in st.sites:
            width = len(site.layout)
            local = tuple(f - offset for f in flips if offset <= f < offset + width)
            offset += width
            derived = self._eval_site(ctx, site, local) if local else site.own_action
            if derived != expected:
                return BACKTRACK, None
        if st.tainted:
            # All certificates came out consistent, but a truthful pass still
            # rejects an error-reached node; only a flipped own-case decision
            # can push the walk onward from here.
            own_flips = tuple(f - offset for f in flips if f >= offset)
            if not own_flips:
                return BACKTRACK, None
            action = self._eval_site(ctx, st, own_flips)
        else:
            own_flips = tuple(f - offset for f in flips if f >= offset)
            action = self._eval_site(ctx, st, own_flips) if own_flips else st.own_action
        if action[0] == "T":
            return AT_TARGET, None
        if action[0] == "B":
            return BACKTRACK, None
        child = self._child(st, action)
        if child is None:
            return BACKTRACK, None
        return DESCEND, child


def tangent_path_bound(na: int, nb: int) -> int:
    return (na - 1).bit_length() + (nb - 1).bit_length() + 2


def upper_tangent_walk(ctx, hull_a: UpperHull, hull_b: UpperHull, epsilon, *, constant=16):
    """Compute the upper tangent pair by a pushdown walk.

    Returns ((ia, ib), WalkResult); correct with probability >= 1 - epsilon.
    """
    oracle = TangentOracle(ctx.model, hull_a, hull_b)
    budget = WalkBudget(
        tangent_path_bound(len(hull_a), len(hull_b)), Fraction(epsilon), constant
    )
    res = run_pushdown_walk(ctx, oracle, budget)
    st = res.node
    return (st.a, st.b), res


def is_upper_tangent(hull_a: UpperHull, hull_b: UpperHull, ia: int, ib: int) -> bool:
    """Exact certificate: every other vertex lies strictly below the line."""
    pa = hull_a.point(ia)
    pb = hull_b.point(ib)
    for i in range(len(hull_a)):
        if i != ia and orient2d_exact(pa, pb, hull_a.point(i)) != -1:
            return False
    for j in range(len(hull_b)):
        if j != ib and orient2d_exact(pa, pb, hull_b.point(j)) != -1:
            return False
    return True


def exact_upper_tangent(hull_a: UpperHull, hull_b: UpperHull):
    """Independent quadratic-scan oracle for tests."""
    for ia in range(len(hull_a)):
        # tangent point on B as seen from A[ia]: maximises the slope
        pa = hull_a.point(ia)
        best = 0
        for j in range(1, len(hull_b)):
            # slope compare: (y_j - y_a) / (x_j - x_a)
            bj = hull_b.point(j)
            bb = hull_b.point(best)
            lhs = (bj[1] - pa[1]) * (bb[0] - pa[0])
            rhs = (bb[1] - pa[1]) * (bj[0] - pa[0])
            if lhs > rhs:
                best = j
        if is_upper_tangent(hull_a, hull_b, ia, best):
            return ia, best
    raise ValueError("no tangent found (degenerate input?)")
