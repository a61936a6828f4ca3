"""Bernoulli noise channel over exact predicates, plus repetition calibration.

Every noisy primitive is an exact Boolean geometric test passed through an
independent error channel that flips the answer with probability p < 1/2.
Randomness is counter-based: a draw is a pure function of
(master_seed, site_id, draw_index), so results never depend on execution
order.  Majority votes over k repetitions are sampled in one draw using the
exact binomial tail P[Binomial(k, p) > k/2], which is the exact distribution
of the majority outcome; the raw-flip counters still advance by k.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .geometry import CCW, CW, COLLINEAR, CollinearInput, OnBoundary, orient2d_exact

_M64 = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15
_SPAWN = 0xD1B54A32D192ED03
_TWO64 = 1 << 64


def mix64(z: int) -> int:
    """splitmix64 finalizer; uniform enough for simulation statistics."""
    z &= _M64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _M64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _M64
    return z ^ (z >> 31)


def derive_site(parent_site: int, index: int) -> int:
    """Stable site id for the index-th child task of a task."""
    return mix64(parent_site ^ _SPAWN ^ ((index + 1) * _GOLDEN & _M64))


def binomial_majority_error(k: int, p) -> Fraction:
    """Exact P[majority of k independent Bernoulli(p) flips is wrong].

    k must be odd (or 1).  p is converted to an exact Fraction, so a float
    argument is interpreted by its exact binary value.
    """
    pf = Fraction(p)
    if pf == 0:
        return Fraction(0)
    a, d = pf.numerator, pf.denominator
    need = k // 2 + 1
    num = 0
    for j in range(need, k + 1):
        num += math.comb(k, j) * a**j * (d - a) ** (k - j)
    return Fraction(num, d**k)


class CalibrationTable:
    """Cache of (n, c, p) -> k, the minimal odd repetition count with
    exact majority failure <= n^(-c)."""

    def __init__(self):
        self._table = {}

    def lookup(self, n: int, c: int, p) -> int:
        key = (n, c, Fraction(p))
        k = self._table.get(key)
        if k is None:
            k = self._calibrate(n, c, Fraction(p))
            self._table[key] = k
        return k

    @staticmethod
    def _calibrate(n: int, c, p: Fraction) -> int:
        if n < 2:
            raise ValueError("n must be >= 2")
        if not 0 <= p < Fraction(1, 2):
            raise ValueError("p must be in [0, 1/2)")
        if p == 0:
            return 1
        target = Fraction(1, n**c)
        # Exponential search for an upper bound, then bisect over odd k.
        hi = 1
        while binomial_majority_error(hi, p) > target:
            hi = hi * 2 + 1
        lo = 1
        while lo < hi:
            mid = (lo + hi) // 2
            if mid % 2 == 0:
                mid -= 1
            if binomial_majority_error(mid, p) <= target:
                hi = mid
            else:
                lo = mid + 2
        return hi

    def entries(self):
        return dict(self._table)


def calibrate_repetitions(n: int, c, p, table: CalibrationTable | None = None) -> int:
    if table is not None:
        return table.lookup(n, c, p)
    return CalibrationTable._calibrate(n, c, Fraction(p))


def _threshold_u64(prob: Fraction) -> int:
    """Integer threshold t with P[u64 < t] = round(prob * 2^64) / 2^64."""
    if prob <= 0:
        return 0
    if prob >= 1:
        return _TWO64
    num = prob.numerator * _TWO64
    den = prob.denominator
    return (num + den // 2) // den


@dataclass
class NoiseModel:
    """Error probability, master seed, and per-run calibration caches."""

    p: float
    master_seed: int
    calibration: CalibrationTable = field(default_factory=CalibrationTable)

    def __post_init__(self):
        pf = Fraction(self.p)
        if not 0 <= pf < Fraction(1, 2):
            raise ValueError("error probability must be in [0, 1/2)")
        self._p_exact = pf
        self.flip_threshold = _threshold_u64(pf)
        self._seed_mix = mix64(self.master_seed ^ _GOLDEN)
        self._majority_thresholds = {}
        self.root_site = mix64(self.master_seed ^ 0xA5A5A5A55A5A5A5A)

    @property
    def p_exact(self) -> Fraction:
        return self._p_exact

    def draw_u64(self, site: int, index: int) -> int:
        """The counter-based uniform draw underlying every noisy primitive."""
        return mix64((site + index * _GOLDEN + self._seed_mix) & _M64)

    def majority_threshold(self, k: int) -> int:
        """u64 threshold whose hit probability is the exact majority error."""
        t = self._majority_thresholds.get(k)
        if t is None:
            t = _threshold_u64(binomial_majority_error(k, self._p_exact))
            self._majority_thresholds[k] = t
        return t

    def repetitions(self, n: int, c) -> int:
        return self.calibration.lookup(n, c, self.p)


# ---------------------------------------------------------------------------
# Primitive noisy operations.  `ctx` is a costmodel.TaskCtx: it carries the
# model, the per-task meter, and the task's draw stream.


def noisy_bool(ctx, truth: bool) -> bool:
    """One raw channel use: returns not-truth with probability exactly p."""
    m = ctx.meter
    m.raw_flips += 1
    m.span += 1
    m.work += 1
    if ctx.model.flip_threshold == 0:
        return truth
    return (not truth) if ctx.draw_u64() < ctx.model.flip_threshold else truth


def majority_vote(ctx, truth: bool, k: int) -> bool:
    """Majority over k channel uses, sampled in one exact-tail draw.

    Counts as one logical operation and k raw flips.  Span charges the
    parallel shape (flips in one step, then a binary combine tree).
    """
    if k % 2 == 0:
        raise ValueError("repetition count must be odd")
    m = ctx.meter
    m.raw_flips += k
    m.logical_ops += 1
    m.work += 2 * k - 1
    m.span += 1 + (k - 1).bit_length()
    thr = ctx.model.majority_threshold(k)
    if thr == 0:
        return truth
    return (not truth) if ctx.draw_u64() < thr else truth


def noisy_orient2d(ctx, a, b, c) -> int:
    """Exact orientation through the channel.  Collinear input has no Boolean
    answer and raises CollinearInput."""
    s = orient2d_exact(a, b, c)
    if s == COLLINEAR:
        raise CollinearInput(f"collinear triple {a}, {b}, {c}")
    return s if noisy_bool(ctx, True) else -s


def noisy_orient2d_voted(ctx, a, b, c, k: int) -> int:
    s = orient2d_exact(a, b, c)
    if s == COLLINEAR:
        raise CollinearInput(f"collinear triple {a}, {b}, {c}")
    return s if majority_vote(ctx, True, k) else -s


def noisy_sign_test(ctx, truth: bool, k: int = 1) -> bool:
    """Noisy evaluation of an exact Boolean with k-fold repetition."""
    return majority_vote(ctx, truth, k)


def noisy_halfspace_test(ctx, vertex_num, vertex_den, h, k: int = 1) -> bool:
    """Noisy sidedness of a rational vertex against a halfspace."""
    from .geometry import halfspace_margin

    s = halfspace_margin(h, vertex_num, vertex_den)
    if s == 0:
        raise OnBoundary(f"vertex on plane {h}")
    return noisy_sign_test(ctx, s > 0, k)


def noisy_orient3d(ctx, a, b, c, d, k: int = 1) -> int:
    from .geometry import orient3d_exact

    s = orient3d_exact(a, b, c, d)
    if s == 0:
        raise OnBoundary(f"coplanar quadruple {a}, {b}, {c}, {d}")
    return s if noisy_sign_test(ctx, True, k) else -s
