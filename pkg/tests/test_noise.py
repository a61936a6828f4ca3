import math
from fractions import Fraction

import pytest

from noisyhull.costmodel import TaskCtx
from noisyhull.geometry import CollinearInput
from noisyhull.noise import (
    NoiseModel,
    binomial_majority_error,
    calibrate_repetitions,
    majority_vote,
    noisy_bool,
    noisy_orient2d,
)


def tail_oracle(k, p):
    """Independent majority-error computation via the Pascal recurrence."""
    pf = Fraction(p)
    # row[j] = P[Binomial(i, p) = j]
    row = [Fraction(1)]
    for _ in range(k):
        new = [row[0] * (1 - pf)]
        for j in range(1, len(row)):
            new.append(row[j] * (1 - pf) + row[j - 1] * pf)
        new.append(row[-1] * pf)
        row = new
    return sum(row[k // 2 + 1 :])


def test_majority_error_matches_pascal_oracle():
    for k in (1, 3, 5, 9, 15):
        for p in (0.1, 0.25, 0.3, 0.49):
            assert binomial_majority_error(k, p) == tail_oracle(k, p)


def test_noisy_bool_noiseless():
    ctx = TaskCtx(NoiseModel(0.0, 42))
    assert all(noisy_bool(ctx, True) for _ in range(100))
    assert not any(noisy_bool(ctx, False) for _ in range(100))
    assert ctx.meter.raw_flips == 200


def test_noisy_bool_marginal_within_4_sigma():
    ctx = TaskCtx(NoiseModel(0.3, 99))
    n = 10**5
    flips = sum(1 for _ in range(n) if not noisy_bool(ctx, True))
    sigma = math.sqrt(0.3 * 0.7 / n)
    assert abs(flips / n - 0.3) < 4 * sigma  # ~0.006


def test_noisy_bool_replay_determinism():
    def run():
        ctx = TaskCtx(NoiseModel(0.4, 777))
        return [noisy_bool(ctx, True) for _ in range(500)]

    assert run() == run()


def test_site_streams_differ_but_replay():
    model = NoiseModel(0.4, 31337)
    a1 = TaskCtx(model).spawn(0)
    a2 = TaskCtx(model).spawn(0)
    b = TaskCtx(model).spawn(1)
    seq_a1 = [noisy_bool(a1, True) for _ in range(200)]
    seq_a2 = [noisy_bool(a2, True) for _ in range(200)]
    seq_b = [noisy_bool(b, True) for _ in range(200)]
    assert seq_a1 == seq_a2
    assert seq_a1 != seq_b


def test_calibrate_trivial_cases():
    assert calibrate_repetitions(17, 3, 0.0) == 1
    assert calibrate_repetitions(2, 1, 0.1) == 1  # tail(1, 0.1) = 0.1 <= 0.5


def test_calibrate_minimality_256_4_p03():
    k = calibrate_repetitions(256, 4, 0.3)
    target = Fraction(1, 256**4)
    assert k % 2 == 1
    assert binomial_majority_error(k, 0.3) <= target
    assert binomial_majority_error(k - 2, 0.3) > target


def test_calibration_table_soundness_grid():
    model = NoiseModel(0.2, 5)
    for n in (16, 64, 1024):
        for c in (2, 5):
            k = model.repetitions(n, c)
            target = Fraction(1, n**c)
            assert binomial_majority_error(k, 0.2) <= target
            assert k == 1 or binomial_majority_error(k - 2, 0.2) > target


def test_majority_vote_counters_and_noiseless():
    ctx = TaskCtx(NoiseModel(0.0, 8))
    assert majority_vote(ctx, True, 5) is True
    assert ctx.meter.raw_flips == 5
    assert ctx.meter.logical_ops == 1
    with pytest.raises(ValueError):
        majority_vote(ctx, True, 4)


def test_majority_vote_meets_calibrated_target():
    # p = 0.3, k = calibrate(64, 2): empirical failure <= 2 * 64^-2 + 4 sigma.
    model = NoiseModel(0.3, 2024)
    k = model.repetitions(64, 2)
    bound = 2 * 64**-2
    trials = 10**5
    ctx = TaskCtx(model)
    fails = sum(1 for _ in range(trials) if not majority_vote(ctx, True, k))
    sigma = math.sqrt(bound * (1 - bound) / trials)
    assert fails / trials <= bound + 4 * sigma


def test_majority_vote_distribution_matches_exact_tail():
    # The single-draw sampling must hit the exact binomial tail rate.
    model = NoiseModel(0.3, 555)
    k = 5
    err = float(binomial_majority_error(k, 0.3))
    trials = 10**5
    ctx = TaskCtx(model)
    fails = sum(1 for _ in range(trials) if not majority_vote(ctx, True, k))
    sigma = math.sqrt(err * (1 - err) / trials)
    assert abs(fails / trials - err) < 4 * sigma


def test_noisy_orient2d_noiseless_and_collinear():
    ctx = TaskCtx(NoiseModel(0.0, 1))
    assert noisy_orient2d(ctx, (0, 0), (1, 0), (0, 1)) == 1
    with pytest.raises(CollinearInput):
        noisy_orient2d(ctx, (0, 0), (1, 1), (2, 2))


def test_noisy_orient2d_flip_rate():
    ctx = TaskCtx(NoiseModel(0.25, 77))
    n = 10**5
    wrong = sum(1 for _ in range(n) if noisy_orient2d(ctx, (0, 0), (1, 0), (0, 1)) == -1)
    sigma = math.sqrt(0.25 * 0.75 / n)
    assert abs(wrong / n - 0.25) < 4 * sigma
