import json
import random

from noisyhull.costmodel import TaskCtx, charge_prefix, parallel_for, tick
from noisyhull.noise import NoiseModel


def make_ctx():
    return TaskCtx(NoiseModel(0.0, 11))


def test_fresh_meter_zero_and_report_json():
    ctx = make_ctx()
    rep = ctx.meter.report()
    assert (rep.span, rep.work, rep.raw_flips, rep.logical_ops) == (0, 0, 0, 0)
    assert json.loads(rep.to_json()) == {
        "span": 0,
        "work": 0,
        "raw_flips": 0,
        "logical_ops": 0,
    }


def test_tick_accumulates():
    ctx = make_ctx()
    tick(ctx)
    tick(ctx, 3)
    assert ctx.meter.span == 4
    assert ctx.meter.work == 4


def test_parallel_for_span_max_work_sum():
    ctx = make_ctx()

    def task(child):
        tick(child, 3)
        return child.meter.span

    parallel_for(ctx, [task] * 8)
    assert ctx.meter.span == 3
    assert ctx.meter.work == 24


def test_nested_parallel_for():
    # Span composes by max at every level: two nested unit-leaf levels join
    # to the single critical-path unit; work adds over all 16 leaves.
    ctx = make_ctx()

    def leaf(child):
        tick(child, 1)

    def inner(child):
        parallel_for(child, [leaf] * 4)

    parallel_for(ctx, [inner] * 4)
    assert ctx.meter.span == 1
    assert ctx.meter.work == 16


def test_empty_task_list():
    ctx = make_ctx()
    assert parallel_for(ctx, []) == []
    assert ctx.meter.span == 0
    assert ctx.meter.work == 0


def _random_tree(rng, depth):
    """Build a random task tree; return (thunk, oracle) where oracle computes
    (span, work) by a sequential re-walk of the same tree description."""
    if depth == 0 or rng.random() < 0.3:
        cost = rng.randrange(1, 5)

        def thunk(ctx, cost=cost):
            tick(ctx, cost)

        return thunk, (cost, cost)
    kids = [_random_tree(rng, depth - 1) for _ in range(rng.randrange(1, 4))]
    pre = rng.randrange(0, 3)

    def thunk(ctx, kids=kids, pre=pre):
        if pre:
            tick(ctx, pre)
        parallel_for(ctx, [k[0] for k in kids])

    span = (pre if pre else 0) + max(k[1][0] for k in kids)
    work = (pre if pre else 0) + sum(k[1][1] for k in kids)
    return thunk, (span, work)


def test_meter_merge_matches_sequential_rewalk_oracle():
    rng = random.Random(5)
    for _ in range(50):
        thunk, (span, work) = _random_tree(rng, 4)
        ctx = make_ctx()
        thunk(ctx)
        assert ctx.meter.span == span
        assert ctx.meter.work == work


def test_prefix_charge_shape():
    ctx = make_ctx()
    charge_prefix(ctx, 16)
    assert ctx.meter.span == 4
    assert ctx.meter.work == 16
