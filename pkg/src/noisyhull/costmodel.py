"""Simulated CREW-PRAM cost accounting: span, work, and noise counters.

The simulation always executes sequentially; `parallel_for` only shapes the
accounting (span takes the max over tasks, work the sum).  Each task gets its
own meter and its own randomness site, so counters and results are identical
under any physical schedule.  Only ratios and trends of the reported numbers
are meaningful: every constant-time step is charged one unit.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .noise import _GOLDEN, _M64, derive_site, mix64


@dataclass
class CostReport:
    span: int
    work: int
    raw_flips: int
    logical_ops: int

    def to_json(self) -> str:
        return json.dumps(
            {
                "span": self.span,
                "work": self.work,
                "raw_flips": self.raw_flips,
                "logical_ops": self.logical_ops,
            }
        )


class CostMeter:
    """Mergeable counters for one task. span <= work always holds because
    every charge adds at least as much work as span."""

    __slots__ = ("span", "work", "raw_flips", "logical_ops")

    def __init__(self):
        self.span = 0
        self.work = 0
        self.raw_flips = 0
        self.logical_ops = 0

    def report(self) -> CostReport:
        return CostReport(self.span, self.work, self.raw_flips, self.logical_ops)

    def merge_parallel(self, children) -> None:
        """Join child meters: span is the critical path, the rest add."""
        best = 0
        for ch in children:
            if ch.span > best:
                best = ch.span
            self.work += ch.work
            self.raw_flips += ch.raw_flips
            self.logical_ops += ch.logical_ops
        self.span += best


class TaskCtx:
    """Execution context: noise model + this task's meter and draw stream."""

    __slots__ = ("model", "meter", "site", "_draw_index")

    def __init__(self, model, meter=None, site=None):
        self.model = model
        self.meter = meter if meter is not None else CostMeter()
        self.site = site if site is not None else model.root_site
        self._draw_index = 0

    def draw_u64(self) -> int:
        self._draw_index += 1
        return mix64((self.site + self._draw_index * _GOLDEN + self.model._seed_mix) & _M64)

    def spawn(self, index: int) -> "TaskCtx":
        """Child context for the index-th subtask (fresh meter and site)."""
        return TaskCtx(self.model, CostMeter(), derive_site(self.site, index))

    def fork(self, tag: int) -> "TaskCtx":
        """Same meter, new randomness site; used for retry attempts."""
        child = TaskCtx(self.model, self.meter, derive_site(self.site ^ 0x5851F42D4C957F2D, tag))
        return child


def tick(ctx, cost: int = 1) -> None:
    """Charge a sequential constant-time region."""
    if cost < 1:
        raise ValueError("cost must be >= 1")
    ctx.meter.span += cost
    ctx.meter.work += cost


def parallel_for(ctx, tasks):
    """Run independent task closures; results in task order.

    Each closure receives its own child context.  Span increases by the max
    task span, work by the sum.
    """
    results = []
    children = []
    for i, task in enumerate(tasks):
        child = ctx.spawn(i)
        results.append(task(child))
        children.append(child.meter)
    ctx.meter.merge_parallel(children)
    return results


def charge_prefix(ctx, n: int) -> None:
    """Standard PRAM prefix combine over n items: log span, linear work."""
    if n <= 0:
        return
    ctx.meter.span += max(1, (n - 1).bit_length())
    ctx.meter.work += n
