import random

import pytest

from noisyhull.costmodel import TaskCtx
from noisyhull.noise import NoiseModel
from noisyhull.walk import UpperHull

COORD = 1 << 20


def make_ctx(p=0.0, seed=1234):
    return TaskCtx(NoiseModel(p, seed))


def rand_points2(rng, n, span=COORD):
    """Distinct random integer points (exact duplicates resampled)."""
    pts = set()
    while len(pts) < n:
        pts.add((rng.randrange(-span, span + 1), rng.randrange(-span, span + 1)))
    return sorted(pts)


def rand_concave_chain(rng, size, x0=0, max_step=8):
    """Exact upper-hull vertex chain of the given size: strictly increasing
    x, strictly decreasing edge slopes."""
    xs = [x0]
    for _ in range(size - 1):
        xs.append(xs[-1] + rng.randrange(1, max_step))
    slopes = sorted(rng.sample(range(-1024, 1024), size - 1), reverse=True) if size > 1 else []
    ys = [rng.randrange(-1024, 1024)]
    for i in range(size - 1):
        ys.append(ys[-1] + slopes[i] * (xs[i + 1] - xs[i]))
    return UpperHull(xs, ys)


def rand_hull_pair(rng, max_size=64):
    na = rng.randrange(1, max_size + 1)
    nb = rng.randrange(1, max_size + 1)
    a = rand_concave_chain(rng, na)
    gap = rng.randrange(1, 100)
    b = rand_concave_chain(rng, nb, x0=a.xs[-1] + gap)
    return a, b


@pytest.fixture
def rng():
    return random.Random(20240817)
