import random
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from octcover.core import OrderedPoint2, OrderedPointSet


def random_opset(n: int, rng: random.Random) -> OrderedPointSet:
    """Uniform random rank configuration: random x- and y-permutations."""
    xs = list(range(1, n + 1))
    ys = list(range(1, n + 1))
    rng.shuffle(xs)
    rng.shuffle(ys)
    return OrderedPointSet(
        OrderedPoint2(x=xs[i], y=ys[i], time=i + 1, id=i) for i in range(n)
    )


def chain_opset(n: int) -> OrderedPointSet:
    return OrderedPointSet(
        OrderedPoint2(x=i, y=i, time=i, id=i - 1) for i in range(1, n + 1)
    )


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20240817)
