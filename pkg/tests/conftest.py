import itertools
import random
from fractions import Fraction

import pytest
from hypothesis import settings

from morifan import fixtures
from morifan.git_fan import InvalidWeightSystem, WeightSystem

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

H, E1, E2 = (1, 0, 0), (0, 1, 0), (0, 0, 1)


def add(*vs):
    return tuple(sum(xs) for xs in zip(*vs))


def sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def scale(q, v):
    return tuple(Fraction(q) * x for x in v)


@pytest.fixture(scope="session")
def bl2p3():
    return fixtures.weight_system("bl2p3")


@pytest.fixture(scope="session")
def bl1p3():
    return fixtures.weight_system("bl1p3")


@pytest.fixture(scope="session")
def all_fixtures():
    return {name: fixtures.weight_system(name) for name in fixtures.WEIGHT_SYSTEMS}


def random_weight_system(rng: random.Random, max_rank=3, max_n=7, bound=3) -> WeightSystem:
    """A random valid weight system; rejection-samples until validation passes."""
    while True:
        rho = rng.randint(1, max_rank)
        n = rng.randint(rho, max_n)
        classes = [tuple(rng.randint(-bound, bound) for _ in range(rho)) for _ in range(n)]
        try:
            return WeightSystem(tuple(f"x{i}" for i in range(n)), tuple(classes))
        except InvalidWeightSystem:
            continue


def positive_covector(ws: WeightSystem, bound=6):
    """Small integer covector strictly positive on every class, found by search."""
    rng = range(-bound, bound + 1)
    for ell in itertools.product(rng, repeat=ws.rank):
        if all(sum(a * b for a, b in zip(ell, w)) > 0 for w in ws.classes):
            return ell
    raise AssertionError("no positive covector in the search box")


def h0_oracle(ws: WeightSystem, d) -> int:
    """Count exponent vectors in a bounding box; independent of the package's search."""
    ell = positive_covector(ws)
    level = sum(a * b for a, b in zip(ell, d))
    if level < 0:
        return 0
    weights = [sum(a * b for a, b in zip(ell, w)) for w in ws.classes]
    count = 0

    def rec(i, residual, budget):
        nonlocal count
        if i == ws.n:
            count += not any(residual)
            return
        w = ws.classes[i]
        k = 0
        while k * weights[i] <= budget:
            rec(i + 1, tuple(r - k * x for r, x in zip(residual, w)), budget - k * weights[i])
            k += 1

    rec(0, tuple(d), level)
    return count


def pytest_terminal_summary(terminalreporter):
    ran = {
        int(r.nodeid.split("test_criterion_")[1].split("_")[0])
        for reports in terminalreporter.stats.values()
        for r in reports
        if getattr(r, "when", None) == "call" and "test_criterion_" in getattr(r, "nodeid", "")
    }
    if not ran:
        return
    from test_acceptance import RESULTS
    terminalreporter.section("acceptance criteria")
    for n in sorted(ran):
        ok, detail = RESULTS.get(n, (False, "raised before reaching a verdict"))
        terminalreporter.write_line(f"criterion {n}: {'PASS' if ok else 'FAIL'} ({detail})")
