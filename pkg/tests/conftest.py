import math
import random

import pytest
from hypothesis import strategies as st

from rnscluster import ModuliSet
from rnscluster.harness import DEFAULT_GRID


def coprime(p1, p2, p3):
    return math.gcd(p1, p2) == math.gcd(p1, p3) == math.gcd(p2, p3) == 1


def random_triples(count, seed=2024, limit=10**6, top=200):
    """Seeded pairwise-coprime triples with p1*p2*p3 <= limit."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        t = tuple(rng.randint(2, top) for _ in range(3))
        if coprime(*t) and math.prod(t) <= limit:
            out.append(t)
    return out


coprime_triples = (
    st.tuples(*[st.integers(2, 120)] * 3)
    .filter(lambda t: coprime(*t) and math.prod(t) <= 10**6)
    .map(lambda t: ModuliSet(*t))
)


@st.composite
def moduli_and_value(draw):
    ms = draw(coprime_triples)
    return ms, draw(st.integers(0, ms.M - 1))


@pytest.fixture
def ms357():
    return ModuliSet(3, 5, 7)


@pytest.fixture
def ms235():
    return ModuliSet(2, 3, 5)


@pytest.fixture(params=DEFAULT_GRID, ids=lambda t: "-".join(map(str, t)))
def grid_ms(request):
    return ModuliSet(*request.param)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(RESULTS):
        terminalreporter.write_line(RESULTS[k])
