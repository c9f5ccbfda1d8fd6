import itertools
import random

import pytest
from hypothesis import HealthCheck, settings, strategies as st

from commgraph.fields import GF, QQ
from commgraph.matrix import Matrix

settings.register_profile(
    "default", max_examples=60, deadline=None, derandomize=True,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")

FIELDS = [QQ, GF(2), GF(5), GF(2, 3), GF(3, 2)]
FIELD_IDS = [F.text() for F in FIELDS]


@pytest.fixture(params=FIELDS, ids=FIELD_IDS)
def field(request):
    return request.param


@st.composite
def elements(draw, F):
    if F.is_finite:
        return draw(st.sampled_from(list(F.elements())))
    return F.from_int(draw(st.integers(-6, 6))) if draw(st.booleans()) else F.div(
        F.from_int(draw(st.integers(-6, 6))), F.from_int(draw(st.integers(1, 5)))
    )


@st.composite
def matrices(draw, F, n):
    return Matrix(F, [[draw(elements(F)) for _ in range(n)] for _ in range(n)])


def leibniz_det(M):
    F, n = M.field, M.n
    total = F.zero
    for p in itertools.permutations(range(n)):
        t = F.one
        for i in range(n):
            t = F.mul(t, M.data[i][p[i]])
        inv = sum(1 for i in range(n) for j in range(i + 1, n) if p[i] > p[j])
        total = F.add(total, t if inv % 2 == 0 else F.neg(t))
    return total


def random_matrix(F, n, rng):
    return Matrix(F, [[F.random_element(rng) for _ in range(n)] for _ in range(n)])


@pytest.fixture
def rng():
    return random.Random(12345)


ACCEPTANCE: dict = {}


@pytest.fixture
def acceptance(request):
    """Record one criterion outcome; the line is printed in the terminal summary."""

    def record(number: int, ok: bool, detail: str):
        ACCEPTANCE[number] = (ok, detail)
        assert ok, detail

    return record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[number]
        terminalreporter.write_line(f"criterion {number:2d}: {'PASS' if ok else 'FAIL'}  {detail}")
