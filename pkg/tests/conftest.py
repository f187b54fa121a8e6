import functools

import pytest

from hopfq.dual import IntegralDual
from hopfq.hopf import group_like_algebra
from hopfq.linalg import QQ, PrimeField
from hopfq.loops import cyclic, octonion_loop16, quaternion8, symmetric3

GF101 = PrimeField(101)
FIELDS = [QQ, GF101]
# this Fano orientation gives an IP loop of order 16 that is not Moufang
SKEW_TRIPLES = ((1, 2, 3), (1, 4, 5), (2, 4, 6), (3, 4, 7), (2, 5, 7), (3, 5, 6), (1, 6, 7))

LOOPS = {
    "Z6": lambda: cyclic(6),
    "S3": symmetric3,
    "Q8": quaternion8,
    "O16": octonion_loop16,
}


@functools.lru_cache(maxsize=None)
def loop(name):
    if name == "O16skew":
        return octonion_loop16(SKEW_TRIPLES)
    return LOOPS[name]()


@functools.lru_cache(maxsize=None)
def algebra(name, field=QQ):
    return group_like_algebra(loop(name), field)


@functools.lru_cache(maxsize=None)
def dual(name, field=QQ):
    return IntegralDual(algebra(name, field))


@pytest.fixture(params=FIELDS, ids=lambda F: F.name)
def field(request):
    return request.param


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for n in sorted(RESULTS):
            terminalreporter.write_line(RESULTS[n])
