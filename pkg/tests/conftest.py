import functools

import pytest

from hessvar.components import make_semisimple, standard_hessenberg
from hessvar.roots import build_root_system
from hessvar.weyl import WeylGroup


@functools.lru_cache(maxsize=None)
def group(cartan_type, rank):
    return WeylGroup(build_root_system(cartan_type, rank))


@pytest.fixture(scope="session")
def A2():
    return group("A", 2)


@pytest.fixture(scope="session")
def A3():
    return group("A", 3)


@pytest.fixture(scope="session")
def C2():
    return group("C", 2)


def setup(cartan_type, rank, values):
    W = group(cartan_type, rank)
    return W, make_semisimple(W.rs, values), standard_hessenberg(W.rs)


def words(W, *ws):
    return {W.from_word(w) for w in ws}
