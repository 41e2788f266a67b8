import random

import pytest

from affkl import build_root_datum
from affkl.weyl import element_from_word, omega_elements, simple_reflections


@pytest.fixture(scope="session")
def gl2():
    return build_root_datum("GL2")


@pytest.fixture(scope="session")
def a2():
    return build_root_datum("A2-sc")


@pytest.fixture(scope="session")
def a3():
    return build_root_datum("A3-sc")


@pytest.fixture(scope="session")
def a1sc():
    return build_root_datum("A1-sc")


def random_elements(datum, count, max_word=8, seed=7, with_omega=True):
    rng = random.Random(seed)
    refls = simple_reflections(datum, conj_search=False)
    omegas = omega_elements(datum, bound=1) if with_omega else None
    out = []
    for _ in range(count):
        word = [rng.randrange(len(refls)) for _ in range(rng.randrange(max_word))]
        om = rng.choice(omegas) if omegas else None
        out.append(element_from_word(datum, word, omega=om))
    return out
