import pytest

from bandbricks import catalog


@pytest.fixture(scope="session")
def load():
    cache = {}

    def get(name):
        if name not in cache:
            cache[name] = catalog.load(name)
        return cache[name]

    return get


EX41 = "b e c d^-1 e a^-1"
EX74 = "b a1^-1 a2 a3^-1 b^-1 c3 c2^-1 c1 b a1^-1 a2 a3^-1 b^-1 c1^-1 c2 c3^-1"
