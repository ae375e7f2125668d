import pytest

from effectalg import concrete, core


@pytest.fixture(scope="session")
def c3():
    # three-element chain 0 < a < 1 with a + a = 1
    return core.validate(core.SumTable.from_entries(3, 2, [(1, 1, 2)]))


@pytest.fixture(scope="session")
def two_chain():
    return core.validate(core.SumTable.from_entries(2, 1, []))


@pytest.fixture(scope="session")
def even4_system():
    return concrete.even_subsets(4)


@pytest.fixture(scope="session")
def even4(even4_system):
    # element ids: 0:{} 1:{a,b} 2:{a,c} 3:{b,c} 4:{a,d} 5:{b,d} 6:{c,d} 7:X
    return concrete.to_algebra(even4_system)


@pytest.fixture(scope="session")
def even6_system():
    return concrete.even_subsets(6)


@pytest.fixture(scope="session")
def even6(even6_system):
    return concrete.to_algebra(even6_system)


@pytest.fixture(scope="session")
def powerset3():
    return concrete.to_algebra(concrete.powerset(3))


@pytest.fixture(scope="session")
def point_states4(even4_system):
    return [concrete.point_state(even4_system, x) for x in range(4)]
