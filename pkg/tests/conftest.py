import numpy as np
import pytest

from hsswitness.validation import (qudit_scenario, scenario_composite,
                                   scenario_rtn, scenario_squeezed)


@pytest.fixture(scope="session")
def rng():
    return np.random.default_rng(1234)


@pytest.fixture(scope="session")
def random_density_matrices(rng):
    """A batch of random 6x6 qubit-qutrit density matrices."""
    from hsswitness.hilbert import DensityMatrix
    out = []
    for _ in range(12):
        a = rng.normal(size=(6, 6)) + 1j * rng.normal(size=(6, 6))
        m = a @ a.conj().T
        out.append(DensityMatrix(m / m.trace(), (2, 3)))
    return out


@pytest.fixture(scope="session")
def all_qubit_qutrit_scenarios():
    return {
        "squeezed": scenario_squeezed(),
        "rtn-independent": scenario_rtn(0.1),
        "rtn-common": scenario_rtn(0.1, common=True),
        "composite": scenario_composite(0.1),
    }


@pytest.fixture(scope="session")
def qudit_half():
    return qudit_scenario(0.5)
