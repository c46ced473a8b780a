"""Reference data and cross-check suites.

The golden matrices below are written out literally, element by element, in
the computational basis {|00>, |01>, |02>, |10>, |11>, |12>} (and |s>, ...,
|-s> for the single qudit).  They serve as an oracle for the generic
entrywise evolution engine: the engine is required to reproduce them
exactly, never the other way around.

``run_validation`` bundles the golden-matrix, closed-form-equivalence and
Monte-Carlo-vs-analytic checks behind one pass/fail report for the CLI.
"""

from __future__ import annotations

import numpy as np

from .decoherence import (OhmicSpectralDensity, RtnParams, SqueezedBathParams,
                          rtn_dn, rtn_dn_montecarlo)
from .dynamics import (QUBIT_QUTRIT, CompositeRtnSqueezed, RtnCommon,
                       RtnIndependent, Scenario, SpinLayout, SqueezedVacuum,
                       bath_gamma, evolve, initial_mixed, initial_pure,
                       mixed_coherence_factor)
from .witnesses import (hss, hss_finite_difference, mid, mid_closed,
                        negativity, negativity_closed)


def _hermitize(upper: dict, diag: np.ndarray) -> np.ndarray:
    m = np.diag(diag.astype(complex))
    for (i, j), v in upper.items():
        m[i, j] = v
        m[j, i] = np.conj(v)
    return m


def golden_pure_squeezed(gamma: float, phi: float) -> np.ndarray:
    """Qubit-qutrit pure state under independent squeezed reservoirs."""
    e = np.exp
    ph = e(1j * phi)
    g = gamma
    upper = {
        (0, 1): ph * e(-g), (0, 2): ph * e(-4 * g), (0, 3): ph * e(-g),
        (0, 4): ph * e(-2 * g), (0, 5): ph * e(-5 * g),
        (1, 2): e(-g), (1, 3): e(-2 * g), (1, 4): e(-g), (1, 5): e(-2 * g),
        (2, 3): e(-5 * g), (2, 4): e(-2 * g), (2, 5): e(-g),
        (3, 4): e(-g), (3, 5): e(-4 * g),
        (4, 5): e(-g),
    }
    return _hermitize({k: v / 6.0 for k, v in upper.items()},
                      np.full(6, 1.0 / 6.0))


def golden_pure_rtn_independent(d1: float, d2: float, phi: float) -> np.ndarray:
    """Qubit-qutrit pure state under independent telegraph noise."""
    ph = np.exp(1j * phi)
    upper = {
        (0, 1): ph * d1, (0, 2): ph * d2, (0, 3): ph * d2,
        (0, 4): ph * d2 * d1, (0, 5): ph * d2 * d2,
        (1, 2): d1, (1, 3): d2 * d1, (1, 4): d2, (1, 5): d2 * d1,
        (2, 3): d2 * d2, (2, 4): d2 * d1, (2, 5): d2,
        (3, 4): d1, (3, 5): d2,
        (4, 5): d1,
    }
    return _hermitize({k: v / 6.0 for k, v in upper.items()},
                      np.full(6, 1.0 / 6.0))


def golden_pure_rtn_common(d1: float, d2: float, d3: float, d4: float,
                           phi: float) -> np.ndarray:
    """Qubit-qutrit pure state under a common telegraph source.

    The {|02>,|10>} coherence sees opposite windings of the shared phase and
    is decoherence free (factor 1); mixed-winding elements carry the average
    of the summed winding.
    """
    ph = np.exp(1j * phi)
    upper = {
        (0, 1): ph * d1, (0, 2): ph * d2, (0, 3): ph * d2,
        (0, 4): ph * d3, (0, 5): ph * d4,
        (1, 2): d1, (1, 3): d1, (1, 4): d2, (1, 5): d3,
        (2, 3): 1.0, (2, 4): d1, (2, 5): d2,
        (3, 4): d1, (3, 5): d2,
        (4, 5): d1,
    }
    return _hermitize({k: v / 6.0 for k, v in upper.items()},
                      np.full(6, 1.0 / 6.0))


def golden_pure_composite(d2: float, gamma: float, phi: float) -> np.ndarray:
    """Telegraph noise on the qubit, squeezed reservoir on the qutrit."""
    e = np.exp
    ph = e(1j * phi)
    g = gamma
    upper = {
        (0, 1): ph * e(-g), (0, 2): ph * e(-4 * g), (0, 3): ph * d2,
        (0, 4): ph * d2 * e(-g), (0, 5): ph * d2 * e(-4 * g),
        (1, 2): e(-g), (1, 3): d2 * e(-g), (1, 4): d2, (1, 5): d2 * e(-g),
        (2, 3): d2 * e(-4 * g), (2, 4): d2 * e(-g), (2, 5): d2,
        (3, 4): e(-g), (3, 5): e(-4 * g),
        (4, 5): e(-g),
    }
    return _hermitize({k: v / 6.0 for k, v in upper.items()},
                      np.full(6, 1.0 / 6.0))


def golden_mixed(p: float, F: float) -> np.ndarray:
    """Evolved one-parameter mixed state: both coherence blocks damped by F."""
    m = np.zeros((6, 6), dtype=complex)
    m[0, 0] = m[1, 1] = m[4, 4] = m[5, 5] = p / 2.0
    m[2, 2] = m[3, 3] = (1.0 - 2.0 * p) / 2.0
    m[0, 5] = m[5, 0] = p / 2.0 * F
    m[2, 3] = m[3, 2] = (1.0 - 2.0 * p) / 2.0 * F
    return m


def golden_mixed_common(p: float, F: float) -> np.ndarray:
    """Common telegraph source: {|02>,|10>} block frozen, F = D_4 on the other."""
    m = golden_mixed(p, 1.0)
    m[0, 5] = m[5, 0] = p / 2.0 * F
    m[2, 3] = m[3, 2] = (1.0 - 2.0 * p) / 2.0
    return m


def golden_mixed_partial_transpose(p: float, F: float) -> np.ndarray:
    """Partial transpose (w.r.t. the qubit) of ``golden_mixed``: the F blocks swap weights."""
    m = np.zeros((6, 6), dtype=complex)
    m[0, 0] = m[1, 1] = m[4, 4] = m[5, 5] = p / 2.0
    m[2, 2] = m[3, 3] = (1.0 - 2.0 * p) / 2.0
    m[0, 5] = m[5, 0] = (1.0 - 2.0 * p) / 2.0 * F
    m[2, 3] = m[3, 2] = p / 2.0 * F
    return m


# --- standard parameter sets ---------------------------------------------------

def figure_bath() -> SqueezedBathParams:
    """alpha = 0.1, super-Ohmic exponent 3, cutoff 20 omega_0, r = 0.3."""
    return SqueezedBathParams(
        spectral=OhmicSpectralDensity(alpha=0.1, s_ohmic=3.0, omega_c=20.0),
        r=0.3, theta=0.0)


def scenario_squeezed() -> Scenario:
    return Scenario(QUBIT_QUTRIT, SqueezedVacuum(figure_bath()))


def scenario_rtn(q: float, common: bool = False) -> Scenario:
    env_cls = RtnCommon if common else RtnIndependent
    return Scenario(QUBIT_QUTRIT, env_cls(RtnParams(nu=1.0, gamma_rate=q)))


def scenario_composite(q: float, nu_ratio: float = 100.0) -> Scenario:
    return Scenario(QUBIT_QUTRIT, CompositeRtnSqueezed(
        rtn=RtnParams(nu=1.0, gamma_rate=q), bath=figure_bath(),
        nu_ratio=nu_ratio))


def qudit_scenario(s: float) -> Scenario:
    return Scenario(SpinLayout((s,)), SqueezedVacuum(figure_bath()))


# --- check suites ----------------------------------------------------------------

def check_golden_matrices(n_times: int = 20, seed: int = 7,
                          tol: float = 1e-12) -> list[tuple[str, float]]:
    """Max entrywise deviation of evolve() from each golden table."""
    rng = np.random.default_rng(seed)
    phi = np.pi / 3.0
    results = []

    sq = scenario_squeezed()
    for tau in rng.uniform(0.05, 3.0, n_times):
        g = bath_gamma(sq, tau)
        got = evolve(sq, initial_pure(QUBIT_QUTRIT, phi), tau).base.matrix
        results.append(("pure-squeezed",
                        np.abs(got - golden_pure_squeezed(g, phi)).max()))
        got = evolve(sq, initial_mixed(0.3), tau).matrix
        results.append(("mixed-squeezed",
                        np.abs(got - golden_mixed(0.3, np.exp(-5 * g))).max()))

    q = 0.1
    ind = scenario_rtn(q)
    com = scenario_rtn(q, common=True)
    for tau in rng.uniform(0.05, 30.0, n_times):
        d = [rtn_dn(n, q, tau) for n in (1, 2, 3, 4)]
        got = evolve(ind, initial_pure(QUBIT_QUTRIT, phi), tau).base.matrix
        results.append(("pure-rtn-independent",
                        np.abs(got - golden_pure_rtn_independent(d[0], d[1], phi)).max()))
        got = evolve(ind, initial_mixed(0.3), tau).matrix
        results.append(("mixed-rtn-independent",
                        np.abs(got - golden_mixed(0.3, d[1] ** 2)).max()))
        got = evolve(com, initial_pure(QUBIT_QUTRIT, phi), tau).base.matrix
        results.append(("pure-rtn-common",
                        np.abs(got - golden_pure_rtn_common(*d, phi)).max()))
        got = evolve(com, initial_mixed(0.3), tau).matrix
        results.append(("mixed-rtn-common",
                        np.abs(got - golden_mixed_common(0.3, d[3])).max()))

    comp = scenario_composite(q)
    for tau in rng.uniform(0.05, 3.0, n_times):
        g = bath_gamma(comp, tau)
        d2 = rtn_dn(2, q, comp.environment.nu_ratio * tau)
        got = evolve(comp, initial_pure(QUBIT_QUTRIT, phi), tau).base.matrix
        results.append(("pure-composite",
                        np.abs(got - golden_pure_composite(d2, g, phi)).max()))
        got = evolve(comp, initial_mixed(0.3), tau).matrix
        results.append(("mixed-composite",
                        np.abs(got - golden_mixed(0.3, d2 * np.exp(-4 * g))).max()))

    worst: dict[str, float] = {}
    for name, dev in results:
        worst[name] = max(worst.get(name, 0.0), float(dev))
    return [(name, dev) for name, dev in worst.items()]


def check_closed_forms(p_values=(0.0, 0.1, 0.3, 0.4), n_times: int = 40,
                       ) -> list[tuple[str, float]]:
    """Generic negativity/MID vs closed forms, and HSS vs finite differences."""
    out = []
    cases = [
        ("squeezed", scenario_squeezed(), np.linspace(0.0, 3.0, n_times), "independent"),
        ("rtn-independent", scenario_rtn(0.1), np.linspace(0.0, 30.0, n_times), "independent"),
        ("rtn-common", scenario_rtn(0.1, common=True), np.linspace(0.0, 30.0, n_times), "common"),
        ("composite", scenario_composite(0.1), np.linspace(0.0, 3.0, n_times), "composite"),
    ]
    for name, scen, taus, topo in cases:
        dev_n = dev_m = dev_h = 0.0
        pure0 = initial_pure(QUBIT_QUTRIT, np.pi)
        for tau in taus:
            F = mixed_coherence_factor(scen, tau)
            for p in p_values:
                state = evolve(scen, initial_mixed(p), tau)
                dev_n = max(dev_n, abs(negativity(state)
                                       - negativity_closed(p, F, topo)))
                dev_m = max(dev_m, abs(mid(state) - mid_closed(p, F, topo)))
            fam = evolve(scen, pure0, tau)
            dev_h = max(dev_h, abs(hss(fam)
                                   - hss_finite_difference(scen, tau, np.pi)))
        out.append((f"negativity-closed/{name}", dev_n))
        out.append((f"mid-closed/{name}", dev_m))
        out.append((f"hss-fd/{name}", dev_h))
    return out


def check_montecarlo(trials: int = 100_000, seed: int = 11,
                     ) -> list[tuple[str, float, float]]:
    """(|mc - closed| in stderr units, absolute error) at sampled (n, q, tau)."""
    samples = [(n, q, tau)
               for n in (1, 2, 3, 4)
               for q, tau in ((0.1, 3.0), (1.0, 0.5), (10.0, 3.0))]
    out = []
    for n, q, tau in samples:
        mean, err = rtn_dn_montecarlo(n, q, tau, trials, seed)
        exact = rtn_dn(n, q, tau)
        sigmas = abs(mean - exact) / err if err > 0 else 0.0
        out.append((f"mc-dn(n={n},q={q},tau={tau})", sigmas, abs(mean - exact)))
    return out


def run_validation(trials: int = 100_000, seed: int = 11, stream=None) -> bool:
    """Run all cross-check suites, print one line per check, return overall pass."""
    import sys
    stream = stream or sys.stdout
    ok = True

    for name, dev in check_golden_matrices():
        passed = dev <= 1e-12
        ok &= passed
        stream.write(f"[{'PASS' if passed else 'FAIL'}] golden/{name}: "
                     f"max deviation {dev:.2e}\n")
    for name, dev in check_closed_forms():
        tol = 1e-6 if name.startswith("hss-fd") else 1e-10
        passed = dev <= tol
        ok &= passed
        stream.write(f"[{'PASS' if passed else 'FAIL'}] {name}: "
                     f"max deviation {dev:.2e}\n")
    for name, sigmas, err in check_montecarlo(trials=trials, seed=seed):
        passed = sigmas <= 3.0 and err <= 5e-3
        ok &= passed
        stream.write(f"[{'PASS' if passed else 'FAIL'}] {name}: "
                     f"{sigmas:.2f} sigma, |err| {err:.2e}\n")
    return ok
