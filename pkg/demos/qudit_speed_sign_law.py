"""Single-qudit Hilbert-Schmidt speed tracks the damping rate sign.

For one spin-s system dephasing in a squeezed reservoir the HSS has a closed
form, and its time derivative chi satisfies sign(chi) = sign(-dgamma/dt) for
every s.  So chi > 0, i.e. information backflow, happens exactly while the
decoherence exponent gamma(t) is decreasing, independent of the dimension.

Run:  python3 demos/qudit_speed_sign_law.py
"""

import numpy as np

from hsswitness import (OhmicSpectralDensity, Scenario, SpinLayout,
                        SqueezedBathParams, SqueezedVacuum, bath_gamma,
                        chi_qudit_closed, evolve, hss, initial_pure)

bath = SqueezedBathParams(
    spectral=OhmicSpectralDensity(alpha=0.1, s_ohmic=3.0, omega_c=20.0),
    r=0.3, theta=0.0)

for s in (0.5, 1.0, 1.5, 3.0):
    scenario = Scenario(SpinLayout((s,)), SqueezedVacuum(bath))
    taus = np.linspace(0.05, 3.0, 120)
    ok = True
    for tau in taus:
        h = 1e-5
        dg = (bath_gamma(scenario, tau + h)
              - bath_gamma(scenario, tau - h)) / (2 * h)
        if abs(dg) < 1e-8:
            continue
        chi = chi_qudit_closed(s, bath_gamma(scenario, tau), dg)
        ok &= np.sign(chi) == np.sign(-dg)
    fam = evolve(scenario, initial_pure(scenario.layout, 0.0), 1.0)
    print(f"s = {s:>3}: dim {int(2 * s + 1)}, HSS(tau=1) = {hss(fam):.6f}, "
          f"sign law holds: {bool(ok)}")
