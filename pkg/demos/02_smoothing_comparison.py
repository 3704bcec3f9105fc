"""Run the closed loop with and without the hybrid storage system.

Both runs share the same demand trace, so every difference in the grid
power and frequency comes from the storage response.
Run with:  python3 demos/02_smoothing_comparison.py
"""

import numpy as np

from hessim import SimConfig, run_comparison
from hessim.analysis import compute_metrics

config = SimConfig(duration=600.0)
with_hess, without_hess = run_comparison(config)

m_on = compute_metrics(with_hess)
m_off = compute_metrics(without_hess)

print(f"{'metric':28s} {'with HESS':>12s} {'without':>12s} {'ratio':>8s}")
rows = [
    ("grid power std [MW]", m_on.grid_power_std, m_off.grid_power_std),
    ("freq deviation rms [Hz]", m_on.freq_dev_rms, m_off.freq_dev_rms),
    ("freq deviation max [Hz]", m_on.freq_dev_max, m_off.freq_dev_max),
]
for name, on, off in rows:
    print(f"{name:28s} {on:12.4f} {off:12.4f} {on / off:7.1%}")

print()
print(f"battery  power range: {with_hess.p_ess.min():+6.2f} .. "
      f"{with_hess.p_ess.max():+6.2f} MW")
print(f"supercap power range: {with_hess.p_sc.min():+6.2f} .. "
      f"{with_hess.p_sc.max():+6.2f} MW")
print(f"battery  SoC swing: {np.ptp(with_hess.soc_ess):.2e} of range")
print(f"supercap SoC swing: {np.ptp(with_hess.soc_sc):.2e} of range")
