"""How the two controllers divide the spectrum between the devices.

The command split sends content above the 0.2 Hz cutoff to the
supercapacitor and the rest to the battery; the open-loop frequency
responses show each controller reinforcing its own band.
Run with:  python3 demos/03_frequency_shaping.py
"""

import numpy as np

from hessim import engine, run_simulation
from hessim.analysis import band_energy_fraction, bode_eval, psd_welch
from hessim.control import (EssControllerParams, ScControllerParams,
                            tf_ess_open_loop, tf_sc_open_loop)

# open-loop gain at three representative frequencies
freqs = np.array([0.01, 0.05, 0.2, 1.0])
sc = bode_eval(tf_sc_open_loop(ScControllerParams()), freqs)
ess = bode_eval(tf_ess_open_loop(EssControllerParams()), freqs)
ess_plain = bode_eval(tf_ess_open_loop(EssControllerParams(), include_rc=False),
                      freqs)

print(f"{'freq [Hz]':>10s} {'supercap [dB]':>14s} {'battery [dB]':>13s} "
      f"{'battery, no resonant comp':>26s}")
for i, f in enumerate(freqs):
    print(f"{f:10.2f} {sc.magnitude_db[i]:14.1f} {ess.magnitude_db[i]:13.1f} "
          f"{ess_plain.magnitude_db[i]:26.1f}")
print("note the battery-loop bump at 0.05 Hz from the resonant compensator\n")

# command spectra from a run with broadband workload noise, where the
# split has something to separate
run = run_simulation(engine.load_config("configs/bandsep.ini"))
sl = slice(2000, None)
for name, cmd in (("battery", run.p_ess_ref), ("supercap", run.p_sc_ref)):
    x = cmd[sl] - cmd[sl].mean()
    psd = psd_welch(x, run.dt, segment_length=8192)
    below, above = band_energy_fraction(psd, 0.2)
    print(f"{name:8s} command energy: {below:6.1%} below 0.2 Hz, "
          f"{above:6.1%} above")
