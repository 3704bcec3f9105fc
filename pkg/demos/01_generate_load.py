"""Generate a synthetic datacenter demand trace and look at its anatomy.

The trace is built from a phase schedule (active / idle), a ramp between
phase power levels, two sinusoidal workload components, and white noise.
Run with:  python3 demos/01_generate_load.py
"""

import numpy as np

from hessim import analysis
from hessim.signals import LoadProfileSpec, delta_signal, generate_load

spec = LoadProfileSpec(schedule=(("active", 300.0), ("idle", 120.0)), seed=0)
trace = generate_load(spec)

print(f"samples: {len(trace.samples)} at dt = {trace.dt} s "
      f"({trace.time[-1]:.0f} s total)")
print(f"power range: {trace.samples.min():.1f} .. "
      f"{trace.samples.max():.1f} MW")

# deviation from the nominal supply point
delta = delta_signal(trace, spec.peak_power)
print(f"peak deviation from {spec.peak_power:.0f} MW supply: "
      f"{np.abs(delta.samples).max():.1f} MW")

# the two workload sinusoids show up as spectral peaks
active = delta.samples[trace.time < 300.0]
psd = analysis.psd_welch(active - active.mean(), spec.sample_interval,
                         segment_length=8192)
top = psd.freqs[np.argsort(psd.density)[::-1][:6]]
bins = sorted({round(float(f), 2) for f in top})[:4]
print(f"strongest spectral bins near: {bins} Hz "
      f"(configured {spec.dominant_freq} and {spec.sub_freq} Hz)")
