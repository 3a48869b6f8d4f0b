"""
Integer coarsening and why the smoother avoids it
=================================================

The crudest pass connects every second vertex (factor 2): quick, but it
halves the curve, and odd segment counts lose their tail.  A chain of 7
segments collapses 7 -> 3 -> 1, discarding data at both passes.  The
smoother instead uses the smallest factor n / (n - 1) at every pass,
which keeps n / factor an integer so nothing is ever cut off.
"""

import numpy as np

from rgsmooth import (
    Polyline,
    build_chain,
    optimal_scaling,
    reconstruct,
    rescale_fractional,
    rescale_integer,
)

rng = np.random.default_rng(3)
chain = build_chain(Polyline(rng.normal(size=(8, 2))))
print(f"start: {chain.n_segments} segments, endpoint {reconstruct(chain).points[-1]}")

c = chain
while c.n_segments >= 2:
    c = rescale_integer(c, 2)
    lost = "" if c.n_segments * 2 == chain.n_segments else "  (tail lost)"
    print(f"factor 2 pass -> {c.n_segments} segments, "
          f"endpoint {reconstruct(c).points[-1]}{lost}")

print()
c = chain
while c.n_segments >= 2:
    f = optimal_scaling(c.n_segments)
    c = rescale_fractional(c, f)
    print(f"factor {f} pass -> {c.n_segments} segments, "
          f"endpoint {reconstruct(c).points[-1]}")
print("the fractional schedule keeps the endpoint fixed at every pass")

# At factor exactly 2 both routes agree bit for bit.
a = rescale_integer(chain, 2).tangents
b = rescale_fractional(chain, 2).tangents
print("\ninteger and fractional factor-2 passes identical:", a.tobytes() == b.tobytes())

# Factors above 2 are available for experimentation.
print("factor 3 on 7 segments leaves", rescale_integer(chain, 3).n_segments)
