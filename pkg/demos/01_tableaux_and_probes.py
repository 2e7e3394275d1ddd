"""Tableaux of a two-column shape, the T-bar and T* fillings, and the probe set.

Run with ``python demos/01_tableaux_and_probes.py``.
"""

# %%
from springer2col import (
    enumerate_row_standard,
    enumerate_standard,
    make_shape,
    parse_tableau,
    t_bar,
    t_star,
    x_set,
)

shape = make_shape(4, 2)
print(f"shape {shape}: n = {shape.n}, row lengths {shape.row_lengths}")

# %% Standard tableaux index the components; row-standard ones index fixed flags.
standard = enumerate_standard(shape)
print(f"{len(standard)} standard tableaux, {len(enumerate_row_standard(shape))} row-standard")
for t in standard:
    print("  ", t.literal())

# %% T-bar fills the columns in order; T* renumbers the first column of T.
print("T-bar:", t_bar(shape).literal())
t = parse_tableau(shape, "1,3;2,5;4;6")
print("T:    ", t.literal())
print("T*:   ", t_star(t).literal())

# %% The probes are the single switches (i, j) of T-bar with i <= r and j < i + r.
for probe in x_set(shape):
    print(f"  switch {probe.i}<->{probe.j}: {probe.tableau.literal()}")
