"""The combinatorial counts next to exact rational linear algebra.

Run with ``python demos/04_linear_algebra_oracle.py``.
"""

# %%
from springer2col import make_shape, parse_tableau, t_star
from springer2col.criterion import (
    centralizer_dim_formula,
    flag_stabilizer_dim_combinatorial,
    s_table_of_component,
    s_table_of_rowstandard,
)
from springer2col.oracle import (
    centralizer_dim_oracle,
    flag_of_tableau,
    flag_stabilizer_dim_oracle,
    nilpotent_map,
    random_centralizer_element,
    rank_table,
)

shape = make_shape(4, 2)
u = nilpotent_map(shape)
print("u in the Jordan basis:")
for row in u.matrix.to_rows():
    print("  ", " ".join(str(int(x)) for x in row))

# %% Rank of u on each quotient V_j / V_i equals the window count of the tableau.
tp = parse_tableau(shape, "2,3;4,5;1;6")
ranks = rank_table(flag_of_tableau(tp), u)
counts = dict(s_table_of_rowstandard(tp).items())
print(f"{tp.literal()}: {len(ranks)} windows, all equal: {ranks == counts}")

# %% Centralizer and stabilizer dimensions.
print(f"centralizer: oracle {centralizer_dim_oracle(u)}, formula {centralizer_dim_formula(shape)}")
t = parse_tableau(shape, "1,3;2,5;4;6")
star = t_star(t)
print(f"stabilizer of T*: oracle {flag_stabilizer_dim_oracle(u, star)}, count {flag_stabilizer_dim_combinatorial(star)}")

# %% A random centralizer element moves the T* flag to a generic point of the component.
g = random_centralizer_element(u, seed=1)
moved = flag_of_tableau(star).translate(g)
print("generic ranks match the component table:", rank_table(moved, u) == dict(s_table_of_component(t).items()))
