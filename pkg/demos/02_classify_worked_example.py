"""Singularity test on one component, with the tangent space count behind it.

Run with ``python demos/02_classify_worked_example.py``.
"""

# %%
from springer2col import classify, make_shape, parse_tableau, tangent_dimension, x_set
from springer2col.criterion import s_table_of_component, s_table_of_rowstandard

shape = make_shape(4, 2)
t = parse_tableau(shape, "1,3;2,5;4;6")
report = classify(t)

print(f"component of {t.literal()}")
print(f"  member probes  {report.fixed_point_count}")
print(f"  threshold      {report.threshold}  (r(r-1)/2)")
print(f"  verdict        {'singular' if report.singular else 'nonsingular'}")

# %% Which probe fails, and where its window count overshoots.
for pair, verdict in report.probe_verdicts.items():
    if verdict.member:
        continue
    i, j = verdict.witness
    probe = next(p.tableau for p in x_set(shape) if (p.i, p.j) == pair)
    have = s_table_of_rowstandard(probe)[i, j]
    bound = s_table_of_component(t)[i, j]
    print(f"  probe {pair} = {probe.literal()} fails at window {(i, j)}: {have} > {bound}")

# %% The tangent space at the T-bar flag is larger than the component.
tan = tangent_dimension(t, report)
n = shape.n
print(f"tangent dim {tan.dim} vs component dim {report.component_dim}")
print(f"{tan.dim} tangent directions + {len(tan.orthogonal_relations)} relations = {n * (n - 1) // 2} chart coordinates")
for rel in tan.orthogonal_relations:
    rhs = f"x{rel.partner}" if rel.partner else "0"
    print(f"  x{rel.pair} = {rhs}   [{rel.reason}]")
