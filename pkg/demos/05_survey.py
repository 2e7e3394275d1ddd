"""How many components are singular, shape by shape.

Run with ``python demos/05_survey.py [max_n]``.
"""

# %%
import sys

from springer2col.cli import survey
from springer2col.tableaux import shapes_up_to

max_n = int(sys.argv[1]) if len(sys.argv) > 1 else 8

print(f"{'shape':>6} {'standard':>9} {'singular':>9}")
for row in survey(shapes_up_to(max_n), jobs=1):
    print(f"{row.r},{row.s:<4} {row.standard_count:>9} {row.singular_count:>9}")

# %% Hook shapes (s <= 1) never have singular components; the first singular ones appear at (4,2).
