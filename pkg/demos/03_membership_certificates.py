"""Deciding whether a fixed flag lies on a component, with evidence either way.

Run with ``python demos/03_membership_certificates.py``.
"""

# %%
from springer2col import chain_to_tbar, is_member, make_shape, membership_chain, parse_tableau, t_bar
from springer2col.certificates import validate_certificate

shape = make_shape(4, 2)
t = parse_tableau(shape, "1,3;2,5;4;6")

# %% T-bar is on every component. The certificate walks from it to the column content of t.
cert = membership_chain(t, t_bar(shape))
print(f"T-bar on the component of {t.literal()}: {is_member(t, t_bar(shape)).member}")
for step in cert.steps:
    print(f"  {step.kind}: switch {step.switched}  {step.source.literal()} -> {step.target.literal()}")
print("  certificate problems:", validate_certificate(cert, t) or "none")

# %% A non-member comes with a witness window instead.
probe = parse_tableau(shape, "1,2;5,6;3;4")
verdict = is_member(t, probe)
print(f"{probe.literal()}: member={verdict.member}, witness window {verdict.witness}")

# %% Any fixed flag degenerates to the T-bar flag in at most n steps.
start = parse_tableau(shape, "2,3;4,5;1;6")
down = chain_to_tbar(start)
print(f"{start.literal()} reaches T-bar in {len(down)} steps")
for step in down.steps:
    extra = f" and {step.companion}" if step.companion else ""
    print(f"  fix entry {step.pivot['i']}: swap {step.switched}{extra} -> {step.target.literal()}")
