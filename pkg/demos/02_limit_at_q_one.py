# %% [markdown]
# # The limit q -> 1
#
# At q = 1 the divided differences fall into the subring generated by
# `h1, h2, e2`.  Limits are exact: divide by `1 - q`, then substitute.

# %%
from qfoulkes.qone import f_q1, f_q1_closed, theta_recurrence_check
from qfoulkes.subring import canonical_form, format_form, in_natural_span

# %%
for a, b in [(2, 3), (2, 4), (3, 4), (3, 5)]:
    value = f_q1(a, b)
    print(f"F_{{{a},{b}}}(x;1) = {format_form(canonical_form(value))}")
    print("   closed form agrees:", value == f_q1_closed(a, b), "  in N[h1,h2,e2]:", in_natural_span(value))

# %% [markdown]
# `Theta_a(b)` measures how `F_{a,b+1}(1)` differs from `h1^a F_{a,b}(1)`.
# The report compares the extracted values with several recurrence readings.

# %%
for row in theta_recurrence_check(2, 6).rows:
    print(f"b={row.b}: {row.direct}")
    seeded = "seed" if row.seeded_agrees is None else row.seeded_agrees
    print(f"   extracted-seed recurrence: {seeded}, shifted bridge: {row.shifted_bridge_agrees}")
