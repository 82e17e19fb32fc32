# %% [markdown]
# # Foulkes configurations
#
# For each n, list the ordered pairs `[alpha, beta]`, `[gamma, delta]` with
# `s_alpha[s_beta] <= s_gamma[s_delta]`.  The q-version first groups the pairs
# by `e_{alpha'}[e_{beta'}]`, since only pairs in the same group can qualify.

# %%
from qfoulkes import configsearch as cs

# %%
for n in (6, 8):
    print(f"n={n}:", ", ".join(str(c) for c in cs.enumerate_foulkes_configs(n)))

# %%
counts = cs.table_counts(range(1, 13), q=True)
print("q-configurations per n:", counts)
for c in cs.enumerate_q_configs(12):
    print("  ", c)

# %% [markdown]
# A single Schur coefficient is one character sum, so a near miss at degree
# 30 can still be refuted without the full character table.

# %%
left, right = cs.parse_config("[2,933]:[3,622]")
lam, coeff = cs.negative_coefficient(*left, *right)
print(f"coefficient of s{lam} in s3[s622] - s2[s933]: {coeff}")
