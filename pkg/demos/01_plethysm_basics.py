# %% [markdown]
# # Plethysm and its q-analog
#
# Symmetric functions live in the power-sum basis with q-polynomial
# coefficients.  Plethysm acts on power sums by `p_k[p_j] = p_{kj}` and
# `p_k[q] = q^k`; Schur expansions come from the character table.

# %%
from qfoulkes import f_classic, f_q, h_gen, hl_h, plethysm, to_schur
from qfoulkes.foulkes import dim_Fq_at1, dim_Fq_closed

# %%
# the smallest Foulkes difference is a single Schur function
print("h3[h2] - h2[h3] =", to_schur(plethysm(h_gen(3), h_gen(2)) - plethysm(h_gen(2), h_gen(3))))
print("f_{2,4} =", f_classic(2, 4))

# %% [markdown]
# Replacing `h_n` by the Hall-Littlewood `H_n(x; q)` and dividing by `1 - q`
# gives a q-analog.  Every coefficient below is a polynomial in q with
# nonnegative integer coefficients.

# %%
print("H_3 =", to_schur(hl_h(3)))
F = f_q(2, 3)
print("F_{2,3}(x;q) =", F)
print("Schur positive:", F.is_positive())
print("F_{2,3}(x;0) == f_{2,3}:", F.at_q(0) == f_classic(2, 3))

# %% [markdown]
# The graded dimension has a closed form; at q = 1 it is 360 for (2, 3).

# %%
print("dim F_{2,3} =", dim_Fq_closed(2, 3))
print("at q = 1:", dim_Fq_at1(2, 3))
