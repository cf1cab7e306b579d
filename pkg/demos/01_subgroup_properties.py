# %% [markdown]
# # Embedding properties of subgroups
#
# A walk through the predicate layer on A4 and A5. Run with
# `python demos/01_subgroup_properties.py`.

# %%
from hyperembed.corpus import alternating
from hyperembed.embeddings import (
    h_permutable_mask,
    is_sigma_permutable,
    is_weakly_m_sigma_permutable,
    sigma_subnormal_mask,
    weakly_m_h_permutable_mask,
)
from hyperembed.lattice import all_subgroups, modular_mask
from hyperembed.sigma import SigmaPartition, complete_hall_sets

# %% [markdown]
# A partition `2,3|*` puts 2 and 3 together and every other prime in the
# complement block. For A4 the only complete Hall set is the group itself.

# %%
G = alternating(4)
sigma = SigmaPartition.parse("2,3|*")
halls = complete_hall_sets(G, sigma)
lat = all_subgroups(G)
print(len(halls), "complete Hall set(s);", len(lat), "subgroups")

# %%
hs = halls[0]
table = zip(lat, modular_mask(G), h_permutable_mask(G, hs), weakly_m_h_permutable_mask(G, hs, sigma))
for H, mod, hp, weak in table:
    gens = ", ".join(g.cycle_string() for g in H.generator_perms()) or "()"
    print(f"order {H.order:2d}  modular={mod!s:5}  H-perm={hp!s:5}  weak={weak!s:5}  <{gens}>")

# %% [markdown]
# Every subgroup permutes with A4, but the three subgroups of order 2 fail
# modularity. Now A5, where the same sigma has a richer Hall structure.

# %%
G = alternating(5)
lat = all_subgroups(G)
sub = [H.order for H, ok in zip(lat, sigma_subnormal_mask(G, sigma)) if ok]
print("sigma-subnormal orders:", sub)

C5 = next(H for H in lat if H.order == 5)
print("C5 sigma-permutable:", is_sigma_permutable(G, C5, sigma))
print("C5 weakly m-sigma-permutable:", is_weakly_m_sigma_permutable(G, C5, sigma))
