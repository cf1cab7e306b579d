# %% [markdown]
# # The three worked examples
#
# `reproduce_examples` bundles the checks; this script unpacks the
# order 1680 construction by hand.

# %%
from hyperembed.corpus import build_example_132
from hyperembed.embeddings import is_H_permutable
from hyperembed.harness import reproduce_examples

for result in reproduce_examples():
    print("PASS" if result.passed else "FAIL", result.name, f"{result.seconds:.2f}s")

# %% [markdown]
# Parameters (p, q, r, t) = (5, 2, 7, 3): Q is elementary abelian of order
# q^d acted on by C5, and C7:C3 sits beside it.

# %%
ex = build_example_132(5, 2, 7, 3)
G = ex.group
print("order", G.order, "with d =", ex.d)
print("sigma:", ex.sigma)
print("Hall set orders:", [M.order for M in ex.hall_set.members])

# %%
print("B is H-permutable:", is_H_permutable(G, ex.B, ex.hall_set))
print("A x B is H-permutable:", is_H_permutable(G, ex.H, ex.hall_set))
