# %% [markdown]
# # Exhaustive sweeps
#
# Each target is checked on every (sigma, normal subgroup) pair of every
# group in the corpus. Small bound here so the script runs in seconds;
# the acceptance suite uses order 100.

# %%
from hyperembed.corpus import default_corpus
from hyperembed.harness import TARGETS, sweep

corpus = default_corpus(30)
print(len(corpus), "groups")

# %%
for target in TARGETS:
    report = sweep(corpus, target)
    print(f"{target:10s} {report.counts}  non-vacuous holds={report.non_vacuous_holds}")

# %% [markdown]
# Reports serialise to deterministic JSON, so two runs can be diffed.

# %%
report = sweep(corpus, "prop31")
text = report.to_json()
print(text[:300])
assert sweep(corpus, "prop31").to_json() == text

# %% [markdown]
# The verdict table for one group.

# %%
sub = sweep([(n, G) for n, G in corpus if n == "A4"], "prop31")
print(sub.to_text())
