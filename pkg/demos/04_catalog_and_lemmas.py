# %% [markdown]
# # Custom catalogs and the lemma suite
#
# Groups can come from a catalog file: `name; degree; generators; order`
# with an optional fifth field of tags.

# %%
import tempfile
from pathlib import Path

from hyperembed.corpus import load_catalog
from hyperembed.harness import lemma_suite
from hyperembed.sigma import partitions_of

text = """\
# two small groups
S3; 3; (0 1 2), (0 1); 6
Q8; 8; (0 1 2 3)(4 5 6 7), (0 4 2 6)(1 7 3 5); 8; quaternion
"""
path = Path(tempfile.mkdtemp()) / "small.cat"
path.write_text(text)
catalog = load_catalog(path)
for entry, G in catalog:
    print(entry.name, G.order, entry.tags)

# %% [markdown]
# Run every lemma instance on each group under every partition of its
# prime divisors.

# %%
for entry, G in catalog:
    for sigma in partitions_of(G.order):
        report = lemma_suite(G, sigma)
        print(entry.name, sigma, report.counts)
