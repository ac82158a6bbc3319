"""Compare stated spectrum values with what the constructions actually give."""
# %%
from orthokit import spectrum_report, tagged_constructions
from orthokit.io import dump_report

for t in tagged_constructions():
    for r in t.results():
        verdict = "conforms" if r.verdict else "differs"
        print(f"{r.claim.name:28s} {verdict}")

# %% [markdown]
# A full report for one construction, as written by ``orthokit analyze``.

# %%
t = next(t for t in tagged_constructions() if t.name == "type2-assembly")
print(dump_report(spectrum_report(t.matrix, claims=t.claims)))
