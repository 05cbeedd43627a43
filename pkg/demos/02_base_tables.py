"""Check the printed SSQ_6 / BSQ_6 cycle tables and show which rows needed repair.

Every row is meant to be a cycle through 000000 of the stated length. Rows that
fail verification are replaced in the packaged asset by a cycle found with an
exhaustive search.
"""

from cubecycle.assets import check_printed_tables, load_assets
from cubecycle.embedding import bsq6_base_cycle, ssq6_base_cycle
from cubecycle.topology import Family

rows = check_printed_tables()
for family in Family:
    bad = [r for r in rows if r.family is family and not r.ok]
    total = sum(r.family is family for r in rows)
    print(f"{family.value}_6: {total - len(bad)} of {total} printed rows verify")
    for r in bad:
        print(f"  C_{r.length}: {', '.join(r.violations)}")

store = load_assets()
print("\nrepaired BSQ rows in the asset:", store.repaired_rows(Family.BSQ))
print("SSQ_6 C_3:", " ".join(ssq6_base_cycle(3).texts(6)))
print("BSQ_6 C_6:", " ".join(bsq6_base_cycle(6).texts(6)))
print("BSQ_6 C_48 starts:", " ".join(bsq6_base_cycle(48).texts(6)[:6]), "...")
