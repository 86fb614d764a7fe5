"""
Census of all abelian groups up to order 128
============================================

Runs both decision routes over every group and a standard set of class rows,
writes the records as JSON Lines, and tabulates the capable groups.
"""

import collections
import sys
import tempfile
from pathlib import Path

from polynil.cli import DEFAULT_CENSUS_ROWS, run_census, write_census

bound = int(sys.argv[1]) if len(sys.argv) > 1 else 128
records = run_census(bound, DEFAULT_CENSUS_ROWS)

out = Path(tempfile.gettempdir()) / f"polynil_census_{bound}.jsonl"
write_census(records, out)
print(f"{len(records)} records written to {out}")

capable = collections.defaultdict(list)
for rec in records:
    if rec["closed_form"]["capable"]:
        capable[tuple(rec["variety"])].append(tuple(rec["group"]["torsion"]))
print("disagreements:", sum(not rec["agree"] for rec in records))
for row, groups in capable.items():
    print(f"row {row}: {len(groups)} capable, e.g. {groups[1:6]}")
