"""Write the invariant table for n = 4..100 as markdown, csv and json."""

import sys
from pathlib import Path

from zappatic.invariants import emit_table

out = Path(sys.argv[1] if len(sys.argv) > 1 else "tables")
out.mkdir(parents=True, exist_ok=True)
for fmt in ("md", "csv", "json"):
    (out / f"invariants.{fmt}").write_text(emit_table(range(4, 101), fmt))
print(f"wrote {out}/invariants.{{md,csv,json}}")
