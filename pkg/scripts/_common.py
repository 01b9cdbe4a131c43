"""Small helpers shared by the experiment scripts."""

import csv
import os


def write_rows(path, header, rows):
    os.makedirs(os.path.dirname(path) or ".", exist_ok=True)
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(header)
        for row in rows:
            writer.writerow([f"{v:.16e}" if isinstance(v, float) else v for v in row])
    print(f"wrote {path} ({len(rows)} rows)")
