"""Write the compose table and Green's relation matrices of gamma/delta as TSV and JSON.

    python3 scripts/export_tables.py --bound 6 --dir tables/
"""

import argparse
import contextlib
import io
import os

from bicyclic_ext.cli import main as cli


def export(bound, directory):
    os.makedirs(directory, exist_ok=True)
    written = []
    for kind in ("compose", "green"):
        for fmt in ("tsv", "json"):
            buf = io.StringIO()
            with contextlib.redirect_stdout(buf):
                cli(["table", kind, "--bound", str(bound), "--format", fmt])
            path = os.path.join(directory, f"{kind}_{bound}.{fmt}")
            with open(path, "w") as fh:
                fh.write(buf.getvalue())
            written.append(path)
    return written


if __name__ == "__main__":
    ap = argparse.ArgumentParser()
    ap.add_argument("--bound", type=int, default=4)
    ap.add_argument("--dir", default="tables")
    args = ap.parse_args()
    for path in export(args.bound, args.dir):
        print(path)
