"""Run every verification suite at its acceptance parameters and write the reports.

    python3 scripts/run_suites.py [--out reports.json] [--only assoc thm2.9]
"""

import argparse
import json
import sys
from dataclasses import asdict, dataclass, field

from bicyclic_ext.verify import SUITES


@dataclass
class RunConfig:
    # parameters per suite; suites missing here run with their own defaults
    params: dict = field(default_factory=lambda: {
        "assoc": {"window": 6},
        "prop2.6": {"k_max": 10, "window": 20},
        "thm2.8": {"entry_bound": 8, "window": 8, "collision_window": 12},
        "thm2.9": {"k_max": 30},
        "intro": {"k_max": 15},
        "thm2.11": {"k_max": 12},
        "prop2.10": {"k_max": 20},
        "idempotents": {"k_max": 30},
        "lemmas": {"window": 10, "k_max": 10},
        "order": {"window": 8, "k_max": 6},
    })
    only: list = field(default_factory=list)
    out: str = ""


def run(config):
    reports = []
    for name, (suite, _flags) in SUITES.items():
        if config.only and name not in config.only:
            continue
        report = suite(**config.params.get(name, {}))
        print(report.to_text(), flush=True)
        reports.append(report)
    return reports


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", default="")
    ap.add_argument("--only", nargs="*", default=[], choices=list(SUITES))
    args = ap.parse_args(argv)
    config = RunConfig(only=args.only, out=args.out)
    reports = run(config)
    if config.out:
        with open(config.out, "w") as fh:
            json.dump({"config": asdict(config), "reports": [r.to_dict() for r in reports]}, fh, indent=2)
    return 0 if all(r.passed for r in reports) else 1


if __name__ == "__main__":
    sys.exit(main())
