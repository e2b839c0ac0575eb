#!/usr/bin/env python3
"""Write a seeded synthetic survey fixture plus its mapping file.

Usage: python3 scripts/make_fixture.py OUT_DIR [--rows N] [--seed S]
                 [--malformed-rate R]
"""

import argparse
import shutil
from pathlib import Path

from attache.fixtures import DEFAULT_SEED, generate_survey_csv

PACKAGE_DATA = Path(__file__).resolve().parent.parent / "src" / "attache" / "data"


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("out_dir", type=Path)
    parser.add_argument("--rows", type=int, default=1000)
    parser.add_argument("--seed", type=int, default=DEFAULT_SEED)
    parser.add_argument("--malformed-rate", type=float, default=0.0)
    args = parser.parse_args()

    args.out_dir.mkdir(parents=True, exist_ok=True)
    survey = args.out_dir / "survey.csv"
    survey.write_text(
        generate_survey_csv(
            n_rows=args.rows, seed=args.seed, malformed_rate=args.malformed_rate
        )
    )
    shutil.copy(PACKAGE_DATA / "mapping_fixture.json", args.out_dir / "mapping.json")
    shutil.copy(PACKAGE_DATA / "registry.csv", args.out_dir / "registry.csv")
    print(f"wrote {survey} ({args.rows} rows), mapping.json, registry.csv")
    print(
        "serve with: attache serve "
        f"--data {survey} --mapping {args.out_dir}/mapping.json "
        f"--registry {args.out_dir}/registry.csv"
    )


if __name__ == "__main__":
    main()
