"""
classes_to_csv.py: runs a classification scan and writes one csv row per pattern, for diffing scans at different weights.
"""
import argparse
from pathlib import Path

import pandas as pd
import pyrootutils

pyrootutils.setup_root(__file__, indicator=".project-root", pythonpath=True)

from src.equiv import classify  # noqa: E402
from src.words import Word  # noqa: E402


def classes_frame(max_factor_weight, max_word_weight, n_jobs=-1):
    report = classify(max_factor_weight, max_word_weight, jobs=n_jobs)
    rows = []
    for index, cls in enumerate(report.classes):
        for member in cls["members"]:
            u = Word.parse(member)
            rows.append(
                {
                    "pattern": member,
                    "length": len(u),
                    "weight": u.weight,
                    "class": index,
                    "class_size": len(cls["members"]),
                    "wilf_hash": cls["wilf_hash"],
                    "strong_hash": cls["strong_hash"],
                }
            )
    return pd.DataFrame(rows), report


def main(args):
    output_file = Path(args.output_file)
    output_file.parent.mkdir(parents=True, exist_ok=True)

    frame, report = classes_frame(args.max_factor_weight, args.max_word_weight, n_jobs=args.n_jobs)
    frame.to_csv(output_file, index=False)

    # exit non-zero when the scan flagged anything
    if not report.clean:
        raise SystemExit(1)


if __name__ == "__main__":
    parser = argparse.ArgumentParser(description="Write the pattern classes of a scan to csv")
    parser.add_argument("max_factor_weight", type=int, help="Largest pattern weight in the population")
    parser.add_argument("max_word_weight", type=int, help="Truncation weight of the series")
    parser.add_argument("output_file", help="Path to the output csv")
    parser.add_argument("-j", "--n_jobs", type=int, default=-1,
                        help="Number of parallel jobs (default: -1, use all available processors)")

    args = parser.parse_args()
    main(args)
