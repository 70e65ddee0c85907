#!/usr/bin/env python3
"""Plot the vacuum-seeded family f_g(x; lambda) from CLI output.

Usage:
    thermodarboux family --seed vacuum --grid -10:10:401 --lambda 1.5,2,4,10 --include-seed > kink.csv
    python docs/examples/plot_kink.py kink.csv --output kink.png

Needs the optional plot extra: pip install thermodarboux[plot]
"""

import argparse
import csv
import logging
from collections import defaultdict
from typing import Dict, List, Tuple

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

logger = logging.getLogger(__name__)


def read_family_csv(path: str) -> Dict[str, Tuple[List[float], List[float]]]:
    """Group the (x, f_g) columns of a family table by lambda; singular rows are skipped."""
    series: Dict[str, Tuple[List[float], List[float]]] = defaultdict(lambda: ([], []))
    with open(path, newline="") as f:
        for row in csv.DictReader(f):
            if row["f_g"] == "singular":
                continue
            xs, ys = series[row["lambda"]]
            xs.append(float(row["x"]))
            ys.append(float(row["f_g"]))
    return dict(series)


def main():
    parser = argparse.ArgumentParser(description="Plot f_g(x; lambda) from a family CSV")
    parser.add_argument("csv_path", help="Output of 'thermodarboux family'")
    parser.add_argument("--output", default="kink.png", help="Image file (default: kink.png)")
    args = parser.parse_args()

    logging.basicConfig(level=logging.INFO, format="%(levelname)s %(message)s")
    series = read_family_csv(args.csv_path)

    fig, ax = plt.subplots(figsize=(7, 4))
    for lam, (xs, ys) in series.items():
        ax.plot(xs, ys, label=f"lambda = {lam}")
    ax.axhline(0.0, color="grey", linewidth=0.5)
    ax.set_xlabel("x = omega / T")
    ax.set_ylabel("f_g(x; lambda)")
    ax.legend()
    fig.tight_layout()
    fig.savefig(args.output, dpi=150)
    logger.info(f"Wrote {args.output} ({len(series)} series)")


if __name__ == "__main__":
    main()
