#!/usr/bin/env python3
"""Regenerate the comparison CSVs and threshold reports into out/.

Produces the inputs the figure scripts consume:
  out/fig1.csv        symmetric comparison, p in [0, 0.026]
  out/fig2_left.csv   asymmetric comparison at kappa = 4
  out/fig2_right.csv  asymmetric comparison at kappa = 20 (small-p window)
  out/thresholds.json one effectiveness-threshold report per code
"""

import io
import json
import pathlib
import sys
from contextlib import redirect_stdout

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parents[1] / "src"))

from weylcodes.cli import execute  # noqa: E402

OUT = pathlib.Path(__file__).resolve().parents[1] / "out"


def capture(argv: list[str]) -> str:
    buffer = io.StringIO()
    with redirect_stdout(buffer):
        status = execute(argv)
    if status != 0:
        raise SystemExit(f"command failed ({status}): {argv}")
    return buffer.getvalue()


def main() -> None:
    OUT.mkdir(exist_ok=True)
    sweeps = {
        "fig1.csv": ["compare", "--codes", "d50,d18,five,seven", "--p", "0:0.026:0.0005"],
        "fig2_left.csv": [
            "compare", "--codes", "d50,d18,five,seven", "--p", "0:0.026:0.0005",
            "--channel", "asymmetric", "--kappa", "4",
        ],
        "fig2_right.csv": [
            "compare", "--codes", "d50,d18,five,seven", "--p", "0:0.0012:0.00002",
            "--channel", "asymmetric", "--kappa", "20",
        ],
    }
    for filename, argv in sweeps.items():
        (OUT / filename).write_text(capture(argv))
        print(f"wrote out/{filename}")

    reports = [json.loads(capture(["threshold", "--code", name]))
               for name in ("d18", "d50", "five", "seven")]
    (OUT / "thresholds.json").write_text(json.dumps(reports, indent=2) + "\n")
    print("wrote out/thresholds.json")


if __name__ == "__main__":
    main()
