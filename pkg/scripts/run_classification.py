"""Run the whole classification and write the report in every format.

    python3 scripts/run_classification.py [--threads N] [--outdir results]
"""

import argparse
import time
from pathlib import Path

from orbicover.pipeline import PipelineConfig, report_csv, report_json, report_text, run_pipeline
from orbicover.verify import verify


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--threads", type=int, default=1)
    ap.add_argument("--outdir", default="results")
    args = ap.parse_args()

    start = time.perf_counter()
    report = run_pipeline(PipelineConfig(threads=args.threads))
    elapsed = time.perf_counter() - start

    out = Path(args.outdir)
    out.mkdir(parents=True, exist_ok=True)
    (out / "report.json").write_text(report_json(report))
    (out / "report.csv").write_text(report_csv(report))
    (out / "report.txt").write_text(report_text(report))

    print(report_text(report))
    result = verify(report)
    print("\n".join(result.lines()))
    print(f"pipeline: {elapsed:.2f}s; outputs in {out}/")


if __name__ == "__main__":
    main()
