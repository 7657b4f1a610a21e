#!/usr/bin/env python3
"""Scan the coupling toward the critical point and tabulate the signatures.

Writes one CSV (columns lambda,p_sc,p_cr1,p_cr2,delta_p_cr,d_p_sc,d_p_cr1,
d_p_cr2,d_delta) whose derivative columns grow without bound as the grid
approaches the critical coupling 1.

Example:
  python3 scripts/critical_scan.py --grid 0.3:0.97:15 --channel phase-flip
"""

import argparse
from pathlib import Path

from timcorr.channels import parse_channel
from timcorr.cli import RunConfig, cmd_critical, parse_lambda_grid


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--grid", default="0.3:0.97:15",
                    help="comma list or start:stop:count (default 0.3:0.97:15)")
    ap.add_argument("--channel", default="phase-flip")
    ap.add_argument("--h", type=float, default=1e-3,
                    help="central-difference step (default 1e-3)")
    ap.add_argument("--out", default="out_critical/critical_scan.csv")
    args = ap.parse_args()

    config = RunConfig(
        channel=parse_channel(args.channel),
        lambda_grid=parse_lambda_grid(args.grid),
        derivative_step=args.h,
    )
    target = Path(args.out)
    target.parent.mkdir(parents=True, exist_ok=True)
    target.write_text(cmd_critical(config))
    print("wrote", target)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
