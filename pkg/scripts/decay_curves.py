#!/usr/bin/env python3
"""Write the I/C/Q decay tables of all four channels at one coupling.

Produces one CSV per channel (columns p,I,C,Q,branch), ready for plotting.

Example:
  python3 scripts/decay_curves.py --lambda 0.5 --p-count 1001 --outdir out_decay
"""

import argparse
from pathlib import Path

from timcorr.channels import ChannelKind
from timcorr.cli import RunConfig, cmd_sweep_p


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--lambda", dest="lambda_", type=float, default=0.5)
    ap.add_argument("--r", dest="pair_distance", type=int, default=1)
    ap.add_argument("--p-count", type=int, default=1001)
    ap.add_argument("--outdir", default="out_decay")
    args = ap.parse_args()

    outdir = Path(args.outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    for kind in ChannelKind:
        config = RunConfig(
            lambda_=args.lambda_,
            channel=kind,
            pair_distance=args.pair_distance,
            p_count=args.p_count,
        )
        target = outdir / f"{kind.value}_lambda{args.lambda_:g}.csv"
        target.write_text(cmd_sweep_p(config))
        print("wrote", target)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
