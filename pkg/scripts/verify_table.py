"""Run the computed-vs-predicted comparison for several i and print a summary table.

    python scripts/verify_table.py --depths 1:200 2:24 3:12 4:8
"""
import argparse
import json
from dataclasses import asdict, dataclass, field

from tmcf.exactalg import format_rational
from tmcf.verify import required_precision, verify_expansion


@dataclass
class RunConfig:
    depths: dict[int, int] = field(default_factory=lambda: {1: 200, 2: 24, 3: 12, 4: 8})
    precision_factor: int = 1  # multiply the required precision (soundness probes)
    json_out: str | None = None


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--depths", nargs="+", default=None, help="i:depth pairs")
    ap.add_argument("--precision-factor", type=int, default=1)
    ap.add_argument("--json-out", default=None)
    args = ap.parse_args()
    cfg = RunConfig(precision_factor=args.precision_factor, json_out=args.json_out)
    if args.depths:
        cfg.depths = {int(a): int(b) for a, b in (s.split(":") for s in args.depths)}

    rows = []
    print(f"{'i':>3} {'depth':>6} {'N':>6} {'cert':>5} {'match':>7} {'measure':>12} {'sec':>7}")
    for i, depth in sorted(cfg.depths.items()):
        N = required_precision(i, depth) * cfg.precision_factor
        r = verify_expansion(i, depth, precision=N)
        meas = "-" if r.measure_estimate is None else f"{float(r.measure_estimate):.5f}"
        print(f"{i:>3} {depth:>6} {N:>6} {r.depth_certified:>5} {r.n_equal:>3}/{depth:<3} {meas:>12} {r.elapsed:7.2f}")
        rows.append({"i": i, "depth": depth, "precision": N, "certified": r.depth_certified,
                     "matched": r.n_equal, "first_mismatch": r.first_mismatch,
                     "measure": None if r.measure_estimate is None else format_rational(r.measure_estimate)})
    if cfg.json_out:
        with open(cfg.json_out, "w") as fh:
            json.dump({"config": asdict(cfg), "rows": rows}, fh, indent=2)


if __name__ == "__main__":
    main()
