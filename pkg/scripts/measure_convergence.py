"""How the windowed irrationality-measure estimate approaches 2i as depth grows."""
import argparse

from tmcf.verify import irrationality_estimate

ap = argparse.ArgumentParser()
ap.add_argument("--imax", type=int, default=5)
ap.add_argument("--kmax", type=int, default=10, help="depths 2^k + 1 for k = 2..kmax")
args = ap.parse_args()

depths = [2**k + 1 for k in range(2, args.kmax + 1)]
print("depth " + " ".join(f"{'i=' + str(i):>10}" for i in range(1, args.imax + 1)))
for d in depths:
    vals = [float(irrationality_estimate(i, d).value) for i in range(1, args.imax + 1)]
    print(f"{d:>5} " + " ".join(f"{v:10.6f}" for v in vals))
