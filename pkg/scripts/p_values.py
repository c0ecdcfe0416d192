"""Table of P_{i,m}(1) and P'_{i,m}(1); the latter has no known closed form past m = 2."""
import sys

from tmcf.conjecture import p_value_at_one, p_values_at_one

i = int(sys.argv[1]) if len(sys.argv) > 1 else 2
m_max = int(sys.argv[2]) if len(sys.argv) > 2 else 4
for m, (v, dv) in enumerate(p_values_at_one(i, m_max), 1):
    assert v == p_value_at_one(i, m)
    print(f"m={m}  P(1)={v}  P'(1)={dv}")
