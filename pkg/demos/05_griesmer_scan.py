"""Sweep gcd(e, m) = 1 codes and check the Griesmer sum.

e >= 2 gives equality, e = 1 falls one short.
"""
from collections import Counter

from fqtrace.theory import griesmer_check
from fqtrace.tracecode import CodeSpec, InvalidSpec

verdicts = Counter()
for p in (2, 3, 5, 7, 11):
    for s in (1, 2):
        for m in (1, 2, 3, 4):
            for e in range(1, p**s):
                try:
                    spec = CodeSpec(p, s, m, e)
                except InvalidSpec:
                    continue
                if spec.N != 1 or spec.r > 10**5:
                    continue
                g = griesmer_check(spec)
                verdicts[(e >= 2, g.verdict)] += 1
for (e2, v), n in sorted(verdicts.items()):
    print(f"e>=2: {e2!s:5}  {v:12s} {n}")
