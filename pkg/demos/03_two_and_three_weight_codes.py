"""Enumerate small trace codes and compare with the closed-form enumerators."""
from fqtrace.theory import compare, predict
from fqtrace.tracecode import CodeSpec, brute_force_spectrum

for q, m, e in [(2, 3, 1), (3, 2, 1), (4, 2, 3), (5, 1, 1), (7, 1, 2), (9, 1, 2), (3, 2, 2)]:
    spec = CodeSpec.from_q(q, m, e)
    oracle = brute_force_spectrum(spec)
    pred = predict(spec)
    ok = compare(pred, oracle).match
    print(f"q={q} m={m} e={e}  [{spec.gray_length},{spec.dimension},{oracle.distribution.min_distance}]"
          f"  {oracle.distribution.enumerator_str():28s} {'ok' if ok else 'MISMATCH'}")
