"""gcd(e, m) = 3 and 4: the full oracle where it fits, one codeword per
stratum where it does not."""
from fqtrace.theory import compare, erratum_for, predict
from fqtrace.tracecode import CodeSpec, brute_force_spectrum, representative_spectrum_check

spec = CodeSpec.from_q(4, 3, 3)
res = brute_force_spectrum(spec, workers=None)
print("q=4 m=3 e=3:", res.distribution.enumerator_str(), "distinct codewords:", res.codeword_count)
print("  printed in the literature:", erratum_for(spec)["printed"])

for q, m, e in [(7, 3, 6), (5, 4, 4)]:
    spec = CodeSpec.from_q(q, m, e)
    reps = representative_spectrum_check(spec)
    pred = predict(spec)
    print(f"q={q} m={m} e={e}: strata {dict(reps)}")
    print(f"  closed form ({pred.variant}): {'agrees' if compare(pred, reps).match else 'disagrees'}")
    print("  printed:", erratum_for(spec)["printed"])
