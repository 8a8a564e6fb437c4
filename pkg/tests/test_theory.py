import numpy as np
import pytest

from fqtrace.gf import build_field
from fqtrace.theory import (
    ERRATA,
    PredictionError,
    compare,
    griesmer_check,
    griesmer_sum,
    predict,
    predict_gcd1,
    predict_gcd2,
    predict_gcd3,
    predict_gcd4,
    predict_general,
    predict_printed_table4,
    representative_distribution,
    theta_identity_check,
)
from fqtrace.tracecode import CodeSpec, WeightDistribution, brute_force_spectrum, representative_spectrum_check

GCD_SPECS = {
    1: [(2, 1, 3, 1), (3, 1, 2, 1), (2, 2, 2, 3), (7, 1, 3, 2), (5, 1, 3, 4)],
    2: [(3, 1, 2, 2), (5, 1, 2, 4), (13, 1, 2, 4), (3, 1, 4, 2), (3, 2, 2, 4)],
    3: [(2, 2, 3, 3), (7, 1, 3, 6), (13, 1, 3, 3), (7, 1, 3, 3)],
    4: [(5, 1, 4, 4), (3, 2, 4, 4)],
}
PREDICTOR = {1: predict_gcd1, 2: predict_gcd2, 3: predict_gcd3, 4: predict_gcd4}


@pytest.mark.parametrize("N,args", [(N, a) for N, lst in GCD_SPECS.items() for a in lst])
def test_closed_form_equals_general(N, args):
    spec = CodeSpec(*args)
    assert spec.N == N
    pred = PREDICTOR[N](spec)
    general = predict_general(spec)
    assert pred.distribution == general.distribution
    assert pred.consistent
    dist = pred.distribution
    assert dist.total == spec.r**2
    assert len(dist.nonzero_weights) <= N + 1
    assert all(0 <= w <= 2 * spec.n for w in dist.counts)


def test_weight_counts_by_gcd():
    for args in GCD_SPECS[1]:
        assert len(predict(CodeSpec(*args)).distribution.nonzero_weights) == 2
    for args in GCD_SPECS[2]:
        assert len(predict(CodeSpec(*args)).distribution.nonzero_weights) == 3


def test_wrong_gcd_rejected():
    with pytest.raises(PredictionError):
        predict_gcd2(CodeSpec(2, 1, 3, 1))
    with pytest.raises(PredictionError):
        predict_gcd4(CodeSpec(3, 1, 2, 2))


def test_examples():
    assert predict_general(CodeSpec(3, 1, 2, 2)).distribution.counts == {0: 1, 36: 4, 48: 72, 72: 4}
    assert predict_general(CodeSpec(2, 2, 3, 3)).distribution.counts == {0: 1, 1536: 21, 2016: 4032, 2304: 42}
    assert predict_gcd1(CodeSpec(7, 1, 1, 2)).distribution.counts == {0: 1, 36: 42, 42: 6}
    assert predict_gcd3(CodeSpec(7, 1, 3, 6)).distribution.counts == {
        0: 1, 33516: 117306, 32928: 114, 37044: 114, 30870: 114}


def test_gcd3_branch_picked_by_periods():
    pred = predict_gcd3(CodeSpec(2, 2, 3, 3))
    assert pred.variant == "sm/2 odd"
    assert any("rejected" in n for n in pred.notes)


def test_gcd4_p3_branch():
    # p = 3 mod 4 forces s even, so sm/2 is even: one weight r^2 + 3 r^{3/2}
    spec = CodeSpec(3, 2, 4, 4)
    pred = predict_gcd4(spec)
    r = spec.r
    k = 2 * (spec.q - 1) / (spec.e * spec.q)
    assert pred.variant == "sm/2 even"
    assert pred.distribution.counts[int(k * (r * r + 3 * r * int(r**0.5)))] == (r - 1) // 4
    assert pred.distribution.counts[int(k * (r * r - r * int(r**0.5)))] == 3 * (r - 1) // 4


def test_gcd4_sign_resolution_and_printed_rows():
    spec = CodeSpec(5, 1, 4, 4)
    pred = predict_gcd4(spec)
    reps = representative_spectrum_check(spec)
    assert compare(pred, reps).match
    assert pred.sign == -1
    printed = predict_printed_table4(spec)
    assert set(printed.strata.values()) == {156000, 142500, 157500, 152500, 172500}
    report = compare(printed, reps)
    assert not report.match and len(report.strata_diffs) == 4


def test_compare_localises_flipped_sign():
    spec = CodeSpec(7, 1, 3, 6)
    good = predict_gcd3(spec)
    flipped = predict_gcd3(spec)
    s = dict(flipped.strata)
    s["class 1"], s["class 2"] = s["class 2"], s["class 1"]
    flipped.strata = s
    report = compare(flipped, representative_spectrum_check(spec))
    assert not report.match
    assert set(report.strata_diffs) == {"class 1", "class 2"}
    assert compare(good, good.distribution).match


def test_compare_against_oracle():
    spec = CodeSpec(3, 1, 2, 2)
    assert compare(predict_gcd2(spec), brute_force_spectrum(spec)).match
    bad = WeightDistribution({0: 1, 36: 5, 48: 71, 72: 4})
    report = compare(predict_gcd2(spec), bad)
    assert sorted(report.weight_diffs) == [36, 48]


@pytest.mark.parametrize("args,d,total,verdict", [
    ((2, 2, 2, 3), 120, 160, "equality"),
    ((2, 1, 3, 1), 56, 111, "n_minus_one"),
    ((3, 2, 1, 2), 64, 72, "equality"),
])
def test_griesmer_examples(args, d, total, verdict):
    g = griesmer_check(CodeSpec(*args), d)
    assert (g.total, g.verdict) == (total, verdict)


def test_griesmer_slack_and_sum():
    assert griesmer_sum(120, 4, 4) == 120 + 30 + 8 + 2
    g = griesmer_check(CodeSpec(2, 2, 3, 3))
    assert g.verdict.startswith("slack(") or g.verdict in ("equality", "n_minus_one")
    assert g.total <= g.n


def test_griesmer_gcd1_sweep():
    for p in (2, 3, 5, 7):
        for m in (1, 2, 3):
            for e in range(1, p):
                if (p - 1) % e or (m % 2 == 0 and e % 2 == 0) or (m % 3 == 0 and e % 3 == 0):
                    continue
                spec = CodeSpec(p, 1, m, e)
                if spec.N != 1 or spec.r > 400:
                    continue
                v = griesmer_check(spec).verdict
                assert v == ("equality" if e >= 2 else "n_minus_one"), (p, m, e)


def test_theta_identity():
    rng = np.random.default_rng(7)
    for p, s in [(2, 2), (3, 1), (5, 1), (3, 2)]:
        F = build_field(p, s)
        for _ in range(100):
            assert theta_identity_check(F, rng.integers(0, F.size, size=8))


def test_errata_records():
    assert set(ERRATA) == {(7, 1, 3, 6), (2, 2, 3, 3), (5, 1, 4, 4)}
    js = predict(CodeSpec(2, 2, 3, 3)).to_json()
    assert js["erratum"]["oracle"] == "1+21z^1536+4032z^2016+42z^2304"
    assert predict(CodeSpec(3, 1, 2, 2)).to_json()["erratum"] is None


def test_representative_distribution():
    spec = CodeSpec(7, 1, 3, 6)
    dist = representative_distribution(spec, representative_spectrum_check(spec))
    assert dist == predict_general(spec).distribution
