import io
import math

from digit_ecc.analysis_oracles import (
    check_matrix_of,
    error_sweep,
    min_distance_column_search,
    min_weight_enumeration,
    sweep_codewords,
)
from digit_ecc.channel_sim import ChannelConfig, run
from digit_ecc.cli import main
from digit_ecc.families import build_spec, codec_for
from digit_ecc.wxli_sets import certify_family

SEED = 2024
SCALE_TRIALS = 100_000


def verify_distances():
    print("Checking minimum distances...")
    cases = [
        (build_spec("prototype", p=3, r=3), 3),
        (build_spec("a2", r=4), 4),
        (build_spec("a2sparse", r=4), 4),
        (build_spec("golay"), None),
    ]
    for spec, expected in cases:
        verdict = min_distance_column_search(check_matrix_of(spec), 4)
        print(f"  {spec.label}: column search {verdict.describe()}")
        assert verdict.first_dependency == expected
    assert min_weight_enumeration(build_spec("golay")) == 5
    print("✅ Distances match")


def verify_sweeps():
    print("Checking error sweeps...")
    for spec in (build_spec("a2", r=4), build_spec("a2", r=5), build_spec("a2sparse", r=5)):
        single = sweep_codewords(spec, 1, 10, SEED).stats
        double = sweep_codewords(spec, 2, 10, SEED).stats
        print(f"  {spec.label}: w=1 {single.to_record()}")
        print(f"  {spec.label}: w=2 {double.to_record()}")
        assert single.corrected_ok == single.trials
        assert double.detected == double.trials
    golay = sweep_codewords(build_spec("golay"), 2, 10, SEED).stats
    assert golay.corrected_ok == golay.trials
    proto = sweep_codewords(build_spec("prototype", p=3, r=3), 2, 10, SEED).stats
    print(f"  prototype w=2: {proto.to_record()}")
    assert proto.silent == 0
    print("✅ Sweeps behave as designed")


def verify_certification():
    print("Certifying I1 and I2 for r = 3..6...")
    for r in range(3, 7):
        i1, i2 = certify_family(r)
        print(f"  r={r}: I1 {i1.describe()}, I2 {i2.describe()}")
        assert i1.independent and i2.independent
    print("✅ Index sets certified")


def verify_determinism():
    print("Checking simulation determinism across worker counts...")
    spec = build_spec("a2", r=4)
    reports = [run(ChannelConfig(spec, 0.02, 2000, SEED, workers=w)).stats for w in (1, 4)]
    print(f"  {reports[0].to_record()}")
    assert reports[0] == reports[1]
    print("✅ Simulation is reproducible")


def verify_channel_at_scale():
    print(f"Running {SCALE_TRIALS} channel trials per check...")
    a2 = build_spec("a2", r=4)
    single = run(ChannelConfig(a2, 0.0, SCALE_TRIALS, SEED, forced_weight=1, workers=4)).stats
    double = run(ChannelConfig(a2, 0.0, SCALE_TRIALS, SEED, forced_weight=2, workers=4)).stats
    print(f"  {a2.label} w=1: {single.to_record()}")
    print(f"  {a2.label} w=2: {double.to_record()}")
    assert single.corrected_ok == SCALE_TRIALS
    assert double.detected == SCALE_TRIALS

    proto = build_spec("prototype", p=3, r=2)
    exhaustive = error_sweep(codec_for(proto), proto.zero_word(), 2)
    sampled = run(ChannelConfig(proto, 0.0, SCALE_TRIALS, SEED, forced_weight=2, workers=4)).stats
    print(f"  {proto.label} w=2: {sampled.to_record()}")
    for category in ("miscorrected", "detected"):
        expected = getattr(exhaustive, category) / exhaustive.trials
        observed = getattr(sampled, category) / SCALE_TRIALS
        sigma = math.sqrt(expected * (1 - expected) / SCALE_TRIALS)
        print(f"    {category}: observed {observed:.4f}, exhaustive {expected:.4f}")
        assert abs(observed - expected) <= 3 * sigma

    noisy = run(ChannelConfig(a2, 0.01, SCALE_TRIALS, SEED, workers=4)).stats
    print(f"  {a2.label} epsilon=0.01: {noisy.to_record()}")
    assert noisy.is_partition()
    print("✅ Channel behaviour matches the sweeps")


def verify_cli_table():
    out, err = io.StringIO(), io.StringIO()
    assert main(["table"], stdout=out, stderr=err) == 0
    print(out.getvalue())
    assert "5 20 42 35 0.833" in out.getvalue().splitlines()
    print("✅ Rate table matches")


if __name__ == "__main__":
    verify_distances()
    verify_sweeps()
    verify_certification()
    verify_determinism()
    verify_channel_at_scale()
    verify_cli_table()
