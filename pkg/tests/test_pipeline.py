import dataclasses

import numpy as np
import pytest

from sdcfec.channel import PauliChannelParams
from sdcfec.codes import CODE_NAMES, encode, get_code
from sdcfec.pipeline import (
    PAD_POLICIES,
    TrialConfig,
    deframe_bits,
    derive_seed,
    frame_bits,
    frame_layout,
    map_to_symbols,
    random_message,
    run_trial,
    sweep,
    symbols_display,
    unmap_to_bits,
)


def binomial_sigma(prob, n):
    return np.sqrt(prob * (1 - prob) / n)


def uncoded_sdc_sigma(p, n):
    # bit errors per symbol: 1 w.p. 2p/3, 2 w.p. p/3 (XZ), so E = 4p/3, E[x^2] = 2p
    var = 2 * p - (4 * p / 3) ** 2
    return np.sqrt(var / (n / 2)) / 2


class TestFraming:
    def test_hamming_pad(self):
        word = encode(get_code("hamming74"), [1, 0, 0, 1])
        assert frame_bits(word, "hamming74").tolist() == [0, 0, 1, 1, 0, 0, 1, 0]

    def test_even_length_unchanged(self):
        word = encode(get_code("golay2412"), np.random.default_rng(0).integers(0, 2, 12))
        assert (frame_bits(word, "golay2412") == word).all()

    def test_pad_then_interleave(self):
        framed = frame_bits([1, 1, 1, 0, 0, 0], "rep3", "percodeword", depth=2)
        assert framed.tolist() == [1, 0, 1, 0, 1, 0, 0, 0]

    def test_concat_pairs(self):
        assert frame_bits([1, 1, 1, 0, 0, 0], "rep3", "concat").tolist() == [1, 1, 1, 0, 0, 0]
        assert frame_bits([1, 1, 1, 0, 0, 0], "rep3", "concat", depth=2).tolist() == [1, 0, 1, 0, 1, 0]

    def test_concat_odd_count_rejected(self):
        with pytest.raises(ValueError, match="even codeword count"):
            frame_bits([1, 1, 1], "rep3", "concat")

    def test_partial_codeword_rejected(self):
        with pytest.raises(ValueError):
            frame_bits([1, 1], "rep3")

    def test_layouts(self):
        assert frame_layout("rep3", 1, "concat").frame_symbols == 3
        assert frame_layout("rep3", 1, "percodeword").frame_symbols == 2
        assert frame_layout("rep3", 3, "concat").codewords_per_frame == 6
        assert frame_layout("golay2412", 2).frame_symbols == 24

    @pytest.mark.parametrize("name", CODE_NAMES)
    @pytest.mark.parametrize("pad", PAD_POLICIES)
    @pytest.mark.parametrize("depth", [1, 2, 3])
    def test_deframe_inverts_frame(self, name, pad, depth):
        layout = frame_layout(name, depth, pad)
        words = np.random.default_rng(1).integers(0, 2, 4 * layout.codewords_per_frame * layout.n)
        framed = frame_bits(words, name, pad, depth)
        assert framed.size % 2 == 0
        assert (deframe_bits(framed, name, pad, depth) == words).all()


class TestSymbols:
    def test_worked_example(self):
        symbols = map_to_symbols([0, 0, 1, 1, 0, 0, 1, 0])
        assert symbols_display(symbols) == ["Φ⁺", "Ψ⁻", "Φ⁺", "Ψ⁺"]

    def test_empty(self):
        assert map_to_symbols([]).size == 0

    def test_single(self):
        assert symbols_display(map_to_symbols([1, 0])) == ["Ψ⁺"]

    def test_odd_rejected(self):
        with pytest.raises(ValueError):
            map_to_symbols([1, 0, 1])

    def test_roundtrip(self):
        bits = np.random.default_rng(2).integers(0, 2, 1000, dtype=np.uint8)
        assert (unmap_to_bits(map_to_symbols(bits)) == bits).all()


class TestRunTrial:
    @pytest.mark.parametrize("name", CODE_NAMES)
    @pytest.mark.parametrize("pad", PAD_POLICIES)
    @pytest.mark.parametrize("depth", [1, 2])
    @pytest.mark.parametrize("channel", ["sdc", "direct"])
    def test_lossless_without_noise(self, name, pad, depth, channel):
        cfg = TrialConfig(code=name, channel=channel, interleave_depth=depth, pad_policy=pad,
                          message_bits=2400, seed=3)
        report = run_trial(cfg)
        assert report.bit_errors == 0 and report.ber == 0.0
        assert report.codeword_errors == 0 and report.cer == 0.0
        assert report.bits_sent == 2400

    def test_uncoded_sdc_matches_two_thirds_p(self):
        cfg = TrialConfig(params=PauliChannelParams.depolarizing(0.06), seed=11)
        report = run_trial(cfg)
        assert abs(report.ber - 0.04) <= 3 * binomial_sigma(0.04, report.bits_sent)

    def test_interleaved_rep3(self):
        cfg = TrialConfig(code="rep3", interleave_depth=2, params=PauliChannelParams.depolarizing(0.1), seed=12)
        report = run_trial(cfg)
        expected = 4 / 3 * 0.01 - 16 / 27 * 0.001
        assert abs(report.ber - expected) <= 3 * binomial_sigma(expected, report.bits_sent)

    def test_message_alignment_enforced(self):
        with pytest.raises(ValueError):
            run_trial(TrialConfig(code="hamming74"), message=np.zeros(6, dtype=np.uint8))

    def test_filler_blocks_not_counted(self):
        # 3 rep3 codewords need a 4th to complete the concat frame
        cfg = TrialConfig(code="rep3", pad_policy="concat", params=PauliChannelParams.depolarizing(1.0), seed=4)
        report = run_trial(cfg, message=np.array([1, 0, 1], dtype=np.uint8))
        assert report.bits_sent == 3 and report.codewords == 3
        assert report.bit_errors <= 3

    def test_random_message_rounds_up_to_k(self):
        cfg = TrialConfig(code="golay2412", message_bits=1_000_000)
        assert random_message(cfg).size == 1_000_008

    def test_report_consistency(self):
        cfg = TrialConfig(code="hamming74", params=PauliChannelParams.depolarizing(0.1),
                          message_bits=100_000, seed=5)
        r = run_trial(cfg)
        assert r.ber == r.bit_errors / r.bits_sent
        assert r.cer == r.codeword_errors / r.codewords
        # each codeword error holds at least one and at most k bit errors
        assert r.codeword_errors <= r.bit_errors <= 4 * r.codeword_errors

    def test_seed_reproducible(self):
        cfg = TrialConfig(code="golay2412", params=PauliChannelParams.depolarizing(0.08),
                          message_bits=120_000, seed=77)
        assert run_trial(cfg) == run_trial(cfg)

    def test_uncoded_sdc_and_direct_agree(self):
        params = PauliChannelParams.depolarizing(0.08)
        sdc = run_trial(TrialConfig(channel="sdc", params=params, seed=21))
        direct = run_trial(TrialConfig(channel="direct", params=params, seed=22))
        q = 2 * 0.08 / 3
        sigma = np.hypot(uncoded_sdc_sigma(0.08, sdc.bits_sent), binomial_sigma(q, direct.bits_sent))
        assert abs(sdc.ber - direct.ber) <= 3 * sigma

    def test_direct_interleaving_has_no_effect(self):
        params = PauliChannelParams.depolarizing(0.1)
        plain = run_trial(TrialConfig(code="rep3", channel="direct", params=params, seed=31))
        mixed = run_trial(TrialConfig(code="rep3", channel="direct", interleave_depth=2, params=params, seed=32))
        q = 2 * 0.1 / 3
        expected = 3 * q**2 - 2 * q**3  # independent flips, majority of three
        for r in (plain, mixed):
            assert abs(r.ber - expected) <= 3 * binomial_sigma(expected, r.bits_sent)

    def test_monotone_in_p(self):
        bers = [run_trial(TrialConfig(params=PauliChannelParams.depolarizing(p), seed=40 + i)).ber
                for i, p in enumerate([0.02, 0.04, 0.06])]
        assert bers[0] < bers[1] < bers[2]


class TestSweep:
    def test_zero_grid(self):
        (report,) = sweep(TrialConfig(message_bits=1000), [0.0])
        assert report.bit_errors == 0 and report.p == 0.0

    def test_deterministic(self):
        base = TrialConfig(code="rep3", message_bits=20_000, seed=9)
        assert sweep(base, [0.01, 0.05, 0.1]) == sweep(base, [0.01, 0.05, 0.1])

    def test_parallel_matches_serial(self):
        base = TrialConfig(code="hamming74", message_bits=40_000, seed=10)
        grid = np.linspace(0, 0.1, 6)
        assert sweep(base, grid, workers=4) == sweep(base, grid, workers=1)

    def test_point_seed_derivation(self):
        base = TrialConfig(message_bits=1000, seed=123)
        reports = sweep(base, [0.1, 0.2])
        assert [r.seed for r in reports] == [derive_seed(123, 0), derive_seed(123, 1)]
        # a row can be recomputed from its own seed
        again = run_trial(dataclasses.replace(base, params=PauliChannelParams.depolarizing(0.2), seed=reports[1].seed))
        assert again.bit_errors == reports[1].bit_errors

    def test_derive_seed_is_stable(self):
        # frozen: blake2b-64 of "seed:index", little endian
        assert derive_seed(0, 0) == 7120306904099482837
        assert derive_seed(42, 3) == 15108266918530370284
        assert derive_seed(0, 0) != derive_seed(0, 1) != derive_seed(1, 0)

    def test_invalid_p(self):
        with pytest.raises(ValueError):
            sweep(TrialConfig(message_bits=10), [0.5, 1.5])

    def test_uncoded_slope(self):
        grid = np.linspace(0, 0.1, 11)
        reports = sweep(TrialConfig(seed=8), grid)
        slope = np.polyfit(grid, [r.ber for r in reports], 1)[0]
        assert abs(slope - 2 / 3) <= 0.05 * 2 / 3
