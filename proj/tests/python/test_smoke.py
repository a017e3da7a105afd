import math

import pytest

import tbp_walk as tw


def test_fst_worked_values():
    assert tw.fst(1.0, 0.0, 1.0, 1.0) == -1.0
    assert tw.fst(0.0, 0.0, 0.3, 0.5) == 0.0
    with pytest.raises(tw.ParameterError):
        tw.fst(1.0, 0.0, -1.0, 1.0)


def test_td_track_structural_identity():
    signal = [math.sin(0.05 * k) + (0.3 if k % 7 == 0 else 0.0) for k in range(300)]
    smoothed, derivative = tw.td_track(signal, gain=0.5, step=1.0)
    assert len(smoothed) == len(derivative) == len(signal)
    for k in range(len(signal) - 1):
        assert smoothed[k + 1] == smoothed[k] + derivative[k]
        assert abs(derivative[k + 1] - derivative[k]) <= 0.5
    assert tw.td_track([5.0, 5.0, 5.0], gain=1.0) == ([5.0, 5.0, 5.0], [0.0, 0.0, 0.0])
    with pytest.raises(tw.UsageError):
        tw.td_track([], gain=1.0)


def test_periodicity():
    assert tw.ps_n3("ATGATG") == 12.0
    assert tw.dft_power_at_third("ACG") == pytest.approx(3.0)
    assert tw.walk("AAA", "raw") == [1.0, 1.0, 0.0]
    assert tw.walk("ATG" * 100)[-1] == pytest.approx(100.0)


def test_postprocessing_and_metrics():
    segs = [(1, 100, "exon"), (101, 130, "intron"), (131, 300, "exon")]
    assert tw.remove_short_segments(segs, 50) == [(1, 300, "exon")]
    m = tw.evaluate([(1, 60, "exon"), (61, 100, "intron")], [(1, 50, "exon"), (51, 100, "intron")])
    assert (m["TP"], m["FP"], m["TN"], m["FN"]) == (50, 10, 40, 0)
    assert m["AC"] == (m["Sn"] + m["Sp"]) / 2
    with pytest.raises(tw.UndefinedMetricError):
        tw.evaluate([(1, 10, "exon")], [(1, 10, "intron")])


def test_synthetic_pipeline():
    bases, exons = tw.generate_synthetic(1, 600, 600, 0.7, 42)
    assert len(bases) == 1800 and exons == [(601, 1200)]
    assert bases[:24] == "TGTATAGCCCAGGGTTTCAAGACA"
    predicted = tw.predict(bases, gain=0.001)
    truth = [(1, 600, "intron"), (601, 1200, "exon"), (1201, 1800, "intron")]
    assert tw.evaluate(predicted, truth)["AC"] >= 0.85


def test_parse_fasta():
    assert tw.parse_fasta(">s1\nacgt\n") == [("s1", "ACGT")]
    with pytest.raises(tw.InputFormatError, match="position 3"):
        tw.parse_fasta(">s1\nACXT\n")
    [(_, resolved)] = tw.parse_fasta(">s1\nANNT\n", policy="skip-ambiguous", seed=1)
    assert set(resolved) <= set("ACGT")
