"""Smoke tests for the python bindings (imported straight from the build
tree as `_hidsym`; the installed package re-exports it as `hidsym`)."""

import math

import _hidsym as hs


def test_simon_round_trip():
    inst = hs.gen_simon(6, 11, 5, seed=1)
    assert inst.p == 11 and inst.q == 5
    table = hs.OracleTable(inst.n, inst.table.values)
    for x in range(64):
        assert table(x ^ inst.p) == table(x) ^ inst.q

    report = hs.detect_simon(inst.table, seed=2)
    assert report["status"] == "unique"
    (cand,) = report["candidates"]
    assert (cand["p"], cand["q"]) == (11, 5)


def test_simon_sampler_constraint():
    inst = hs.gen_simon(5, 9, 3, seed=3)
    rng = hs.Rng(4)
    for _ in range(200):
        y1, y2 = hs.sample_simon_y(inst.table, rng)
        parity = (bin(inst.p & y1).count("1") + bin(inst.q & y2).count("1")) % 2
        assert parity == 0


def test_shor_detection():
    inst = hs.gen_shor(12, 7, 3, seed=5)
    report = hs.detect_shor(inst.table, seed=6)
    assert report["status"] == "found"
    assert (report["p"], report["q"]) == (7, 3)


def test_linear_is_ambiguous():
    inst = hs.gen_linear(5, seed=7)
    report = hs.detect_simon(inst.table, seed=8)
    assert report["status"] == "ambiguous"
    for cand in report["candidates"]:
        assert cand["q"] == inst.apply_a(cand["p"])


def test_continued_fractions():
    assert hs.cf_quotients(31, 13) == [2, 2, 1, 1, 2]
    assert hs.convergents([2, 2, 1, 1, 2])[-1] == (31, 13)
    assert hs.best_bounded(17, 12, 8) == (7, 5)
    a1, a2, res = hs.cancel_combination(17, 12, 8)
    assert (a1, a2, res) == (5, -7, 1)


def test_scale_invariance():
    inst = hs.gen_shor(12, 5, 2, seed=9)
    report = hs.detect_scale_invariance(inst, g=2.0, b=2.0, seed=10)
    assert report["status"] == "found"
    assert math.isclose(report["alpha"], 2.0 ** report["shor"]["p"])


def test_baselines_agree():
    inst = hs.gen_simon(8, 0x31, 0x17, seed=11)
    scan = hs.simon_scan(inst.table, seed=12)
    assert scan["status"] == "found"
    assert (scan["p"], scan["q"]) == (0x31, 0x17)
    bday = hs.simon_birthday(inst.table, seed=13)
    if bday["status"] == "found":
        assert (bday["p"], bday["q"]) == (0x31, 0x17)
