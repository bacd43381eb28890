from fractions import Fraction

import numpy as np
import pytest

import qshear


def random_image(side, seed=7):
    return np.random.default_rng(seed).integers(0, 256, (side, side), dtype=np.uint8)


def test_rotation_matches_oracle():
    img = random_image(32)
    for deg in (30.0, -45.0, 60.0):
        phase1, phase2, final = qshear.rotate(img, deg)
        assert phase1.shape == phase2.shape == final.shape == (32, 32)
        np.testing.assert_array_equal(final, qshear.oracle_rotate(img, deg))


def test_netlist_mode_matches_semantic():
    img = random_image(8, seed=3)
    semantic = qshear.rotate(img, 45.0)[2]
    netlist = qshear.rotate(img, 45.0, mode="netlist", order="high-first")[2]
    np.testing.assert_array_equal(netlist, semantic)


def test_four_by_four_shear_at_factor_one():
    img = np.zeros((4, 4), dtype=np.uint8)
    img[:, 2] = [10, 11, 12, 13]
    out = qshear.shear(img, "horizontal", 1.0)
    assert [out[0, 0], out[1, 1], out[2, 2], out[3, 3]] == [10, 11, 12, 13]


def test_expand_canvas_and_quarter_turn():
    img = random_image(8)
    assert qshear.rotate(img, 30.0, canvas="expand")[2].shape == (32, 32)
    np.testing.assert_array_equal(qshear.rotate_quarter_turns(img, 1), np.rot90(img))


def test_worked_arithmetic_examples():
    assert qshear.run_circuit("self_adder", 3, a=0b110)[0] == 0b1100
    value, clean, kept = qshear.run_circuit("ctrl_multi", 4, 5, a=0b10101, b=0b1011)
    assert (value, clean, kept) == (0b11100111, True, True)
    assert qshear.run_circuit("interpolation", 4, a=0b1010, b=0b1010)[0] == 0b1011


def test_gate_counts():
    assert qshear.predict("adder", 4) == 100
    assert qshear.predict("top_half_shear", 2, 5) == Fraction(452)
    text = qshear.build_circuit("adder", 4)
    assert qshear.netlist_cost(text) == 100
    shear_text = qshear.build_half_shear("horizontal", False, 2, 5)
    assert qshear.netlist_cost(shear_text, "core") == 452
    rows = qshear.audit_rows(2, 3, 4, 5)
    assert rows and all(row["delta"] == 0 for row in rows)


def test_errors_are_typed():
    with pytest.raises(qshear.UnsupportedAngleError):
        qshear.rotate(random_image(4), 90.0)
    with pytest.raises(qshear.FormatError):
        qshear.rotate(np.zeros((3, 3), dtype=np.uint8), 10.0)
    with pytest.raises(qshear.ParameterError):
        qshear.predict("ctrl_multi", 3)
    with pytest.raises(qshear.QshearError):
        qshear.rotate(random_image(4), 10.0, mode="quantum")
    assert issubclass(qshear.QshearError, ValueError)


def test_ideal_agreement_is_informational():
    board = (np.indices((64, 64)).sum(axis=0) // 8 % 2 * 255).astype(np.uint8)
    frac = qshear.agreement_fraction(qshear.rotate(board, 45.0)[2],
                                     qshear.ideal_rotate(board, 45.0))
    assert 0.5 < frac <= 1.0
