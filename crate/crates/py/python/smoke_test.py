"""Smoke test for the tilelab extension module."""

import json

import tilelab


def main():
    t = tilelab.Tile(2, 3)
    assert t.family == (5, "x^2+px+q")
    assert t.is_number_system() and not t.origin_on_boundary()
    assert len(t.neighbors()) == 6
    assert t.contact_matrix()[0] == [0, 2, 1, 0, 0, 0]
    assert abs(t.dimension() - 1.376842) < 1e-5

    dragon = tilelab.Tile(-2, 2)
    assert dragon.origin_on_boundary()
    report = json.loads(dragon.dimension_json())
    assert abs(report["dim_generalized"] - 1.523627) < 1e-4
    assert dragon.sign_path("nonpositive") == ((-1, 1), [], [-1])

    assert t.represent(-1, 0) == [2, 2, 1]
    assert t.delta_form(-1, 0) == [-1]
    assert tilelab.Tile(2, 2).delta_form(2, 1) == [0, 1, 1, 1]

    try:
        tilelab.Tile(3, 3)
    except ValueError as e:
        assert "disk-like" in str(e)
    else:
        raise AssertionError("(3, 3) accepted")

    ok, text = tilelab.verify("appendixC")
    assert ok, text
    print("smoke test ok")


if __name__ == "__main__":
    main()
