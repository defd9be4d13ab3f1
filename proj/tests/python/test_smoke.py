import math
import os
from pathlib import Path

import pytest

import galedual

DATA = Path(os.environ.get("GALEDUAL_DATA_DIR", Path(__file__).resolve().parents[2] / "data"))


def fixture(name):
    return galedual.load(DATA / name)


def test_dualize_example():
    pair = galedual.dualize(fixture("example22_sparse.json"))
    assert pair["master"]["weights"] == [[-1, 3, 2, -2], [3, -1, 1, -3]]
    assert pair["check"]["all_pass"]


def test_bound_example():
    b = galedual.bound(fixture("example22_master.json"))
    assert b["kouchnirenko_bound"] == 17
    assert b["euler_characteristic"] == 17


def test_solve_and_verify():
    s = galedual.solve(fixture("example22_sparse.json"))
    assert s["count"] == 17
    assert s["real_count"] == 3
    v = galedual.verify(fixture("example22_sparse.json"))
    assert v["report"]["bijection"]
    assert v["report"]["reals_preserved"]


def test_lattice_helpers():
    h, u = galedual.hnf([[2, 4], [1, 3]])
    assert h == [[1, 1], [0, 2]]
    assert galedual.snf_diagonal([[2, 0], [0, 3]]) == [1, 6]
    k = galedual.kernel_basis([[3, 1, 4, 4], [2, 2, -1, 1]])
    assert all(sum(a * b for a, b in zip(row, w)) == 0 for row in k for w in [[3, 1, 4, 4], [2, 2, -1, 1]])
    assert galedual.saturation_index([[2, 0], [0, 1]]) == 2
    assert galedual.normalized_volume([[0, 0], [3, 2], [1, 2], [4, -1], [4, 1]]) == 17
    big = 10**30
    assert galedual.saturation_index([[big, 0], [0, 1]]) == big


def test_fewnomial_bound():
    value, formula = galedual.fewnomial_bound(2, 2)
    assert math.isclose(value, 2 * (math.e**2 + 3), rel_tol=1e-12)
    assert "e^2+3" in formula


def test_errors():
    with pytest.raises(galedual.GaledualError, match="parse-error"):
        galedual.solve("{not json")
    with pytest.raises(galedual.GaledualError, match="not-primitive"):
        galedual.dualize(fixture("index2_master.json"))
