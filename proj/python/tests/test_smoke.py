import json
import math
import pathlib

import numpy as np
import pytest

import polarlab as pl

DATA = pathlib.Path(__file__).resolve().parents[2] / "data"


def test_identity_roundtrip():
    M = pl.jones_to_mueller(np.eye(2, dtype=complex))
    assert np.allclose(M, np.eye(4))
    H = pl.mueller_to_cov(M)
    assert np.allclose(pl.cov_to_mueller(H), M)


def test_two_retarder_mixture():
    phi = math.pi / 2
    members = [(0.5, pl.su2_rotation([1, 0, 0], phi)), (0.5, pl.su2_rotation([0, 1, 0], phi))]
    M = pl.ensemble_to_mueller(members)
    d = pl.characteristic_decompose(M)
    assert d.purity.P1 == pytest.approx(0.5, abs=1e-12)
    assert np.allclose(d.lambdas, [0.75, 0.25, 0, 0], atol=1e-12)
    h = pl.extract_amg(d)
    assert h.axis_angle.angle == pytest.approx(math.acos(1 / 3), abs=1e-12)
    v = pl.ensemble_visibility(members, np.array([1, 0], dtype=complex))
    assert abs(v - complex(math.cos(phi / 2), -0.5 * math.sin(phi / 2))) < 1e-14


def test_refusals_raise():
    with pytest.raises(pl.PolarlabError, match="no-coherent-core"):
        pl.extract_amg(pl.characteristic_decompose(np.diag([1.0, 0, 0, 0])))
    with pytest.raises(pl.PolarlabError):
        pl.characteristic_decompose(np.diag([1.0, 1, 1, -1]))
    assert not pl.validate_mueller(np.diag([1.0, 1, 1, -1])).physical


def test_channel_core():
    rho = pl.choi_from_kraus(pl.amplitude_damping(0.3))
    core = pl.channel_core(rho)
    assert core.dissipative
    assert np.allclose(core.unitary_factor, np.eye(2), atol=1e-10)
    assert np.linalg.eigvalsh(rho)[::-1] == pytest.approx([0.85, 0.15, 0, 0], abs=1e-12)


def test_analyze_report():
    status, text = pl.analyze("analyze-mueller", str(DATA / "retarder_mixture.json"))
    assert status == 0
    report = json.loads(text)
    assert list(report)[:3] == ["meta", "validity", "spectrum"]
    assert report["purity"]["P1"] == pytest.approx(0.5, abs=1e-12)
