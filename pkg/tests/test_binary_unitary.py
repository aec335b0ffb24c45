import numpy as np
import pytest

from qecentropy.binary_unitary import (
    BinaryUnitaryChannel,
    RegionKind,
    biunitary_code_entropy,
    constituent_hulls,
    dfs_exists,
    entropy_vs_p,
    extremal_lambda,
    grouping_code,
    lambda_spectrum,
    numerical_range,
)
from qecentropy.code import kl_check
from qecentropy.errors import (
    LambdaOutsideRegionError,
    NoCodeError,
    UnsupportedCodeDimensionError,
)
from qecentropy.numerics import dag
from qecentropy.sampling import haar_unitary

U4 = np.diag(np.exp(1j * np.pi * np.array([1, 3, 5, 7]) / 4))
U9 = np.diag(np.exp(2j * np.pi * np.arange(9) / 9))
ZZ = np.diag([1.0, -1.0, -1.0, 1.0]).astype(complex)


def test_from_pair_reduces_to_single_unitary():
    rng = np.random.default_rng(0)
    w1, w2 = haar_unitary(3, rng), haar_unitary(3, rng)
    c = BinaryUnitaryChannel.from_pair(0.3, w1, w2)
    assert np.allclose(c.u, dag(w1) @ w2, atol=1e-14)
    with pytest.raises(ValueError):
        BinaryUnitaryChannel(1.2, np.eye(2))


def test_numerical_range_point_at_origin():
    region = numerical_range(U4, 2)
    assert region.kind is RegionKind.POINT
    assert abs(region.vertices[0]) <= 1e-9


def test_numerical_range_segment_for_zz():
    region = numerical_range(ZZ, 2)
    assert region.kind is RegionKind.SEGMENT
    assert np.allclose(sorted(region.vertices, key=lambda z: z.real), [-1, 1], atol=1e-9)


def test_numerical_range_qutrit_polygon():
    region = numerical_range(U9, 3)
    assert region.kind is RegionKind.POLYGON
    assert region.contains(0j, 1e-9)
    best = max(np.abs(region.vertices))
    target = 0.09246 - 0.52400j
    assert min(abs(z - target) for z in region.vertices) < 1e-3
    assert all(abs(z) <= 1 + 1e-9 for z in region.vertices)
    assert abs(best - abs(target)) < 1e-3


def test_rank_one_range_is_classical_numerical_range():
    region = numerical_range(U4, 1)
    assert region.kind is RegionKind.POLYGON
    assert sorted(np.round(region.vertices, 9).tolist(), key=lambda z: (z.real, z.imag)) == \
        sorted(np.round(np.diag(U4), 9).tolist(), key=lambda z: (z.real, z.imag))


def test_numerical_range_empty_and_full_rank():
    # N distinct eigenvalues and k = N leaves nothing after clipping.
    region = numerical_range(U4, 4)
    assert region.kind is RegionKind.EMPTY
    with pytest.raises(NoCodeError):
        extremal_lambda(region)


def test_numerical_range_conjugation_invariant():
    rng = np.random.default_rng(1)
    base = numerical_range(U9, 3)
    for _ in range(5):
        v = haar_unitary(9, rng)
        region = numerical_range(v @ U9 @ dag(v), 3)
        assert region.kind is base.kind
        assert len(region.vertices) == len(base.vertices)
        for z in region.vertices:
            assert min(abs(z - w) for w in base.vertices) < 1e-8


def test_extremal_lambda_segment_endpoints():
    region = numerical_range(ZZ, 2)
    ext = extremal_lambda(region)
    assert set(np.round(ext.min_entropy_lambdas, 9)) == {-1, 1}
    assert abs(ext.max_entropy_lambda) < 1e-9


def test_lambda_spectrum_matches_2x2_eigensolver():
    rng = np.random.default_rng(2)
    for _ in range(1000):
        p = float(rng.uniform())
        lam = complex(*rng.uniform(-1, 1, 2)) / np.sqrt(2)
        plus, minus = lambda_spectrum(p, lam)
        root = np.sqrt(p * (1 - p))
        m = np.array([[1 - p, root * lam], [root * np.conj(lam), p]])
        w = np.linalg.eigvalsh(m)
        assert abs(plus - w[1]) < 1e-12 and abs(minus - w[0]) < 1e-12


def test_lambda_spectrum_closed_forms():
    plus, minus = lambda_spectrum(0.01, 0j)
    assert abs(plus - 0.99) < 1e-12 and abs(minus - 0.01) < 1e-12
    plus, minus = lambda_spectrum(0.5, 0.6 + 0j)
    assert abs(plus - 0.8) < 1e-12 and abs(minus - 0.2) < 1e-12
    with pytest.raises(ValueError):
        lambda_spectrum(0.3, 1.5 + 0j)


def test_entropy_closed_forms_and_monotonicity():
    assert abs(biunitary_code_entropy(0.01, 0j) - 0.0807931) < 1e-6
    assert biunitary_code_entropy(0.5, 1 + 0j) == 0.0
    assert abs(biunitary_code_entropy(0.5, 0j) - 1.0) < 1e-12
    # Strictly decreasing in |lambda| for fixed p.
    values = [biunitary_code_entropy(0.3, complex(r)) for r in np.linspace(0, 0.99, 12)]
    assert all(a > b for a, b in zip(values, values[1:]))


def test_entropy_vs_p_profile():
    grid = np.linspace(0, 1, 11)
    rows = entropy_vs_p(U4, 2, 0j, grid)
    entropies = [s for _, s in rows]
    assert entropies[0] == 0.0 and entropies[-1] == 0.0
    assert np.argmax(entropies) == 5  # grid point nearest p = 1/2
    assert all(a < b for a, b in zip(entropies[:6], entropies[1:6]))
    with pytest.raises(LambdaOutsideRegionError):
        entropy_vs_p(U4, 2, 0.5 + 0j, grid)


def test_grouping_code_example_antipodal_pairing():
    built = grouping_code(U4, 2, 0j)
    assert built.partition == ((0, 2), (1, 3))
    for t in built.weights:
        assert np.allclose(t, [0.5, 0.5], atol=1e-12)
    lam, _ = kl_check(BinaryUnitaryChannel(0.01, U4).to_channel(), built.code)
    extracted = lam.matrix[0, 1] / np.sqrt(0.01 * 0.99)
    assert abs(extracted) < 1e-12


def test_grouping_code_qutrit_lambda0():
    region = numerical_range(U9, 3)
    lam0 = min(extremal_lambda(region).min_entropy_lambdas,
               key=lambda z: abs(z - (0.09246 - 0.52400j)))
    built = grouping_code(U9, 3, lam0)
    assert built.code.k == 3
    c = BinaryUnitaryChannel(0.01, U9).to_channel()
    lam, residual = kl_check(c, built.code)
    assert residual <= 1e-8
    extracted = lam.matrix[0, 1] / np.sqrt(0.01 * 0.99)
    assert abs(extracted - lam0) <= 1e-8


def test_grouping_code_degenerate_eigenvalue():
    built = grouping_code(ZZ, 2, 1 + 0j)
    c = BinaryUnitaryChannel(0.5, ZZ).to_channel()
    _, residual = kl_check(c, built.code)
    assert residual <= 1e-10
    # lambda on the unit circle: zero entropy despite p = 1/2.
    assert biunitary_code_entropy(0.5, 1 + 0j) == 0.0


def test_grouping_code_errors():
    with pytest.raises(UnsupportedCodeDimensionError):
        grouping_code(U9, 2, 0j)
    with pytest.raises(LambdaOutsideRegionError):
        grouping_code(U4, 2, 0.5 + 0j)


def test_dfs_exists():
    exists, lam = dfs_exists(ZZ, 2)
    assert exists and abs(abs(lam) - 1.0) < 1e-12
    exists, lam = dfs_exists(U4, 2)
    assert not exists and lam is None
    exists, lam = dfs_exists(np.eye(5), 3)
    assert exists and abs(lam - 1.0) < 1e-12


def test_constituent_hulls_cover_region():
    hulls = constituent_hulls(U9, 3)
    region = numerical_range(U9, 3)
    from qecentropy import geometry

    for hull in hulls:
        for z in region.vertices:
            assert geometry.contains(hull, complex(z), 1e-9)


def test_region_json():
    obj = numerical_range(ZZ, 2).to_json()
    assert obj["k"] == 2 and obj["kind"] == "Segment" and len(obj["vertices"]) == 2
