import math

import numpy as np
import pytest

from boostpush import (
    BOOST_GENERATORS,
    LieParams,
    METRIC,
    MatrixExpOverflowError,
    NotLieElementError,
    ROTATION_GENERATORS,
    SingularMatrixError,
    adjoint,
    boost_generator,
    commutator,
    extract_params,
    finite_boost,
    lie_matrix,
    mat_exp,
    rotation_generator,
)

rng = np.random.default_rng(20240817)

# Integer reference matrices, written out by hand.
K_REF = {
    1: [[0, 1, 0, 0], [1, 0, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0]],
    2: [[0, 0, 1, 0], [0, 0, 0, 0], [1, 0, 0, 0], [0, 0, 0, 0]],
    3: [[0, 0, 0, 1], [0, 0, 0, 0], [0, 0, 0, 0], [1, 0, 0, 0]],
}
S_REF = {
    1: [[0, 0, 0, 0], [0, 0, 0, 0], [0, 0, 0, -1], [0, 0, 1, 0]],
    2: [[0, 0, 0, 0], [0, 0, 0, 1], [0, 0, 0, 0], [0, -1, 0, 0]],
    3: [[0, 0, 0, 0], [0, 0, -1, 0], [0, 1, 0, 0], [0, 0, 0, 0]],
}


def int_matmul(a, b):
    """Independent 4x4 multiplication oracle in exact integer arithmetic."""
    return [
        [sum(a[i][k] * b[k][j] for k in range(4)) for j in range(4)]
        for i in range(4)
    ]


def int_commutator(a, b):
    ab = int_matmul(a, b)
    ba = int_matmul(b, a)
    return [[ab[i][j] - ba[i][j] for j in range(4)] for i in range(4)]


def levi_civita(i, j, k):
    if (i, j, k) in ((1, 2, 3), (2, 3, 1), (3, 1, 2)):
        return 1
    if (i, j, k) in ((3, 2, 1), (1, 3, 2), (2, 1, 3)):
        return -1
    return 0


def series_exp(m, t, terms=60):
    """Plain truncated-series oracle, independent of mat_exp internals."""
    a = np.asarray(m, dtype=float) * t
    out = np.eye(4)
    term = np.eye(4)
    for n in range(1, terms):
        term = term @ a / n
        out = out + term
    return out


def test_boost_generators_exact():
    for axis in (1, 2, 3):
        assert np.array_equal(boost_generator(axis), np.array(K_REF[axis], dtype=float))


def test_rotation_generators_exact():
    for axis in (1, 2, 3):
        assert np.array_equal(rotation_generator(axis), np.array(S_REF[axis], dtype=float))


def test_boost_generators_symmetric():
    for k in BOOST_GENERATORS:
        assert np.array_equal(k, k.T)


def test_rotation_generators_antisymmetric():
    for s in ROTATION_GENERATORS:
        assert np.array_equal(s, -s.T)


def test_invalid_axis_rejected():
    for bad in (0, 4, -1):
        with pytest.raises(ValueError):
            boost_generator(bad)
        with pytest.raises(ValueError):
            rotation_generator(bad)


def test_lie_matrix_pure_boost_is_generator():
    assert np.array_equal(lie_matrix(LieParams((1, 0, 0))), boost_generator(1))


def test_lie_matrix_pure_rotation():
    m = lie_matrix(LieParams(rotation=(0, 0, 1)))
    assert np.array_equal(m, -rotation_generator(3))
    assert m[1, 2] == 1.0
    assert m[2, 1] == -1.0


def test_lie_matrix_general_layout():
    e = (0.3, -1.2, 0.5)
    b = (2.0, 0.0, -0.7)
    m = lie_matrix(LieParams(e, b))
    expected = np.array(
        [
            [0.0, e[0], e[1], e[2]],
            [e[0], 0.0, b[2], -b[1]],
            [e[1], -b[2], 0.0, b[0]],
            [e[2], b[1], -b[0], 0.0],
        ]
    )
    assert np.array_equal(m, expected)
    combo = sum(e[i] * BOOST_GENERATORS[i] for i in range(3)) - sum(
        b[i] * ROTATION_GENERATORS[i] for i in range(3)
    )
    assert np.array_equal(m, combo)


def test_extract_params_generators():
    p = extract_params(boost_generator(2))
    assert np.array_equal(p.boost, [0, 1, 0])
    assert np.array_equal(p.rotation, [0, 0, 0])
    p = extract_params(-rotation_generator(1))
    assert np.array_equal(p.boost, [0, 0, 0])
    assert np.array_equal(p.rotation, [1, 0, 0])


def test_extract_params_roundtrip():
    p = LieParams((0.3, -1.2, 0.5), (2.0, 0.0, -0.7))
    q = extract_params(lie_matrix(p))
    assert np.max(np.abs(q.boost - p.boost)) <= 1e-14
    assert np.max(np.abs(q.rotation - p.rotation)) <= 1e-14


def test_extract_params_rejects_bad_shape():
    m = lie_matrix(LieParams((1, 0, 0)))
    m[0, 1] += 1e-6
    with pytest.raises(NotLieElementError):
        extract_params(m, tol=1e-9)
    # The same deviation passes under a looser tolerance.
    extract_params(m, tol=1e-3)


def test_mat_exp_boost_closed_values():
    out = mat_exp(boost_generator(1), 0.5)
    assert abs(out[0, 0] - math.cosh(0.5)) < 1e-13
    assert abs(out[1, 1] - math.cosh(0.5)) < 1e-13
    assert abs(out[0, 1] - math.sinh(0.5)) < 1e-13
    assert abs(out[1, 0] - math.sinh(0.5)) < 1e-13
    assert np.allclose(out[2:, 2:], np.eye(2), atol=1e-15, rtol=0)
    assert np.allclose(out, series_exp(boost_generator(1), 0.5), atol=1e-13, rtol=0)


def test_mat_exp_rotation_closed_values():
    phi = 0.8
    out = mat_exp(rotation_generator(3), -phi)
    assert abs(out[1, 1] - math.cos(phi)) < 1e-13
    assert abs(out[2, 2] - math.cos(phi)) < 1e-13
    assert abs(out[1, 2] - math.sin(phi)) < 1e-13
    assert abs(out[2, 1] + math.sin(phi)) < 1e-13
    assert out[0, 0] == 1.0 and out[3, 3] == 1.0
    assert np.allclose(out, series_exp(rotation_generator(3), -phi), atol=1e-13, rtol=0)


def test_mat_exp_zero_is_identity():
    assert np.array_equal(mat_exp(np.zeros((4, 4)), 1.0), np.eye(4))
    assert np.array_equal(mat_exp(lie_matrix(LieParams((1, 2, 3), (4, 5, 6))), 0.0), np.eye(4))


def test_mat_exp_general_matches_series():
    for _ in range(50):
        m = lie_matrix(LieParams(rng.uniform(-1, 1, 3), rng.uniform(-1, 1, 3)))
        t = float(rng.uniform(-2, 2))
        got = mat_exp(m, t)
        want = series_exp(m, t)
        scale = max(1.0, float(np.max(np.abs(want))))
        assert np.max(np.abs(got - want)) < 1e-13 * scale


def test_mat_exp_closed_forms_match_series_at_large_argument():
    got = mat_exp(boost_generator(2), 3.0)
    assert np.max(np.abs(got - series_exp(boost_generator(2), 3.0))) < 1e-13 * math.cosh(3.0)
    got = mat_exp(rotation_generator(1), 3.0)
    assert np.max(np.abs(got - series_exp(rotation_generator(1), 3.0))) < 1e-13


def test_mat_exp_overflow_rejected():
    with pytest.raises(MatrixExpOverflowError):
        mat_exp(boost_generator(1), 50.0)


def test_mat_exp_inverse_property():
    for _ in range(30):
        m = lie_matrix(LieParams(rng.uniform(-1, 1, 3), rng.uniform(-1, 1, 3)))
        t = float(rng.uniform(-2, 2))
        prod = mat_exp(m, t) @ mat_exp(m, -t)
        assert np.allclose(prod, np.eye(4), atol=1e-12, rtol=0)


def test_structure_constants_exact():
    # [K_i, K_j] = -eps_ijk S_k, [S_i, S_j] = eps_ijk S_k, [S_i, K_j] = eps_ijk K_k,
    # all verified against an independent integer multiplication oracle.
    for i in (1, 2, 3):
        for j in (1, 2, 3):
            eps_s = [[0] * 4 for _ in range(4)]
            eps_k = [[0] * 4 for _ in range(4)]
            for k in (1, 2, 3):
                c = levi_civita(i, j, k)
                if c:
                    for r in range(4):
                        for col in range(4):
                            eps_s[r][col] += c * S_REF[k][r][col]
                            eps_k[r][col] += c * K_REF[k][r][col]
            kk = int_commutator(K_REF[i], K_REF[j])
            ss = int_commutator(S_REF[i], S_REF[j])
            sk = int_commutator(S_REF[i], K_REF[j])
            assert kk == [[-x for x in row] for row in eps_s]
            assert ss == eps_s
            assert sk == eps_k
            # and the library commutator reproduces the oracle exactly
            assert np.array_equal(
                commutator(BOOST_GENERATORS[i - 1], BOOST_GENERATORS[j - 1]),
                np.array(kk, dtype=float),
            )
            assert np.array_equal(
                commutator(ROTATION_GENERATORS[i - 1], ROTATION_GENERATORS[j - 1]),
                np.array(ss, dtype=float),
            )
            assert np.array_equal(
                commutator(ROTATION_GENERATORS[i - 1], BOOST_GENERATORS[j - 1]),
                np.array(sk, dtype=float),
            )


def test_specific_commutators():
    assert np.array_equal(
        commutator(boost_generator(1), boost_generator(2)), -rotation_generator(3)
    )
    assert np.array_equal(
        commutator(rotation_generator(1), rotation_generator(2)), rotation_generator(3)
    )
    assert np.array_equal(
        commutator(rotation_generator(1), boost_generator(2)), boost_generator(3)
    )


def test_exponential_preserves_metric():
    for _ in range(30):
        m = lie_matrix(LieParams(rng.uniform(-1, 1, 3), rng.uniform(-1, 1, 3)))
        g = mat_exp(m, float(rng.uniform(-2, 2)))
        assert np.max(np.abs(g.T @ METRIC @ g - METRIC)) < 1e-12


def test_adjoint_identity_frame():
    m = lie_matrix(LieParams((0.3, -0.2, 0.9), (1.0, 0.0, -0.4)))
    assert np.allclose(adjoint(np.eye(4), m), m, atol=1e-15, rtol=0)


def test_adjoint_transverse_boost_generator():
    # Conjugating K_2 by an axis-1 boost at v = 0.6 mixes in a rotation:
    # boost part gamma = 1.25 along axis 2, rotation part gamma*v = 0.75
    # about axis 3 (worked out by hand).
    l = finite_boost((0.6, 0, 0))
    p = extract_params(adjoint(l, boost_generator(2)), tol=1e-12)
    assert np.allclose(p.boost, [0.0, 1.25, 0.0], atol=1e-12, rtol=0)
    assert np.allclose(p.rotation, [0.0, 0.0, 0.75], atol=1e-12, rtol=0)


def test_adjoint_rotation_generator():
    # Conjugating the axis-3 rotation element by the same boost produces a
    # boost part gamma*v along axis 2 and rotation part gamma about axis 3.
    l = finite_boost((0.6, 0, 0))
    p = extract_params(adjoint(l, -rotation_generator(3)), tol=1e-12)
    assert np.allclose(p.boost, [0.0, 0.75, 0.0], atol=1e-12, rtol=0)
    assert np.allclose(p.rotation, [0.0, 0.0, 1.25], atol=1e-12, rtol=0)


def test_adjoint_linearity():
    l = finite_boost((0.3, -0.5, 0.2))
    m = lie_matrix(LieParams(rng.uniform(-1, 1, 3), rng.uniform(-1, 1, 3)))
    n = lie_matrix(LieParams(rng.uniform(-1, 1, 3), rng.uniform(-1, 1, 3)))
    a, b = 0.7, -2.1
    left = adjoint(l, a * m + b * n)
    right = a * adjoint(l, m) + b * adjoint(l, n)
    assert np.max(np.abs(left - right)) < 1e-12


def test_adjoint_preserves_algebra_shape():
    for _ in range(20):
        l = finite_boost(rng.uniform(-0.55, 0.55, 3))
        m = lie_matrix(LieParams(rng.uniform(-1, 1, 3), rng.uniform(-1, 1, 3)))
        extract_params(adjoint(l, m), tol=1e-12)  # must not raise


def test_adjoint_singular_frame_rejected():
    with pytest.raises(SingularMatrixError):
        adjoint(np.zeros((4, 4)), boost_generator(1))


def test_boosts_and_rotations_commute_to_first_order():
    # The swap defect of finite boost and rotation maps scales as |a*b|:
    # halving both parameters must quarter it.
    def defect(i, j, a, b):
        lhs = mat_exp(BOOST_GENERATORS[i], a) @ mat_exp(ROTATION_GENERATORS[j], b)
        rhs = mat_exp(ROTATION_GENERATORS[j], b) @ mat_exp(BOOST_GENERATORS[i], a)
        return np.max(np.abs(lhs - rhs))

    for i in range(3):
        for j in range(3):
            if i == j:
                continue  # commuting pair, defect is higher order
            a, b = 0.08, 0.06
            d1 = defect(i, j, a, b)
            d2 = defect(i, j, a / 2, b / 2)
            assert d1 < 2.0 * a * b
            assert abs(d1 / d2 - 4.0) < 0.5
