import itertools

import numpy as np
import pytest

import hamrecon as hr
from hamrecon.recon import _sub_assignments
from hamrecon.scheme import position_weights, weight_table

from helpers import eigfn, params, tol_for


def _ball_mask(q, n, d):
    return weight_table(q, n) <= d


def test_reconstruct_origin_character_oracle():
    q, n, h, d = 3, 4, 2, 2
    p = params(q, n)
    beta = (1, 0, 2, 0)  # weight h
    chi = hr.character(p, beta)
    # brute-force the character sum over the sphere
    brute = sum(chi.values[hr.word_rank(p, w)] for w in hr.sphere(p, (0, 0, 0, 0), d))
    assert abs(brute - hr.krawtchouk_value(q, d, h, n)) <= 1e-9
    sphere = hr.SphereData.from_function(chi, d)
    assert abs(hr.reconstruct_origin(sphere, h) - 1.0) <= 1e-9


def test_reconstruct_origin_edge_cases():
    p = params(3, 4)
    f = eigfn(3, 4, 3)
    sphere0 = hr.SphereData.from_function(f, 0)
    assert hr.reconstruct_origin(sphere0, 3) == f.values[0]  # P_0 = 1
    zero = hr.SphereData(p, 2, np.zeros(p.size, dtype=complex))
    assert hr.reconstruct_origin(zero, 2) == 0
    # Krawtchouk zero: P_1(2; 3) = 0
    p33 = params(3, 3)
    bad = hr.SphereData(p33, 1, np.zeros(p33.size, dtype=complex))
    with pytest.raises(hr.ConditionError):
        hr.reconstruct_origin(bad, 2)


def test_layer_rhs_matches_brute_force():
    q, n, h, d = 3, 4, 2, 2
    p = params(q, n)
    f = eigfn(q, n, h, seed=2)
    sphere = hr.SphereData.from_function(f, d)
    for k in (1, 2):
        # partial ball holding exactly the weights below k
        partial = hr.BallData(
            p, k - 1 if k > 1 else 0, np.where(weight_table(q, n) <= k - 1, f.values, 0)
        )
        for positions in itertools.combinations(range(1, n + 1), k):
            system = hr.layer_rhs(sphere, partial, positions, h)
            column = [
                float(hr.coefficient(q, n, h, k, i, d - k)) for i in range(min(k, d - k) + 1)
            ]
            for idx, alpha in enumerate(hr.full_support(p, positions)):
                # Phi by enumeration, asserting the weight bookkeeping
                phi = 0j
                for w in hr.face(p, hr.complement(positions, n), alpha):
                    if hr.hamming_distance(w, alpha) == d - k:
                        assert hr.weight(w) == d
                        phi += sphere.values[hr.word_rank(p, w)]
                _, delta = hr.sigma_delta_split(
                    hr.VertexFunction(p, partial.values), alpha
                )
                psi = sum(column[i] * delta[i] for i in range(len(column)))
                assert abs(system.rhs[idx] - (phi - psi)) <= 1e-9
            # the layer equation itself: M applied to the true values gives the rhs
            truth = f.values[_sub_assignments(q, k) @ position_weights(p, positions)]
            applied = hr.apply_layer_operator(q, n, h, d, k, truth)
            assert np.max(np.abs(applied - system.rhs)) <= tol_for(f)


def test_layer_rhs_zero_input():
    p = params(3, 4)
    zero_sphere = hr.SphereData(p, 2, np.zeros(p.size, dtype=complex))
    zero_ball = hr.BallData(p, 0, np.zeros(p.size, dtype=complex))
    system = hr.layer_rhs(zero_sphere, zero_ball, (2,), 2)
    assert np.all(system.rhs == 0)
    with pytest.raises(ValueError):
        hr.layer_rhs(zero_sphere, zero_ball, (1, 2, 3), 2)  # k > d


def test_solve_layer_dense_oracle_and_linearity():
    q, n, h, d = 3, 4, 2, 2
    rng = np.random.default_rng(30)
    rhs = rng.normal(size=2) + 1j * rng.normal(size=2)  # S^I has (q-1)^1 = 2 points
    system = hr.LayerSystem(positions=(2,), rhs=rhs.copy())
    got = hr.solve_layer(system, q, n, h, d)
    dense = np.array(
        [[float(x) for x in row] for row in hr.dense_layer_matrix(q, n, h, d, 1)]
    )
    expect = np.linalg.solve(dense, rhs)
    assert np.max(np.abs(got - expect)) <= 1e-9
    assert system.solution is got

    # scaling and residual
    scaled = hr.solve_layer(hr.LayerSystem((2,), 3.5 * rhs), q, n, h, d)
    assert np.max(np.abs(scaled - 3.5 * got)) <= 1e-9
    back = hr.apply_layer_operator(q, n, h, d, 1, got)
    assert np.max(np.abs(back - rhs)) <= 1e-9

    # a singular layer is refused with a diagnosis
    bad = hr.LayerSystem((2,), rhs)
    with pytest.raises(hr.ConditionError) as err:
        hr.solve_layer(bad, 3, 4, 3, 2)
    assert err.value.report is not None and (1, 1) in err.value.report.failures


def test_reconstruct_ball_round_trips():
    for q, n in ((3, 4), (4, 3)):
        p = params(q, n)
        for h in range(n + 1):
            f = eigfn(q, n, h, seed=4)
            for d in range(h + 1):
                if not hr.check_conditions(q, n, h, d).passed:
                    continue
                sphere = hr.SphereData.from_function(f, d)
                got = hr.reconstruct_ball(sphere, h)
                mask = _ball_mask(q, n, d)
                err = np.max(np.abs(got.values[mask] - f.values[mask]))
                assert err <= 1e-8 * f.max_abs(), (q, n, h, d, err)
                assert got.d == d and got.eigenindex == h
                # off the ball everything is zero
                assert np.all(got.values[~mask] == 0)
                # the given sphere values are copied through bit-for-bit
                smask = weight_table(q, n) == d
                assert np.array_equal(got.values[smask], sphere.values[smask])


def test_reconstruct_ball_d0_and_zero_and_linearity():
    p = params(3, 4)
    f = eigfn(3, 4, 2, seed=6)
    s0 = hr.SphereData.from_function(f, 0)
    b0 = hr.reconstruct_ball(s0, 2)
    assert b0.values[0] == f.values[0] and np.count_nonzero(b0.values) <= 1

    zero = hr.SphereData(p, 2, np.zeros(p.size, dtype=complex))
    bz = hr.reconstruct_ball(zero, 2)
    assert np.all(bz.values == 0)

    g = eigfn(3, 4, 2, seed=7)
    sf = hr.SphereData.from_function(f, 2)
    sg = hr.SphereData.from_function(g, 2)
    ssum = hr.SphereData(p, 2, sf.values + sg.values)
    combined = hr.reconstruct_ball(ssum, 2)
    separate = hr.reconstruct_ball(sf, 2).values + hr.reconstruct_ball(sg, 2).values
    assert np.max(np.abs(combined.values - separate)) <= 1e-9


def test_reconstruct_ball_condition_failure():
    p = params(3, 4)
    zero = hr.SphereData(p, 2, np.zeros(p.size, dtype=complex))
    with pytest.raises(hr.ConditionError) as err:
        hr.reconstruct_ball(zero, 3)
    assert err.value.report.failures == ((1, 1),)
    # origin failure propagates the same way
    p33 = params(3, 3)
    zero33 = hr.SphereData(p33, 1, np.zeros(p33.size, dtype=complex))
    with pytest.raises(hr.ConditionError):
        hr.reconstruct_ball(zero33, 2)


def test_reconstruct_ball_non_eigen_data_is_reproduced():
    # arbitrary sphere data still comes back verbatim on the sphere itself
    p = params(3, 4)
    rng = np.random.default_rng(31)
    vals = np.where(weight_table(3, 4) == 2, rng.normal(size=p.size) + 0j, 0)
    sphere = hr.SphereData(p, 2, vals)
    got = hr.reconstruct_ball(sphere, 2)
    smask = weight_table(3, 4) == 2
    assert np.array_equal(got.values[smask], vals[smask])


def test_eta_sum_against_direct_oracle():
    q, n, h = 3, 4, 2
    p = params(q, n)
    rng = np.random.default_rng(32)
    checked = 0
    for seed in range(4):
        f = eigfn(q, n, h, seed)
        ball = hr.BallData(p, h, np.where(_ball_mask(q, n, h), f.values, 0), eigenindex=h)
        for positions in itertools.combinations(range(1, n + 1), h):
            for _ in range(5):
                beta = [0] * n
                for pos in positions:
                    beta[pos - 1] = int(rng.integers(0, q))
                beta = tuple(beta)
                closed = hr.eta_sum(ball, positions, beta)
                direct = hr.eta_direct_sum(f, positions, beta)
                assert abs(closed - direct) <= tol_for(f)
                checked += 1
    assert checked >= 100
    # n = 2h: the prefactor q^(n-2h) collapses to 1
    assert params(3, 4).n - 2 * h == 0


def test_eta_sum_validation_and_linearity():
    p = params(3, 4)
    f = eigfn(3, 4, 2, seed=8)
    ball_vals = np.where(_ball_mask(3, 4, 2), f.values, 0)
    ball = hr.BallData(p, 2, ball_vals)
    with pytest.raises(ValueError):
        hr.eta_sum(ball, (1, 2, 3), (0, 0, 0, 0))  # face dimension != ball radius
    with pytest.raises(ValueError):
        hr.eta_sum(ball, (1, 2), (0, 0, 1, 0))  # beta outside the face
    doubled = hr.BallData(p, 2, 2 * ball_vals)
    assert abs(hr.eta_sum(doubled, (1, 2), (1, 2, 0, 0)) - 2 * hr.eta_sum(ball, (1, 2), (1, 2, 0, 0))) <= 1e-9


def test_eta_discrepancy_small_for_eigenfunctions():
    for q, n, h in ((3, 4, 2), (4, 3, 2), (3, 3, 3)):
        f = eigfn(q, n, h, seed=9)
        assert hr.eta_discrepancy(f, h) <= 1e-8 * f.max_abs()


def test_reconstruct_full_round_trips():
    for q, n in ((3, 4), (4, 3), (3, 3)):
        for h in range(n + 1):
            if not hr.check_conditions(q, n, h, h).passed:
                continue
            f = eigfn(q, n, h, seed=10)
            sphere = hr.SphereData.from_function(f, h)
            got = hr.reconstruct_full(sphere, h)
            assert np.max(np.abs(got.values - f.values)) <= 1e-8 * f.max_abs(), (q, n, h)
            assert got.eigenindex == h
            assert hr.eigen_residual(got, h) <= 1e-8 * (1 + got.max_abs())


def test_reconstruct_full_characters_and_zero():
    q, n, h = 3, 4, 2
    p = params(q, n)
    beta = (0, 1, 0, 2)
    chi = hr.character(p, beta)
    got = hr.reconstruct_full(hr.SphereData.from_function(chi, h), h)
    assert np.max(np.abs(got.values - chi.values)) <= 1e-9

    zero = hr.SphereData(p, h, np.zeros(p.size, dtype=complex), eigenindex=h)
    out = hr.reconstruct_full(zero)
    assert np.all(out.values == 0)  # the sphere is a reconstructive set


def test_reconstruct_full_validation_and_h0():
    p = params(3, 4)
    f = eigfn(3, 4, 2, seed=11)
    sphere = hr.SphereData.from_function(f, 1)  # d != h
    with pytest.raises(ValueError):
        hr.reconstruct_full(sphere, 2)
    anon = hr.SphereData(p, 2, np.where(weight_table(3, 4) == 2, f.values, 0))
    with pytest.raises(ValueError):
        hr.reconstruct_full(anon)  # no eigenindex anywhere

    const = hr.VertexFunction(p, np.full(p.size, 2.5 - 1j), eigenindex=0)
    got = hr.reconstruct_full(hr.SphereData.from_function(const, 0), 0)
    assert np.max(np.abs(got.values - const.values)) == 0


def test_sphere_and_ball_json_round_trip():
    p = params(3, 4)
    f = eigfn(3, 4, 2, seed=12)
    sphere = hr.SphereData.from_function(f, 2)
    back = hr.SphereData.from_dict(sphere.to_dict())
    assert back.d == 2 and back.eigenindex == 2
    assert np.array_equal(back.values, sphere.values)

    ballr = hr.reconstruct_ball(sphere, 2)
    back_ball = hr.BallData.from_dict(ballr.to_dict())
    assert np.array_equal(back_ball.values, ballr.values)

    # omitted words mean zero; the radius comes from the explicit field
    empty = hr.SphereData.from_dict({"q": 3, "n": 4, "d": 2, "eigenindex": 2, "values": []})
    assert empty.d == 2 and np.all(empty.values == 0)
    # without the field the radius is inferred from the words present
    inferred = hr.SphereData.from_dict(
        {"q": 3, "n": 4, "eigenindex": 2, "values": [{"w": "0110", "re": 1.0, "im": 0.0}]}
    )
    assert inferred.d == 2
    with pytest.raises(ValueError):
        hr.SphereData.from_dict(
            {
                "q": 3,
                "n": 4,
                "values": [
                    {"w": "0110", "re": 1.0, "im": 0.0},
                    {"w": "1110", "re": 1.0, "im": 0.0},
                ],
            }
        )
    with pytest.raises(ValueError):
        hr.SphereData.from_dict({"q": 3, "n": 4, "values": []})
    # constructing sphere data with off-domain values is rejected
    with pytest.raises(ValueError):
        hr.SphereData(p, 2, f.values)


def test_uniqueness_via_difference():
    # two eigenfunctions agreeing on W_d agree on B_d: reconstruct their
    # difference's (zero) sphere data
    p = params(3, 4)
    zero = hr.SphereData(p, 2, np.zeros(p.size, dtype=complex))
    out = hr.reconstruct_ball(zero, 2)
    assert np.all(out.values == 0)
