"""Sphere-to-ball recovery: mask an eigenfunction to one sphere, get the
whole ball back, layer by layer.

Run:  python demos/05_ball_reconstruction.py
"""

import numpy as np

import hamrecon as hr
from hamrecon.scheme import weight_table

q, n, h, d = 4, 5, 3, 3
params = hr.SchemeParams(q, n)

truth = hr.random_eigenfunction(params, h, seed=7)
sphere = hr.SphereData.from_function(truth, d)
n_sphere = sphere.domain_ranks().size
n_ball = int(np.count_nonzero(weight_table(q, n) <= d))
print(f"(q, n) = ({q}, {n}), eigenindex h = {h}")
print(f"given: {n_sphere} values on the weight-{d} sphere; wanted: {n_ball} values on the ball\n")

report = hr.check_conditions(q, n, h, d)
print(f"conditions: pass = {report.passed}, origin value P_{d}({h}; {n}) = {report.origin_value}")

center = hr.reconstruct_origin(sphere, h)
print(f"center value: recovered {center:.6f}, truth {truth.values[0]:.6f}")

ball = hr.reconstruct_ball(sphere, h)
for w in range(d + 1):
    mask = weight_table(q, n) == w
    err = np.max(np.abs(ball.values[mask] - truth.values[mask]))
    print(f"  weight-{w} layer ({int(mask.sum()):4d} words): max error {err:.2e}")

print("\nlinearity: recovery of a sum is the sum of recoveries")
other = hr.random_eigenfunction(params, h, seed=8)
s2 = hr.SphereData.from_function(other, d)
combined = hr.SphereData(params, d, sphere.values + s2.values)
lhs = hr.reconstruct_ball(combined, h).values
rhs = ball.values + hr.reconstruct_ball(s2, h).values
print(f"  superposition defect: {np.max(np.abs(lhs - rhs)):.2e}")

print("\na cell whose conditions fail raises instead of guessing:")
try:
    bad = hr.SphereData(hr.SchemeParams(3, 4), 2, np.zeros(81, dtype=complex))
    hr.reconstruct_ball(bad, 3)
except hr.ConditionError as exc:
    print(f"  ConditionError: {exc}")
    print(f"  failing (k, l) pairs: {exc.report.failures}")
