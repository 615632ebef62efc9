"""Smoke test for the edmshrink extension.

Build and install first:

    maturin build --release -o dist && pip install dist/edmshrink-*.whl
"""

import math

import edmshrink as es


def close(a, b, tol=1e-8):
    return all(abs(x - y) <= tol for ra, rb in zip(a, b) for x, y in zip(ra, rb))


def main():
    # Four points on a line; distances are squared.
    pts = [[0.0], [1.0], [2.0], [4.0]]
    d = es.edm_from_points(pts)
    assert d[0][3] == 16.0
    assert es.is_edm(d) == (True, 1)

    k = es.schoenberg_r(d)
    assert abs(sum(k[0])) < 1e-12
    assert close(es.tau_transform(k), d)

    p, diag = es.project_edm_cone(d)
    assert close(p, d) and diag["converged"]

    fit = es.distance_shrinkage(d, 0.0)
    assert fit.embed_dim == 1 and close(fit.d_hat, d)
    d_r, coords = fit.truncate(1)
    assert len(coords) == 4 and len(coords[0]) == 1

    # Equilateral triangle shrunk to a point.
    tri = [[0.0, 1.0, 1.0], [1.0, 0.0, 1.0], [1.0, 1.0, 0.0]]
    assert es.distance_shrinkage(tri, 6.0).embed_dim == 0
    a = es.analyze_dim3([[0.0, 1.0, 10.0], [1.0, 0.0, 1.0], [10.0, 1.0, 0.0]])
    assert a["dim"] == 1

    d_mds, _ = es.classical_mds(d, 1)
    assert es.kruskal_stress(d_mds, d) < 1e-8
    assert es.default_lambda(100, 1.0) == 44.0
    assert es.oracle_bound(50, 0.5, 3) == 1800.0
    assert es.similarity_to_dissimilarity([[1.0, 0.5], [0.5, 2.0]])[0][1] == 2.0

    helix = [[0.5 * math.cos(t), 0.5 * math.sin(t), 0.3 * t] for t in (0.4 * i for i in range(30))]
    rep = es.simulate(helix, 0.05, reps=3, seed=1)
    assert rep["convergence"]["not_converged"] == 0
    assert len(rep["replicates"]) == 3

    try:
        es.is_edm([[0.0, 1.0], [2.0, 0.0]])
    except ValueError:
        pass
    else:
        raise AssertionError("asymmetric input accepted")

    print("edmshrink smoke test ok:", fit, "shrinkage stress", rep["shrinkage"]["mean"])


if __name__ == "__main__":
    main()
