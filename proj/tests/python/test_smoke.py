import pytest

import maxtsp


def equilateral(n):
    return maxtsp.Instance([[0.0 if i == j else 1.0 for j in range(n)] for i in range(n)])


def test_load_and_validate():
    inst = maxtsp.load_instance("maxtsp v1 3 points\nnorm euclidean dim 1\n0\n1\n2\n")
    assert len(inst) == 3
    assert inst.dist(0, 2) == 2.0
    report = maxtsp.validate_metric(inst)
    assert report["passed"]
    assert maxtsp.load_instance(inst.serialize()) == inst


def test_asymmetric_matrix_raises():
    with pytest.raises(maxtsp.MetricError):
        maxtsp.load_instance("maxtsp v1 3 matrix\n0 1 1\n2 0 1\n1 1 0\n")
    with pytest.raises(maxtsp.ParseError):
        maxtsp.load_instance("maxtsp v2 3 matrix\n")
    with pytest.raises(ValueError):
        maxtsp.generate("spiral", 5)


def test_matching():
    pairs, weight = maxtsp.max_weight_perfect_matching(
        4, [(0, 1, 1.0), (1, 2, 2.0), (2, 3, 1.0), (3, 0, 2.0)])
    assert weight == 4.0
    assert sorted(pairs) == [(0, 3), (1, 2)]


def test_cycle_cover_and_exact():
    inst = maxtsp.generate("random-metric", 8, seed=3)
    cover = maxtsp.max_weight_cycle_cover(inst)
    best = maxtsp.held_karp_max(inst)
    assert cover.weight >= best.weight - 1e-9
    assert best.weight == pytest.approx(maxtsp.brute_force_tour(inst).weight)
    tour = maxtsp.serdyukov_combine(inst, cover)
    assert sorted(tour.order) == list(range(8))


def test_equilateral_solvers():
    inst = equilateral(6)
    for tour, cert in (maxtsp.exact(inst), maxtsp.five_sixths(inst),
                       maxtsp.algorithm_a(inst, 0.5)):
        assert tour.weight == 6.0
        assert cert.weight_tour == 6.0


def test_eptas_certificate():
    inst = maxtsp.generate("line", 40, seed=1)
    tour, cert = maxtsp.eptas(inst, 0.3, 1.0)
    assert cert.branch == "five-sixths"
    assert cert.claimed_bound == pytest.approx(5 / 6)
    tour, cert = maxtsp.algorithm_a(inst, 0.5, 1.0)
    assert cert.branch == "algorithm-A"
    assert cert.k_after_gluing <= (2 / 0.5) ** 2 / 2
    assert tour.weight >= cert.posterior_bound * cert.weight_cover - 1e-9
    assert "branch" in cert.to_text()


def test_asymptotic_line():
    inst = maxtsp.generate("line", 14, seed=5)
    tour, cert = maxtsp.asymptotic(inst, 1.0)
    opt = maxtsp.held_karp_max(inst).weight
    assert (opt - tour.weight) / opt <= (11 / 6) / 14 ** (1 / 3)
