import pytest

import torelli as t


def test_cross_ratio_normalization():
    assert t.cross_ratio("inf", "0", "1", "5") == "5"
    assert t.cross_ratio("0", "inf", "1", "4") == "1/4"
    assert t.cross_ratio("2", "0", "1", "3") == "-3"
    with pytest.raises(ValueError):
        t.cross_ratio("2", "2", "1", "3")


def test_theta_and_generators():
    sigma = t.Permutation("(2 3)(4 5)", 5)
    element = t.theta(4, sigma)
    assert [str(c) for c in element.coords] == ["-1*(z2-1)", "-1*(z1-1)"]
    assert t.find_permutation(4, element) == sigma

    a, b = t.standard_generators(4)
    assert [str(c) for c in a.coords] == ["1*z1^-1", "1*z2^-1"]
    assert t.find_permutation(4, a).cycles() == "(1 2)"


def test_apply_and_sampler_determinism():
    a, _ = t.standard_generators(4)
    image = a.apply("2,5")
    assert image.coords() == ["1/2", "1/5"]

    z1 = t.sample_omega_point(5, 7, 100)
    z2 = t.sample_omega_point(5, 7, 100)
    assert z1 == z2
    assert len(z1.coords()) == 3


def test_group_structure():
    kernel = t.kernel_theta3()
    assert sorted(p.cycles() for p in kernel) == [
        "()",
        "(1 2)(3 4)",
        "(1 3)(2 4)",
        "(1 4)(2 3)",
    ]
    a, b = t.standard_generators(4)
    assert len(t.closure(4, [a, b])) == 120
    assert len(t.coordinate_catalog(4)) == 30


def test_classification():
    assert t.collision_free(4, "1,2,3,4", "1,2,3,5")
    assert not t.collision_free(4, "1,2,3,4", "2,1,3,4")
    witness = t.collision_witness(4, "1,2,3,4", "2,1,3,4")
    assert witness is not None
    f1 = t.lc_map(4, (1, 2, 3, 4))
    f2 = t.lc_map(4, (2, 1, 3, 4))
    assert f1.evaluate(witness) == f2.evaluate(witness)

    assert t.collision_witness(4, "1,2,3,4", "1,2,3,5") is None
    assert t.certify_no_real_collision_points(4, "1,2,3,5", "1,3,5,2")

    assert t.validate_tuple(4, ["1,2,3,4", "1,2,3,5"]) == "valid-map n=4"

    maps = t.enumerate_maps(4, 3)
    assert len(maps) == 30
    with pytest.raises(ValueError):
        t.enumerate_maps(4, 5)


def test_lift_and_forgetful():
    sigma = t.Permutation("(2 3)(4 5)", 5)
    lift = t.lift_permutation(sigma, 5, [1, 2])
    assert lift.sigma_hat.cycles() == "(2 3)(4 5)"
    assert lift.direct_construction

    projected = t.apply_forgetful(5, [1, 2], "2,3,5")
    assert str(projected) == "2,3"


def test_factored_map_algebra():
    f = t.FactoredMap("1*z1*(z1-z2)^-1", 4)
    assert f.evaluate("2,3") == "-2"
    assert str(f.multiply(f.invert())) == "1"
    g = t.FactoredMap("-1*(z1-1)", 4)
    assert t.equal_randomized(f, f, trials=4, seed=1)
    assert not t.equal_randomized(f, g, trials=4, seed=1)


def test_blackbox_matching():
    hidden = t.theta(4, t.Permutation("(1 3 5)", 5))
    matches = t.find_permutations_blackbox(4, lambda z: hidden.apply(z))
    assert [p.cycles() for p in matches] == ["(1 3 5)"]
