import pytest

import swforge

DELTA_105 = "t^4 - 5*t^3 + 13*t^2 - 21*t + 25 - 21*t^-1 + 13*t^-2 - 5*t^-3 + t^-4"


def test_two_bridge_pair():
    for pres in ("K(105/64)", "K(105/76)"):
        d = swforge.alexander(pres)
        assert str(d) == DELTA_105
        assert d.evaluate({"t": "1"}) == "1"


def test_routes_agree():
    routes = swforge.alexander_routes("T(3,5)")
    assert set(routes) == {"burau", "torus"}
    assert routes["burau"] == routes["torus"]


def test_poly_arithmetic():
    z = swforge.Poly("t^(1/2) - t^(-1/2)")
    assert z * z == swforge.Poly("t - 2 + t^-1")
    assert (z ** 2 + 1) == swforge.alexander("T(2,3)")
    assert swforge.Poly.from_json(z.to_json()) == z
    assert z.evaluate({"t": "4"}) == "3/2"


def test_knot_surgery_on_k3():
    sw, symmetric, orbits = swforge.knot_surgery(2, swforge.alexander("T(2,3)"))
    assert str(sw) == "tT^2 - 1 + tT^-2"
    assert symmetric
    assert orbits == 2


def test_en_binomials():
    from math import comb

    for n in range(2, 13):
        poly = swforge.sw_en(n)
        expected = swforge.Poly("0")
        for m in range(1, n):
            c = (-1) ** (m - 1) * comb(n - 2, m - 1)
            expected = expected + swforge.Poly(f"{c}*tF^{n - 2 * m}")
        assert poly == expected


def test_geography():
    for n in (4, 5, 7, 10):
        cn = swforge.fiber_sum_geography(n, swforge.r_value(2, 2 * n + 1), 3 * n + 7)
        assert cn["c1sq"] == n - 2
        assert cn["chi"] == n + 1
        assert cn["noether"]["margin"] == 2 - n
    assert swforge.chain_boundary(swforge.blowdown_chain(5)) == (16, 3)
    assert not swforge.lens_equiv(105, 64, 105, 76)


def test_sw_helpers():
    assert swforge.pair_product_sw(swforge.alexander("K(105/64)")).evaluate({"t": "1"}) == "105"
    assert swforge.cover_sw(1, 3).evaluate({"t1": "1", "t2": "1", "t3": "1"}) == "0"
    zk = swforge.z_k_analysis("2*t - 3 + 2*t^-1", 1)
    assert zk["symplectic_verdict"] == "nonsymplectic"


def test_errors():
    with pytest.raises(swforge.ParseError):
        swforge.alexander("T(2,4)")
    with pytest.raises(ValueError):
        swforge.alexander("B(2: 1 1)")


def test_run():
    code, out, _ = swforge.run("lens", 7, 2, 7, 3)
    assert code == 0 and out["equivalent"] is True
    code, _, err = swforge.run("bogus")
    assert code == 2 and "usage" in err
