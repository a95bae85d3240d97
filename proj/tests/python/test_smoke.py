import json

import pytest

import rackcollapse as rc


def test_field_arithmetic():
    f = rc.FieldCtx(2, 3)
    assert f.q == 8
    assert f.modulus == 11  # t^3 + t + 1
    assert f.mul(2, 4) == 3  # t * t^2 = t + 1
    assert f.delta(2) == 6
    assert f.phi(2) == 7
    values = {f.phi(v) for v in range(1, 8)}
    assert len(values) == 7


def test_group_orders():
    assert rc.build_group("sz:h=0").order == 20
    sz8 = rc.build_group("sz:h=1")
    assert sz8.order == 29120
    assert sz8.degree == 65
    assert rc.build_group("psl2:q=8").order == 504
    assert rc.build_group("ree-g2-3").order == 1512
    with pytest.raises(ValueError):
        rc.build_group("psl2:q=7")


def test_perm_and_classes():
    g = rc.build_group("sz2-affine")
    assert rc.conjugacy_class_count(g) == 5
    orders = sorted(rep.order() for rep in rc.class_representatives(g))
    assert orders == [1, 2, 4, 4, 5]
    for rep in rc.class_representatives(g):
        assert rc.conj_orbit_size(g, rep) * rc.centralizer_order(g, rep) == g.order


def test_classify_and_certificates():
    rows = json.loads(rc.classify("sz:h=1", class_order=4, seed=1))
    assert len(rows) == 2
    for row in rows:
        cert = row["detectors"]["F"]["certificate"]
        assert row["detectors"]["F"]["found"]
        assert rc.verify_certificate(json.dumps(cert))
        cert["witnesses"][0] = cert["witnesses"][1]  # repeated witness: never type F
        assert not rc.verify_certificate(json.dumps(cert))


def test_braiding_reports():
    inv = json.loads(rc.involution_braiding_report(1))
    assert inv["span_contains_one"]
    assert inv["all_infinite"]
    assert inv["characters"] == 8

    g2 = json.loads(rc.frobenius_braiding_report())
    assert g2["centralizer_order"] == 18
    assert g2["subrack_size"] == 3
    assert g2["all_infinite"]


def test_direct_product_and_reality():
    p = rc.build_group("psl2:q=8")
    prod = rc.direct_product(p, p)
    assert prod.order == 254016
    ree = rc.build_group("ree-g2-3")
    phi = next(rep for rep in rc.class_representatives(ree)
               if rep.order() == 3 and not rc.is_real(ree, rep))
    assert not rc.az_real_odd(ree, phi)
