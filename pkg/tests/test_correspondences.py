import json

import pytest

from wittkit.correspondences import (CertificateError, FAMILIES, PlaneCorrespondence, boundary,
                                     builtin_corpus, compose, gm1, gm2, gm3, gm4, make_item,
                                     rejected_instances, same_cycle, verify_homotopy,
                                     witt_property_cycles)
from wittkit.exact import GF, QQ, Zmod, parse_polynomial

F5, F7 = GF(5), GF(7)


def test_gm1_boundaries_at_s2():
    g = PlaneCorrespondence.parse(QQ, ("x",), "y", "(1-t)*(y-x^2)*(y-1) + t*(y-x)^2", param="t")
    assert boundary(g, 0).poly == parse_polynomial("(y-x^2)*(y-1)", QQ, ("x", "y"))
    assert boundary(g, 1).poly == parse_polynomial("(y-x)^2", QQ, ("x", "y"))


def test_gm3_with_numbers():
    g = PlaneCorrespondence.parse(F7, ("x",), "z", "(1-t)*(z-2)*(z-3) + t*(z-6)*(z-1)", param="t")
    assert boundary(g, 0).poly == parse_polynomial("(z-2)*(z-3)", F7, ("x", "z"))
    assert boundary(g, 1).poly == parse_polynomial("(z-6)*(z-1)", F7, ("x", "z"))


def test_constant_homotopy():
    g = PlaneCorrespondence.parse(F5, ("x",), "y", "y^2 - x", param="t")
    assert same_cycle(boundary(g, 0), boundary(g, 1))


def test_compose_examples():
    a = PlaneCorrespondence.parse(QQ, ("x",), "y", "y^2 - x")
    b = PlaneCorrespondence.parse(QQ, ("y",), "z", "z - y^3")
    c = compose(a, b)
    target = parse_polynomial("z^2 - x^3", QQ, ("x", "z"))
    assert c.poly == target or c.poly == -target
    ident = PlaneCorrespondence.parse(QQ, ("x",), "y", "y - x")
    b2 = PlaneCorrespondence.parse(QQ, ("y",), "z", "z^2 - 3*y")
    assert same_cycle(compose(ident, b2), PlaneCorrespondence.parse(QQ, ("x",), "z", "z^2 - 3*x"))


def test_corpus_items_from_statements():
    r = verify_homotopy(gm1(F7, 2))
    assert r["pass"]
    assert sorted((c["component"], c["mult"]) for c in r["boundary0"]["components"]) == sorted(
        [(str(parse_polynomial("y - x^2", F7, ("x", "y"))), 1), (str(parse_polynomial("y - 1", F7, ("x", "y"))), 1)])
    assert [c["mult"] for c in r["boundary1"]["components"]] == [2]
    r = verify_homotopy(gm2(F7, 3))
    assert r["pass"]
    assert sorted(c["mult"] for c in r["boundary1"]["components"]) == [1, 2]


@pytest.mark.parametrize("F", [F5, F7, QQ], ids=lambda F: F.tag)
def test_even_s_is_rejected(F):
    for item in rejected_instances(F):
        r = verify_homotopy(item)
        assert not r["pass"] and "not a unit" in r["error"]
    with pytest.raises(CertificateError):
        boundary(gm2(F, 2).gamma, 0)


@pytest.mark.parametrize("F", [F5, F7, QQ], ids=lambda F: F.tag)
def test_corpus_passes(F):
    items = builtin_corpus(F)
    assert {it.family for it in items} == set(FAMILIES)
    for item in items + witt_property_cycles(F):
        assert verify_homotopy(item)["pass"], (item.family, item.params)


def test_swap_homotopy_lives_in_symmetric_square_coordinates():
    item = gm4(F7)
    assert dict(item.gamma.side)["w"] is not None
    r = verify_homotopy(item)
    assert r["pass"] and r["boundary0"]["side"]


def test_report_shape_and_json():
    r = verify_homotopy(gm3(F5))
    for key in ("family", "params", "boundary0", "boundary1", "expected0", "expected1", "pass"):
        assert key in r
    assert json.loads(json.dumps(r)) == r


def test_make_item_errors():
    with pytest.raises(ValueError):
        make_item("nope", F5)
    with pytest.raises(ValueError):
        make_item("gm1", F5)
    with pytest.raises(ValueError):
        builtin_corpus(Zmod(9))
