import json
import random

import pytest

from gf2perfect.canaday import verify_minimal_prime_parity
from gf2perfect.gf2poly import degree, parse, pow_, square, translate
from gf2perfect.perfect import (
    C1, C2, C3, C4, C5, S1, T1, T2, Shape, exhaustive_search, is_perfect,
    odd_square_search, shape_search, trivial_perfect,
)
from gf2perfect.sigma import Parity, sigma


def test_named_catalog_entries():
    assert C1 == parse('x^2(x+1)(x^2+x+1)^2(x^4+x+1)')
    assert C3 == parse('x^4(x+1)^4(x^4+x^3+x^2+x+1)(x^4+x^3+1)')
    assert C4 == parse('x^6(x+1)^3(x^3+x^2+1)(x^3+x+1)')
    assert T2 == parse('x^3(x+1)^4(x^4+x^3+1)')
    assert S1 == parse('x^6(x+1)^4(x^3+x+1)(x^3+x^2+1)(x^4+x^3+1)')
    assert translate(C3) == C3
    assert (degree(C1), degree(C3), degree(C4), degree(S1)) == (11, 16, 15, 20)


def test_is_perfect_examples():
    assert is_perfect(C2).is_perfect
    assert is_perfect(C3).is_perfect
    cert = is_perfect(0b1000)
    assert not cert.is_perfect
    assert sigma(0b1000).sigma == pow_(0b11, 3)
    with pytest.raises(ValueError):
        is_perfect(0)


def test_certificate_fields():
    cert = is_perfect(C1)
    assert cert.poly == C1
    assert cert.omega == 4
    assert cert.parity is Parity.EVEN
    assert cert.factorization.value == C1
    assert cert.sigma_factorization.factors == cert.factorization.factors
    d = cert.to_dict()
    assert d['perfect'] and d['omega'] == 4 and d['degree'] == 11
    assert d['poly_hex'] == hex(C1)


def test_catalog_contents(catalog_certs):
    assert len(catalog_certs) == 16
    assert all(c.is_perfect for c in catalog_certs)
    assert all(c.parity is Parity.EVEN for c in catalog_certs)
    polys = [c.poly for c in catalog_certs]
    assert polys == sorted(polys)
    assert trivial_perfect(3) in polys                      # (x^2+x)^7, deg 14
    assert T2 in polys and translate(T2) in polys
    assert S1 in polys and degree(S1) == 20
    assert {C1, C2, C3, C4, C5} <= set(polys)
    assert [c.omega for c in catalog_certs].count(5) == 2   # the S1 pair


def test_catalog_minimal_prime_parity(catalog_certs):
    for c in catalog_certs:
        assert verify_minimal_prime_parity(c.poly)


def test_exhaustive_search_small_bounds():
    assert exhaustive_search(1).found_polys() == []
    r = exhaustive_search(7)
    assert r.found_polys() == sorted(
        [trivial_perfect(1), T1, translate(T1), trivial_perfect(2)])
    assert r.candidates_examined == (1 << 8) - 2
    with pytest.raises(ValueError):
        exhaustive_search(0)


def test_exhaustive_search_monotone():
    small = set(exhaustive_search(8).found_polys())
    large = set(exhaustive_search(11).found_polys())
    assert small <= large


def test_exhaustive_search_matches_catalog(exhaustive20, catalog_certs):
    found = exhaustive20.found_polys()
    expected = sorted(c.poly for c in catalog_certs if degree(c.poly) <= 20)
    assert found == expected
    assert len(found) == 14
    assert all(c.is_perfect for c in exhaustive20.perfects_found)


def test_found_perfects_closed_under_translation(exhaustive20):
    found = set(exhaustive20.found_polys())
    for a in found:
        assert translate(a) in found
    for a in found:
        assert verify_minimal_prime_parity(a)


def test_shape_search_finds_the_five(shape40):
    assert shape40.found_polys() == sorted([C1, C2, C3, C4, C5])
    assert all(c.omega == 4 for c in shape40.perfects_found)
    assert all(c.parity is Parity.EVEN for c in shape40.perfects_found)
    assert all(verify_minimal_prime_parity(a) for a in shape40.found_polys())
    tags = {shape40.found_shapes[a]['case_tag'] for a in shape40.found_polys()}
    assert tags == {'b', 'c', 'd'}


def test_shape_search_small_config_contains_c1_c2():
    r = shape_search(11, 4)
    assert set(r.found_polys()) == {C1, C2}


def test_shape_search_agrees_with_exhaustive_omega4(exhaustive20, shape40):
    # the two strategies must agree on four-prime even perfects in range
    from_exhaustive = [c.poly for c in exhaustive20.perfects_found
                       if c.omega == 4]
    assert from_exhaustive == [c.poly for c in shape40.perfects_found]


def test_pruning_is_sound(shape24_pruned, shape24_unpruned):
    assert shape24_pruned.found_polys() == shape24_unpruned.found_polys()
    assert shape24_pruned.candidates_examined < \
        shape24_unpruned.candidates_examined
    assert shape24_unpruned.shapes_pruned == {}
    assert sum(shape24_pruned.shapes_pruned.values()) > 0
    for bound, pbound in ((12, 4), (16, 4)):
        a = shape_search(bound, pbound, use_pruning=True)
        b = shape_search(bound, pbound, use_pruning=False)
        assert a.found_polys() == b.found_polys()


def test_shape_search_parallel_matches_serial(shape24_pruned):
    r = shape_search(24, 6, use_pruning=True, jobs=2)
    assert r.found_polys() == shape24_pruned.found_polys()
    assert r.candidates_examined == shape24_pruned.candidates_examined
    assert r.shapes_pruned == shape24_pruned.shapes_pruned
    assert r.found_shapes == shape24_pruned.found_shapes


def test_shape_search_bad_bounds():
    with pytest.raises(ValueError):
        shape_search(0, 4)
    with pytest.raises(ValueError):
        shape_search(10, 0)
    with pytest.raises(ValueError):
        shape_search(10, 4, jobs=0)


def test_shape_validation():
    Shape('a', 3, 5, 2, 4)
    Shape('b', 1, 2, 2, 1)
    Shape('c', 4, 4, 1, 1)
    Shape('d', 6, 3, 1, 1)
    Shape('e', 1, 1, 3, 7)
    with pytest.raises(ValueError):
        Shape('a', 1, 1, 1, 2)        # odd exponent under tag a
    with pytest.raises(ValueError):
        Shape('b', 1, 1, 6, 5)        # 6 is not a power of two
    with pytest.raises(ValueError):
        Shape('e', 2, 1, 1, 1)        # even exponent under tag e
    with pytest.raises(ValueError):
        Shape('z', 1, 1, 1, 1)
    with pytest.raises(ValueError):
        Shape('a', 1, 1, 0, 2)        # l must be positive


def test_odd_square_search_empty_and_rejections():
    assert odd_square_search(4).found_polys() == []
    r = odd_square_search(12)
    assert r.found_polys() == []
    assert r.candidates_examined > 0
    # sigma((x^2+x+1)^2) = x^4+x+1 differs from the square itself
    assert sigma(square(0b111)).sigma == 0b10011
    with pytest.raises(ValueError):
        odd_square_search(7)


def test_report_serialization(shape24_pruned):
    d = shape24_pruned.to_dict()
    assert d['kind'] == 'shape'
    assert d['config'] == {'deg_bound': 24, 'p_deg_bound': 6,
                           'use_pruning': True}
    assert d['perfects_found'] == len(d['certificates'])
    for entry in d['certificates']:
        assert {'poly_hex', 'poly_text', 'factors', 'perfect'} <= entry.keys()
    parsed = json.loads(shape24_pruned.to_json())
    assert parsed == json.loads(json.dumps(d, sort_keys=True))
    records = [json.loads(line) for line in shape24_pruned.iter_records()]
    assert [r['poly_hex'] for r in records] == \
        [hex(a) for a in shape24_pruned.found_polys()]


def test_symmetry_pairs(shape40):
    pairs = shape40.symmetry_pairs()
    assert (min(C1, C2), max(C1, C2)) in pairs
    assert (C3, C3) in pairs
    assert (min(C4, C5), max(C4, C5)) in pairs


def test_random_nonperfects_certify_false():
    rng = random.Random(19)
    known = set(a for a in exhaustive_search(10).found_polys())
    for _ in range(200):
        a = rng.randrange(2, 1 << 11)
        assert is_perfect(a).is_perfect == (a in known)
