import json
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from beikit import io
from beikit.algebra import GF32003, QQ, Polynomial, from_exponents, make_f, monomial
from beikit.errors import InputError
from beikit.gbasis import groebner_basis

from fixture_graphs import C5_ZIGZAG, STAR3


def test_parse_text_graph():
    g = io.parse_graph("# star\nn 3\n\ne 1 2\ne 3 1\n")
    assert g == STAR3


def test_parse_json_graph():
    assert io.parse_graph('{"n": 3, "edges": [[1, 2], [1, 3]]}') == STAR3


def test_graph_round_trip():
    assert io.parse_graph(io.format_graph(C5_ZIGZAG)) == C5_ZIGZAG


@pytest.mark.parametrize("text", [
    "e 1 2\n",                          # no vertex count
    "n 3\ne 1\n",                       # short edge line
    "n 3\nx 1 2\n",                     # unknown record
    "n 2\ne 1 3\n",                     # endpoint out of range
    "n 2\ne 1 1\n",                     # self-loop
    "n 2\ne 1 2\ne 2 1\n",              # duplicate
    "n two\n",
    '{"n": 2}',
    '{"n": 2, "edges": [[1, 2]',
])
def test_bad_graphs(text):
    with pytest.raises(InputError):
        io.parse_graph(text)


def test_load_missing_file(tmp_path):
    with pytest.raises(InputError):
        io.load_graph(tmp_path / "nope.txt")


def test_format_minor():
    assert io.format_polynomial(make_f(1, 2, 1, 2)) == "p[1,1]*p[2,2] - p[1,2]*p[2,1]"


def test_format_prime_field_uses_canonical_representatives():
    assert io.format_polynomial(make_f(1, 2, 1, 2, GF32003)) == "p[1,1]*p[2,2] + 32002*p[1,2]*p[2,1]"


def test_format_powers_and_constants():
    q = Polynomial({monomial((1, 2), ((2, 3), 2)): 3, (): Fraction(-1, 2)})
    assert io.format_polynomial(q) == "3*p[1,2]*p[2,3]^2 - 1/2"
    assert io.format_polynomial(Polynomial({}, QQ)) == "0"


def test_parse_example_syntax():
    q = io.parse_polynomial("+3*p[1,2]*p[2,3]^2", QQ)
    assert q.terms == {monomial((1, 2), ((2, 3), 2)): 3}


def test_parse_collects_like_terms():
    q = io.parse_polynomial("p[1,1] + 2*p[1,1] - 3*p[1,1]", QQ)
    assert q.is_zero()


def test_parse_rational_in_prime_field():
    q = io.parse_polynomial("1/2*p[1,1]", GF32003)
    assert q.terms == {monomial((1, 1)): 16002}


@pytest.mark.parametrize("text", ["", "p[1,]", "p[1,1] p[2,2]", "2*q", "p[1,1] +", "1/0"])
def test_parse_errors(text):
    with pytest.raises(InputError):
        io.parse_polynomial(text, QQ)


def test_parse_range_checks():
    with pytest.raises(InputError):
        io.parse_polynomial("p[3,1]", QQ, d0=2, n=3)
    with pytest.raises(InputError):
        io.parse_polynomial("p[1,4]", QQ, d0=2, n=3)


VARS = [(i, x) for i in range(1, 4) for x in range(1, 5)]
terms = st.dictionaries(
    st.dictionaries(st.sampled_from(VARS), st.integers(1, 3), max_size=4).map(from_exponents),
    st.fractions(max_denominator=50).filter(bool),
    max_size=5)


@given(terms)
def test_text_round_trip_rational(t):
    q = Polynomial(t, QQ)
    assert io.parse_polynomial(io.format_polynomial(q), QQ) == q


@given(terms)
def test_text_round_trip_prime(t):
    q = Polynomial(t, GF32003)
    assert io.parse_polynomial(io.format_polynomial(q), GF32003) == q


def test_basis_json_round_trip():
    basis = groebner_basis(C5_ZIGZAG, 3)
    data = json.loads(json.dumps(io.basis_to_json(basis)))
    assert data[0].keys() == {"path", "kappa", "polynomial", "initial"}
    back = io.basis_from_json(data, QQ, 3, 5)
    assert [(e.path, e.kappa, e.poly) for e in back] == [(e.path, e.kappa, e.poly) for e in basis]


def test_basis_json_without_provenance():
    back = io.basis_from_json([{"polynomial": "p[1,1]*p[2,2] - p[1,2]*p[2,1]"}], QQ)
    assert back == [make_f(1, 2, 1, 2)]


def test_dumps_carries_schema():
    assert json.loads(io.dumps({"x": 1})) == {"schema": "bei-kit/1", "x": 1}
