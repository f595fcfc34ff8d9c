from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from lscrystal.cartan import GCM, LAMBDA, Weight, pairing, simple_root
from lscrystal.explicit import enumerate_explicit, to_ls_path
from lscrystal.paths import (
    LSPath,
    e_generic,
    e_max,
    epsilon,
    eval_path,
    f_generic,
    f_max,
    h_function,
    iota,
    kappa,
    phi,
    straight_path,
    weight,
)
from lscrystal.weyl import IDENTITY, x, y

G33 = GCM(3, 3)
G23 = GCM(2, 3)


def test_path_shape_validation():
    with pytest.raises(ValueError):
        LSPath((), (F(0), F(1)))
    with pytest.raises(ValueError):
        LSPath((IDENTITY,), (F(0), F(1, 2)))  # must end at 1
    with pytest.raises(ValueError):
        LSPath((x(1),), (F(0), F(1, 2), F(1)))  # time count mismatch
    with pytest.raises(ValueError):
        LSPath((x(2), x(1)), (F(0), F(1, 2), F(1, 3), F(1)))
    with pytest.raises(ValueError):
        LSPath((x(1), x(2)), (F(0), F(1, 2), F(1)))  # not decreasing
    with pytest.raises(ValueError):
        LSPath((x(1), x(1)), (F(0), F(1, 2), F(1)))


def test_straight_path():
    pi = straight_path()
    assert pi.dirs == (IDENTITY,) and pi.times == (F(0), F(1))
    assert pi.s == 1
    assert str(pi) == "(x0; 0, 1)"
    assert weight(pi, G33) == LAMBDA
    assert iota(pi, G33).weight == LAMBDA and kappa(pi, G33).weight == LAMBDA


def test_eval_path_exact():
    pi = straight_path()
    assert eval_path(pi, F(1, 3), G33) == Weight(F(1, 3), F(-1, 3))
    two = LSPath((x(1), IDENTITY), (F(0), F(1, 2), F(1)))
    assert eval_path(two, F(1, 2), G33) == Weight(F(-1, 2), 1)
    assert eval_path(two, 1, G33) == Weight(0, F(1, 2))


def test_h_function_of_straight():
    h1 = h_function(straight_path(), 1, G33)
    assert h1.points == ((F(0), F(0)), (F(1), F(1)))
    h2 = h_function(straight_path(), 2, G33)
    assert h2.minimum() == -1
    assert h2.value_at(F(1, 2)) == F(-1, 2)
    assert h2.local_min_values() == [F(-1)]


def test_operators_on_straight():
    pi = straight_path()
    assert f_generic(pi, 1, G33) == straight_path(x(1))
    assert f_generic(pi, 2, G33) is None
    assert e_generic(pi, 2, G33) == straight_path(y(1))
    assert e_generic(pi, 1, G33) is None


def test_string_lengths_on_straight():
    pi = straight_path()
    assert epsilon(pi, 1, G33) == 0 and phi(pi, 1, G33) == 1
    assert epsilon(pi, 2, G33) == 1 and phi(pi, 2, G33) == 0
    assert e_max(pi, 2, G33) == straight_path(y(1))
    assert f_max(pi, 2, G33) == pi


def test_f_creates_breakpoint_inside_a_piece():
    # here the crossing at height m+1 is not an existing breakpoint, so a
    # new one must be interpolated at 1/34 and a direction prepended
    pi = LSPath((x(4), x(3), x(2)), (F(0), F(1, 13), F(2, 5), F(1)))
    out = f_generic(pi, 1, G33)
    assert out == LSPath((x(5), x(4), x(3), x(2)), (F(0), F(1, 34), F(1, 13), F(2, 5), F(1)))
    assert e_generic(out, 1, G33) == pi


def test_worked_three_segment_path_both_branches():
    pi = LSPath((x(4), x(3), x(2)), (F(0), F(1, 7), F(2, 3), F(1)))
    assert f_generic(pi, 2, G23) == LSPath((x(4), x(3), x(2)), (F(0), F(2, 7), F(2, 3), F(1)))
    assert f_generic(pi, 1, G23) == LSPath((x(4), x(3)), (F(0), F(1, 7), F(1)))


def test_weight_is_endpoint():
    pi = LSPath((x(2), x(1)), (F(0), F(1, 2), F(1)))
    assert weight(pi, G33) == eval_path(pi, 1, G33) == Weight(2, 0)


def _paths(gcm, m_max, s_max):
    return sorted((to_ls_path(ep) for ep in enumerate_explicit(gcm, m_max, s_max)), key=str)


@given(st.data(), st.sampled_from([(2, 3), (3, 3)]), st.sampled_from([1, 2]))
def test_operators_are_mutually_inverse(data, ab, i):
    gcm = GCM(*ab)
    pi = data.draw(st.sampled_from(_paths(gcm, 3, 3)))
    fi = f_generic(pi, i, gcm)
    if fi is not None:
        assert e_generic(fi, i, gcm) == pi
    ei = e_generic(pi, i, gcm)
    if ei is not None:
        assert f_generic(ei, i, gcm) == pi


@given(st.data(), st.sampled_from([(2, 3), (3, 3)]), st.sampled_from([1, 2]))
def test_operator_weight_step(data, ab, i):
    gcm = GCM(*ab)
    pi = data.draw(st.sampled_from(_paths(gcm, 3, 3)))
    fi = f_generic(pi, i, gcm)
    if fi is not None:
        assert weight(fi, gcm) == weight(pi, gcm) - simple_root(i, gcm)


@given(st.data(), st.sampled_from([(2, 3), (3, 3)]), st.sampled_from([1, 2]))
def test_string_length_identities(data, ab, i):
    gcm = GCM(*ab)
    pi = data.draw(st.sampled_from(_paths(gcm, 3, 3)))
    h = h_function(pi, i, gcm)
    assert epsilon(pi, i, gcm) == -h.minimum()
    assert phi(pi, i, gcm) == h.points[-1][1] - h.minimum()
    assert phi(pi, i, gcm) - epsilon(pi, i, gcm) == pairing(weight(pi, gcm), i)


def test_max_operators_exhaust_strings():
    pi = LSPath((x(2),), (F(0), F(1)))
    top = e_max(pi, 2, G33)
    assert e_generic(top, 2, G33) is None
    assert epsilon(pi, 2, G33) == 2


def test_json_round_trip():
    pi = LSPath((x(4), x(3), x(2)), (F(0), F(1, 7), F(2, 3), F(1)))
    assert LSPath.from_json(pi.to_json()) == pi
    assert pi.to_json()["sigmas"] == ["0", "1/7", "2/3", "1"]
