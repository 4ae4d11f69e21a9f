# -*- coding: utf-8 -*-

"""Tests of finite abelian p-groups."""

#------------------------------------------------------------------------------
# Imports
#------------------------------------------------------------------------------

import numpy as np
from numpy.testing import assert_array_equal as ae
from pytest import raises

from ..group import (
    PGroup, Subgroup, whole_group, group_elements, subgroup_elements, coset_transversal,
    coset_labels)


#------------------------------------------------------------------------------
# Tests
#------------------------------------------------------------------------------

def test_group_elements():
    elements = group_elements(PGroup(3))
    assert len(elements) == 1
    assert elements[0].exponents == ()

    elements = group_elements(PGroup(3, (3, 3)))
    assert len(elements) == 9
    assert elements[0].exponents == (0, 0)
    assert elements[-1].exponents == (2, 2)
    assert elements == sorted(elements)

    assert len(group_elements(PGroup(3, (9, 3)))) == 27


def test_group_errors():
    with raises(ValueError):
        PGroup(4, (4,))
    with raises(ValueError):
        PGroup(3, (9, 6))
    with raises(ValueError):
        PGroup(3, (1,))
    with raises(ValueError):
        PGroup(2, (2,))
    assert PGroup(2, (4, 2), allow_even=True).order == 8


def test_group_tables():
    g = PGroup(3, (9, 3))
    e = g.exponents
    for _ in range(100):
        a, b = np.random.randint(0, g.order, size=2)
        assert g.add_table[a, b] == g.index(e[a] + e[b])
        assert g.sub_table[a, b] == g.index(e[a] - e[b])
    ae(g.add_table[0], np.arange(g.order))
    ae(np.diag(g.sub_table), np.zeros(g.order))


def test_group_element():
    g = PGroup(3, (9, 3))
    x = g.element(2, 1)
    assert x.order == 9
    assert (x ** 9).is_identity
    assert x * x.inverse() == g.identity
    assert g.element(3, 0).order == 3
    assert g.identity.order == 1
    assert g.element(11, 4) == g.element(2, 1)
    assert x.render() == 'g1^2*g2'
    assert g.identity.render() == '1'
    with raises(ValueError):
        g.element(1)


def test_subgroup_elements():
    g = PGroup(3, (9,))
    assert subgroup_elements(Subgroup(g)) == {g.identity}
    h = Subgroup(g, [g.element(3)])
    assert subgroup_elements(h) == {g.element(0), g.element(3), g.element(6)}
    assert h.order == 3
    assert h.index_in_parent == 3

    g = PGroup(3, (3, 3))
    assert len(subgroup_elements(Subgroup(g, [(1, 0), (0, 1)]))) == 9
    assert whole_group(g).order == 9


def test_subgroup_properties():
    g = PGroup(3, (9, 3))
    h = Subgroup(g, [(3, 0)])
    k = Subgroup(g, [(1, 0)])
    assert h.issubset(k)
    assert not k.issubset(h)
    assert h.is_cyclic and k.is_cyclic
    assert k.cyclic_generator == g.element(1, 0)
    assert g.element(6, 0) in h
    assert g.element(1, 0) not in h
    assert not Subgroup(g, [(3, 0), (0, 1)]).is_cyclic
    with raises(ValueError):
        Subgroup(g, [(3, 0), (0, 1)]).cyclic_generator
    assert Subgroup(g, [(3, 0)]) == Subgroup(g, [(6, 0)])
    with raises(ValueError):
        Subgroup(g, [PGroup(3, (3,)).element(1)])


def test_coset_transversal():
    g = PGroup(3, (9,))
    assert coset_transversal(g, whole_group(g)) == [g.identity]
    assert coset_transversal(g, Subgroup(g)) == group_elements(g)
    reps = coset_transversal(g, Subgroup(g, [(3,)]))
    assert [r.exponents for r in reps] == [(0,), (1,), (2,)]


def test_coset_labels():
    g = PGroup(3, (3, 3))
    h = Subgroup(g, [(1, 1)])
    reps, labels = coset_labels(g, h)
    assert len(reps) == 3
    # Two elements share a coset iff their quotient lies in h.
    for a in range(g.order):
        for b in range(g.order):
            assert (labels[a] == labels[b]) == (g.sub_table[a, b] in h.indices)
