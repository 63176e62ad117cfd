import pytest
from hypothesis import given, settings, strategies as st

from hrcontracts import oracle as O
from hrcontracts.alphabet import Alphabet, PortDecl
from hrcontracts.assertion import (
    Assertion, complement, equalize, exists_eliminate, exists_eliminate_all, forall_eliminate,
    forall_eliminate_all, intersect, is_receptive, is_subset, lift, projection,
    receptiveness_witness, union,
)
from hrcontracts.errors import AlphabetError

from conftest import bools

AB = bools("a", "b")
MIXED = Alphabet((PortDecl("a"), PortDecl("m", ("x", "y", "z")), PortDecl("b")))


def den(b):
    return b.alphabet, frozenset(b.runs())


def masks(alpha):
    return st.integers(0, (1 << alpha.size) - 1).map(lambda m: Assertion(alpha, m))


def test_constructors():
    assert Assertion.empty(AB).is_empty()
    assert Assertion.full(AB).is_full()
    a_true = Assertion.from_runs(AB, [{"a": True, "b": False}, {"a": True, "b": True}])
    assert a_true == Assertion.from_predicate(AB, lambda r: r["a"][0])
    assert len(a_true) == 2
    assert {"a": True, "b": True} in a_true
    with pytest.raises(ValueError):
        Assertion(AB, 1 << 4)
    with pytest.raises(TypeError):
        Assertion.from_runs(AB, [(True, False)])


def test_operators_match_named_functions():
    x = Assertion(AB, 0b0110)
    y = Assertion(AB, 0b0011)
    assert (x & y) == intersect(x, y) == Assertion(AB, 0b0010)
    assert (x | y) == union(x, y) == Assertion(AB, 0b0111)
    assert ~x == complement(x) == Assertion(AB, 0b1001)
    assert (x & y) <= x
    assert not x <= y


def test_lift_is_cylindrical():
    only_a = Assertion.from_predicate(bools("a"), lambda r: r["a"][0])
    lifted = lift(only_a, bools("b", "a"))
    assert len(lifted) == 2
    assert all(r["a"] == (True,) for r in lifted.runs())
    with pytest.raises(AlphabetError):
        lift(only_a, bools("b"))


def test_cross_alphabet_operations_lift():
    a = Assertion.from_predicate(bools("a"), lambda r: r["a"][0])
    b = Assertion.from_predicate(bools("b"), lambda r: r["b"][0])
    both = intersect(a, b)
    assert both.alphabet.names == ("a", "b")
    assert len(both) == 1
    x, y = equalize(a, b)
    assert x.alphabet == y.alphabet


def test_elimination_of_absent_port_is_identity():
    x = Assertion(AB, 0b0110)
    assert forall_eliminate(x, "q") is x
    assert exists_eliminate(x, "q") is x


def test_exists_forall_simple():
    # a => b
    imp = Assertion.from_predicate(AB, lambda r: (not r["a"][0]) or r["b"][0])
    assert forall_eliminate(imp, "b") == Assertion.from_predicate(bools("a"), lambda r: not r["a"][0])
    assert exists_eliminate(imp, "b").is_full()
    assert exists_eliminate_all(imp, ["a", "b"]).alphabet.names == ()
    assert forall_eliminate_all(imp, ["a", "b"]).is_empty()


@settings(max_examples=200, deadline=None)
@given(x=masks(MIXED), port=st.sampled_from(["a", "m", "b"]))
def test_eliminations_agree_with_enumeration(x, port):
    assert den(forall_eliminate(x, port)) == O.forall(den(x), port)
    assert den(exists_eliminate(x, port)) == O.exists(den(x), port)


@settings(max_examples=200, deadline=None)
@given(x=masks(MIXED), y=masks(MIXED))
def test_set_operations_agree_with_enumeration(x, y):
    assert den(x & y) == O.intersect(den(x), den(y))
    assert den(x | y) == O.union(den(x), den(y))
    assert den(~x) == O.complement(den(x))
    assert is_subset(x, y) == O.subset(den(x), den(y))


@settings(max_examples=200, deadline=None)
@given(x=masks(MIXED), keep=st.sets(st.sampled_from(["a", "m", "b"])))
def test_receptiveness_agrees_with_enumeration(x, keep):
    assert is_receptive(x, keep) == O.receptive(den(x), keep)
    w = receptiveness_witness(x, keep)
    assert (w is None) == is_receptive(x, keep)
    if w is not None:
        assert w not in set(projection(x, keep).runs())


@settings(max_examples=100, deadline=None)
@given(x=masks(AB))
def test_double_complement_and_de_morgan(x):
    y = Assertion(AB, 0b1010)
    assert ~~x == x
    assert ~(x & y) == (~x | ~y)


def test_receptive_on_empty_port_set():
    assert is_receptive(Assertion(AB, 0b1), []) is True
    assert is_receptive(Assertion.empty(AB), []) is False


def test_runs_and_indices():
    x = Assertion(AB, 0b1001)
    assert list(x.indices()) == [0, 3]
    assert [r.to_json() for r in x.runs()] == [{"a": [False], "b": [False]},
                                              {"a": [True], "b": [True]}]
