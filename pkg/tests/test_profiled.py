import random

import pytest
from hypothesis import given, settings, strategies as st

from hrcontracts import oracle as O
from hrcontracts.assertion import Assertion, is_receptive
from hrcontracts.contracts import Contract, compose, dominates, max_implementation, meet
from hrcontracts.errors import CompositionError, FusionError, ProfileError, ReceptivenessError
from hrcontracts.profiled import (
    Profile, ProfiledContract, ProfiledImplementation, are_compatible, compatibility_witness,
    is_compatible_single, is_consistent, make_profile, p_complement, p_compose,
    p_compose_impl, p_dominates, p_eliminate, p_fuse, p_join, p_meet, p_refines, p_satisfies,
    p_top,
)

from conftest import bools

IO = bools("i", "o")
P_IO = make_profile(visible="io", uncontrolled="i", controlled="o")


def pred(alpha, fn):
    return Assertion.from_predicate(alpha, lambda r: fn(**{k: v[0] for k, v in r.items()}))


def pc(profile, alpha, a, g):
    return ProfiledContract(profile, pred(alpha, a), pred(alpha, g))


def test_profile_must_partition():
    with pytest.raises(ProfileError):
        make_profile(visible="a", local="a", uncontrolled="a")
    with pytest.raises(ProfileError):
        make_profile(visible="a", uncontrolled="a", controlled="a")
    with pytest.raises(ProfileError):
        make_profile(visible="ab", uncontrolled="a")
    p = make_profile(visible="a", local="b", uncontrolled="b", controlled="a")
    assert p.ports == {"a", "b"}
    assert p.classify("b") == ("local", "uncontrolled")
    assert p.without("b") == make_profile(visible="a", controlled="a")


def test_implementation_must_be_receptive():
    follow = pred(IO, lambda i, o: o == i)
    m = ProfiledImplementation(P_IO, follow)
    assert m.behavior == follow
    stuck = pred(IO, lambda i, o: i and o)
    with pytest.raises(ReceptivenessError) as e:
        ProfiledImplementation(P_IO, stuck)
    assert "i=" in str(e.value) or "'i'" in str(e.value)
    with pytest.raises(ProfileError):
        ProfiledImplementation(P_IO, Assertion.full(bools("i")))


def test_shrinking_within_receptiveness_refines():
    loose = ProfiledImplementation(P_IO, Assertion.full(IO))
    tight = ProfiledImplementation(P_IO, pred(IO, lambda i, o: o != i))
    assert p_refines(tight, loose)
    assert not p_refines(loose, tight)


@settings(max_examples=150, deadline=None)
@given(m1=st.integers(0, 255), m2=st.integers(0, 255))
def test_implementation_composition_is_intersection(m1, m2):
    abc = bools("a", "b", "c")
    p1 = make_profile(visible="abc", uncontrolled="ac", controlled="b")
    p2 = make_profile(visible="abc", uncontrolled="ab", controlled="c")
    b1, b2 = Assertion(abc, m1), Assertion(abc, m2)
    if not (is_receptive(b1, "ac") and is_receptive(b2, "ab")):
        return
    x1, x2 = ProfiledImplementation(p1, b1), ProfiledImplementation(p2, b2)
    both = b1 & b2
    if not is_receptive(both, "a"):
        with pytest.raises(ReceptivenessError):
            p_compose_impl(x1, x2)
        return
    m = p_compose_impl(x1, x2)
    assert (abc, frozenset(m.behavior.runs())) == O.intersect(
        (abc, frozenset(b1.runs())), (abc, frozenset(b2.runs())))
    assert m.profile.controlled == {"b", "c"}


def test_implementation_composition_clashes():
    a = bools("a")
    ctl = ProfiledImplementation(make_profile(visible="a", controlled="a"), Assertion.full(a))
    with pytest.raises(CompositionError):
        p_compose_impl(ctl, ctl)
    loc = ProfiledImplementation(make_profile(local="a", uncontrolled="a"), Assertion.full(a))
    with pytest.raises(CompositionError):
        p_compose_impl(loc, loc)
    vis = ProfiledImplementation(make_profile(visible="a", uncontrolled="a"), Assertion.full(a))
    with pytest.raises(CompositionError):
        p_compose_impl(loc, vis)


def test_contracts_are_canonical_on_construction():
    c = pc(P_IO, IO, lambda i, o: i, lambda i, o: o)
    assert c.contract.canonical
    assert len(c.promise) == 3


def test_meet_with_disjoint_responses_is_inconsistent():
    same = pc(P_IO, IO, lambda i, o: True, lambda i, o: o == i)
    flip = pc(P_IO, IO, lambda i, o: True, lambda i, o: o != i)
    assert is_consistent(same) and is_consistent(flip)
    assert not is_consistent(p_meet(same, flip))


def test_assumption_forbidding_controlled_value_is_incompatible():
    c = pc(P_IO, IO, lambda i, o: o, lambda i, o: True)
    assert not is_compatible_single(c)
    assert compatibility_witness(c).to_json() == {"o": [False]}
    ok = pc(P_IO, IO, lambda i, o: i, lambda i, o: True)
    assert is_compatible_single(ok)
    assert compatibility_witness(ok) is None


@settings(max_examples=150, deadline=None)
@given(a=st.integers(0, 15), g=st.integers(0, 15))
def test_max_implementation_of_consistent_contract(a, g):
    c = ProfiledContract(P_IO, Assertion(IO, a), Assertion(IO, g))
    if not is_consistent(c):
        return
    m = ProfiledImplementation(P_IO, max_implementation(c.contract))
    assert p_satisfies(m, c)


@settings(max_examples=150, deadline=None)
@given(a1=st.integers(0, 15), g1=st.integers(0, 15), a2=st.integers(0, 15), g2=st.integers(0, 15))
def test_profiled_dominance_and_lattice(a1, g1, a2, g2):
    c1 = ProfiledContract(P_IO, Assertion(IO, a1), Assertion(IO, g1))
    c2 = ProfiledContract(P_IO, Assertion(IO, a2), Assertion(IO, g2))
    assert p_dominates(c1, c2) == dominates(c1.contract, c2.contract)
    lo, hi = p_meet(c1, c2), p_join(c1, c2)
    assert p_dominates(lo, c1) and p_dominates(lo, c2)
    assert p_dominates(c1, hi) and p_dominates(c2, hi)
    other = make_profile(visible="io", uncontrolled="io")
    assert not p_dominates(c1, ProfiledContract.of(other, c2.contract))


def test_profiled_meet_is_glb_on_sampled_triples():
    rng = random.Random(11)
    cs = [ProfiledContract(P_IO, Assertion(IO, a), Assertion(IO, g))
          for a in range(16) for g in range(16)]
    cs = list({(c.assumption.mask, c.promise.mask): c for c in cs}.values())
    for _ in range(3000):
        c1, c2, d = rng.choice(cs), rng.choice(cs), rng.choice(cs)
        below = p_dominates(d, c1) and p_dominates(d, c2)
        assert below == p_dominates(d, p_meet(c1, c2))


def test_meet_needs_equal_profiles():
    c = p_top(P_IO, IO)
    other = ProfiledContract.of(make_profile(visible="io", uncontrolled="io"), c.contract)
    with pytest.raises(ProfileError):
        p_meet(c, other)


def test_complement_laws_need_disjoint_parts():
    full = Assertion.full(IO)
    c = ProfiledContract(P_IO, full, full)
    # (~A, ~G) = (empty, empty) canonicalizes to top, so the meet is not bottom
    assert p_complement(c).contract.promise.is_full()
    assert not p_meet(c, p_complement(c)).promise.is_empty()
    a = pred(IO, lambda i, o: i)
    d = ProfiledContract(P_IO, a, ~a)
    lo = p_meet(d, p_complement(d))
    assert lo.assumption.is_full() and lo.promise.is_empty()
    hi = p_join(d, p_complement(d))
    assert hi.assumption.is_empty() and hi.promise.is_full()


@settings(max_examples=150, deadline=None)
@given(a1=st.integers(0, 15), g1=st.integers(0, 15), a2=st.integers(0, 15), g2=st.integers(0, 15))
def test_profiled_composition_parts_match_unprofiled(a1, g1, a2, g2):
    p1 = make_profile(visible="io", uncontrolled="i", controlled="o")
    p2 = make_profile(visible="io", uncontrolled="o", controlled="i")
    c1 = ProfiledContract(p1, Assertion(IO, a1), Assertion(IO, g1))
    c2 = ProfiledContract(p2, Assertion(IO, a2), Assertion(IO, g2))
    both = p_compose(c1, c2)
    assert both.contract == compose(c1.contract, c2.contract)
    assert both.profile.controlled == {"i", "o"}


def test_composition_undefined_on_shared_control():
    c = p_top(P_IO, IO)
    with pytest.raises(CompositionError):
        p_compose(c, c)
    assert p_compose(c, c, shared_control=True).profile == P_IO


def test_compatibility_lost_under_composition():
    # each is compatible alone; the producer's v makes the consumer's
    # assumption unsatisfiable once v becomes controlled
    vo = bools("v", "o")
    prod = pc(make_profile(visible="vo", uncontrolled="o", controlled="v"), vo,
              lambda v, o: True, lambda v, o: v)
    cons = pc(make_profile(visible="vo", uncontrolled="v", controlled="o"), vo,
              lambda v, o: not v, lambda v, o: o)
    assert is_compatible_single(prod) and is_compatible_single(cons)
    assert not are_compatible(prod, cons)
    w = compatibility_witness(p_compose(prod, cons))
    assert w["v"] == (True,)


def test_elimination_drops_ports_from_profile():
    c = pc(P_IO, IO, lambda i, o: i, lambda i, o: o)
    e = p_eliminate(c, ["o"])
    assert e.profile == make_profile(visible="i", uncontrolled="i")
    assert e.alphabet.names == ("i",)


def test_fusion_of_viewpoints():
    abc = bools("a", "x", "y")
    p1 = make_profile(visible="ay", local="x", uncontrolled="a", controlled="xy")
    c1 = ProfiledContract(p1, Assertion.full(abc), pred(abc, lambda a, x, y: x == a))
    c2 = ProfiledContract(p1, Assertion.full(abc), pred(abc, lambda a, x, y: y == x))
    f = p_fuse([c1, c2], ["x"], shared_control=True)
    assert f.profile == make_profile(visible="ay", uncontrolled="a", controlled="y")
    assert f.promise == pred(bools("a", "y"), lambda a, y: y == a)
    with pytest.raises(CompositionError):
        p_fuse([c1, c2], ["x"])
    # an observer of x and y: its ports are promoted to the family's view
    observer = ProfiledContract(make_profile(visible="axy", uncontrolled="axy"),
                                Assertion.full(abc), Assertion.full(abc))
    g = p_fuse([c1, observer], [], shared_control=True)
    assert g.profile == make_profile(visible="axy", uncontrolled="a", controlled="xy")
    with pytest.raises(FusionError):
        p_fuse([])


def test_fusion_parts_match_unprofiled():
    rng = random.Random(3)
    abc = bools("a", "x", "y")
    p = make_profile(visible="ay", local="x", uncontrolled="a", controlled="xy")
    from hrcontracts.contracts import fuse
    for _ in range(50):
        cs = [ProfiledContract(p, Assertion(abc, rng.getrandbits(8)),
                               Assertion(abc, rng.getrandbits(8))) for _ in range(3)]
        f = p_fuse(cs, ["x"], shared_control=True)
        assert f.contract == fuse([c.contract for c in cs], ["x"])
        assert f.contract == meet(f.contract, f.contract)


def test_contract_port_check():
    with pytest.raises(ProfileError):
        ProfiledContract(make_profile(visible="i", uncontrolled="i"),
                         Assertion.full(IO), Assertion.full(IO))
    assert Contract(Assertion.full(IO), Assertion.full(IO)).canonical
