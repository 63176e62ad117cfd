import pytest

from hrcontracts import contracts as ca
from hrcontracts import oracle as O
from hrcontracts.assertion import Assertion
from hrcontracts.config import limits
from hrcontracts.contracts import Contract
from hrcontracts.dsl import parse, parse_file
from hrcontracts.errors import UniverseTooLarge
from hrcontracts.verify import random_spec_text, verify_document

from conftest import bools, spec_path


def test_universe_and_quantifiers():
    ab = bools("a", "b")
    u = O.universe(ab)
    assert len(u) == 4
    a_and_b = ab, frozenset(r for r in u if r["a"][0] and r["b"][0])
    assert O.forall(a_and_b, "b")[1] == frozenset()
    assert len(O.exists(a_and_b, "b")[1]) == 1
    assert O.forall(a_and_b, "zz") is a_and_b


def test_lifting_and_receptiveness():
    a = bools("a")
    only = a, frozenset(r for r in O.universe(a) if r["a"][0])
    lifted = O.lift(only, bools("a", "b"))
    assert len(lifted[1]) == 2
    assert O.receptive(lifted, ["b"]) and not O.receptive(lifted, ["a"])


def test_oracle_contract_operators_are_definitional():
    ab = bools("a", "b")
    full = ab, frozenset(O.universe(ab))
    none = ab, frozenset()
    c = (full, full)
    assert O.same_contract(O.meet(c, (none, none)), (full, none))
    assert O.same_contract(O.join(c, (none, none)), (none, full))
    assert O.dominates((full, none), (none, full))


def test_running_example_has_no_mismatches():
    r = verify_document(parse_file(spec_path("running_example.hrc")))
    assert r.verdict is True
    assert not [d for d in r.diagnostics if d.kind == "mismatch"]
    assert r.diagnostics[-1].kind == "summary"


@pytest.mark.parametrize("seed", range(10))
def test_random_specs_have_no_mismatches(seed):
    r = verify_document(parse(random_spec_text(seed, max_length=2)))
    assert r.verdict is True, [d.message for d in r.diagnostics]


def test_corrupted_meet_is_caught(monkeypatch):
    real = ca.meet

    def broken(c1, c2):
        m = real(c1, c2)
        return Contract(m.assumption, Assertion(m.promise.alphabet, m.promise.mask ^ 1))

    monkeypatch.setattr(ca, "meet", broken)
    r = verify_document(parse_file(spec_path("incompatible.hrc")))
    assert r.verdict is False
    bad = [d for d in r.diagnostics if d.kind == "mismatch"]
    assert bad and all("meet(" in d.message for d in bad)
    # bit 0 is the all-false run
    assert all(not any(v[0] for v in d.witness.values()) for d in bad)


def test_corrupted_dominance_is_caught(monkeypatch):
    monkeypatch.setattr(ca, "dominates", lambda c1, c2: True)
    r = verify_document(parse_file(spec_path("incompatible.hrc")))
    assert r.verdict is False
    assert any("dominates(" in d.message for d in r.diagnostics)


def test_cap_is_enforced_before_enumeration():
    d = parse("ports { a: bool; b: bool; c: bool }\n"
              "contract K { assume a && b && c; promise true; }")
    with limits(universe=4):
        with pytest.raises(UniverseTooLarge):
            verify_document(d)


def test_random_specs_are_reproducible():
    assert random_spec_text(42) == random_spec_text(42)
    assert random_spec_text(42) != random_spec_text(43)
