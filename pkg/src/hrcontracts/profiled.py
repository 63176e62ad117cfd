"""Profiles, receptive implementations and profiled contracts.

A profile splits the port set of an implementation or contract twice: into
visible and local ports, and into uncontrolled (set by the environment) and
controlled ports.  Profiles only refine by equality.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import reduce

from . import config
from . import contracts as ca
from .assertion import Assertion, is_receptive, is_subset, lift, receptiveness_witness
from .contracts import Contract
from .errors import CompositionError, FusionError, ProfileError, ReceptivenessError


def _fs(names):
    return frozenset(names)


@dataclass(frozen=True)
class Profile:
    visible: frozenset = frozenset()
    local: frozenset = frozenset()
    uncontrolled: frozenset = frozenset()
    controlled: frozenset = frozenset()

    def __post_init__(self):
        for f in ("visible", "local", "uncontrolled", "controlled"):
            object.__setattr__(self, f, _fs(getattr(self, f)))
        if self.visible & self.local:
            raise ProfileError(f"ports both visible and local: {sorted(self.visible & self.local)}")
        if self.uncontrolled & self.controlled:
            raise ProfileError(
                f"ports both controlled and uncontrolled: {sorted(self.uncontrolled & self.controlled)}")
        scope = self.visible | self.local
        control = self.uncontrolled | self.controlled
        if scope != control:
            raise ProfileError(
                f"partitions cover different ports: {sorted(scope ^ control)}")

    @property
    def ports(self):
        return self.visible | self.local

    def without(self, names):
        names = _fs(names)
        return Profile(self.visible - names, self.local - names,
                       self.uncontrolled - names, self.controlled - names)

    def classify(self, port):
        return ("local" if port in self.local else "visible",
                "controlled" if port in self.controlled else "uncontrolled")

    def agrees_with(self, other):
        """Shared ports have the same scope and control in both profiles."""
        return all(self.classify(p) == other.classify(p) for p in self.ports & other.ports)

    def describe(self):
        return {k: sorted(getattr(self, k))
                for k in ("visible", "local", "uncontrolled", "controlled")}


def make_profile(visible=(), local=(), uncontrolled=(), controlled=()):
    return Profile(_fs(visible), _fs(local), _fs(uncontrolled), _fs(controlled))


def _check_ports(profile, assertion, what):
    names = set(assertion.alphabet.names)
    if names != profile.ports:
        raise ProfileError(
            f"{what} is over ports {sorted(names)} but the profile covers {sorted(profile.ports)}")


@dataclass(frozen=True)
class ProfiledImplementation:
    profile: Profile
    behavior: Assertion

    def __post_init__(self):
        _check_ports(self.profile, self.behavior, "behavior")
        if not is_receptive(self.behavior, self.profile.uncontrolled):
            w = receptiveness_witness(self.behavior, self.profile.uncontrolled)
            raise ReceptivenessError(
                f"behavior refuses uncontrolled history {w!r}")


@dataclass(frozen=True)
class ProfiledContract:
    """A profiled contract, always stored in canonical form."""

    profile: Profile
    assumption: Assertion
    promise: Assertion

    def __post_init__(self):
        c = ca.canonicalize(ca.make_contract(self.assumption, self.promise))
        _check_ports(self.profile, c.assumption, "contract")
        object.__setattr__(self, "assumption", c.assumption)
        object.__setattr__(self, "promise", c.promise)

    @property
    def contract(self):
        return Contract(self.assumption, self.promise)

    @property
    def alphabet(self):
        return self.assumption.alphabet

    @classmethod
    def of(cls, profile, contract):
        return cls(profile, contract.assumption, contract.promise)


def p_refines(m, m2):
    return m.profile == m2.profile and is_subset(m.behavior, m2.behavior)


def p_compose_impl(m1, m2):
    p1, p2 = m1.profile, m2.profile
    clash = p1.local & p2.local
    if clash:
        raise CompositionError(f"local ports shared by both implementations: {sorted(clash)}")
    clash = p1.controlled & p2.controlled
    if clash:
        raise CompositionError(f"ports controlled by both implementations: {sorted(clash)}")
    leak = (p1.local & p2.visible) | (p2.local & p1.visible)
    if leak:
        raise CompositionError(f"ports local to one implementation but visible to the other: {sorted(leak)}")
    controlled = p1.controlled | p2.controlled
    profile = Profile(p1.visible | p2.visible, p1.local | p2.local,
                      (p1.uncontrolled | p2.uncontrolled) - controlled, controlled)
    alpha = m1.behavior.alphabet.union(m2.behavior.alphabet)
    behavior = Assertion(alpha, lift(m1.behavior, alpha).mask & lift(m2.behavior, alpha).mask)
    return ProfiledImplementation(profile, behavior)


def is_consistent(c):
    return is_receptive(c.promise, c.profile.uncontrolled)


def is_compatible_single(c):
    return is_receptive(c.assumption, c.profile.controlled)


def p_satisfies(m, c):
    if m.profile != c.profile:
        return False
    return is_subset(m.behavior, c.promise)


def p_dominates(c, c2):
    return c.profile == c2.profile and ca.dominates(c.contract, c2.contract)


def _same_profile(c1, c2):
    if c1.profile != c2.profile:
        raise ProfileError("profiled meet/join need equal profiles")
    return c1.profile


def p_meet(c1, c2):
    return ProfiledContract.of(_same_profile(c1, c2), ca.meet(c1.contract, c2.contract))


def p_join(c1, c2):
    return ProfiledContract.of(_same_profile(c1, c2), ca.join(c1.contract, c2.contract))


def p_complement(c):
    """Complement, re-canonicalized on construction.

    ``(~A, ~G)`` of a canonical contract is canonical only when ``A & G`` is
    empty, so the complement laws hold exactly only for such contracts.
    """
    return ProfiledContract.of(c.profile, ca.complement_contract(c.contract))


def p_top(profile, alphabet):
    return ProfiledContract.of(profile, ca.top(alphabet))


def composed_profile(p1, p2, shared_control=False):
    clash = p1.controlled & p2.controlled
    if clash and not shared_control:
        raise CompositionError(f"ports controlled by both contracts: {sorted(clash)}")
    visible = p1.visible | p2.visible
    controlled = p1.controlled | p2.controlled
    return Profile(visible, (p1.local | p2.local) - visible,
                   (p1.uncontrolled | p2.uncontrolled) - controlled, controlled)


def p_compose(c1, c2, shared_control=False):
    """Profiled product; undefined when both sides control a common port.

    ``shared_control=True`` lifts that restriction, which is how viewpoints
    of a single component (all driving the same outputs) are combined.
    """
    profile = composed_profile(c1.profile, c2.profile, shared_control)
    return ProfiledContract.of(profile, ca.compose(c1.contract, c2.contract))


def compatibility_witness(c):
    """A controlled history refused by the assumption, or None."""
    return receptiveness_witness(c.assumption, c.profile.controlled)


def are_compatible(c1, c2):
    composite = p_compose(c1, c2)
    return is_receptive(composite.assumption, composite.profile.controlled)


def p_eliminate(c, ports):
    ports = set(ports) & c.profile.ports
    return ProfiledContract.of(c.profile.without(ports), ca.eliminate(c.contract, ports))


def _fold_compose(contracts, shared_control):
    return reduce(lambda x, y: p_compose(x, y, shared_control), contracts)


def _promote(term, whole):
    # term profile as seen inside the whole composition
    visible = term.visible | (whole.visible & term.local)
    controlled = term.controlled | (whole.controlled & term.uncontrolled)
    return Profile(visible, term.local - visible, term.uncontrolled - controlled, controlled)


def p_fuse(contracts, ports=(), cap=None, shared_control=False):
    """Fusion with profiled composition.

    The result profile is that of the composition of the whole family with
    ``ports`` removed from all four sets.  Each sub-family term is lifted to
    the result alphabet and its profile equalized to the result profile by
    the promotion rules of composition (uncontrolled to controlled, local to
    visible); any other disagreement makes the meet undefined.
    """
    contracts = list(contracts)
    if not contracts:
        raise FusionError("fusion of an empty family is undefined")
    cap = config.max_fusion() if cap is None else cap
    if len(contracts) > cap:
        raise FusionError(f"fusion of {len(contracts)} contracts exceeds cap of {cap}")
    ports = set(ports)
    whole = p_eliminate(_fold_compose(contracts, shared_control), ports)
    result = None
    for size in range(1, len(contracts) + 1):
        for subset in itertools.combinations(range(len(contracts)), size):
            term = p_eliminate(_fold_compose([contracts[j] for j in subset], shared_control),
                               ports)
            promoted = _promote(term.profile, whole.profile)
            if not promoted.agrees_with(whole.profile):
                bad = sorted(p for p in promoted.ports & whole.profile.ports
                             if promoted.classify(p) != whole.profile.classify(p))
                raise FusionError(
                    f"sub-family {list(subset)} classifies {bad} differently from the fused profile")
            lifted = ca.lift_contract(term.contract, whole.alphabet)
            result = lifted if result is None else ca.meet(result, lifted)
    return ProfiledContract.of(whole.profile, result)
