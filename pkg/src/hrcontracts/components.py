"""Rich components and the component / system checks."""
from __future__ import annotations

from dataclasses import dataclass, field

from .assertion import Assertion, exists_eliminate_all, lift
from .errors import ContractError, ReceptivenessError
from .profiled import (
    ProfiledImplementation,
    compatibility_witness,
    is_compatible_single,
    is_consistent,
    p_compose,
    p_fuse,
)
from .report import Report


@dataclass(frozen=True)
class RichComponent:
    """A name, a family of profiled contracts and an optional implementation.

    ``implementation`` may be a :class:`ProfiledImplementation`, checked as
    is, or a bare :class:`Assertion`, which is hidden on the local ports and
    given the profile of the fused contract.
    """

    name: str
    contracts: tuple = ()
    implementation: object = None
    shared_control: bool = True
    labels: tuple = field(default=(), compare=False)

    def __post_init__(self):
        object.__setattr__(self, "contracts", tuple(self.contracts))
        if self.labels and len(self.labels) != len(self.contracts):
            raise ValueError("one label per contract")

    @property
    def local_ports(self):
        return frozenset().union(*(c.profile.local for c in self.contracts))

    def label(self, k):
        return self.labels[k] if self.labels else f"#{k}"

    def fused(self):
        return p_fuse(self.contracts, self.local_ports, shared_control=self.shared_control)


def _flags(report, contract):
    consistent = is_consistent(contract)
    compatible = is_compatible_single(contract)
    report.add("consistency", "promise is receptive on uncontrolled ports" if consistent
               else "promise restricts uncontrolled ports (inconsistent)")
    w = None if compatible else compatibility_witness(contract)
    report.add("compatibility", "assumption is receptive on controlled ports" if compatible
               else "assumption refuses a controlled history (incompatible)", w)
    return consistent, compatible


def _implementation_for(impl, fused):
    if isinstance(impl, ProfiledImplementation):
        return impl
    hidden = set(impl.alphabet.names) - fused.profile.ports
    behavior = exists_eliminate_all(impl, hidden)
    missing = fused.profile.ports - set(behavior.alphabet.names)
    if missing:
        behavior = lift(behavior, behavior.alphabet.union(fused.alphabet.restrict(missing)))
    return ProfiledImplementation(fused.profile, behavior)


def check_component(component):
    report = Report(command=f"check component {component.name}")
    if not component.contracts:
        report.verdict = True
        report.add("info", "no contracts: vacuously valid")
        return report
    try:
        fused = component.fused()
    except ContractError as e:
        report.verdict = False
        report.add("fusion-undefined", str(e))
        return report
    report.contract = fused
    report.profile = fused.profile
    report.add("info", f"fused {len(component.contracts)} contract(s) over local ports "
               f"{sorted(component.local_ports)}")
    _flags(report, fused)
    if component.implementation is None:
        report.verdict = True
        return report
    try:
        impl = _implementation_for(component.implementation, fused)
    except ReceptivenessError as e:
        report.verdict = False
        report.add("receptiveness", f"implementation rejected: {e}")
        return report
    if impl.profile != fused.profile:
        report.verdict = False
        report.add("profile-mismatch", "implementation profile differs from fused contract")
        return report
    bad = _violations(impl.behavior, fused.promise)
    if bad is None:
        report.verdict = True
        report.add("satisfaction", "implementation satisfies the fused contract")
    else:
        report.verdict = False
        report.add("satisfaction", "implementation run violates the fused promise", bad)
    return report


def _violations(behavior, promise):
    target = behavior.alphabet.union(promise.alphabet)
    b = lift(behavior, target)
    g = lift(promise, target)
    bad = Assertion(target, b.mask & ~g.mask)
    return next(bad.runs(), None)


def check_system(components):
    """Fold profiled composition over the components' fused contracts."""
    components = list(components)
    names = ", ".join(c.name for c in components)
    report = Report(command=f"check system {names}")
    if len(components) == 1:
        return check_component(components[0])
    fused = []
    kept = []
    for comp in components:
        if not comp.contracts:
            report.add("info", f"{comp.name} has no contracts; skipped")
            continue
        sub = check_component(comp)
        if sub.contract is None:
            report.verdict = False
            for d in sub.diagnostics:
                report.add(d.kind, f"{comp.name}: {d.message}", d.witness)
            return report
        fused.append(sub.contract)
        kept.append(comp)
        if sub.verdict is False:
            report.add("component", f"{comp.name} is not valid on its own")
    if not fused:
        report.verdict = True
        report.add("info", "no contracts in the system: vacuously valid")
        return report

    acc = fused[0]
    for comp, nxt in zip(kept[1:], fused[1:]):
        try:
            acc = p_compose(acc, nxt)
        except ContractError as e:
            report.verdict = False
            report.add("composition", f"cannot compose {comp.name} into the system: {e}")
            return report
        report.add("step", f"composed {comp.name}: controlled {sorted(acc.profile.controlled)}")
    report.contract = acc
    report.profile = acc.profile
    _, compatible = _flags(report, acc)
    report.verdict = compatible
    return report
