"""Deterministic check reports and their JSON / text renderings."""
from __future__ import annotations

import json
from dataclasses import dataclass, field


@dataclass
class Diagnostic:
    kind: str
    message: str
    witness: object = None  # Run or None

    def to_json(self):
        return {"kind": self.kind, "message": self.message,
                "witness": None if self.witness is None else self.witness.to_json()}


@dataclass
class Report:
    command: str
    verdict: bool | None = None
    contract: object = None  # Contract or ProfiledContract
    diagnostics: list = field(default_factory=list)
    profile: object = None
    lines: list = field(default_factory=list)  # extra text-only lines

    def add(self, kind, message, witness=None):
        self.diagnostics.append(Diagnostic(kind, message, witness))

    def to_json(self):
        contract = None
        if self.contract is not None:
            contract = {"assume": [r.to_json() for r in self.contract.assumption.runs()],
                        "promise": [r.to_json() for r in self.contract.promise.runs()]}
        return {"command": self.command, "verdict": self.verdict, "contract": contract,
                "diagnostics": [d.to_json() for d in self.diagnostics]}

    def dumps(self):
        return json.dumps(self.to_json(), indent=2, sort_keys=False)
