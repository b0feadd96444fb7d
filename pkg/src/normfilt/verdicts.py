"""Verdict records produced by the statement checkers."""

from __future__ import annotations

from dataclasses import dataclass, field

SCHEMA_VERSION = "normfilt.verdict/1"

CONCLUSIONS = (
    "verified",
    "refuted-with-witness",
    "inconclusive-horizon",
    "asserted-by-paper",
    "abstained",
)


@dataclass(frozen=True)
class Witness:
    degree: int
    element: str
    note: str = ""

    def to_dict(self) -> dict:
        d = {"degree": self.degree, "element": self.element}
        if self.note:
            d["note"] = self.note
        return d


@dataclass(frozen=True)
class Verdict:
    check: str
    conclusion: str
    hypotheses_met: bool
    detail: str = ""
    numbers: dict = field(default_factory=dict)
    witnesses: tuple[Witness, ...] = ()

    def __post_init__(self):
        if self.conclusion not in CONCLUSIONS:
            raise ValueError(f"unknown conclusion {self.conclusion!r}")

    @property
    def is_refutation(self) -> bool:
        return self.conclusion == "refuted-with-witness"

    def to_dict(self) -> dict:
        return {
            "schema": SCHEMA_VERSION,
            "check": self.check,
            "conclusion": self.conclusion,
            "hypotheses_met": self.hypotheses_met,
            "detail": self.detail,
            "numbers": dict(sorted(self.numbers.items())),
            "witnesses": [w.to_dict() for w in self.witnesses],
        }


def verified(check, detail="", numbers=None, witnesses=()):
    return Verdict(check, "verified", True, detail, numbers or {}, tuple(witnesses))


def refuted(check, detail="", numbers=None, witnesses=()):
    return Verdict(check, "refuted-with-witness", True, detail, numbers or {}, tuple(witnesses))


def horizon(check, detail="", numbers=None):
    return Verdict(check, "inconclusive-horizon", True, detail, numbers or {})


def asserted(check, detail="", numbers=None):
    return Verdict(check, "asserted-by-paper", True, detail, numbers or {})


def abstained(check, detail="", numbers=None):
    return Verdict(check, "abstained", False, detail, numbers or {})
