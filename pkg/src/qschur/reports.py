"""Outcome records for identity checks, serializable to text and JSON."""

from __future__ import annotations

from dataclasses import dataclass, field

from .series import QSeries, series_first_mismatch


@dataclass(frozen=True)
class Mismatch:
    """The first exponent at which two sides of a check disagree."""

    exponent: int
    lhs: int
    rhs: int


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of a single identity check.

    ``status`` is "fail" exactly when a mismatch is present; ``params`` keeps
    its insertion order for deterministic rendering.
    """

    label: str
    params: dict[str, int] = field(default_factory=dict)
    mismatch: Mismatch | None = None

    @property
    def passed(self) -> bool:
        return self.mismatch is None

    @property
    def status(self) -> str:
        return "pass" if self.passed else "fail"

    def to_text(self) -> str:
        head = " ".join([self.label] + [f"{k}={v}" for k, v in self.params.items()])
        if self.passed:
            return f"{head}: pass"
        mm = self.mismatch
        return f"{head}: fail at q^{mm.exponent}: lhs={mm.lhs} rhs={mm.rhs}"

    def to_json_obj(self) -> dict:
        obj: dict = {
            "label": self.label,
            "params": dict(self.params),
            "status": self.status,
        }
        if self.mismatch is not None:
            # Coefficients as decimal strings: consumers need no big integers.
            obj["mismatch"] = {
                "exponent": self.mismatch.exponent,
                "lhs": str(self.mismatch.lhs),
                "rhs": str(self.mismatch.rhs),
            }
        return obj


@dataclass(frozen=True)
class CheckSuiteResult:
    """Aggregate of reports over a parameter range."""

    reports: tuple[VerificationReport, ...]

    @property
    def all_passed(self) -> bool:
        return all(r.passed for r in self.reports)

    def to_text(self) -> str:
        return "\n".join(r.to_text() for r in self.reports)

    def to_json_obj(self) -> dict:
        return {
            "reports": [r.to_json_obj() for r in self.reports],
            "all_passed": self.all_passed,
        }


def compare_series(
    label: str,
    params: dict[str, int],
    lhs: QSeries,
    rhs: QSeries,
    up_to: int,
) -> VerificationReport:
    """Build a report from a coefficient-by-coefficient series comparison."""
    found = series_first_mismatch(lhs, rhs, up_to)
    mismatch = None if found is None else Mismatch(*found)
    return VerificationReport(label=label, params=params, mismatch=mismatch)
