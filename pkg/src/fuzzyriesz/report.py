"""Check reports and their line-delimited structured form."""

from dataclasses import dataclass, field
from fractions import Fraction

from .rational import fmt


def _val(v, compact=True):
    if isinstance(v, Fraction):
        return fmt(v)
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, (list, tuple, frozenset, set)):
        items = sorted(v) if isinstance(v, (set, frozenset)) else v
        return "[" + ",".join(_val(a, compact) for a in items) + "]"
    # structured records split on spaces
    return str(v).replace(" ", "_") if compact else str(v)


@dataclass
class Report:
    """Outcome of one theorem check.

    ``failures`` holds witnesses for every violated instance; ``details``
    carries whatever the check computed that is worth printing.
    """

    thm: str
    name: str
    trials: int = 0
    failures: list = field(default_factory=list)
    details: dict = field(default_factory=dict)
    notes: list = field(default_factory=list)

    @property
    def passed(self):
        return not self.failures

    def fail(self, **witness):
        self.failures.append(witness)

    def record(self):
        """One grep-able line, e.g. ``thm=3.5 check=quotient-lattice status=pass trials=1000``."""
        parts = [f"thm={self.thm}", f"check={self.name}",
                 f"status={'pass' if self.passed else 'fail'}", f"trials={self.trials}"]
        for k in sorted(self.details):
            parts.append(f"{k}={_val(self.details[k])}")
        if self.failures:
            parts.append(f"failures={len(self.failures)}")
            first = self.failures[0]
            parts.append("witness=" + ";".join(f"{k}:{_val(first[k])}" for k in sorted(first)))
        return " ".join(parts)

    def text(self):
        head = f"[{'PASS' if self.passed else 'FAIL'}] {self.name} (thm {self.thm}, {self.trials} trials)"
        lines = [head]
        for k in sorted(self.details):
            lines.append(f"    {k}: {_val(self.details[k], False)}")
        for n in self.notes:
            lines.append(f"    note: {n}")
        for w in self.failures[:5]:
            lines.append("    witness: " + ", ".join(f"{k}={_val(v, False)}" for k, v in sorted(w.items())))
        if len(self.failures) > 5:
            lines.append(f"    ... {len(self.failures) - 5} more")
        return "\n".join(lines)

    def merge(self, other):
        self.trials += other.trials
        self.failures.extend(other.failures)
        return self
