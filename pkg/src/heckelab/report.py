"""Pass/fail records returned by every verification routine."""

from dataclasses import dataclass, field


@dataclass
class CheckReport:
    name: str
    passed: bool
    details: dict = field(default_factory=dict)
    mismatch: str = None

    def __bool__(self):
        return self.passed

    def to_json(self):
        out = {"check": self.name, "status": "pass" if self.passed else "fail", "details": self.details}
        if self.mismatch:
            out["mismatch"] = self.mismatch
        return out


def compare(name, lhs, rhs, details=None, label="coefficient"):
    """Compare two polynomials in X coefficient by coefficient.

    The report names the first mismatching degree.
    """
    details = dict(details or {})
    if lhs == rhs:
        return CheckReport(name, True, details)
    from .algebra import RationalFunction
    a = RationalFunction.coerce(lhs)
    b = RationalFunction.coerce(rhs)
    diff = a - b
    mismatch = f"{name}: sides differ"
    try:
        cs = diff.coefficients("X")
        for d, c in enumerate(cs):
            if c:
                mismatch = f"{name}: first mismatching {label} at X^{d}: difference {c}"
                break
    except ValueError:
        pass
    return CheckReport(name, False, details, mismatch)
