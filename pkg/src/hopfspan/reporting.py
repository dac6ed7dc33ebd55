"""Small result types shared by the checkers."""

from dataclasses import dataclass, field


@dataclass(frozen=True)
class Verdict:
    """A yes/no answer that carries a witness when the answer is no."""

    ok: bool
    witness: object = None

    def __bool__(self):
        return self.ok


@dataclass
class CheckReport:
    """Outcome of an axiom suite: named failures with located witnesses."""

    name: str
    failures: list = field(default_factory=list)

    @property
    def ok(self):
        return not self.failures

    def __bool__(self):
        return self.ok

    def fail(self, law, witness):
        self.failures.append((law, witness))

    def merge(self, other):
        self.failures.extend(other.failures)
        return self

    def summary(self):
        if self.ok:
            return "%s: pass" % self.name
        law, witness = self.failures[0]
        return "%s: FAIL %d law(s), first %s at %r" % (
            self.name, len(self.failures), law, witness)
