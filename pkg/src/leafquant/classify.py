"""Complexity classification of leaf languages from their syntactic monoids.

Regular languages get one of three algebraic verdicts:

* a non-solvable syntactic monoid gives exactly PSPACE;
* a solvable, non-aperiodic one stays within MODPH;
* an aperiodic one stays within PH.

For single languages only the first is an equality; the other two are
containments. Known catalog languages additionally carry the class they are
known to define, reported alongside the algebraic verdict.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from functools import lru_cache

from .catalog import catalog, class_tag
from .automata import BINARY, Acceptor, Dfa, dfa_of
from .monoid import DEFAULT_MONOID_CAP, is_aperiodic, is_solvable, transition_monoid


class Verdict(enum.Enum):
    EQUALS_PSPACE = "EQUALS_PSPACE"
    WITHIN_MODPH = "WITHIN_MODPH"
    WITHIN_PH = "WITHIN_PH"
    NAMED = "NAMED"
    UNCLASSIFIED = "UNCLASSIFIED"


_CITATION = {
    Verdict.EQUALS_PSPACE: "regular leaf language with non-solvable syntactic monoid defines PSPACE",
    Verdict.WITHIN_MODPH: "regular leaf languages with solvable syntactic monoid define subclasses of MODPH",
    Verdict.WITHIN_PH: "regular leaf languages with aperiodic syntactic monoid define subclasses of PH",
    Verdict.NAMED: "catalog language with a known leaf class",
    Verdict.UNCLASSIFIED: "no algebraic or catalog information applies",
}


@dataclass(frozen=True)
class Classification:
    verdict: Verdict
    named: str | None = None
    evidence: dict = field(default_factory=dict, hash=False)

    def __post_init__(self):
        ev = self.evidence
        if self.verdict is Verdict.EQUALS_PSPACE and ev.get("solvable") is not False:
            raise ValueError("EQUALS_PSPACE needs non-solvable evidence")
        if self.verdict is Verdict.WITHIN_PH and ev.get("aperiodic") is not True:
            raise ValueError("WITHIN_PH needs aperiodic evidence")
        if self.verdict is Verdict.WITHIN_MODPH and not (
                ev.get("solvable") is True and ev.get("aperiodic") is False):
            raise ValueError("WITHIN_MODPH needs solvable, non-aperiodic evidence")
        if self.verdict is Verdict.NAMED and not self.named:
            raise ValueError("NAMED needs a class tag")

    def report(self, language: str) -> str:
        def yn(key):
            val = self.evidence.get(key)
            return "n/a" if val is None else ("yes" if val else "no")

        lines = [
            f"LANGUAGE: {language}",
            f"MONOID_SIZE: {self.evidence.get('monoid_size', 'n/a')}",
            f"APERIODIC: {yn('aperiodic')}",
            f"SOLVABLE: {yn('solvable')}",
            f"VERDICT: {self.verdict.value}",
            f"NAMED: {self.named or 'none'}",
            f"CITATION: {_CITATION[self.verdict]}",
        ]
        return "\n".join(lines) + "\n"


def monoid_verdict(aperiodic: bool, solvable: bool) -> Verdict:
    if not solvable:
        return Verdict.EQUALS_PSPACE
    if aperiodic:
        return Verdict.WITHIN_PH
    return Verdict.WITHIN_MODPH


# regular catalog entries recognised by language equivalence
_KNOWN = [("E", None), ("U", None), ("us", None), ("par", None), ("np_and_conp", None),
          ("A", 2), ("A", 3)] + [("mod_k", k) for k in range(3, 7)]


@lru_cache(maxsize=None)
def _known_minimal() -> tuple:
    return tuple((catalog(n, p).dfa.minimize(), class_tag(n, p)) for n, p in _KNOWN)


def _recognise(dfa: Dfa) -> str | None:
    if dfa.alphabet != BINARY:
        return None
    for known, tag in _known_minimal():
        if known == dfa:
            return tag
    return None


def classify_dfa(dfa: Dfa, monoid_cap: int = DEFAULT_MONOID_CAP) -> Classification:
    minimal = dfa.minimize()
    m = transition_monoid(minimal, monoid_cap)
    aperiodic = is_aperiodic(m)
    solvable = is_solvable(m)
    evidence = {"monoid_size": len(m), "aperiodic": aperiodic, "solvable": solvable,
                "dfa_states": minimal.num_states}
    return Classification(monoid_verdict(aperiodic, solvable), _recognise(minimal), evidence)


def classify_leaf_language(a: Acceptor, monoid_cap: int = DEFAULT_MONOID_CAP) -> Classification:
    key = getattr(a, "catalog_key", None)
    named = class_tag(*key) if key else None
    dfa = dfa_of(a)
    if dfa is not None:
        result = classify_dfa(dfa, monoid_cap)
        evidence = dict(result.evidence, catalog=key[0] if key else None)
        return Classification(result.verdict, named or result.named, evidence)
    if named:
        return Classification(Verdict.NAMED, named, {"catalog": key[0]})
    return Classification(Verdict.UNCLASSIFIED, None, {})
