"""Certify that extra relators follow from a presentation.

A relator r is a consequence of <X | R> exactly when <X | R> and
<X | R, r> have the same order (both finite).  Both enumerations are run
side by side; the S_n evaluation is reported as a cheap necessary check.
"""

from __future__ import annotations

import enum
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Optional, Sequence

from .presentation import Presentation, Stage, star_presentation
from .symverify import evaluate, path_assignment
from .todd_coxeter import DEFAULT_MAX_COSETS, EnumerationResult, enumerate_cosets
from .words import Word, commutator


class Verdict(str, enum.Enum):
    CONSEQUENCE = "CONSEQUENCE"
    NOT_CONSEQUENCE = "NOT_CONSEQUENCE"
    INCONCLUSIVE = "INCONCLUSIVE"


@dataclass(frozen=True)
class Deduction:
    relator: Word
    verdict: Verdict
    holds_in_sn: Optional[bool]
    base_order: Optional[int]
    extended_order: Optional[int]

    def to_dict(self) -> dict:
        return {
            "relator": str(self.relator),
            "verdict": self.verdict.value,
            "holds_in_sn": self.holds_in_sn,
            "base_order": self.base_order,
            "extended_order": self.extended_order,
        }


def _sn_check(p: Presentation, extra: Word) -> Optional[bool]:
    try:
        a = path_assignment(p.n, include_five=5 in {g.index for g in p.generators})
        return evaluate(extra, a).is_identity()
    except (ValueError, KeyError):
        return None


def _order(p: Presentation, max_cosets: int, strategy: str) -> EnumerationResult:
    return enumerate_cosets(p, (), max_cosets, strategy)


def _verdict(extra: Word, holds: Optional[bool], base: EnumerationResult,
             ext: EnumerationResult) -> Deduction:
    b = base.index if base.completed else None
    e = ext.index if ext.completed else None
    if b is None or e is None:
        verdict = Verdict.INCONCLUSIVE
    else:
        verdict = Verdict.CONSEQUENCE if b == e else Verdict.NOT_CONSEQUENCE
    return Deduction(extra, verdict, holds, b, e)


def is_consequence(p: Presentation, extra: Word, max_cosets: int = DEFAULT_MAX_COSETS,
                   strategy: str = "hlt", base: Optional[EnumerationResult] = None) -> Deduction:
    """Order-equality test for one relator; pass ``base`` to reuse an enumeration of p."""
    if p.stage is not Stage.STAR and p.stage is not Stage.COXETER:
        raise ValueError("is_consequence expects a STAR or COXETER presentation")
    holds = _sn_check(p, extra)
    extended = p.with_relators([extra])
    if base is not None:
        return _verdict(extra, holds, base, _order(extended, max_cosets, strategy))
    # the kernel releases the GIL, so the two runs overlap
    with ThreadPoolExecutor(2) as ex:
        fb = ex.submit(_order, p, max_cosets, strategy)
        fe = ex.submit(_order, extended, max_cosets, strategy)
        return _verdict(extra, holds, fb.result(), fe.result())


def derived_relators(n: int) -> list[Word]:
    """Relators claimed to follow from the staged presentation of degree n.

    [2,4], [2,5], [4,5], [4,7], [5,7] for every n >= 8, and [5,j] for
    8 <= j <= n-1.
    """
    if n < 8:
        raise ValueError(f"derived relators are defined for n >= 8, got {n}")
    rels = [commutator(a, b) for a, b in [(2, 4), (2, 5), (4, 5), (4, 7), (5, 7)]]
    rels += [commutator(5, j) for j in range(8, n)]
    return rels


@dataclass(frozen=True)
class SuiteReport:
    n: int
    base_order: Optional[int]
    results: tuple[Deduction, ...]

    @property
    def ok(self) -> bool:
        return all(r.verdict is Verdict.CONSEQUENCE for r in self.results)

    @property
    def inconclusive(self) -> bool:
        return any(r.verdict is Verdict.INCONCLUSIVE for r in self.results)

    def to_dict(self) -> dict:
        return {"n": self.n, "base_order": self.base_order, "ok": self.ok,
                "results": [r.to_dict() for r in self.results]}


def deduction_suite(n: int, relators: Sequence[Word] = (), max_cosets: int = DEFAULT_MAX_COSETS,
                    strategy: str = "hlt") -> SuiteReport:
    """Check every derived relator (or the given ones) against the degree-n presentation."""
    p = star_presentation(n)
    base = _order(p, max_cosets, strategy)
    rels = list(relators) or derived_relators(n)
    results = tuple(is_consequence(p, r, max_cosets, strategy, base=base) for r in rels)
    return SuiteReport(n, base.index if base.completed else None, results)
