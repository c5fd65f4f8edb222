"""Branch-curve numbers, Chern numbers of the Galois cover, and the dual curve.

Everything is exact: ``int`` and ``Fraction`` only.
"""

from __future__ import annotations

import csv
import enum
import io
import json
from dataclasses import asdict, dataclass
from fractions import Fraction
from math import factorial
from typing import Iterable, Optional


class UnsupportedDegree(ValueError):
    pass


@dataclass(frozen=True)
class CurveData:
    n: int  # degree of the generic projection
    m: int  # degree of the branch curve
    d: int  # nodes
    rho: int  # cusps
    g: int  # geometric genus


@dataclass(frozen=True)
class GaloisInvariants:
    n: int
    c1sq: int
    c2: int
    tau: int

    @property
    def factorial_normalized(self) -> tuple[Fraction, Fraction]:
        f = factorial(self.n)
        return Fraction(self.c1sq, f), Fraction(self.c2, f)


@dataclass(frozen=True)
class DualCurveData:
    m_star: Fraction
    dual_nodes: Fraction
    dual_cusps: Fraction

    @property
    def integral(self) -> bool:
        return all(x.denominator == 1 for x in (self.m_star, self.dual_nodes, self.dual_cusps))

    @property
    def nonnegative(self) -> bool:
        return min(self.m_star, self.dual_nodes, self.dual_cusps) >= 0


def plane_genus(m: int, d: int, rho: int) -> int:
    return (m - 1) * (m - 2) // 2 - d - rho


def curve_combinatorics(n: int) -> CurveData:
    if n < 4:
        raise UnsupportedDegree(f"the E_n family starts at n = 4, got {n}")
    m, d, rho = 2 * n, 2 * n * n - 10 * n + 12, 6 * n - 12
    g = plane_genus(m, d, rho)
    assert g == n + 1, (n, g)
    return CurveData(n, m, d, rho, g)


def chern(c: CurveData) -> GaloisInvariants:
    f = factorial(c.n)
    c1sq = f * Fraction((c.m - 6) ** 2, 4)
    c2 = f * (Fraction(c.m * c.m, 2) - Fraction(3 * c.m, 2) + 3
              - Fraction(3 * c.d, 4) - Fraction(4 * c.rho, 3))
    tau = (c1sq - 2 * c2) / 3
    for x in (c1sq, c2, tau):
        if x.denominator != 1:
            raise ArithmeticError(f"non-integral Chern data for n={c.n}: {x}")
    return GaloisInvariants(c.n, int(c1sq), int(c2), int(tau))


def general_type_check(gi: GaloisInvariants) -> bool:
    return gi.c1sq > 0


def pluecker_dual(m: int, d: int, rho: int) -> DualCurveData:
    """Degree and singularity counts of the dual curve.

    m* = m(m-1) - 2d - 3rho, and the genus and the dual class equation
    fix the dual nodes and cusps:
        g = (m*-1)(m*-2)/2 - nodes* - cusps*
        m = m*(m*-1) - 2 nodes* - 3 cusps*
    """
    ms = m * (m - 1) - 2 * d - 3 * rho
    g = plane_genus(m, d, rho)
    total = Fraction((ms - 1) * (ms - 2), 2) - g  # nodes* + cusps*
    weighted = ms * (ms - 1) - m  # 2 nodes* + 3 cusps*
    cusps = weighted - 2 * total
    nodes = total - cusps
    return DualCurveData(Fraction(ms), nodes, cusps)


def dual_of(c: CurveData) -> DualCurveData:
    return pluecker_dual(c.m, c.d, c.rho)


class Existence(str, enum.Enum):
    EXISTS_POSSIBLE = "EXISTS_POSSIBLE"
    NONEXISTENT = "NONEXISTENT"


@dataclass(frozen=True)
class ExistenceVerdict:
    n: int
    verdict: Existence
    reason: str = ""


def existence_check(n: int) -> ExistenceVerdict:
    c = curve_combinatorics(n)
    dual = dual_of(c)
    counts = {"d": c.d, "rho": c.rho, "g": c.g, "m*": dual.m_star,
              "dual nodes": dual.dual_nodes, "dual cusps": dual.dual_cusps}
    for name, v in counts.items():
        if Fraction(v).denominator != 1:
            return ExistenceVerdict(n, Existence.NONEXISTENT, f"{name} = {v} is not an integer")
        if v < 0:
            extra = " (30 - n < 0)" if name == "dual nodes" else ""
            return ExistenceVerdict(n, Existence.NONEXISTENT, f"{name} = {v} < 0{extra}")
    return ExistenceVerdict(n, Existence.EXISTS_POSSIBLE)


# ---------------------------------------------------------------------------
# tables

COLUMNS = ["n", "m", "d", "rho", "g", "c1sq/n!", "c2/n!", "tau/n!",
           "m*", "dual_nodes", "dual_cusps", "verdict"]


def _num(x) -> object:
    x = Fraction(x)
    return int(x) if x.denominator == 1 else str(x)


def invariant_row(n: int) -> dict:
    c = curve_combinatorics(n)
    gi = chern(c)
    dual = dual_of(c)
    c1n, c2n = gi.factorial_normalized
    return {
        "n": n, "m": c.m, "d": c.d, "rho": c.rho, "g": c.g,
        "c1sq/n!": _num(c1n), "c2/n!": _num(c2n), "tau/n!": _num(Fraction(gi.tau, factorial(n))),
        "m*": _num(dual.m_star), "dual_nodes": _num(dual.dual_nodes),
        "dual_cusps": _num(dual.dual_cusps), "verdict": existence_check(n).verdict.value,
    }


def invariant_report(n: int) -> dict:
    """Full exact data for one degree (big integers kept as ints)."""
    c = curve_combinatorics(n)
    gi = chern(c)
    dual = dual_of(c)
    ex = existence_check(n)
    return {
        "curve": asdict(c),
        "chern": {"c1sq": gi.c1sq, "c2": gi.c2, "tau": gi.tau,
                  "c1sq_over_nfact": _num(gi.factorial_normalized[0]),
                  "c2_over_nfact": _num(gi.factorial_normalized[1])},
        "general_type": general_type_check(gi),
        "dual": {"m_star": _num(dual.m_star), "dual_nodes": _num(dual.dual_nodes),
                 "dual_cusps": _num(dual.dual_cusps)},
        "existence": {"verdict": ex.verdict.value, "reason": ex.reason},
    }


def emit_table(ns: Iterable[int], fmt: str = "md") -> str:
    ns = list(ns)
    if not ns or min(ns) < 4:
        raise UnsupportedDegree("table range must lie in n >= 4")
    rows = [invariant_row(n) for n in ns]
    if fmt == "json":
        return json.dumps(rows, indent=1) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.DictWriter(buf, COLUMNS, lineterminator="\n")
        w.writeheader()
        w.writerows(rows)
        return buf.getvalue()
    if fmt == "md":
        out = ["| " + " | ".join(COLUMNS) + " |", "|" + "---|" * len(COLUMNS)]
        out += ["| " + " | ".join(str(r[k]) for k in COLUMNS) + " |" for r in rows]
        return "\n".join(out) + "\n"
    raise ValueError(f"unknown table format {fmt!r}")


def parse_range(text: str) -> range:
    """'4..30' (inclusive) or a single integer."""
    lo, sep, hi = text.partition("..")
    try:
        lo_i = int(lo)
        hi_i = int(hi) if sep else lo_i
    except ValueError:
        raise ValueError(f"bad range {text!r}; expected LO..HI") from None
    if hi_i < lo_i:
        raise ValueError(f"empty range {text!r}")
    return range(lo_i, hi_i + 1)
