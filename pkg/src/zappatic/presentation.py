"""Presentations of G^n, G^n_* and the Coxeter form of S_n.

Three stages are distinguished:

FULL     raw relators over γ_j, γ_j' (only the n = 10 appendix fixture);
STAR     squares of all generators added and γ_j' identified with γ_j;
COXETER  the final shape: n-1 involutions along the path
         3 - 2 - 1 - 4 - 6 - 7 - ... - n, generator 5 eliminated.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass, field, replace
from importlib import resources
from typing import Iterable, Optional, Sequence

from .words import (
    Generator,
    Word,
    canonical_cyclic,
    canonical_involution,
    commutator,
    involution_form,
    nested_word,
    parse_relators,
    triple,
)


class UnsupportedDegree(ValueError):
    pass


class Stage(str, enum.Enum):
    FULL = "FULL"
    STAR = "STAR"
    COXETER = "COXETER"


@dataclass(frozen=True)
class Presentation:
    n: int
    generators: tuple[Generator, ...]
    relators: tuple[Word, ...]
    stage: Stage
    # one block label per relator ("part 1", "squares", ...); may be empty
    labels: tuple[str, ...] = field(default=(), compare=False)

    def __post_init__(self):
        gens = set(self.generators)
        for r in self.relators:
            extra = r.generators() - gens
            if extra:
                raise ValueError(f"relator {r} uses non-generators {sorted(map(str, extra))}")
        if self.labels and len(self.labels) != len(self.relators):
            raise ValueError("labels must be parallel to relators")

    def label_of(self, i: int) -> str:
        return self.labels[i] if self.labels else ""

    def block(self, label: str) -> list[Word]:
        return [r for r, l in zip(self.relators, self.labels) if l == label]

    def with_relators(self, extra: Iterable[Word], label: str = "extra") -> Presentation:
        extra = tuple(extra)
        labels = (self.labels + (label,) * len(extra)) if self.labels else ()
        return replace(self, relators=self.relators + extra, labels=labels)

    def without(self, relator: Word) -> Presentation:
        """Drop every relator equal to ``relator`` up to rotation and inversion."""
        key = canonical_cyclic(relator)
        keep = [i for i, r in enumerate(self.relators) if canonical_cyclic(r) != key]
        if len(keep) == len(self.relators):
            raise ValueError(f"{relator} is not a relator")
        return replace(
            self,
            relators=tuple(self.relators[i] for i in keep),
            labels=tuple(self.labels[i] for i in keep) if self.labels else (),
        )

    def to_text(self) -> str:
        lines = [f"# n={self.n} stage={self.stage.value.lower()}\n"]
        current = None
        for i, r in enumerate(self.relators):
            label = self.label_of(i)
            if label and label != current:
                lines.append(f"# {label}\n")
                current = label
            lines.append(f"{r}\n")
        return "".join(lines)


@dataclass(frozen=True)
class RelationPart:
    part_index: int
    relators: tuple[Word, ...]


def path_order(n: int) -> list[int]:
    """Generator indices along the Coxeter path: 3, 2, 1, 4, 6, 7, ..., n."""
    if n < 6:
        raise UnsupportedDegree(f"the path 3-2-1-4-6-... needs n >= 6, got {n}")
    return [3, 2, 1, 4] + list(range(6, n + 1))


def unprimed(indices: Iterable[int]) -> tuple[Generator, ...]:
    return tuple(Generator(i) for i in sorted(indices))


def squares(gens: Iterable[Generator]) -> list[Word]:
    return [Word.of(g.index, g.index) for g in gens]


# ---------------------------------------------------------------------------
# staged relation parts for general n


def final_part_base() -> list[Word]:
    """Relations among generators 1..8 shared by every n >= 8."""
    rels = [triple(a, b) for a, b in [(1, 2), (1, 4), (2, 3), (3, 5), (4, 6), (6, 7), (7, 8)]]
    pairs = [(1, j) for j in (3, 5, 6, 7, 8)]
    pairs += [(2, j) for j in (6, 7, 8)]
    pairs += [(3, j) for j in (4, 6, 7, 8)]
    pairs += [(4, 8), (5, 6), (6, 8)]
    return rels + [commutator(a, b) for a, b in pairs]


def long_relator(n: int) -> Word:
    """4 3 2 1 2 3 4 = 6 7 W 7 5 7 W 7 6 with W = nested_word(n, n-7), as LHS·RHS^-1."""
    w = nested_word(n, n - 7)
    lhs = Word.of(4, 3, 2, 1, 2, 3, 4)
    rhs = Word.of(6, 7) * w * Word.of(7, 5, 7) * w * Word.of(7, 6)
    return lhs * rhs.inverse()


def eliminate_five(n: int) -> Word:
    """Expression of generator 5 obtained by solving the long relation for it."""
    w = nested_word(n, n - 7)
    side = Word.of(7) * w * Word.of(7, 6)
    return side * Word.of(4, 3, 2, 1, 2, 3, 4) * side.inverse()


def build_star_parts(n: int) -> list[RelationPart]:
    if n < 8:
        raise UnsupportedDegree(f"staged relations exist only for n >= 8, got {n}")
    parts = []
    for k in range(1, n - 7):
        top = n - k + 1
        others = [1, 2, 3, 4] + list(range(6, n - k))
        rels = [triple(5, nested_word(n, k)), triple(n - k, top)]
        rels += [commutator(j, top) for j in others]
        parts.append(RelationPart(k, tuple(rels)))
    base = final_part_base()
    extra = [
        triple(5, nested_word(n, n - 7)),
        triple(5, nested_word(n, n - 6)),
        long_relator(n),
    ]
    parts.append(RelationPart(n - 7, tuple(base[:7] + extra + base[7:])))
    return parts


def star_presentation(n: int) -> Presentation:
    """G^n_* from the staged parts: generators 1..n, squares, then each part."""
    gens = unprimed(range(1, n + 1))
    rels = squares(gens)
    labels = ["squares"] * len(rels)
    for part in build_star_parts(n):
        rels += part.relators
        labels += [f"part {part.part_index}"] * len(part.relators)
    return Presentation(n, gens, tuple(rels), Stage.STAR, tuple(labels))


# ---------------------------------------------------------------------------
# Coxeter form of S_n


def coxeter_presentation(n: int) -> Presentation:
    path = path_order(n)
    gens = unprimed(path)
    rels = squares(gens)
    labels = ["squares"] * len(rels)
    for i, s in enumerate(path):
        for j in range(i + 1, len(path)):
            t = path[j]
            if j == i + 1:
                rels.append(Word.of(s, t) ** 3)
                labels.append("braid")
            else:
                rels.append(Word.of(s, t) ** 2)
                labels.append("commute")
    return Presentation(n, gens, tuple(rels), Stage.COXETER, tuple(labels))


def _single_letter_pair(r: Word, pattern: Sequence[tuple[int, int]]) -> Optional[tuple]:
    """Match r against a pattern of (slot, sign) with slot 0 = a, 1 = b."""
    if len(r) != len(pattern):
        return None
    slots: list = [None, None]
    for x, (slot, sign) in zip(r, pattern):
        base = x.base
        if x.exponent != sign:
            return None
        if slots[slot] is None:
            slots[slot] = base
        elif slots[slot] != base:
            return None
    if slots[0] == slots[1]:
        return None
    return tuple(slots)


_TRIPLE = [(0, 1), (1, 1), (0, 1), (1, -1), (0, -1), (1, -1)]
_COMM = [(0, 1), (1, 1), (0, -1), (1, -1)]


def coxeter_translate(p: Presentation) -> Presentation:
    """Rewrite single-letter <a,b> as (ab)^3 and [a,b] as (ab)^2.

    Valid because a^2 = b^2 = e in the STAR stage; longer relators are kept.
    """
    if p.stage is not Stage.STAR:
        raise ValueError("coxeter_translate expects a STAR presentation")
    out = []
    for r in p.relators:
        m = _single_letter_pair(r, _TRIPLE)
        if m is not None:
            a, b = m
            out.append((Word.gen(*a) * Word.gen(*b)) ** 3)
            continue
        m = _single_letter_pair(r, _COMM)
        if m is not None:
            a, b = m
            out.append((Word.gen(*a) * Word.gen(*b)) ** 2)
            continue
        out.append(r)
    return replace(p, relators=tuple(out))


# ---------------------------------------------------------------------------
# FULL -> STAR


def quotient_star(p: Presentation) -> Presentation:
    """Add g^2 for every generator and identify γ_j' with γ_j.

    Relators are rewritten over the unprimed alphabet in involution normal
    form; those that become trivial are dropped and duplicates (up to
    rotation and inversion) removed.
    """
    if p.stage is not Stage.FULL:
        raise ValueError("quotient_star expects a FULL presentation")
    gens = unprimed({g.index for g in p.generators})
    rels = squares(gens)
    labels = ["squares"] * len(rels)
    seen = {canonical_involution(r) for r in rels}
    for i, r in enumerate(p.relators):
        w = list(involution_form(r).letters)
        while len(w) > 1 and w[0] == w[-1]:
            w = w[1:-1]
        w = Word(w)
        if not w:
            continue
        key = canonical_involution(w)
        if key in seen:
            continue
        seen.add(key)
        rels.append(w)
        labels.append(p.label_of(i))
    return Presentation(p.n, gens, tuple(rels), Stage.STAR, tuple(labels))


# ---------------------------------------------------------------------------
# appendix fixture (n = 10, FULL)

APPENDIX_FILE = "e10_appendix.txt"
MANIFEST_FILE = "e10_appendix_manifest.json"


def _data(name: str) -> str:
    return resources.files("zappatic").joinpath("data", name).read_text()


def parse_blocks(text: str) -> list[tuple[str, Word]]:
    """Relator text with ``# @block <label>`` markers -> [(label, relator)]."""
    out = []
    label = ""
    for line in text.splitlines():
        s = line.strip()
        if s.startswith("# @block"):
            label = s.split(None, 2)[2]
            continue
        for w in parse_relators(line):
            out.append((label, w))
    return out


def appendix_manifest() -> dict[str, int]:
    return json.loads(_data(MANIFEST_FILE))


def e10_appendix_presentation() -> Presentation:
    blocks = parse_blocks(_data(APPENDIX_FILE))
    gens = tuple(Generator(i, pr) for i in range(1, 11) for pr in (False, True))
    return Presentation(
        10, gens, tuple(w for _, w in blocks), Stage.FULL, tuple(l for l, _ in blocks))
