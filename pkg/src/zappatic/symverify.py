"""The S_n side: permutations, the path assignment, and relator checks.

Permutations act on the right: a word is read left to right, and
``compose(p, q)`` means "first p, then q", i.e. x -> q(p(x)).
"""

from __future__ import annotations

import enum
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from math import factorial, prod
from typing import Iterable, Mapping, Optional, Sequence

import networkx as nx

from .presentation import Presentation, Stage, coxeter_presentation, eliminate_five, path_order
from .presentation import star_presentation
from .todd_coxeter import DEFAULT_MAX_COSETS, EnumerationResult, enumerate_cosets
from .words import Word, canonical_cyclic, canonical_involution


@dataclass(frozen=True)
class Permutation:
    images: tuple[int, ...]  # images[i-1] is the image of i

    def __post_init__(self):
        if sorted(self.images) != list(range(1, len(self.images) + 1)):
            raise ValueError(f"not a permutation of 1..{len(self.images)}: {self.images}")

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def transposition(cls, n: int, i: int, j: int) -> Permutation:
        img = list(range(1, n + 1))
        img[i - 1], img[j - 1] = j, i
        return cls(tuple(img))

    @classmethod
    def from_cycles(cls, n: int, *cycles: Sequence[int]) -> Permutation:
        img = list(range(1, n + 1))
        for cyc in cycles:
            for a, b in zip(cyc, cyc[1:] + type(cyc)(cyc[:1])):
                img[a - 1] = b
        return cls(tuple(img))

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def inverse(self) -> Permutation:
        img = [0] * self.n
        for i, j in enumerate(self.images, 1):
            img[j - 1] = i
        return Permutation(tuple(img))

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images, 1))

    def moved(self) -> list[int]:
        return [i for i, j in enumerate(self.images, 1) if i != j]

    def is_transposition(self) -> bool:
        m = self.moved()
        return len(m) == 2 and self(m[0]) == m[1]

    def order(self) -> int:
        k, p = 1, self
        while not p.is_identity():
            p = compose(p, self)
            k += 1
        return k

    def cycles(self) -> list[tuple[int, ...]]:
        seen, out = set(), []
        for i in range(1, self.n + 1):
            if i in seen or self(i) == i:
                continue
            cyc = [i]
            seen.add(i)
            j = self(i)
            while j != i:
                cyc.append(j)
                seen.add(j)
                j = self(j)
            out.append(tuple(cyc))
        return out

    def __str__(self) -> str:
        cyc = self.cycles()
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cyc) if cyc else "id"


def compose(p: Permutation, q: Permutation) -> Permutation:
    if p.n != q.n:
        raise ValueError(f"size mismatch: {p.n} vs {q.n}")
    return Permutation(tuple(q.images[i - 1] for i in p.images))


class GeneratorAssignment(dict):
    """Generator index -> transposition in S_n."""

    def __init__(self, n: int, mapping: Mapping[int, Permutation]):
        super().__init__(mapping)
        self.n = n
        for g, p in self.items():
            if p.n != n or not p.is_transposition():
                raise ValueError(f"generator {g} is not sent to a transposition of S_{n}")


def path_assignment(n: int, include_five: bool = False) -> GeneratorAssignment:
    """3, 2, 1, 4, 6, ..., n -> (1 2), (2 3), ..., (n-1 n).

    With ``include_five`` the eliminated generator 5 is also assigned, to
    the image of its elimination word (which works out to (1 n)).
    """
    amap = {g: Permutation.transposition(n, i, i + 1) for i, g in enumerate(path_order(n), 1)}
    a = GeneratorAssignment(n, amap)
    if include_five:
        if n < 8:
            raise ValueError("generator 5 is only eliminated for n >= 8")
        amap[5] = _five_image(n, a)
        a = GeneratorAssignment(n, amap)
    return a


def nested_image(n: int, k: int, a: GeneratorAssignment) -> Permutation:
    """Image of nested_word(n, k) using W_k = W_{k-1} (n-k+1) W_{k-1}."""
    w = Permutation.identity(a.n)
    for i in range(1, k + 1):
        w = compose(compose(w, a[n - i + 1]), w)
    return w


def _five_image(n: int, a: GeneratorAssignment) -> Permutation:
    # same value as evaluate(eliminate_five(n), a), without the 2^(n-7) letters
    w = nested_image(n, n - 7, a)
    side = compose(compose(compose(a[7], w), a[7]), a[6])
    middle = evaluate(Word.of(4, 3, 2, 1, 2, 3, 4), a)
    return compose(compose(side, middle), side.inverse())


def evaluate(w: Word, a: GeneratorAssignment) -> Permutation:
    img = list(range(1, a.n + 1))
    inverses: dict[int, Permutation] = {}
    for x in w:
        if x.primed:
            raise ValueError(f"primed letter {x} cannot be evaluated; pass to the STAR stage first")
        p = a.get(x.index)
        if p is None:
            raise KeyError(f"generator {x.index} is not assigned")
        if x.exponent < 0:
            p = inverses.setdefault(x.index, p.inverse())
        img = [p.images[i - 1] for i in img]
    return Permutation(tuple(img))


@dataclass(frozen=True)
class RelatorCheck:
    relator: Word
    passed: bool
    label: str = ""

    def to_dict(self) -> dict:
        return {"relator": str(self.relator), "pass": self.passed}


@dataclass(frozen=True)
class HomReport:
    n: int
    checks: tuple[RelatorCheck, ...]

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failures(self) -> list[RelatorCheck]:
        return [c for c in self.checks if not c.passed]

    def summary(self) -> dict:
        return {"passed": sum(c.passed for c in self.checks), "total": len(self.checks), "ok": self.ok}

    def to_list(self) -> list[dict]:
        return [c.to_dict() for c in self.checks]


def check_homomorphism(p: Presentation, a: GeneratorAssignment, workers: int = 1) -> HomReport:
    """Evaluate every relator under the assignment; all identity means a homomorphism."""
    if p.stage is Stage.FULL:
        raise ValueError("check the STAR or COXETER stage")

    def one(i_r):
        i, r = i_r
        return RelatorCheck(r, evaluate(r, a).is_identity(), p.label_of(i))

    items: Iterable = enumerate(p.relators)
    if workers > 1:
        with ThreadPoolExecutor(workers) as ex:
            checks = tuple(ex.map(one, items))
    else:
        checks = tuple(map(one, items))
    return HomReport(p.n, checks)


def generates_symmetric_group(a: GeneratorAssignment) -> bool:
    """True when the images contain every adjacent transposition (i i+1)."""
    have = {tuple(p.moved()) for p in a.values()}
    return all((i, i + 1) in have for i in range(1, a.n))


# ---------------------------------------------------------------------------
# order certificates


def coxeter_subgroup(p: Presentation) -> tuple[list[int], int]:
    """Path generators S whose Coxeter relations all occur verbatim in p.

    Then <S> is a quotient of the Coxeter group W_S, a product of symmetric
    groups, so |<S>| <= |W_S|.  Returns the S maximizing |W_S|, and |W_S|.
    """
    path = path_order(p.n)
    have = {canonical_involution(r) for r in p.relators}
    # pair relations are matched up to g^2 = e, so squares must be literal
    squared = {canonical_cyclic(r) for r in p.relators}
    gens = [g for g in path if canonical_cyclic(Word.of(g, g)) in squared]
    pos = {g: i for i, g in enumerate(path)}
    graph = nx.Graph()
    graph.add_nodes_from(gens)
    for i, s in enumerate(gens):
        for t in gens[i + 1:]:
            m = 3 if abs(pos[s] - pos[t]) == 1 else 2
            if canonical_involution(Word.of(s, t) ** m) in have:
                graph.add_edge(s, t)

    def bound(sub: Sequence[int]) -> int:
        # components of the induced path pieces are type A: W = S_(k+1)
        idx = sorted(pos[g] for g in sub)
        runs, run = [], 1
        for a, b in zip(idx, idx[1:]):
            if b == a + 1:
                run += 1
            else:
                runs.append(run)
                run = 1
        if idx:
            runs.append(run)
        return prod(factorial(k + 1) for k in runs)

    best: list[int] = []
    for clique in nx.find_cliques(graph):
        if bound(clique) > bound(best) or (bound(clique) == bound(best) and sorted(clique) < best):
            best = sorted(clique)
    return best, bound(best)


class Certificate(str, enum.Enum):
    CERTIFIED = "CERTIFIED"
    REFUTED = "REFUTED"
    INCONCLUSIVE = "INCONCLUSIVE"


@dataclass(frozen=True)
class Verification:
    n: int
    method: str
    hom: HomReport
    order: Optional[int]
    certificate: Certificate
    enumeration: Optional[EnumerationResult] = None
    subgroup: tuple[int, ...] = ()
    subgroup_bound: Optional[int] = None

    @property
    def exit_code(self) -> int:
        return {Certificate.CERTIFIED: 0, Certificate.REFUTED: 1, Certificate.INCONCLUSIVE: 2}[
            self.certificate]

    def to_dict(self) -> dict:
        out = {
            "n": self.n,
            "method": self.method,
            "hom_check": self.hom.summary(),
            "order": self.order,
            "n_factorial": factorial(self.n),
            "match": self.order == factorial(self.n) if self.order is not None else None,
            "certified": self.certificate is Certificate.CERTIFIED,
            "status": self.certificate.value,
        }
        if self.enumeration is not None:
            out["enumeration"] = self.enumeration.to_dict()
        if self.subgroup:
            out["subgroup"] = list(self.subgroup)
            out["subgroup_bound"] = self.subgroup_bound
        return out


def presentation_for(n: int) -> Presentation:
    """The STAR presentation for n >= 8; the Coxeter form below that."""
    return star_presentation(n) if n >= 8 else coxeter_presentation(n)


def verify(p: Presentation, method: str = "order", max_cosets: int = DEFAULT_MAX_COSETS,
           strategy: str = "hlt") -> Verification:
    """Certify G ≅ S_n: a surjection onto S_n plus |G| = n!.

    ``order`` enumerates all cosets of the trivial subgroup.  ``coset``
    enumerates the cosets of <S> from :func:`coxeter_subgroup`, which bounds
    |G| <= index * |W_S|; the surjection gives |G| >= n!, so the order is
    pinned when the two meet.  ``hom`` stops after the surjection check.
    """
    n = p.n
    a = path_assignment(n, include_five=any(g.index == 5 for g in p.generators))
    hom = check_homomorphism(p, a)
    if not hom.ok:
        return Verification(n, method, hom, None, Certificate.REFUTED)
    if method == "hom":
        return Verification(n, method, hom, None, Certificate.INCONCLUSIVE)
    nfact = factorial(n)
    if method == "order":
        res = enumerate_cosets(p, (), max_cosets, strategy)
        if not res.completed:
            return Verification(n, method, hom, None, Certificate.INCONCLUSIVE, res)
        cert = Certificate.CERTIFIED if res.index == nfact else Certificate.REFUTED
        return Verification(n, method, hom, res.index, cert, res)
    if method == "coset":
        sub, bound = coxeter_subgroup(p)
        res = enumerate_cosets(p, [Word.of(g) for g in sub], max_cosets, strategy)
        if not res.completed:
            return Verification(n, method, hom, None, Certificate.INCONCLUSIVE, res, tuple(sub), bound)
        upper = res.index * bound
        if upper == nfact:
            return Verification(n, method, hom, nfact, Certificate.CERTIFIED, res, tuple(sub), bound)
        if upper < nfact:  # impossible alongside a surjection; flag loudly
            return Verification(n, method, hom, None, Certificate.REFUTED, res, tuple(sub), bound)
        return Verification(n, method, hom, None, Certificate.INCONCLUSIVE, res, tuple(sub), bound)
    raise ValueError(f"unknown method {method!r}")
