"""Free-group words over the doubled alphabet {γ_j, γ_j'}.

Words are immutable and always freely reduced.  The text form used for
relator files is one token per letter, ``[-]<index>[']``: a leading ``-``
marks an inverse, a trailing ``'`` marks the primed generator, so
``-9' 10 9'`` is γ_9'^{-1} γ_10 γ_9'.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, NamedTuple, Sequence, Union

PRIME = "'"


class Generator(NamedTuple):
    index: int
    primed: bool = False

    def __str__(self) -> str:
        return f"{self.index}{PRIME if self.primed else ''}"


@dataclass(frozen=True, order=True)
class Letter:
    index: int
    primed: bool = False
    exponent: int = 1

    def __post_init__(self):
        if self.index < 1:
            raise ValueError(f"letter index must be >= 1, got {self.index}")
        if self.exponent not in (1, -1):
            raise ValueError(f"exponent must be +1 or -1, got {self.exponent}")

    @property
    def base(self) -> Generator:
        return Generator(self.index, self.primed)

    def inverse(self) -> Letter:
        return Letter(self.index, self.primed, -self.exponent)

    def __str__(self) -> str:
        sign = "-" if self.exponent < 0 else ""
        return f"{sign}{self.index}{PRIME if self.primed else ''}"


_TOKEN = re.compile(r"^(-?)(\d+)(')?$")


def parse_letter(token: str) -> Letter:
    m = _TOKEN.match(token)
    if m is None:
        raise ValueError(f"bad letter token {token!r}")
    return Letter(int(m.group(2)), m.group(3) is not None, -1 if m.group(1) else 1)


def _free_reduce(letters: Iterable[Letter]) -> tuple[Letter, ...]:
    out: list[Letter] = []
    for x in letters:
        if out and out[-1].base == x.base and out[-1].exponent == -x.exponent:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


class Word:
    """A freely reduced word; construction always reduces."""

    __slots__ = ("_letters", "_hash")

    def __init__(self, letters: Iterable[Letter] = ()):
        self._letters = _free_reduce(letters)
        self._hash = hash(self._letters)

    @classmethod
    def parse(cls, text: str) -> Word:
        return cls(parse_letter(t) for t in text.split())

    @classmethod
    def gen(cls, index: int, primed: bool = False, exponent: int = 1) -> Word:
        return cls((Letter(index, primed, exponent),))

    @classmethod
    def of(cls, *indices: int) -> Word:
        """Word in unprimed letters; negative integers are inverses."""
        return cls(Letter(abs(i), False, 1 if i > 0 else -1) for i in indices)

    @property
    def letters(self) -> tuple[Letter, ...]:
        return self._letters

    def __len__(self) -> int:
        return len(self._letters)

    def __iter__(self) -> Iterator[Letter]:
        return iter(self._letters)

    def __getitem__(self, i):
        return self._letters[i]

    def __bool__(self) -> bool:
        return bool(self._letters)

    def __eq__(self, other) -> bool:
        return isinstance(other, Word) and self._letters == other._letters

    def __hash__(self) -> int:
        return self._hash

    def __lt__(self, other: Word) -> bool:
        return (len(self), self._letters) < (len(other), other._letters)

    def __mul__(self, other: Word) -> Word:
        return Word(self._letters + other._letters)

    def __pow__(self, k: int) -> Word:
        if k < 0:
            return self.inverse() ** (-k)
        return Word(self._letters * k)

    def inverse(self) -> Word:
        return Word(x.inverse() for x in reversed(self._letters))

    def is_identity(self) -> bool:
        return not self._letters

    def generators(self) -> set[Generator]:
        return {x.base for x in self._letters}

    def substitute(self, mapping: Mapping[Generator, Word]) -> Word:
        """Replace each generator by a word (its inverse for inverse letters)."""
        out: list[Letter] = []
        for x in self._letters:
            image = mapping.get(x.base)
            if image is None:
                out.append(x)
            elif x.exponent > 0:
                out.extend(image)
            else:
                out.extend(image.inverse())
        return Word(out)

    def cyclic_reduce(self) -> Word:
        xs = self._letters
        i, j = 0, len(xs) - 1
        while i < j and xs[i].base == xs[j].base and xs[i].exponent == -xs[j].exponent:
            i += 1
            j -= 1
        return Word(xs[i:j + 1])

    def is_palindrome(self) -> bool:
        return self._letters == self._letters[::-1]

    def __str__(self) -> str:
        return " ".join(map(str, self._letters)) if self._letters else "e"

    def __repr__(self) -> str:
        return f"Word({str(self)!r})"


IDENTITY = Word()

WordLike = Union[Word, Letter, int, str]


def as_word(x: WordLike) -> Word:
    if isinstance(x, Word):
        return x
    if isinstance(x, Letter):
        return Word((x,))
    if isinstance(x, int):
        return Word.of(x)
    return Word.parse(x)


def reduce(letters: Iterable[Letter]) -> Word:
    return Word(letters)


def commutator(a: WordLike, b: WordLike) -> Word:
    """[a, b] = a b a^-1 b^-1."""
    a, b = as_word(a), as_word(b)
    return a * b * a.inverse() * b.inverse()


def triple(a: WordLike, b: WordLike) -> Word:
    """<a, b> = a b a b^-1 a^-1 b^-1; trivial iff aba = bab."""
    a, b = as_word(a), as_word(b)
    return a * b * a * b.inverse() * a.inverse() * b.inverse()


def conjugate(w: WordLike, by: WordLike) -> Word:
    """by · w · by^-1."""
    w, by = as_word(w), as_word(by)
    return by * w * by.inverse()


def nested_word(n: int, k: int) -> Word:
    """W_0 = e, W_k = W_{k-1} (n-k+1) W_{k-1}, for 1 <= k <= n-6.

    W_1 = n, W_2 = n (n-1) n, W_3 = n (n-1) n (n-2) n (n-1) n, ...
    """
    if not 1 <= k <= n - 6:
        raise ValueError(f"nested_word needs 1 <= k <= n-6, got n={n}, k={k}")
    w = IDENTITY
    for i in range(1, k + 1):
        w = w * Word.of(n - i + 1) * w
    return w


def involution_form(w: Word, merge_primes: bool = True) -> Word:
    """Normal form of w when every generator is an involution.

    Inverses are dropped (g^-1 = g), primes are optionally identified with
    their unprimed partner, and adjacent equal letters cancel.
    """
    out: list[Letter] = []
    for x in w:
        y = Letter(x.index, x.primed and not merge_primes, 1)
        if out and out[-1] == y:
            out.pop()
        else:
            out.append(y)
    return Word(out)


def canonical_cyclic(w: Word) -> Word:
    """Least rotation of w or w^-1 after cyclic reduction.

    Two relators with the same canonical form define the same normal
    closure.
    """
    w = w.cyclic_reduce()
    if not w:
        return w
    best = None
    for v in (w, w.inverse()):
        xs = v.letters
        for i in range(len(xs)):
            rot = xs[i:] + xs[:i]
            if best is None or rot < best:
                best = rot
    return Word(best)


def canonical_involution(w: Word) -> Word:
    """Canonical cyclic relator when all generators are involutions."""
    xs = list(involution_form(w).letters)
    while len(xs) > 1 and xs[0] == xs[-1]:
        xs = xs[1:-1]
    return canonical_cyclic(Word(xs))


def parse_relators(text: str) -> list[Word]:
    """Parse relator text: one relator per line, ``#`` comments and blanks ignored."""
    out = []
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            out.append(Word.parse(line))
    return out


def format_relators(relators: Sequence[Word]) -> str:
    return "".join(f"{w}\n" for w in relators)
