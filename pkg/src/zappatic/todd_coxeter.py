"""Todd-Coxeter coset enumeration.

The coset table lives in a numba kernel; this module handles the
bookkeeping around it (relator preprocessing, generator columns, result
objects).  Two fill strategies are provided:

* ``felsch``: define the first undefined entry, then trace every cyclic
  conjugate of every relator through the new entry (deduction processing).
  Defines few redundant cosets; the default.
* ``hlt``: scan-and-fill every relator at every coset in order.  When
  the table fills up, a lookahead pass traces all relators without
  defining anything, and the coincidences it finds free room.

Coincidences are resolved with a forwarding (union-find) array and a queue.
A generator whose square is a relator is given a single self-inverse
column.  Dead cosets are squeezed out once they make up a quarter of the
table, and whenever the table is full.
"""

from __future__ import annotations

import enum
import os
from dataclasses import dataclass, field
from typing import Optional, Sequence

import numba
import numpy as np

from .words import Generator, Word

DEFAULT_MAX_COSETS = int(os.environ.get("ZAPPATIC_MAX_COSETS", 12_000_000))

DEDUCTION_STACK = 1 << 20
COMPACT_MIN = 4096
INITIAL_ROWS = 1 << 16

# state slots
_NEXT, _LIVE, _TOTAL, _MAXLIVE, _DTOP, _DOVER, _QLEN, _CAP, _PTR, _LIMIT = range(10)


class Status(str, enum.Enum):
    COMPLETED = "COMPLETED"
    LIMIT_EXCEEDED = "LIMIT_EXCEEDED"


@dataclass(frozen=True)
class EnumerationResult:
    status: Status
    index: Optional[int]
    max_live: int
    total_defined: int
    strategy: str
    table: Optional[np.ndarray] = field(default=None, repr=False, compare=False)

    @property
    def completed(self) -> bool:
        return self.status is Status.COMPLETED

    def to_dict(self) -> dict:
        return {
            "status": self.status.value,
            "index": self.index,
            "max_live": self.max_live,
            "total_defined": self.total_defined,
            "strategy": self.strategy,
        }


# ---------------------------------------------------------------------------
# kernel

_jit = numba.njit(cache=True, nogil=True)


@_jit
def _rep(fwd, c):
    r = c
    while fwd[r] != 0:
        r = fwd[r]
    while c != r:
        nxt = fwd[c]
        fwd[c] = r
        c = nxt
    return r


@_jit
def _push(ded_a, ded_x, st, a, x):
    top = st[_DTOP]
    if top < ded_a.shape[0]:
        ded_a[top] = a
        ded_x[top] = x
        st[_DTOP] = top + 1
    else:
        st[_DOVER] = 1


@_jit
def _merge(fwd, queue, st, k, l):
    phi = _rep(fwd, k)
    psi = _rep(fwd, l)
    if phi != psi:
        if phi > psi:
            phi, psi = psi, phi
        fwd[psi] = phi
        st[_LIVE] -= 1
        queue[st[_QLEN]] = psi
        st[_QLEN] += 1


@_jit
def _coincidence(table, inv, fwd, queue, st, ded_a, ded_x, a, b, felsch):
    ncols = table.shape[1]
    st[_QLEN] = 0
    _merge(fwd, queue, st, a, b)
    head = 0
    while head < st[_QLEN]:
        g = queue[head]
        head += 1
        for x in range(ncols):
            d = table[g, x]
            if d != 0:
                table[d, inv[x]] = 0
                mu = _rep(fwd, g)
                nu = _rep(fwd, d)
                if table[mu, x] != 0:
                    _merge(fwd, queue, st, nu, table[mu, x])
                elif table[nu, inv[x]] != 0:
                    _merge(fwd, queue, st, mu, table[nu, inv[x]])
                else:
                    table[mu, x] = nu
                    table[nu, inv[x]] = mu
                    if felsch:
                        _push(ded_a, ded_x, st, mu, x)


@_jit
def _define(table, inv, st, ded_a, ded_x, a, x, felsch):
    if st[_NEXT] >= st[_CAP]:
        return False
    b = st[_NEXT] + 1
    st[_NEXT] = b
    table[a, x] = b
    table[b, inv[x]] = a
    st[_LIVE] += 1
    st[_TOTAL] += 1
    if st[_LIVE] > st[_MAXLIVE]:
        st[_MAXLIVE] = st[_LIVE]
    if felsch:
        _push(ded_a, ded_x, st, a, x)
    return True


@_jit
def _scan_and_fill(table, inv, fwd, queue, st, ded_a, ded_x, a, w, lo, hi, felsch):
    """Returns False when a definition was needed but the table is full."""
    f = a
    b = a
    i = lo
    j = hi - 1
    while True:
        while i <= j and table[f, w[i]] != 0:
            f = table[f, w[i]]
            i += 1
        if i > j:
            if f != b:
                _coincidence(table, inv, fwd, queue, st, ded_a, ded_x, f, b, felsch)
            return True
        while j >= i and table[b, inv[w[j]]] != 0:
            b = table[b, inv[w[j]]]
            j -= 1
        if j < i:
            _coincidence(table, inv, fwd, queue, st, ded_a, ded_x, f, b, felsch)
            return True
        if i == j:
            table[f, w[i]] = b
            table[b, inv[w[i]]] = f
            if felsch:
                _push(ded_a, ded_x, st, f, w[i])
            return True
        if not _define(table, inv, st, ded_a, ded_x, f, w[i], felsch):
            return False


@_jit
def _scan(table, inv, fwd, queue, st, ded_a, ded_x, a, w, lo, hi):
    f = a
    i = lo
    j = hi - 1
    while i <= j and table[f, w[i]] != 0:
        f = table[f, w[i]]
        i += 1
    if i > j:
        if f != a:
            _coincidence(table, inv, fwd, queue, st, ded_a, ded_x, f, a, True)
        return
    b = a
    while j >= i and table[b, inv[w[j]]] != 0:
        b = table[b, inv[w[j]]]
        j -= 1
    if j < i:
        _coincidence(table, inv, fwd, queue, st, ded_a, ded_x, f, b, True)
    elif i == j:
        table[f, w[i]] = b
        table[b, inv[w[i]]] = f
        _push(ded_a, ded_x, st, f, w[i])


@_jit
def _process_deductions(table, inv, fwd, queue, st, ded_a, ded_x,
                        rel_flat, rel_off, conj_flat, conj_off, conj_first):
    nrel = rel_off.shape[0] - 1
    while True:
        while st[_DTOP] > 0:
            st[_DTOP] -= 1
            a = ded_a[st[_DTOP]]
            x = ded_x[st[_DTOP]]
            if fwd[a] != 0:
                continue
            for k in range(conj_first[x], conj_first[x + 1]):
                _scan(table, inv, fwd, queue, st, ded_a, ded_x, a,
                      conj_flat, conj_off[k], conj_off[k + 1])
                if fwd[a] != 0:
                    break
            if fwd[a] != 0:
                continue
            b = table[a, x]
            if b == 0 or fwd[b] != 0:
                continue
            y = inv[x]
            for k in range(conj_first[y], conj_first[y + 1]):
                _scan(table, inv, fwd, queue, st, ded_a, ded_x, b,
                      conj_flat, conj_off[k], conj_off[k + 1])
                if fwd[b] != 0:
                    break
        if st[_DOVER] == 0:
            return
        # stack overflowed: deductions were lost, rescan everything
        st[_DOVER] = 0
        for c in range(1, st[_NEXT] + 1):
            if fwd[c] != 0:
                continue
            for r in range(nrel):
                _scan(table, inv, fwd, queue, st, ded_a, ded_x, c,
                      rel_flat, rel_off[r], rel_off[r + 1])
                if fwd[c] != 0:
                    break


@_jit
def _lookahead(table, inv, fwd, queue, st, ded_a, ded_x, rel_flat, rel_off):
    """Trace every relator at every live coset without defining anything."""
    nrel = rel_off.shape[0] - 1
    for c in range(1, st[_NEXT] + 1):
        for r in range(nrel):
            if fwd[c] != 0:
                break
            _scan(table, inv, fwd, queue, st, ded_a, ded_x, c,
                  rel_flat, rel_off[r], rel_off[r + 1])
            st[_DTOP] = 0
    st[_DOVER] = 0


@_jit
def _compact(table, fwd, newnum, st, ptr):
    """Renumber live cosets 1..live in order; returns the remapped ptr."""
    ncols = table.shape[1]
    nxt = st[_NEXT]
    k = 0
    newptr = -1
    for c in range(1, nxt + 1):
        if fwd[c] == 0:
            k += 1
            newnum[c] = k
            if newptr < 0 and c >= ptr:
                newptr = k
        else:
            newnum[c] = 0
    for c in range(1, nxt + 1):
        if fwd[c] == 0:
            nc = newnum[c]
            for x in range(ncols):
                t = table[c, x]
                if t != 0:
                    table[nc, x] = newnum[_rep(fwd, t)]
                else:
                    table[nc, x] = 0
    for c in range(k + 1, nxt + 1):
        for x in range(ncols):
            table[c, x] = 0
    for c in range(1, nxt + 1):
        fwd[c] = 0
    st[_NEXT] = k
    if newptr < 0:
        newptr = k + 1
    return newptr


@_jit
def _enumerate(table, fwd, queue, ded_a, ded_x, st, inv, rel_flat, rel_off,
               conj_flat, conj_off, conj_first, sub_flat, sub_off, felsch):
    """Run until done (0), out of room (1), or asking for a bigger table (2).

    On 2 the caller enlarges the arrays and calls again; st[_PTR] records
    where to resume.
    """
    ncols = table.shape[1]
    nrel = rel_off.shape[0] - 1
    can_grow = st[_CAP] < st[_LIMIT]

    if st[_PTR] == 0:
        for s in range(sub_off.shape[0] - 1):
            if not _scan_and_fill(table, inv, fwd, queue, st, ded_a, ded_x, 1,
                                  sub_flat, sub_off[s], sub_off[s + 1], felsch):
                return 2 if can_grow else 1
        if felsch:
            _process_deductions(table, inv, fwd, queue, st, ded_a, ded_x,
                                rel_flat, rel_off, conj_flat, conj_off, conj_first)
        st[_PTR] = 1

    a = st[_PTR]
    while a <= st[_NEXT]:
        full = False
        if fwd[a] == 0:
            if felsch:
                for x in range(ncols):
                    if fwd[a] != 0:
                        break
                    if table[a, x] == 0:
                        if not _define(table, inv, st, ded_a, ded_x, a, x, True):
                            full = True
                            break
                        _process_deductions(table, inv, fwd, queue, st, ded_a, ded_x,
                                            rel_flat, rel_off, conj_flat, conj_off,
                                            conj_first)
            else:
                for r in range(nrel):
                    if not _scan_and_fill(table, inv, fwd, queue, st, ded_a, ded_x, a,
                                          rel_flat, rel_off[r], rel_off[r + 1], False):
                        full = True
                        break
                    if fwd[a] != 0:
                        break
                if not full:
                    for x in range(ncols):
                        if fwd[a] != 0:
                            break
                        if table[a, x] == 0:
                            if not _define(table, inv, st, ded_a, ded_x, a, x, False):
                                full = True
                                break
        if full:
            dead = st[_NEXT] - st[_LIVE]
            if can_grow and 4 * dead < st[_NEXT]:
                st[_PTR] = a
                return 2
            if dead == 0 and not felsch:
                _lookahead(table, inv, fwd, queue, st, ded_a, ded_x, rel_flat, rel_off)
            if st[_NEXT] == st[_LIVE]:
                return 1
            a = _compact(table, fwd, queue, st, a)
            continue
        a += 1
        dead = st[_NEXT] - st[_LIVE]
        if st[_NEXT] >= COMPACT_MIN and 4 * dead >= st[_NEXT]:
            a = _compact(table, fwd, queue, st, a)

    _compact(table, fwd, queue, st, 1)
    st[_PTR] = st[_NEXT] + 1
    return 0


@_jit
def _table_is_valid(table, nlive, inv, rel_flat, rel_off):
    """Complete, involution-consistent, and every relator closes everywhere."""
    ncols = table.shape[1]
    for c in range(1, nlive + 1):
        for x in range(ncols):
            t = table[c, x]
            if t < 1 or t > nlive or table[t, inv[x]] != c:
                return False
    for r in range(rel_off.shape[0] - 1):
        for c in range(1, nlive + 1):
            f = c
            for i in range(rel_off[r], rel_off[r + 1]):
                f = table[f, rel_flat[i]]
            if f != c:
                return False
    return True


# ---------------------------------------------------------------------------
# preprocessing


def _reduce_cols(seq: list[int], inv: list[int]) -> list[int]:
    out: list[int] = []
    for c in seq:
        if out and out[-1] == inv[c]:
            out.pop()
        else:
            out.append(c)
    return out


def _cyclic_reduce_cols(seq: list[int], inv: list[int]) -> list[int]:
    i, j = 0, len(seq) - 1
    while i < j and seq[i] == inv[seq[j]]:
        i += 1
        j -= 1
    return seq[i:j + 1]


def _inverse_cols(seq: Sequence[int], inv: list[int]) -> list[int]:
    return [inv[c] for c in reversed(seq)]


def _canonical_cols(seq: list[int], inv: list[int]) -> tuple[int, ...]:
    if len(seq) > 256:
        return tuple(seq)
    best = None
    for v in (seq, _inverse_cols(seq, inv)):
        for i in range(len(v)):
            rot = tuple(v[i:] + v[:i])
            if best is None or rot < best:
                best = rot
    return best


def _flatten(words: Sequence[Sequence[int]]):
    off = np.zeros(len(words) + 1, dtype=np.int64)
    for i, w in enumerate(words):
        off[i + 1] = off[i] + len(w)
    flat = np.fromiter((c for w in words for c in w), dtype=np.int32, count=int(off[-1]))
    return flat, off


@dataclass
class _Prepared:
    ncols: int
    inv: list[int]
    relators: list[list[int]]
    subgroup: list[list[int]]


def _involution_generators(generators: Sequence[Generator], relators: Sequence[Word]) -> set[Generator]:
    invol = set()
    for r in relators:
        r = r.cyclic_reduce()
        if len(r) == 2 and r[0] == r[1]:
            invol.add(r[0].base)
    return invol & set(generators)


def prepare(generators: Sequence[Generator], relators: Sequence[Word],
            subgroup: Sequence[Word] = ()) -> _Prepared:
    """Map words to table columns; reduce, dedupe and sort the relators."""
    invol = _involution_generators(generators, relators)
    col_pos: dict[Generator, int] = {}
    col_neg: dict[Generator, int] = {}
    inv: list[int] = []
    for g in generators:
        c = len(inv)
        col_pos[g] = c
        if g in invol:
            col_neg[g] = c
            inv.append(c)
        else:
            col_neg[g] = c + 1
            inv.extend([c + 1, c])

    def cols(w: Word) -> list[int]:
        out = []
        for x in w:
            if x.base not in col_pos:
                raise ValueError(f"letter {x} is not a generator of the presentation")
            out.append(col_pos[x.base] if x.exponent > 0 else col_neg[x.base])
        return _reduce_cols(out, inv)

    seen = set()
    rels: list[list[int]] = []
    for r in relators:
        seq = _cyclic_reduce_cols(cols(r), inv)
        if not seq:
            continue
        key = _canonical_cols(seq, inv)
        if key in seen:
            continue
        seen.add(key)
        rels.append(seq)
    rels.sort(key=lambda s: (len(s), s))
    subs = [s for s in (cols(h) for h in subgroup) if s]
    return _Prepared(len(inv), inv, rels, subs)


def _conjugates(prep: _Prepared):
    by_first: list[list[tuple[int, ...]]] = [[] for _ in range(prep.ncols)]
    seen = set()
    for r in prep.relators:
        for v in (r, _inverse_cols(r, prep.inv)):
            for i in range(len(v)):
                rot = tuple(v[i:] + v[:i])
                if rot not in seen:
                    seen.add(rot)
                    by_first[rot[0]].append(rot)
    words = [w for group in by_first for w in group]
    first = np.zeros(prep.ncols + 1, dtype=np.int64)
    for x in range(prep.ncols):
        first[x + 1] = first[x] + len(by_first[x])
    flat, off = _flatten(words)
    return flat, off, first


# ---------------------------------------------------------------------------
# public API


def run(generators: Sequence[Generator], relators: Sequence[Word],
        subgroup: Sequence[Word] = (), max_cosets: int = DEFAULT_MAX_COSETS,
        strategy: str = "felsch", keep_table: bool = False,
        check: bool = True) -> EnumerationResult:
    """Enumerate the cosets of <subgroup> in <generators | relators>."""
    if strategy not in ("felsch", "hlt"):
        raise ValueError(f"unknown strategy {strategy!r}")
    if max_cosets < 1:
        raise ValueError("max_cosets must be >= 1")
    prep = prepare(generators, relators, subgroup)
    if prep.ncols == 0:
        return EnumerationResult(Status.COMPLETED, 1, 1, 1, strategy)
    inv = np.asarray(prep.inv, dtype=np.int32)
    rel_flat, rel_off = _flatten(prep.relators)
    conj_flat, conj_off, conj_first = _conjugates(prep)
    sub_flat, sub_off = _flatten(prep.subgroup)
    code, st, table = _grow_and_run(
        prep.ncols, inv, rel_flat, rel_off, conj_flat, conj_off, conj_first,
        sub_flat, sub_off, int(max_cosets), strategy == "felsch")
    max_live, total = int(st[_MAXLIVE]), int(st[_TOTAL])
    if code != 0:
        return EnumerationResult(Status.LIMIT_EXCEEDED, None, max_live, total, strategy)
    index = int(st[_NEXT])
    if check and not _table_is_valid(table, index, inv, rel_flat, rel_off):
        raise RuntimeError("coset enumeration produced an inconsistent table")
    kept = table[1:index + 1].copy() if keep_table else None
    del table
    return EnumerationResult(Status.COMPLETED, index, max_live, total, strategy, kept)


def _grow_and_run(ncols, inv, rel_flat, rel_off, conj_flat, conj_off, conj_first,
                  sub_flat, sub_off, limit, felsch):
    # start small and double on demand, so easy cases don't pay for a huge table
    cap = min(limit, INITIAL_ROWS)
    table = np.zeros((cap + 1, ncols), dtype=np.int32)
    fwd = np.zeros(cap + 1, dtype=np.int32)
    queue = np.empty(cap + 1, dtype=np.int32)
    ded_a = np.empty(DEDUCTION_STACK, dtype=np.int32)
    ded_x = np.empty(DEDUCTION_STACK, dtype=np.int32)
    st = np.zeros(10, dtype=np.int64)
    st[[_NEXT, _LIVE, _TOTAL, _MAXLIVE]] = 1
    st[_CAP], st[_LIMIT] = cap, limit
    while True:
        code = _enumerate(table, fwd, queue, ded_a, ded_x, st, inv, rel_flat, rel_off,
                          conj_flat, conj_off, conj_first, sub_flat, sub_off, felsch)
        if code != 2:
            return code, st, table
        cap = min(limit, 2 * cap)
        bigger = np.zeros((cap + 1, ncols), dtype=np.int32)
        bigger[:table.shape[0]] = table
        table = bigger
        fwd = np.concatenate([fwd, np.zeros(cap + 1 - fwd.shape[0], dtype=np.int32)])
        queue = np.empty(cap + 1, dtype=np.int32)
        st[_CAP] = cap


def _check_stage(p) -> None:
    stage = getattr(p, "stage", None)
    if stage is not None and getattr(stage, "value", stage) == "FULL":
        raise ValueError("enumerate the STAR or COXETER stage, not FULL")


def enumerate_cosets(p, subgroup_generators: Sequence[Word] = (),
                     max_cosets: int = DEFAULT_MAX_COSETS,
                     strategy: str = "felsch", **kw) -> EnumerationResult:
    """Index of the subgroup in the group presented by ``p``.

    With no subgroup generators the index is the group order.  Running out
    of room is reported as ``LIMIT_EXCEEDED``, never raised.
    """
    _check_stage(p)
    if not p.relators:
        raise ValueError("presentation has no relators")
    return run(p.generators, p.relators, subgroup_generators, max_cosets, strategy, **kw)


def group_order(p, max_cosets: int = DEFAULT_MAX_COSETS, strategy: str = "felsch") -> Optional[int]:
    res = enumerate_cosets(p, (), max_cosets, strategy)
    return res.index if res.completed else None


def parabolic_index(p, omit: Optional[int] = None, max_cosets: int = DEFAULT_MAX_COSETS,
                    strategy: str = "felsch") -> EnumerationResult:
    """Index of the subgroup generated by the Coxeter path minus one endpoint.

    Generator 5 is never a subgroup generator: it closes the path into a
    cycle, and adding it would generate everything.  The expected index is n.
    """
    from .presentation import path_order

    path = path_order(p.n)
    omit = path[-1] if omit is None else omit
    if omit not in (path[0], path[-1]):
        raise ValueError(f"omit must be a path endpoint ({path[0]} or {path[-1]}), got {omit}")
    return enumerate_cosets(p, [Word.of(g) for g in path if g != omit], max_cosets, strategy)
