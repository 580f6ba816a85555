"""Finite partial orders on {0..n-1}.

Relation rows are Python ints used as bitsets: bit j of ``up[i]`` says
i <= j.  At the intended scale (n up to roughly 32) this makes closure,
duality, ideal counting and embedding search cheap word operations, and
it keeps every Poset hashable and immutable.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, Optional, Sequence


class CycleError(ValueError):
    """The generating relation admits a directed cycle."""


class NotQuasiorderError(ValueError):
    """A relation claimed to be a quasiorder is not reflexive-transitive."""


@dataclass(frozen=True)
class Poset:
    """Immutable finite poset.

    ``up[i]`` has bit j set iff i <= j (reflexive, so bit i is always set).
    Element labels are the indices 0..n-1 and carry no meaning beyond
    identity; use :func:`canonical_form` for label-free comparison.
    """

    n: int
    up: tuple[int, ...]

    def leq(self, i: int, j: int) -> bool:
        return bool(self.up[i] >> j & 1)

    @cached_property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    @cached_property
    def down(self) -> tuple[int, ...]:
        """down[j] has bit i set iff i <= j."""
        down = [1 << j for j in range(self.n)]
        for i in range(self.n):
            row = self.up[i]
            bit = 1 << i
            for j in range(self.n):
                if row >> j & 1:
                    down[j] |= bit
        return tuple(down)

    @cached_property
    def covers(self) -> tuple[tuple[int, int], ...]:
        """Transitive reduction as sorted (lower, upper) pairs."""
        out = []
        for i in range(self.n):
            strict = self.up[i] & ~(1 << i)
            rest = strict
            while rest:
                j = (rest & -rest).bit_length() - 1
                rest &= rest - 1
                between = strict & self.down[j] & ~(1 << j)
                if not between:
                    out.append((i, j))
        out.sort()
        return tuple(out)

    @cached_property
    def heights(self) -> tuple[int, ...]:
        """Length of a longest chain below each element."""
        h = [0] * self.n
        for i in self._linear_extension:
            below = self.down[i] & ~(1 << i)
            while below:
                j = (below & -below).bit_length() - 1
                below &= below - 1
                if h[j] + 1 > h[i]:
                    h[i] = h[j] + 1
        return tuple(h)

    @cached_property
    def _linear_extension(self) -> tuple[int, ...]:
        """Lowest-index-first linear extension."""
        placed = 0
        order = []
        for _ in range(self.n):
            for i in range(self.n):
                if placed >> i & 1:
                    continue
                if self.down[i] & ~placed == 1 << i:
                    order.append(i)
                    placed |= 1 << i
                    break
        return tuple(order)

    def leq_matrix(self) -> list[list[bool]]:
        return [[bool(self.up[i] >> j & 1) for j in range(self.n)] for i in range(self.n)]

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return f"Poset(n={self.n}, covers={list(self.covers)})"


@dataclass(frozen=True)
class Embedding:
    """Injective order-preserving and order-reflecting map K -> L."""

    mapping: tuple[int, ...]


def _poset_from_up(up: Sequence[int]) -> Poset:
    return Poset(len(up), tuple(up))


def poset_from_covers(n: int, pairs: Sequence[tuple[int, int]]) -> Poset:
    """Reflexive-transitive closure of the given strict pairs.

    The pairs need not be covers; the stored cover relation is recomputed
    as the transitive reduction.  Raises CycleError if the closure is not
    antisymmetric and IndexError on out-of-range indices.
    """
    up = [1 << i for i in range(n)]
    for i, j in pairs:
        if not (0 <= i < n and 0 <= j < n):
            raise IndexError(f"pair ({i}, {j}) out of range for n={n}")
        up[i] |= 1 << j
    for k in range(n):
        row_k = up[k]
        bit_k = 1 << k
        for i in range(n):
            if up[i] & bit_k:
                up[i] |= row_k
    for i in range(n):
        for j in range(i + 1, n):
            if up[i] >> j & 1 and up[j] >> i & 1:
                raise CycleError(f"elements {i} and {j} are mutually related")
    return _poset_from_up(up)


def poset_from_leq(n: int, leq: Sequence[Sequence[bool]]) -> Poset:
    """Build from an explicit boolean matrix, validating the poset axioms."""
    up = [0] * n
    for i in range(n):
        for j in range(n):
            if leq[i][j]:
                up[i] |= 1 << j
    for i in range(n):
        if not up[i] >> i & 1:
            raise NotQuasiorderError(f"relation not reflexive at {i}")
    for i in range(n):
        rest = up[i]
        while rest:
            j = (rest & -rest).bit_length() - 1
            rest &= rest - 1
            if up[j] & ~up[i]:
                raise NotQuasiorderError(f"relation not transitive through ({i}, {j})")
    for i in range(n):
        for j in range(i + 1, n):
            if up[i] >> j & 1 and up[j] >> i & 1:
                raise CycleError(f"elements {i} and {j} are mutually related")
    return _poset_from_up(up)


def dual(p: Poset) -> Poset:
    """Transpose the order; an involution."""
    return _poset_from_up(p.down)


def subposet(p: Poset, elements: Sequence[int]) -> Poset:
    """Induced subposet on the given elements, relabelled 0..len-1."""
    m = len(elements)
    up = [0] * m
    for a, i in enumerate(elements):
        for b, j in enumerate(elements):
            if p.up[i] >> j & 1:
                up[a] |= 1 << b
    return _poset_from_up(up)


def relabel(p: Poset, perm: Sequence[int]) -> Poset:
    """Relabelled copy: old element i becomes perm[i]."""
    up = [0] * p.n
    for i in range(p.n):
        row = 0
        for j in range(p.n):
            if p.up[i] >> j & 1:
                row |= 1 << perm[j]
        up[perm[i]] = row
    return _poset_from_up(up)


# ---------------------------------------------------------------------------
# Canonicalization
# ---------------------------------------------------------------------------

def _refined_colors(p: Poset) -> list[int]:
    """Iterated iso-invariant vertex colouring (up/down multiset refinement)."""
    n = p.n
    col = [(bin(p.down[i]).count("1"), bin(p.up[i]).count("1")) for i in range(n)]
    ranks = {c: r for r, c in enumerate(sorted(set(col)))}
    cur = [ranks[c] for c in col]
    for _ in range(n):
        sig = []
        for i in range(n):
            above = sorted(cur[j] for j in _bits(p.up[i] & ~(1 << i)))
            below = sorted(cur[j] for j in _bits(p.down[i] & ~(1 << i)))
            sig.append((cur[i], tuple(above), tuple(below)))
        ranks = {c: r for r, c in enumerate(sorted(set(sig)))}
        nxt = [ranks[c] for c in sig]
        if nxt == cur:
            break
        cur = nxt
    return cur


def _bits(mask: int) -> Iterator[int]:
    while mask:
        b = mask & -mask
        yield b.bit_length() - 1
        mask ^= b


def _twin_groups(p: Poset, colors: list[int]) -> list[int]:
    """Group id per vertex; twins (swappable by an automorphism) share one.

    u and v are twins when they are incomparable and relate identically to
    every other element.  Any ordering inside a twin group yields the same
    relation matrix, so canonical search never branches within a group.
    """
    n = p.n
    group = list(range(n))
    for u in range(n):
        for v in range(u + 1, n):
            if colors[u] != colors[v] or group[v] != v:
                continue
            if p.up[u] >> v & 1 or p.up[v] >> u & 1:
                continue
            pair = (1 << u) | (1 << v)
            if p.up[u] & ~pair == p.up[v] & ~pair and p.down[u] & ~pair == p.down[v] & ~pair:
                group[v] = group[u]
    return group


def canonical_relabel(p: Poset) -> tuple[Poset, tuple[int, ...]]:
    """Canonical representative and the permutation sending p onto it.

    The representative minimizes the relation matrix over all labelings
    that sort the refined colour classes, so two posets get the same
    representative iff they are order-isomorphic.  Twin groups are never
    branched over, which keeps highly symmetric posets cheap.
    """
    n = p.n
    if n == 0:
        return p, ()
    colors = _refined_colors(p)
    group = _twin_groups(p, colors)
    class_of_pos = sorted(colors)
    up = p.up

    best_flat: Optional[list[int]] = None
    best_perm: list[int] = []
    placed: list[int] = []
    in_place = [False] * n
    flat: list[int] = []

    def search(pos: int, equal_so_far: bool) -> None:
        nonlocal best_flat
        if pos == n:
            if best_flat is None or flat < best_flat:
                best_flat = flat.copy()
                best_perm[:] = placed
            return
        want = class_of_pos[pos]
        seen_groups = set()
        base = len(flat)
        for v in range(n):
            if in_place[v] or colors[v] != want or group[v] in seen_groups:
                continue
            seen_groups.add(group[v])
            chunk = [(up[u] >> v & 1) << 1 | (up[v] >> u & 1) for u in placed]
            if best_flat is None:
                now_equal = False
            elif equal_so_far:
                ref = best_flat[base : base + pos]
                if chunk > ref:
                    continue
                now_equal = chunk == ref
            else:
                now_equal = False
            flat.extend(chunk)
            placed.append(v)
            in_place[v] = True
            search(pos + 1, now_equal)
            in_place[v] = False
            placed.pop()
            del flat[base:]

    search(0, True)
    inverse = [0] * n
    for pos, v in enumerate(best_perm):
        inverse[v] = pos
    return relabel(p, inverse), tuple(inverse)


def canonical_form(p: Poset) -> bytes:
    """Canonical byte string: equal iff order-isomorphic."""
    rep, _ = canonical_relabel(p)
    body = bytearray([min(p.n, 255)])
    for i in range(rep.n):
        body += rep.up[i].to_bytes((rep.n + 7) // 8 or 1, "little")
    return bytes(body)


# ---------------------------------------------------------------------------
# Embedding search
# ---------------------------------------------------------------------------

def find_embedding(k: Poset, l: Poset) -> Optional[Embedding]:
    """Some induced-subposet embedding of k into l, or None.

    Backtracking over k-elements in a fixed linear extension, pruned by
    down-set / up-set / incomparability size signatures.  Exhaustive, so a
    None answer certifies non-containment.
    """
    if k.n == 0:
        return Embedding(())
    if k.n > l.n:
        return None

    def sizes(p: Poset, i: int) -> tuple[int, int, int]:
        d = bin(p.down[i]).count("1")
        u = bin(p.up[i]).count("1")
        return d, u, p.n - d - u + 1

    lsig = [sizes(l, v) for v in range(l.n)]
    cand = []
    for x in range(k.n):
        dk, uk, ik = sizes(k, x)
        cand.append(
            [v for v in range(l.n) if lsig[v][0] >= dk and lsig[v][1] >= uk and lsig[v][2] >= ik]
        )
    if any(not c for c in cand):
        return None

    order = k._linear_extension
    assigned = [-1] * k.n
    used = 0

    def place(idx: int) -> bool:
        nonlocal used
        if idx == k.n:
            return True
        x = order[idx]
        for v in cand[x]:
            if used >> v & 1:
                continue
            ok = True
            for y in order[:idx]:
                w = assigned[y]
                if (k.up[x] >> y & 1) != (l.up[v] >> w & 1) or (k.up[y] >> x & 1) != (l.up[w] >> v & 1):
                    ok = False
                    break
            if ok:
                assigned[x] = v
                used |= 1 << v
                if place(idx + 1):
                    return True
                used &= ~(1 << v)
                assigned[x] = -1
        return False

    if place(0):
        return Embedding(tuple(assigned))
    return None


def is_isomorphic(p: Poset, q: Poset) -> bool:
    """Isomorphism test; cheaper than canonical forms on symmetric posets."""
    if p.n != q.n:
        return False
    return find_embedding(p, q) is not None


def embedding_is_valid(k: Poset, l: Poset, emb: Embedding) -> bool:
    m = emb.mapping
    if len(m) != k.n or len(set(m)) != k.n:
        return False
    return all(
        (k.up[x] >> y & 1) == (l.up[m[x]] >> m[y] & 1)
        for x in range(k.n)
        for y in range(k.n)
    )


# ---------------------------------------------------------------------------
# Order ideals
# ---------------------------------------------------------------------------

def count_downsets(p: Poset) -> int:
    """Number of hereditary subsets, the empty set and full set included.

    Recursion on a minimal element x: the downsets containing x match
    those of P - x, the ones avoiding x match those of P - up(x).
    Memoized on the remaining-element bitmask.
    """
    memo: dict[int, int] = {}
    up = p.up
    down = p.down

    def rec(mask: int) -> int:
        if mask == 0:
            return 1
        got = memo.get(mask)
        if got is not None:
            return got
        rest = mask
        x = -1
        while rest:
            b = rest & -rest
            i = b.bit_length() - 1
            rest ^= b
            if down[i] & mask == b:
                x = i
                break
        res = rec(mask & ~(1 << x)) + rec(mask & ~up[x])
        memo[mask] = res
        return res

    return rec(p.full_mask)


def iter_downset_masks(p: Poset) -> Iterator[int]:
    """All hereditary subsets as bitmasks, in increasing mask order."""
    n = p.n
    ext = p._linear_extension
    down = p.down

    def rec(idx: int, cur: int) -> Iterator[int]:
        if idx == n:
            yield cur
            return
        x = ext[idx]
        yield from rec(idx + 1, cur)
        if down[x] & ~cur == 1 << x:
            yield from rec(idx + 1, cur | 1 << x)

    yield from sorted(rec(0, 0))


def quotient_of_quasiorder(n: int, rel_rows: Sequence[int]) -> tuple[Poset, list[int]]:
    """Collapse mutual pairs of a quasiorder; returns (poset, class index per element)."""
    block = [-1] * n
    reps: list[int] = []
    for i in range(n):
        if block[i] >= 0:
            continue
        block[i] = len(reps)
        for j in range(i + 1, n):
            if rel_rows[i] >> j & 1 and rel_rows[j] >> i & 1:
                block[j] = block[i]
        reps.append(i)
    m = len(reps)
    up = [0] * m
    for a, i in enumerate(reps):
        for b, j in enumerate(reps):
            if rel_rows[i] >> j & 1:
                up[a] |= 1 << b
    return _poset_from_up(up), block


def count_hereditary_quasi(n: int, rel: Sequence[Sequence[bool]]) -> int:
    """Hereditary subsets of a quasiorder via its quotient poset."""
    rows = [0] * n
    for i in range(n):
        for j in range(n):
            if rel[i][j]:
                rows[i] |= 1 << j
    for i in range(n):
        if not rows[i] >> i & 1:
            raise NotQuasiorderError(f"relation not reflexive at {i}")
        rest = rows[i]
        while rest:
            j = (rest & -rest).bit_length() - 1
            rest &= rest - 1
            if rows[j] & ~rows[i]:
                raise NotQuasiorderError(f"relation not transitive through ({i}, {j})")
    q, _ = quotient_of_quasiorder(n, rows)
    return count_downsets(q)
