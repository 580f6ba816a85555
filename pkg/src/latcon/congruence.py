"""Congruences of a finite lattice.

The counting path goes through the quasiorder on join-irreducible
elements: p is below q when the principal congruence collapsing p with
its lower cover refines the one collapsing q with its lower cover.
Hereditary subsets of that quasiorder are in bijection with congruences,
so counting them is counting downsets of the quotient poset.  The
brute-force partition oracle provides the independent second route.
"""

from __future__ import annotations

from dataclasses import dataclass

from .lattice import Lattice, SizeError, irreducibles
from .poset import Poset, count_downsets, iter_downset_masks, quotient_of_quasiorder

DEFAULT_ENUMERATION_CAP = 1 << 20

_BELL_GUARD = 10


class CapExceededError(RuntimeError):
    """con_enumerate refused to materialize too many congruences."""


@dataclass(frozen=True)
class Congruence:
    """Partition of the element set, blocks sorted by least member."""

    blocks: tuple[tuple[int, ...], ...]

    @property
    def n(self) -> int:
        return sum(len(b) for b in self.blocks)

    def block_index(self) -> list[int]:
        idx = [0] * self.n
        for b, block in enumerate(self.blocks):
            for x in block:
                idx[x] = b
        return idx

    def same(self, x: int, y: int) -> bool:
        idx = self.block_index()
        return idx[x] == idx[y]


@dataclass(frozen=True)
class JirQuasiorder:
    """The quasiorder on join-irreducibles and its quotient poset."""

    jir_list: tuple[int, ...]
    rel: tuple[int, ...]
    qu_poset: Poset
    block_of: dict[int, int]


def _blocks_from_parent(parent: list[int]) -> tuple[tuple[int, ...], ...]:
    groups: dict[int, list[int]] = {}
    for x in range(len(parent)):
        groups.setdefault(_find(parent, x), []).append(x)
    blocks = sorted((tuple(sorted(g)) for g in groups.values()), key=lambda b: b[0])
    return tuple(blocks)


def _find(parent: list[int], x: int) -> int:
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


def _close(l: Lattice, pairs: list[tuple[int, int]]) -> Congruence:
    """Least congruence containing the given pairs.

    Union-find closure: whenever two blocks merge, all join and meet
    translates of the merged pair are merged as well, to a fixed point.
    """
    n = l.n
    join = l.join
    meet = l.meet
    parent = list(range(n))
    work: list[tuple[int, int]] = []

    def union(a: int, b: int) -> None:
        ra, rb = _find(parent, a), _find(parent, b)
        if ra != rb:
            if rb < ra:
                ra, rb = rb, ra
            parent[rb] = ra
            work.append((ra, rb))

    for a, b in pairs:
        union(a, b)
    while work:
        x, y = work.pop()
        jx, jy = join[x], join[y]
        mx, my = meet[x], meet[y]
        for z in range(n):
            union(jx[z], jy[z])
            union(mx[z], my[z])
    return Congruence(_blocks_from_parent(parent))


def principal_congruence(l: Lattice, a: int, b: int) -> Congruence:
    """con(a, b): the least congruence collapsing a and b."""
    return _close(l, [(a, b)])


def congruence_join(c1: Congruence, c2: Congruence, l: Lattice) -> Congruence:
    pairs = []
    for c in (c1, c2):
        for block in c.blocks:
            pairs.extend((block[0], x) for x in block[1:])
    return _close(l, pairs)


def refines(c1: Congruence, c2: Congruence) -> bool:
    """c1 <= c2 in Con(L): every block of c1 lies inside a block of c2."""
    idx2 = c2.block_index()
    return all(len({idx2[x] for x in block}) == 1 for block in c1.blocks)


def is_congruence(l: Lattice, blocks) -> bool:
    """Compatibility of an arbitrary partition with join and meet."""
    n = l.n
    idx = [0] * n
    for b, block in enumerate(blocks):
        for x in block:
            idx[x] = b
    join = l.join
    meet = l.meet
    for block in blocks:
        for i, x in enumerate(block):
            for y in block[i + 1 :]:
                jx, jy = join[x], join[y]
                mx, my = meet[x], meet[y]
                for z in range(n):
                    if idx[jx[z]] != idx[jy[z]] or idx[mx[z]] != idx[my[z]]:
                        return False
    return True


def jir_quasiorder(l: Lattice) -> JirQuasiorder:
    irr = irreducibles(l)
    jir = tuple(sorted(irr.jir))
    m = len(jir)
    cons = [principal_congruence(l, irr.lower_cover[p], p) for p in jir]
    idxs = [c.block_index() for c in cons]

    def leq_con(a: int, b: int) -> bool:
        # con_a refines con_b
        ib = idxs[b]
        return all(len({ib[x] for x in block}) == 1 for block in cons[a].blocks)

    rel = [0] * m
    for a in range(m):
        for b in range(m):
            if leq_con(a, b):
                rel[a] |= 1 << b
    qu, block = quotient_of_quasiorder(m, rel)
    return JirQuasiorder(
        jir_list=jir,
        rel=tuple(rel),
        qu_poset=qu,
        block_of={p: block[i] for i, p in enumerate(jir)},
    )


def con_count(l: Lattice) -> int:
    """|Con(L)| through hereditary sets of the join-irreducible quasiorder."""
    if l.n == 1:
        return 1
    return count_downsets(jir_quasiorder(l).qu_poset)


def con_enumerate(l: Lattice, cap: int = DEFAULT_ENUMERATION_CAP) -> list[Congruence]:
    """One congruence per hereditary subset, as joins of principal ones."""
    total = con_count(l)
    if total > cap:
        raise CapExceededError(f"{total} congruences exceed cap {cap}")
    if l.n == 1:
        return [Congruence(((0,),))]
    q = jir_quasiorder(l)
    irr = irreducibles(l)
    out = []
    for mask in iter_downset_masks(q.qu_poset):
        pairs = [
            (irr.lower_cover[p], p)
            for p in q.jir_list
            if mask >> q.block_of[p] & 1
        ]
        out.append(_close(l, pairs))
    out.sort(key=lambda c: c.blocks)
    assert len({c.blocks for c in out}) == len(out) == total
    return out


def _iter_partitions(n: int):
    """Set partitions of range(n) as restricted-growth block-index lists."""
    code = [0] * n

    def rec(i: int, used: int):
        if i == n:
            yield code
            return
        for b in range(used + 1):
            code[i] = b
            yield from rec(i + 1, used if b < used else used + 1)

    if n == 0:
        yield []
        return
    yield from rec(1, 1)


def con_count_oracle(l: Lattice) -> int:
    """Count congruences by checking every set partition for compatibility."""
    n = l.n
    if n > _BELL_GUARD:
        raise SizeError(f"partition oracle capped at n = {_BELL_GUARD}")
    join = [list(r) for r in l.join]
    meet = [list(r) for r in l.meet]
    count = 0
    for code in _iter_partitions(n):
        ok = True
        for x in range(n):
            cx = code[x]
            jx = join[x]
            mx = meet[x]
            for y in range(x + 1, n):
                if code[y] != cx:
                    continue
                jy = join[y]
                my = meet[y]
                for z in range(n):
                    if code[jx[z]] != code[jy[z]] or code[mx[z]] != code[my[z]]:
                        ok = False
                        break
                if not ok:
                    break
            if not ok:
                break
        if ok:
            count += 1
    return count


def has_many_congruences(l: Lattice) -> bool:
    """|Con(L)| strictly above 2^(n-5).

    For n < 5 the threshold is a fraction below 1, so any lattice
    qualifies; the comparison stays in exact integer arithmetic.
    """
    n = l.n
    if n < 5:
        return True
    return con_count(l) > 1 << (n - 5)


@dataclass(frozen=True)
class FewCriteria:
    """Lemma-style sufficient conditions for having few congruences."""

    jred_ge4: bool
    mred_ge4: bool
    jir_collision: tuple[int, int] | None


def few_criteria(l: Lattice) -> FewCriteria:
    irr = irreducibles(l)
    jir = sorted(irr.jir)
    collision = None
    cons = {p: principal_congruence(l, irr.lower_cover[p], p) for p in jir}
    for i, p in enumerate(jir):
        for q in jir[i + 1 :]:
            if cons[p].blocks == cons[q].blocks:
                collision = (p, q)
                break
        if collision:
            break
    return FewCriteria(
        jred_ge4=len(irr.jred) >= 4,
        mred_ge4=len(irr.mred) >= 4,
        jir_collision=collision,
    )
