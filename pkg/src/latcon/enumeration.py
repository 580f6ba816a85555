"""Isomorph-free exhaustive generation of finite lattices.

The generator grows join-semilattices one new minimal element at a time
and appends a fresh bottom at the end.  Removing the bottom of a lattice
leaves a join-semilattice, and removing a minimal element of a
join-semilattice leaves a join-semilattice, so breadth-first growth with
canonical-form rejection reaches every isomorphism class exactly once.
Correctness is anchored by agreement with the independent labeled-poset
oracle below, not by a structure theorem.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .congruence import con_count
from .lattice import Lattice, SizeError, validate_lattice
from .planarity import is_dismantlable, is_planar_kr
from .poset import Poset, canonical_form, canonical_relabel, _poset_from_up

DEFAULT_MAX_N = 9
HARD_MAX_N = 12

_semis_cache: dict[int, list[Poset]] = {}
_lattice_cache: dict[int, list[Lattice]] = {}


def _bits(mask: int):
    while mask:
        b = mask & -mask
        yield b.bit_length() - 1
        mask ^= b


def _iter_upsets(p: Poset):
    """All nonempty up-closed subsets as bitmasks."""
    n = p.n
    order = list(reversed(p._linear_extension))

    def rec(idx: int, cur: int):
        if idx == n:
            if cur:
                yield cur
            return
        x = order[idx]
        yield from rec(idx + 1, cur)
        if p.up[x] & ~cur == 1 << x:
            yield from rec(idx + 1, cur | 1 << x)

    yield from rec(0, 0)


def _extend_semilattice(p: Poset) -> list[Poset]:
    """All ways of adding a new minimal element keeping joins total.

    The new element gets an up-closed set U of strict upper bounds; the
    join of the new element with any y outside U must be the least
    element of U intersected with up(y), so that set needs a minimum.
    """
    n = p.n
    out = []
    for upset in _iter_upsets(p):
        ok = True
        for y in range(n):
            if upset >> y & 1:
                continue
            meetables = upset & p.up[y]
            for w in _bits(meetables):
                if meetables & ~p.up[w] == 0:
                    break
            else:
                ok = False
            if not ok:
                break
        if ok:
            rows = list(p.up) + [upset | 1 << n]
            out.append(_poset_from_up(rows))
    return out


def _semilattices(m: int) -> list[Poset]:
    """Join-semilattices with m elements, one per isomorphism class."""
    if m in _semis_cache:
        return _semis_cache[m]
    if m == 1:
        reps = [_poset_from_up([1])]
    else:
        reps = []
        seen = set()
        for s in _semilattices(m - 1):
            for child in _extend_semilattice(s):
                form = canonical_form(child)
                if form not in seen:
                    seen.add(form)
                    reps.append(child)
    _semis_cache[m] = reps
    return reps


def enumerate_lattices(n: int, max_n: int = DEFAULT_MAX_N) -> list[Lattice]:
    """All n-element lattices, one canonical representative per class.

    Deterministic order (sorted by canonical form).  Raises SizeError
    beyond the requested maximum; max_n above HARD_MAX_N is rejected
    because per-class cost dominates long before generation does.
    """
    if n < 1:
        raise SizeError("lattices need n >= 1")
    if n > max_n or n > HARD_MAX_N:
        raise SizeError(f"n={n} beyond configured maximum {min(max_n, HARD_MAX_N)}")
    if n in _lattice_cache:
        return _lattice_cache[n]
    if n == 1:
        reps = [validate_lattice(_poset_from_up([1]))]
    else:
        posets = []
        for s in _semilattices(n - 1):
            full = (1 << n) - 1
            rows = [full] + [row << 1 for row in s.up]
            posets.append(_poset_from_up(rows))
        canon = sorted((canonical_relabel(q)[0] for q in posets), key=canonical_form)
        reps = [validate_lattice(q) for q in canon]
    _lattice_cache[n] = reps
    return reps


def sample_lattices(n: int, count: int, seed: int, max_n: int = 10) -> list[Lattice]:
    """Deterministic uniform sample of isomorphism classes."""
    reps = enumerate_lattices(n, max_n=max_n)
    if count >= len(reps):
        return list(reps)
    rng = random.Random(seed)
    return [reps[i] for i in sorted(rng.sample(range(len(reps)), count))]


# ---------------------------------------------------------------------------
# Independent oracle: labeled upper-triangular poset search
# ---------------------------------------------------------------------------

def enumerate_lattices_oracle(n: int) -> int:
    """Isomorphism-class count by brute force over naturally labeled posets.

    Chooses for each j in turn a down-closed strict down-set among
    0..j-1, which reaches every poset whose relation respects the index
    order; every isomorphism class has such a labeling.  Under this
    labeling meets never change once both elements exist, so pairs
    without a glb prune immediately; joins and the unique top are checked
    at the leaves.  Lattices are deduplicated by canonical form.
    """
    if n < 1:
        raise SizeError("lattices need n >= 1")
    if n > 7:
        raise SizeError("oracle capped at n = 7")
    if n == 1:
        return 1

    forms: set[bytes] = set()
    downfull = [1 << i for i in range(n)]

    def downsets_of_prefix(j: int):
        def rec(k: int, cur: int):
            if k == j:
                yield cur
                return
            yield from rec(k + 1, cur)
            if downfull[k] & ~cur == 1 << k:
                yield from rec(k + 1, cur | 1 << k)

        yield from rec(0, 0)

    def meets_ok(j: int) -> bool:
        dj = downfull[j]
        for i in range(j):
            common = downfull[i] & dj
            if not common:
                return False
            w = common.bit_length() - 1
            if common & ~downfull[w]:
                return False
        return True

    def joins_ok() -> bool:
        up = [0] * n
        for i in range(n):
            for k in _bits(downfull[i]):
                up[k] |= 1 << i
        if sum(1 for i in range(n) if downfull[i] == (1 << n) - 1) != 1:
            return False
        for i in range(n):
            for j in range(i + 1, n):
                common = up[i] & up[j]
                if not common:
                    return False
                w = (common & -common).bit_length() - 1
                if common & ~up[w]:
                    return False
        forms.add(canonical_form(_poset_from_up(up)))
        return True

    def build(j: int) -> None:
        if j == n:
            joins_ok()
            return
        for d in downsets_of_prefix(j):
            downfull[j] = d | 1 << j
            if meets_ok(j):
                build(j + 1)
        downfull[j] = 1 << j

    build(0)
    return len(forms)


# ---------------------------------------------------------------------------
# Reports
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ClassRecord:
    """Per-isomorphism-class certificate used in reports."""

    covers: tuple[tuple[int, int], ...]
    n: int
    con: int
    planar: bool
    dismantlable: bool
    many: bool


@dataclass(frozen=True)
class SpectrumReport:
    n: int
    values: tuple[int, ...]
    counts: dict[int, int]
    total_classes: int


@dataclass(frozen=True)
class TheoremReport:
    n: int
    classes_checked: int
    many_congruence_classes: int
    violations: tuple[ClassRecord, ...]
    records: tuple[ClassRecord, ...]


def analyze_class(l: Lattice) -> ClassRecord:
    con = con_count(l)
    many = True if l.n < 5 else con > 1 << (l.n - 5)
    return ClassRecord(
        covers=l.poset.covers,
        n=l.n,
        con=con,
        planar=is_planar_kr(l).planar,
        dismantlable=is_dismantlable(l),
        many=many,
    )


def spectrum(n: int, max_n: int = DEFAULT_MAX_N) -> SpectrumReport:
    counts: dict[int, int] = {}
    total = 0
    for l in enumerate_lattices(n, max_n=max_n):
        c = con_count(l)
        counts[c] = counts.get(c, 0) + 1
        total += 1
    values = tuple(sorted(counts, reverse=True))
    return SpectrumReport(n=n, values=values, counts=counts, total_classes=total)


def verify_theorem(n: int, max_n: int = DEFAULT_MAX_N, jobs: int = 1) -> TheoremReport:
    """Sweep all classes; violations are many-congruence non-planar classes."""
    lattices = enumerate_lattices(n, max_n=max_n)
    if jobs > 1:
        records = _analyze_parallel(lattices, jobs)
    else:
        records = [analyze_class(l) for l in lattices]
    many = sum(1 for r in records if r.many)
    violations = tuple(r for r in records if r.many and not r.planar)
    return TheoremReport(
        n=n,
        classes_checked=len(records),
        many_congruence_classes=many,
        violations=violations,
        records=tuple(records),
    )


def _analyze_cover_list(args: tuple[int, tuple[tuple[int, int], ...]]) -> ClassRecord:
    from .poset import poset_from_covers

    n, covers = args
    return analyze_class(validate_lattice(poset_from_covers(n, covers)))


def _analyze_parallel(lattices: list[Lattice], jobs: int) -> list[ClassRecord]:
    from concurrent.futures import ProcessPoolExecutor

    payload = [(l.n, l.poset.covers) for l in lattices]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_analyze_cover_list, payload, chunksize=16))
