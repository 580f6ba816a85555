"""Command-line front end.

Lattice text format: first non-comment line is the element count n, every
further non-empty non-# line is "i j" meaning i < j (0-indexed; the cover
relation is recomputed, so the pairs need not be covers).
"""

from __future__ import annotations

import argparse
import sys

from .congruence import con_count, con_count_oracle, has_many_congruences, jir_quasiorder
from .enumeration import (
    DEFAULT_MAX_N,
    TheoremReport,
    enumerate_lattices,
    spectrum,
    verify_theorem,
)
from .lattice import (
    Lattice,
    NotLatticeError,
    dual_lattice,
    irreducibles,
    make_boolean,
    make_chain,
    make_l_family,
    make_mk,
    make_ordinal_sum,
    make_product,
    validate_lattice,
)
from .planarity import is_dismantlable, is_planar_graph_oracle, is_planar_kr
from .poset import CycleError, canonical_relabel, find_embedding, poset_from_covers

_ORACLE_MAX = 10


class ParseError(ValueError):
    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


def parse_lattice_text(text: str) -> Lattice:
    n = None
    pairs = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if n is None:
            try:
                n = int(line)
            except ValueError:
                raise ParseError(f"expected element count, got {line!r}", lineno)
            if n < 0:
                raise ParseError("element count must be nonnegative", lineno)
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"expected 'i j', got {line!r}", lineno)
        try:
            i, j = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f"expected integers, got {line!r}", lineno)
        if not (0 <= i < n and 0 <= j < n):
            raise ParseError(f"index out of range in {line!r}", lineno)
        pairs.append((i, j))
    if n is None:
        raise ParseError("empty input", 1)
    return validate_lattice(poset_from_covers(n, pairs))


def serialize_lattice(l: Lattice) -> str:
    lines = [str(l.n)]
    lines += [f"{a} {b}" for a, b in l.poset.covers]
    return "\n".join(lines) + "\n"


def emit_dot(l: Lattice) -> str:
    """DOT digraph with cover edges pointing upward and height ranks."""
    heights = l.poset.heights
    by_height: dict[int, list[int]] = {}
    for v in range(l.n):
        by_height.setdefault(heights[v], []).append(v)
    out = ["digraph lattice {", "  rankdir=BT;", "  node [shape=circle];"]
    for h in sorted(by_height):
        members = " ".join(f"v{v};" for v in sorted(by_height[h]))
        out.append(f"  {{ rank=same; {members} }}")
    for a, b in l.poset.covers:
        out.append(f"  v{a} -> v{b};")
    out.append("}")
    return "\n".join(out) + "\n"


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _write_text(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)


def _fmt_bool(b: bool) -> str:
    return "true" if b else "false"


def _fmt_covers(covers) -> str:
    return ",".join(f"{a}-{b}" for a, b in covers) if covers else "-"


def _cmd_analyze(args) -> int:
    l = parse_lattice_text(_read_text(args.file))
    irr = irreducibles(l)
    print(f"n={l.n}")
    print(f"Jir={len(irr.jir)}")
    print(f"Mir={len(irr.mir)}")
    print(f"Jred={len(irr.jred)}")
    print(f"Mred={len(irr.mred)}")
    con = con_count(l)
    print(f"Con={con}")
    if l.n <= _ORACLE_MAX:
        print(f"Con_oracle={con_count_oracle(l)}")
    if l.n >= 2:
        qu = jir_quasiorder(l).qu_poset
        canon, _ = canonical_relabel(qu)
        print(f"Qu_n={qu.n}")
        print(f"Qu_covers={_fmt_covers(canon.covers)}")
    kr = is_planar_kr(l)
    graph = is_planar_graph_oracle(l)
    print(f"planar={_fmt_bool(kr.planar)}")
    print(f"planar_kr={_fmt_bool(kr.planar)}")
    if kr.witness is not None:
        name, emb, into_dual = kr.witness
        side = "dual" if into_dual else "direct"
        mapping = " ".join(f"{i}->{v}" for i, v in enumerate(emb.mapping))
        print(f"witness={name} {side} {mapping}")
    print(f"planar_graph={_fmt_bool(graph)}")
    print(f"dismantlable={_fmt_bool(is_dismantlable(l))}")
    print(f"verdict={'many' if has_many_congruences(l) else 'few'}")
    return 0


def _construct(args) -> Lattice:
    fam = args.family
    params = args.params
    if fam == "chain":
        return make_chain(int(params[0]))
    if fam == "boolean":
        return make_boolean(int(params[0]))
    if fam == "mk":
        return make_mk(int(params[0]))
    if fam == "lfamily":
        return make_l_family(int(params[0]))
    if fam == "ordsum":
        l1 = parse_lattice_text(_read_text(params[0]))
        l2 = parse_lattice_text(_read_text(params[1]))
        return make_ordinal_sum(l1, l2)
    if fam == "product":
        l1 = parse_lattice_text(_read_text(params[0]))
        l2 = parse_lattice_text(_read_text(params[1]))
        return make_product(l1, l2)
    if fam == "dual":
        return dual_lattice(parse_lattice_text(_read_text(params[0])))
    raise ValueError(f"unknown family {fam!r}")


def _cmd_construct(args) -> int:
    l = _construct(args)
    _write_text(args.output, serialize_lattice(l))
    return 0


def _cmd_enumerate(args) -> int:
    for l in enumerate_lattices(args.n, max_n=max(args.n, DEFAULT_MAX_N)):
        print(_fmt_covers(l.poset.covers))
    return 0


def _cmd_spectrum(args) -> int:
    rep = spectrum(args.n, max_n=max(args.n, DEFAULT_MAX_N))
    print(f"spectrum n={rep.n}")
    print(f"classes={rep.total_classes}")
    print("value count")
    for v in rep.values:
        print(f"{v} {rep.counts[v]}")
    return 0


def _render_verify(rep: TheoremReport) -> str:
    lines = [
        f"verify n={rep.n}",
        f"classes={rep.classes_checked}",
        f"many={rep.many_congruence_classes}",
        f"violations={len(rep.violations)}",
        "covers;con;planar;dismantlable;many",
    ]
    for r in rep.records:
        lines.append(
            f"{_fmt_covers(r.covers)};{r.con};{_fmt_bool(r.planar)};"
            f"{_fmt_bool(r.dismantlable)};{_fmt_bool(r.many)}"
        )
    return "\n".join(lines) + "\n"


def _cmd_verify(args) -> int:
    rep = verify_theorem(args.n, max_n=max(args.n, DEFAULT_MAX_N), jobs=args.jobs)
    sys.stdout.write(_render_verify(rep))
    return 0 if not rep.violations else 1


def _cmd_embed(args) -> int:
    k = parse_lattice_text(_read_text(args.kfile))
    l = parse_lattice_text(_read_text(args.lfile))
    emb = find_embedding(k.poset, l.poset)
    if emb is None:
        print("embedding=none")
    else:
        print("embedding=" + " ".join(f"{i}->{v}" for i, v in enumerate(emb.mapping)))
    demb = find_embedding(k.poset, dual_lattice(l).poset)
    if demb is None:
        print("dual_embedding=none")
    else:
        print("dual_embedding=" + " ".join(f"{i}->{v}" for i, v in enumerate(demb.mapping)))
    return 0


def _cmd_dot(args) -> int:
    l = parse_lattice_text(_read_text(args.file))
    sys.stdout.write(emit_dot(l))
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="latcon",
        description="Congruence counting and planarity for finite lattices.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="full report for one lattice file")
    p.add_argument("file")
    p.set_defaults(func=_cmd_analyze)

    p = sub.add_parser("construct", help="build a named lattice")
    p.add_argument("family", choices=["chain", "boolean", "mk", "lfamily", "ordsum", "product", "dual"])
    p.add_argument("params", nargs="+")
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=_cmd_construct)

    p = sub.add_parser("enumerate", help="stream all n-element lattices")
    p.add_argument("n", type=int)
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("spectrum", help="distinct congruence counts at size n")
    p.add_argument("n", type=int)
    p.set_defaults(func=_cmd_spectrum)

    p = sub.add_parser("verify", help="check the many-congruences-implies-planar sweep")
    p.add_argument("n", type=int)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("embed", help="search K as induced subposet of L")
    p.add_argument("kfile")
    p.add_argument("lfile")
    p.set_defaults(func=_cmd_embed)

    p = sub.add_parser("dot", help="emit a DOT Hasse diagram")
    p.add_argument("file")
    p.set_defaults(func=_cmd_dot)

    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except BrokenPipeError:  # pragma: no cover - downstream closed the pipe
        return 0
    except (ParseError, CycleError, NotLatticeError, ValueError, OSError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
