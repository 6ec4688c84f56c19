"""Command-line entry point ``gtg``.

Exit codes: 0 success (all theorems hold), 1 a PROVEN theorem failed,
2 parse or validation error, 3 a conjecture counterexample was found.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import census, connect, docs, group as grp, setfam, space, topgroup, verify
from .docs import DocumentError
from .errors import WorkbenchError
from .setfam import elements

EXIT_OK, EXIT_PROVEN, EXIT_INPUT, EXIT_CONJECTURE = 0, 1, 2, 3
DEFAULT_BUDGET = 10_000


class UsageError(WorkbenchError):
    pass


def _parse_set(text: str | None, n: int, default: int | None = None) -> int:
    if text is None:
        if default is None:
            raise UsageError("--set is required")
        return default
    text = text.strip()
    if not text:
        return 0
    try:
        xs = [int(t) for t in text.split(",")]
    except ValueError:
        raise UsageError(f"bad element list {text!r}") from None
    a = setfam.from_elements(xs)
    setfam.check_subset(a, n)
    return a


def _fmt(a: int) -> str:
    return "{" + ",".join(map(str, elements(a))) + "}"


def _load_space(path: str):
    return docs.parse_space(docs.read_text(path), path)


def _load_group(ref: str):
    """A catalog name or a group document path."""
    if not Path(ref).exists():
        try:
            return grp.catalog(ref)
        except WorkbenchError:
            pass
    return docs.parse_group(docs.read_text(ref), ref)


def _yn(flag) -> str:
    return "yes" if flag else "no"


# -- space ----------------------------------------------------------------------

def cmd_space(args) -> int:
    t = _load_space(args.file)
    if args.action == "check":
        conn = connect.is_connected(t)
        print("valid: yes")
        print(f"strong: {_yn(t.strong)}")
        print(f"T2: {_yn(space.is_t2(t))}")
        print(f"regular: {_yn(space.is_regular(t))}")
        print(f"connected: {_yn(conn)}")
        if not conn:
            w = conn.witness
            print(f"separation: {_fmt(w.u)} | {_fmt(w.v)}")
    elif args.action == "interior":
        print(_fmt(setfam.interior(t, _parse_set(args.set, t.n))))
    elif args.action == "closure":
        print(_fmt(setfam.closure(t, _parse_set(args.set, t.n))))
    elif args.action == "connected":
        a = _parse_set(args.set, t.n, t.full)
        if not a:
            raise UsageError("connectedness of the empty set")
        conn = connect.subset_connectivity(t, a)
        print(f"connected: {_yn(conn)}")
        if not conn:
            print(f"separation: {_fmt(conn.witness.u)} | {_fmt(conn.witness.v)}")
    else:
        a = _parse_set(args.set, t.n, t.full)
        for c in connect.components(t, a, cap=max(connect.COMPONENT_CAP, t.n)):
            print(_fmt(c))
    return EXIT_OK


# -- group ----------------------------------------------------------------------

def cmd_group(args) -> int:
    g = _load_group(args.group)
    if args.action == "check":
        print("valid: yes")
        print(f"order: {g.n}")
        print(f"identity: {g.identity}")
        print(f"abelian: {_yn(g.is_abelian)}")
        print(f"exponent: {g.exponent}")
    elif args.action == "subgroups":
        for h in grp.subgroups(g, cap=max(grp.SUBGROUP_CAP, g.n)):
            print(_fmt(h))
    else:
        h = _parse_set(args.h, g.n)
        if not grp.is_subgroup(g, h):
            raise UsageError(f"{_fmt(h)} is not a subgroup")
        cosets = grp.right_cosets(g, h) if args.right else grp.left_cosets(g, h)
        for c in cosets:
            print(_fmt(c))
    return EXIT_OK


# -- topological group -------------------------------------------------------------

def cmd_tg(args) -> int:
    g = _load_group(args.group)
    t = _load_space(args.topology)
    if g.n != t.n:
        raise UsageError(f"group of order {g.n} with a topology on {t.n} points")
    d = topgroup.check_gtop_group(g, t)
    if args.action == "check":
        print(f"T2: {_yn(d.t2)}" + ("" if d.t2 else f" (points {d.t2_witness})"))
        mw = "" if d.mult_continuous else \
            f" (x={d.mult_witness[0]}, y={d.mult_witness[1]}, O={_fmt(d.mult_witness[2])})"
        print(f"multiplication continuous: {_yn(d.mult_continuous)}{mw}")
        iw = "" if d.inv_continuous else f" (O={_fmt(d.inv_witness)})"
        print(f"inversion continuous: {_yn(d.inv_continuous)}{iw}")
        print(f"certified: {_yn(d.certified)}")
        return EXIT_OK
    if not d.certified:
        raise UsageError("group and topology do not form a generalized topological group")
    G = d.instance
    if args.action == "component":
        print(_fmt(topgroup.identity_component(G)))
    elif args.action == "closure-subgroup":
        print(_fmt(topgroup.closure_subgroup(G, _parse_set(args.h, G.n))))
    else:
        acc, k = topgroup.word_expansion(G, _parse_set(args.set, G.n))
        print(f"{_fmt(acc)} stabilized at step {k}")
    return EXIT_OK


# -- census -------------------------------------------------------------------------

def cmd_census(args) -> int:
    """Counts, or one document per line followed by a summary record."""
    if args.action == "topologies":
        if args.n is None:
            raise UsageError("-n is required")
        stream = census.enumerate_topologies(args.n, args.filter)
        items = list(stream)
        lines = [docs.space_doc(t) for t in items]
    else:
        if args.group is None:
            raise UsageError("--group is required")
        g = _load_group(args.group)
        stream = census.search_compatible(g, args.strategy, args.budget, args.seed)
        items = list(stream)
        lines = [docs.instance_doc(G.grp, G.top) for G in items]
    count = census.canonical_count(items, args.up_to_relabeling)
    if args.count_only:
        print(count)
        return EXIT_OK
    out = [docs.dumps_line(d) for d in lines]
    summary = {**stream.descriptor(), "count": len(items),
               "up_to_relabeling": args.up_to_relabeling, "classes": count}
    out.append(docs.dumps_line({"summary": summary}))
    sys.stdout.write("".join(out))
    return EXIT_OK


# -- verify -------------------------------------------------------------------------

def build_source(source: str, budget: int | None, seed: int | None):
    """Items and descriptor for ``--source``.

    ``search:NAME[:STRATEGY]``, ``discrete:catalog``, ``discrete:NAME``,
    ``topologies:N`` or a path to an instance document (or a list of them).
    """
    kind, _, rest = source.partition(":")
    if kind == "search" and rest:
        name, _, strategy = rest.partition(":")
        stream = census.search_compatible(grp.catalog(name), strategy or "coset-orbit",
                                          budget, seed)
        items = list(stream)
        return items, stream.descriptor()
    if kind == "discrete" and rest:
        names = grp.CATALOG_NAMES if rest == "catalog" else tuple(rest.split(","))
        items = [topgroup.discrete_instance(grp.catalog(nm)) for nm in names]
        return items, {"strategy": "discrete", "groups": list(names)}
    if kind == "topologies" and rest:
        try:
            n = int(rest)
        except ValueError:
            raise UsageError(f"bad carrier size in source {source!r}") from None
        stream = census.enumerate_topologies(n)
        items = list(stream)
        return items, stream.descriptor()
    if not Path(source).exists():
        raise UsageError(f"unknown source {source!r}")
    pairs = docs.parse_instances(docs.read_text(source), source)
    items = []
    for i, (g, t) in enumerate(pairs):
        d = topgroup.check_gtop_group(g, t)
        if not d.certified:
            raise DocumentError(source, 1, 1, f"instance {i} does not certify")
        items.append(d.instance)
    return items, {"strategy": "file", "path": source}


def cmd_verify(args) -> int:
    ids = verify.resolve_ids(args.theorem)
    items, desc = build_source(args.source, args.budget, args.seed)
    report = verify.sweep(ids, items, seed=args.seed, descriptor=desc,
                          require_meet_closed=args.require_meet_closed)
    text = docs.dumps(report.to_doc(include_runtime=args.runtime))
    if args.report:
        Path(args.report).write_text(text)
    else:
        sys.stdout.write(text)
    return report.exit_code


# -- parser -------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="gtg", description="Generalized topology workbench.")
    sub = p.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("space", help="inspect a space document")
    sp.add_argument("action", choices=["check", "interior", "closure", "connected", "components"])
    sp.add_argument("file")
    sp.add_argument("--set", help="comma-separated elements")
    sp.set_defaults(func=cmd_space)

    gp = sub.add_parser("group", help="inspect a group (document path or catalog name)")
    gp.add_argument("action", choices=["check", "subgroups", "cosets"])
    gp.add_argument("group")
    gp.add_argument("--h", help="subgroup elements for cosets")
    gp.add_argument("--right", action="store_true", help="right cosets instead of left")
    gp.set_defaults(func=cmd_group)

    tp = sub.add_parser("tg", help="inspect a group with a topology")
    tp.add_argument("action", choices=["check", "component", "closure-subgroup", "expand"])
    tp.add_argument("--group", required=True)
    tp.add_argument("--topology", required=True)
    tp.add_argument("--set")
    tp.add_argument("--h")
    tp.set_defaults(func=cmd_tg)

    cp = sub.add_parser("census", help="enumerate topologies or search group topologies")
    cp.add_argument("action", choices=["topologies", "search"])
    cp.add_argument("-n", type=int)
    cp.add_argument("--filter", choices=census.FILTERS, default="all")
    cp.add_argument("--group")
    cp.add_argument("--strategy", choices=census.STRATEGIES, default="coset-orbit")
    cp.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    cp.add_argument("--seed", type=int)
    cp.add_argument("--count-only", action="store_true")
    cp.add_argument("--up-to-relabeling", action="store_true")
    cp.set_defaults(func=cmd_census)

    vp = sub.add_parser("verify", help="sweep theorems over an instance source")
    vp.add_argument("--theorem", default="all", help="theorem id, comma list, or 'all'")
    vp.add_argument("--source", required=True)
    vp.add_argument("--report", help="write the report here instead of stdout")
    vp.add_argument("--seed", type=int)
    vp.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    vp.add_argument("--runtime", action="store_true", help="include wall time in the report")
    vp.add_argument("--require-meet-closed", action="store_true",
                    help="check T12/T13 only where opens at e are closed under intersection")
    vp.set_defaults(func=cmd_verify)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        return args.func(args)
    except DocumentError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_INPUT
    except WorkbenchError as exc:
        print(f"gtg: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
