"""Command-line interface.

One subcommand per analysis; output is machine-readable ``key=value``
lines, one record per line.  Exit status 0 means true/success, 1 means
the queried verdict is false, 2 means the run could not produce a
verdict (bad input, unmet hypotheses, or a search cap); status-2 runs
print a single ``error=...`` line on stderr.

Graph files are rotg text or planar_code bytes, auto-detected; ``-``
reads the standard input.  ``--no-timing`` suppresses elapsed-time keys
so output is byte-identical across runs.
"""
from __future__ import annotations

import argparse
import os
import sys
import time
from collections import Counter
from fractions import Fraction

from . import corpus as corpus_mod
from .classify import detect_config_a, detect_config_b
from .core import PlaneGraph, graph_summary
from .cycles import CLASS_IDS, class_membership, enumerate_cycles, structural_audit
from .degeneracy import (
    decide_weak_f_degenerate,
    greedy_degeneracy,
    near_bipartite,
    replay,
    weak_degeneracy,
)
from .discharge import audit_element, element_str, run_rules
from .errors import HypothesisNotMet, WeakdegError
from .formats import (
    read_cert,
    read_planar_code,
    read_rotg,
    write_cert,
    write_planar_code,
    write_rotg,
)
from .reductions import constructive_prover

_NODE_CAP_ENV = "WEAKDEG_NODE_CAP"


def _read_source(path: str) -> bytes:
    if path == "-":
        return sys.stdin.buffer.read()
    with open(path, "rb") as fh:
        return fh.read()


def _load_graph(path: str, fmt: str, index: int) -> PlaneGraph:
    data = _read_source(path)
    if fmt == "auto":
        fmt = "planar_code" if data.startswith(b">>") or b"\x00" in data else "rotg"
    if fmt == "rotg":
        return read_rotg(data.decode("utf-8"))
    graphs = read_planar_code(data)
    if not 1 <= index <= len(graphs):
        raise WeakdegError(f"stream holds {len(graphs)} graphs, asked for #{index}")
    return graphs[index - 1]


def _write_output(path: str | None, payload: str | bytes) -> None:
    if path is None or path == "-":
        if isinstance(payload, bytes):
            sys.stdout.buffer.write(payload)
        else:
            sys.stdout.write(payload)
        return
    mode = "wb" if isinstance(payload, bytes) else "w"
    with open(path, mode) as fh:
        fh.write(payload)


def _ids(vs) -> str:
    return ",".join(str(v) for v in sorted(vs))


def _ledger_line(t) -> str:
    parts = [
        f"rule={t.rule}",
        f"from={element_str(t.source)}",
        f"to={element_str(t.target)}",
        f"amount={t.amount.numerator}/{t.amount.denominator}",
    ]
    if t.via is not None:
        parts.append(f"via={t.via}")
    if t.clamped:
        parts.append("clamped")
    return " ".join(parts)


def _env_cap(value: int | None) -> int | None:
    if value is not None:
        return value
    raw = os.environ.get(_NODE_CAP_ENV)
    return int(raw) if raw else None


# --- subcommand bodies --------------------------------------------------------


def _cmd_info(args) -> int:
    G = _load_graph(args.graph, args.format, args.index)
    s = graph_summary(G)
    print(f"n={s.n}")
    print(f"m={s.m}")
    print(f"components={s.component_count}")
    print(f"genus={s.genus}")
    print(f"plane={'true' if s.genus == 0 else 'false'}")
    if G.n:
        print(f"min_degree={s.min_degree}")
        print(f"max_degree={s.max_degree}")
    print(f"faces={s.face_count}")
    sizes = Counter(f.degree for f in G.faces)
    print("face_sizes=" + ",".join(f"{k}:{sizes[k]}" for k in sorted(sizes)))
    return 0


def _cmd_class_check(args) -> int:
    G = _load_graph(args.graph, args.format, args.index)
    v = class_membership(G, args.cls)
    print(f"class={args.cls}")
    print(f"member={'true' if v.member else 'false'}")
    if not v.member:
        print(f"reason={v.reason}")
        for c in v.witness:
            print(f"witness={_ids_ordered(c.vertices)}")
    return 0 if v.member else 1


def _cmd_cycles(args) -> int:
    G = _load_graph(args.graph, args.format, args.index)
    counts = Counter(c.length for c in enumerate_cycles(G, args.max))
    for k in sorted(counts):
        print(f"length={k} count={counts[k]}")
    print(f"total={sum(counts.values())}")
    return 0


def _cmd_find_config(args) -> int:
    G = _load_graph(args.graph, args.format, args.index)
    found = 0
    kinds = ("a", "b") if args.config == "both" else (args.config,)
    for kind in kinds:
        detect = detect_config_a if kind == "a" else detect_config_b
        for inst in detect(G):
            pairs = " ".join(
                f"{lbl}->{inst.mapping[lbl]}" for lbl in inst.labels
            )
            print(f"config={kind} face={inst.faces[0]} map: {pairs}")
            found += 1
    print(f"found={found}")
    return 0 if found else 1


def _cmd_discharge(args) -> int:
    G = _load_graph(args.graph, args.format, args.index)
    res = run_rules(G, args.cls)
    print(f"class={args.cls}")
    t = sum(res.initial.values(), start=Fraction(0))
    print(f"initial_total={t.numerator}/{t.denominator}")
    print(f"final_total={res.total.numerator}/{res.total.denominator}")
    m = res.min_final()
    print(f"min_final={m.numerator}/{m.denominator}")
    print(f"transfers={len(res.ledger)}")
    print(f"clamped={sum(1 for x in res.ledger if x.clamped)}")
    if args.audit:
        a = audit_element(res, args.audit)
        out = sum((r.amount for r in a.outgoing), start=Fraction(0))
        inc = sum((r.amount for r in a.incoming), start=Fraction(0))
        print(f"element={args.audit}")
        print(f"element_initial={a.initial}")
        print(f"element_out={out}")
        print(f"element_in={inc}")
        print(f"element_final={a.final}")
        print(f"element_reconciles={'true' if a.reconciles else 'false'}")
        for row in a.outgoing + a.incoming:
            print(_ledger_line(row))
    if args.ledger:
        _write_output(args.ledger, "".join(_ledger_line(t) + "\n" for t in res.ledger))
    return 0


def _cmd_degeneracy(args) -> int:
    G = _load_graph(args.graph, args.format, args.index)
    r = greedy_degeneracy(G)
    print(f"d={r.d}")
    print(f"order={_ids_ordered(r.order)}")
    return 0


def _ids_ordered(vs) -> str:
    return ",".join(str(v) for v in vs)


def _cmd_weak_degeneracy(args) -> int:
    G = _load_graph(args.graph, args.format, args.index)
    cap = _env_cap(args.node_cap)
    t0 = time.perf_counter()
    if args.budget is not None:
        r = decide_weak_f_degenerate(
            G, args.budget, node_cap=cap, time_cap=args.time_cap
        )
        print(f"budget={args.budget}")
        print(f"status={r.status}")
        print(f"nodes={r.nodes}")
        if not args.no_timing:
            print(f"elapsed={time.perf_counter() - t0:.3f}s")
        if r.status == "yes" and args.cert:
            _write_output(args.cert, write_cert(args.budget, r.certificate))
        if r.status == "capped":
            print("error=capped", file=sys.stderr)
            return 2
        return 0 if r.status == "yes" else 1
    r = weak_degeneracy(G, node_cap=cap, time_cap=args.time_cap)
    print(f"status={r.status}")
    if r.value is not None:
        print(f"wd={r.value}")
    print(f"lower={r.lower_bound}")
    print(f"upper={r.upper_bound}")
    print(f"nodes={r.nodes}")
    if not args.no_timing:
        print(f"elapsed={time.perf_counter() - t0:.3f}s")
    if r.certificate and args.cert:
        _write_output(args.cert, write_cert(r.value, r.certificate))
    if r.status == "capped":
        print("error=capped", file=sys.stderr)
        return 2
    return 0


def _cmd_prove(args) -> int:
    G = _load_graph(args.graph, args.format, args.index)
    proof = constructive_prover(G, args.cls)
    for k, step in enumerate(proof.steps, start=1):
        print(f"step={k} kind={step.kind} removed={_ids_ordered(step.removed)}")
    print(f"ops={len(proof.certificate)}")
    print(f"verified={'true' if proof.replay.accepted else 'false'}")
    if args.cert:
        _write_output(args.cert, write_cert(2, proof.certificate))
    return 0


def _cmd_verify_cert(args) -> int:
    G = _load_graph(args.graph, args.format, args.index)
    budget, ops = read_cert(_read_source(args.cert).decode("utf-8"))
    r = replay(G, budget, ops)
    print(f"accepted={'true' if r.accepted else 'false'}")
    print(f"steps={r.steps_applied}")
    if not r.accepted:
        if r.failed_step is not None:
            print(f"failed_step={r.failed_step}")
        print(f"reason={r.reason}")
    return 0 if r.accepted else 1


def _cmd_near_bipartite(args) -> int:
    G = _load_graph(args.graph, args.format, args.index)
    r = near_bipartite(G, node_cap=_env_cap(args.cap))
    print(f"status={r.status}")
    print(f"nodes={r.nodes}")
    if r.status == "found":
        print(f"I={_ids(r.independent)}")
        print(f"F={_ids(r.forest)}")
        return 0
    if r.status == "capped":
        print("error=capped", file=sys.stderr)
        return 2
    return 1


def _cmd_corpus_gen(args) -> int:
    G = corpus_mod.construct(args.name, args.param)
    if args.fmt == "rotg":
        _write_output(args.out, write_rotg(G))
    else:
        _write_output(args.out, write_planar_code(G))
    return 0


def _cmd_corpus_list(args) -> int:
    for name in corpus_mod.names():
        print(name)
    return 0


def _cmd_audit(args) -> int:
    G = _load_graph(args.graph, args.format, args.index)
    v = class_membership(G, args.cls)
    print(f"member={'true' if v.member else 'false'}")
    if not v.member:
        print(f"reason={v.reason}")
        return 1
    print(f"delta={G.min_degree()}")
    print(f"configA={len(detect_config_a(G))}")
    print(f"configB={len(detect_config_b(G))}")
    try:
        res = run_rules(G, args.cls)
        m = res.min_final()
        print(f"min_final_charge={m.numerator}/{m.denominator}")
        audit = structural_audit(G, args.cls)
        print(f"audit_violations={audit.total_violations}")
    except (HypothesisNotMet, WeakdegError):
        print("min_final_charge=-")
    proof = constructive_prover(G, args.cls)
    print(f"wd_le_2={'true' if proof.replay.accepted else 'false'}")
    print(f"cert_verified={'true' if proof.replay.accepted else 'false'}")
    return 0 if proof.replay.accepted else 1


def _cmd_structure(args) -> int:
    G = _load_graph(args.graph, args.format, args.index)
    audit = structural_audit(G, args.cls)
    for c in audit.checks:
        state = "vacuous" if c.vacuous else ("ok" if c.ok else "violated")
        print(f"check={c.check_id} checked={c.checked} state={state}")
    print(f"violations={audit.total_violations}")
    return 0 if audit.ok else 1


# --- wiring -------------------------------------------------------------------


def _add_reader(p: argparse.ArgumentParser) -> None:
    p.add_argument("graph", help="graph file (rotg or planar_code), '-' for stdin")
    p.add_argument(
        "--format", choices=("auto", "rotg", "planar_code"), default="auto"
    )
    p.add_argument(
        "--index", type=int, default=1, help="1-based graph index in a multi-graph stream"
    )


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="weakdeg",
        description="plane-graph structure, discharging, and the weak-degeneracy game",
    )
    ap.add_argument("--no-timing", action="store_true", help="omit elapsed-time output")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("info", help="vertex/edge/face summary")
    _add_reader(p)
    p.set_defaults(fn=_cmd_info)

    p = sub.add_parser("class-check", help="forbidden-cycle class membership")
    p.add_argument("--class", dest="cls", choices=CLASS_IDS, required=True)
    _add_reader(p)
    p.set_defaults(fn=_cmd_class_check)

    p = sub.add_parser("cycles", help="count cycles by length")
    p.add_argument("--max", type=int, default=10)
    _add_reader(p)
    p.set_defaults(fn=_cmd_cycles)

    p = sub.add_parser("find-config", help="detect reducible patterns")
    p.add_argument("--config", choices=("a", "b", "both"), default="both")
    _add_reader(p)
    p.set_defaults(fn=_cmd_find_config)

    p = sub.add_parser("discharge", help="run the discharging rules")
    p.add_argument("--class", dest="cls", choices=CLASS_IDS, required=True)
    p.add_argument("--audit", metavar="ELEM", help="audit one element, e.g. v12 or f3")
    p.add_argument("--ledger", metavar="FILE", help="write every transfer to FILE")
    _add_reader(p)
    p.set_defaults(fn=_cmd_discharge)

    p = sub.add_parser("structure", help="structural lemma audit")
    p.add_argument("--class", dest="cls", choices=CLASS_IDS, required=True)
    _add_reader(p)
    p.set_defaults(fn=_cmd_structure)

    p = sub.add_parser("degeneracy", help="greedy degeneracy and removal order")
    _add_reader(p)
    p.set_defaults(fn=_cmd_degeneracy)

    p = sub.add_parser("weak-degeneracy", help="exact weak-degeneracy search")
    p.add_argument("--budget", type=int, help="decide one constant budget instead")
    p.add_argument("--node-cap", type=int)
    p.add_argument("--time-cap", type=float)
    p.add_argument("--cert", metavar="FILE", help="write a witnessing move sequence")
    _add_reader(p)
    p.set_defaults(fn=_cmd_weak_degeneracy)

    p = sub.add_parser("prove", help="constructive weak-2-degeneracy proof")
    p.add_argument("--class", dest="cls", choices=CLASS_IDS, required=True)
    p.add_argument("--cert", metavar="FILE")
    _add_reader(p)
    p.set_defaults(fn=_cmd_prove)

    p = sub.add_parser("verify-cert", help="replay a certificate against a graph")
    p.add_argument("--cert", metavar="FILE", required=True)
    _add_reader(p)
    p.set_defaults(fn=_cmd_verify_cert)

    p = sub.add_parser("near-bipartite", help="independent-set / forest split")
    p.add_argument("--cap", type=int, help="search node cap")
    _add_reader(p)
    p.set_defaults(fn=_cmd_near_bipartite)

    p = sub.add_parser("corpus", help="built-in graph constructions")
    csub = p.add_subparsers(dest="corpus_command", required=True)
    g = csub.add_parser("gen", help="emit a named graph")
    g.add_argument("--name", required=True)
    g.add_argument("--param", type=int)
    g.add_argument("--format", dest="fmt", choices=("rotg", "planar_code"), default="rotg")
    g.add_argument("--out", default="-")
    g.set_defaults(fn=_cmd_corpus_gen)
    l = csub.add_parser("list", help="list available names")
    l.set_defaults(fn=_cmd_corpus_list)

    p = sub.add_parser("audit", help="full per-graph report")
    p.add_argument("--class", dest="cls", choices=CLASS_IDS, required=True)
    _add_reader(p)
    p.set_defaults(fn=_cmd_audit)

    return ap


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except WeakdegError as exc:
        print(f"error={type(exc).__name__} detail={exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error={type(exc).__name__} detail={exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
