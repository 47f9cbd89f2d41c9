"""End-to-end runs: family generation, the classification census, and single-graph diagnostics."""

from __future__ import annotations

import json
import os
import random
import sys
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Optional, TextIO

from . import graph6
from .canon import canonical_form
from .catalog import THEOREM_GRAPHS, catalog_lookup
from .enumeration import TYPE_TAGS, enumerate_graphs, type_spec, write_type_file
from .graph import SimpleGraph, degree_sequence, is_connected, is_triangle_free
from .minors import MinorWitness, witness_from_sets
from .moves import Family, family_closure, write_family
from .obstruction import ApexCertificate, certify_ik, is_2_apex, pattern_by_name, prop1_evaluate
from .reduction import format_report, multigraph_sidecar, reduce

__all__ = [
    "RunConfig",
    "Verdict",
    "classify",
    "cmd_families",
    "cmd_enumerate",
    "cmd_verify_theorem",
    "cmd_reduce",
    "cmd_certify",
    "parse_witness",
    "replay_verdicts",
]

NOT_IK = "not-IK"
IK = "IK"
UNRESOLVED = "unresolved"

# expected non-2-apex survivors per type
EXPECTED_SURVIVORS = {"0-13": 0, "3-9": 1, "6-5": 4, "9-1": 0}


@dataclass
class RunConfig:
    types: tuple = tuple(TYPE_TAGS)
    jobs: int = 1
    out: str = "out"
    seed: int = 0
    mode: str = "full"  # families | enumerate | full

    def __post_init__(self):
        if self.jobs < 1:
            raise ValueError("jobs must be at least 1")
        for t in self.types:
            if t not in TYPE_TAGS:
                raise ValueError(f"unknown type {t!r}")
        if self.mode not in ("families", "enumerate", "full"):
            raise ValueError(f"unknown mode {self.mode!r}")


@dataclass(frozen=True)
class Verdict:
    graph6: str
    canon: str
    type_tag: str
    apex: Optional[ApexCertificate]
    ik: Optional[MinorWitness]
    classification: str

    def row(self) -> str:
        apex = f"{self.apex.pair[0]},{self.apex.pair[1]}" if self.apex else "-"
        ik = self.ik.compact() if self.ik else "-"
        return "\t".join([self.type_tag, self.graph6, self.classification, apex, ik])


VERDICT_HEADER = "type\tgraph6\tclassification\tapex_pair\tik_witness"


def classify(g: SimpleGraph, type_tag: str) -> Verdict:
    apex = is_2_apex(g)
    ik = None if apex is not None else certify_ik(g)
    if apex is not None and ik is not None:
        raise AssertionError("graph has both a 2-apex certificate and an IK witness")
    cls = NOT_IK if apex else IK if ik else UNRESOLVED
    return Verdict(graph6.encode(g), canonical_form(g).hex(), type_tag, apex, ik, cls)


def _classify_chunk(args):
    tag, lines = args
    return [classify(graph6.decode(line), tag) for line in lines]


def classify_all(graphs: list[SimpleGraph], tag: str, jobs: int = 1) -> list[Verdict]:
    if jobs == 1:
        return [classify(g, tag) for g in graphs]
    lines = [graph6.encode(g) for g in graphs]
    step = max(1, len(lines) // (jobs * 8) + 1)
    chunks = [(tag, lines[i:i + step]) for i in range(0, len(lines), step)]
    out = []
    with ProcessPoolExecutor(max_workers=jobs) as ex:
        for part in ex.map(_classify_chunk, chunks):
            out.extend(part)
    return out


# ---------------------------------------------------------------- families


def _histogram(graphs) -> dict:
    return dict(sorted(Counter(g.degrees().count(5) for g in graphs).items()))


def cmd_families(config: RunConfig, stream: Optional[TextIO] = None) -> dict:
    """Build the K7, K3311 and E9+e families; write them and return the counts."""
    stream = sys.stdout if stream is None else stream
    rng = random.Random(config.seed)
    fams: dict[str, Family] = {}
    for name, key in (("K7", "K7"), ("K3311", "K_{3,3,1,1}"), ("E9e", "E9+e")):
        fams[name] = family_closure(catalog_lookup(key).graph, shuffle=rng)
        write_family(fams[name], config.out, f"family_{name}")
    report = {}
    for name, fam in fams.items():
        gs = fam.graphs()
        tf = [g for g in gs if is_triangle_free(g)]
        report[name] = {
            "members": len(fam),
            "move_edges": len(fam.move_edges),
            "edge_counts": sorted({g.size for g in gs}),
            "triangle_free": len(tf),
            "degree5_histogram": _histogram(gs),
            "triangle_free_degree5_histogram": _histogram(tf),
        }
    both = set(fams["K3311"].order) | set(fams["E9e"].order)
    tf = [g for name in ("K3311", "E9e") for g in fams[name].graphs() if is_triangle_free(g)]
    n5 = [g.degrees().count(5) for g in tf]
    report["combined"] = {
        "members": len(both),
        "triangle_free": len(tf),
        "one_degree5": sum(c == 1 for c in n5),
        "two_or_more_degree5": sum(c >= 2 for c in n5),
        "max_degree4": sum(max(g.degrees()) == 4 for g in tf),
    }
    for name, r in report.items():
        stream.write(f"{name}: " + ", ".join(f"{k}={v}" for k, v in r.items()) + "\n")
    return report


# ------------------------------------------------------------- enumeration


def cmd_enumerate(tag: str, config: RunConfig, stream: Optional[TextIO] = None) -> list[SimpleGraph]:
    stream = sys.stdout if stream is None else stream
    graphs = enumerate_graphs(type_spec(tag), jobs=config.jobs)
    path = write_type_file(config.out, tag, graphs)
    stream.write(f"{tag}: {len(graphs)} graphs -> {path}\n")
    return graphs


def _survivor_ok(g: SimpleGraph) -> bool:
    degs = g.degrees()
    return (g.size == 22 and degs.count(5) == 1 and min(degs) >= 3
            and is_triangle_free(g) and is_connected(g))


def _degree_data(g: SimpleGraph) -> str:
    return f"order={g.order} degrees={','.join(map(str, degree_sequence(g)))}"


def cmd_verify_theorem(config: RunConfig, stream: Optional[TextIO] = None) -> int:
    """Enumerate, filter and certify every selected type; 0 iff the expected five graphs come out."""
    stream = sys.stdout if stream is None else stream
    os.makedirs(config.out, exist_ok=True)
    expected = {canonical_form(catalog_lookup(n).graph): n for n in THEOREM_GRAPHS}
    verdicts: list[Verdict] = []
    summary = {"types": {}, "survivors": [], "problems": []}
    for tag in config.types:
        graphs = cmd_enumerate(tag, config, stream)
        vs = classify_all(graphs, tag, config.jobs)
        verdicts.extend(vs)
        counts = Counter(v.classification for v in vs)
        survivors = [v for v in vs if v.apex is None]
        summary["types"][tag] = {
            "graphs": len(graphs),
            "two_apex": counts[NOT_IK],
            "survivors": len(survivors),
            "certified": counts[IK],
            "unresolved": counts[UNRESOLVED],
        }
        stream.write(f"{tag}: {len(graphs)} graphs, {len(survivors)} not 2-apex\n")
        if len(survivors) != EXPECTED_SURVIVORS[tag] and set(config.types) == set(TYPE_TAGS):
            summary["problems"].append(f"{tag}: {len(survivors)} survivors, expected {EXPECTED_SURVIVORS[tag]}")
    with open(os.path.join(config.out, "verdicts.tsv"), "w") as fh:
        fh.write(VERDICT_HEADER + "\n")
        for v in verdicts:
            fh.write(v.row() + "\n")

    matched = set()
    for v in verdicts:
        if v.apex is not None:
            continue
        g = graph6.decode(v.graph6)
        name = expected.get(canonical_form(g))
        entry = {"type": v.type_tag, "graph6": v.graph6, "match": name,
                 "classification": v.classification, "witness": v.ik.compact() if v.ik else None}
        summary["survivors"].append(entry)
        stream.write(f"survivor {v.graph6} type {v.type_tag} -> {name or 'NO MATCH'} [{v.classification}]"
                     + (f" via {v.ik.pattern_name}" if v.ik else "") + "\n")
        if v.classification == UNRESOLVED:
            summary["problems"].append(f"unresolved: {v.graph6}")
            stream.write(f"UNRESOLVED {v.graph6}\n")
        if name is None:
            summary["problems"].append(f"unexpected survivor {v.graph6} ({_degree_data(g)})")
        else:
            matched.add(name)
        if not _survivor_ok(g):
            summary["problems"].append(f"survivor {v.graph6} violates the degree constraints")
    if set(config.types) == set(TYPE_TAGS):
        for name in THEOREM_GRAPHS:
            if name not in matched:
                g = catalog_lookup(name).graph
                summary["problems"].append(f"missing {name} ({_degree_data(g)})")
    summary["success"] = not summary["problems"]
    with open(os.path.join(config.out, "summary.json"), "w") as fh:
        json.dump(summary, fh, indent=2, sort_keys=True)
        fh.write("\n")
    for p in summary["problems"]:
        stream.write(f"problem: {p}\n")
    stream.write("result: " + ("ok" if summary["success"] else "FAILED") + "\n")
    return 0 if summary["success"] else 1


# -------------------------------------------------------- single graph tools


def cmd_reduce(line: str, a: int, b: int, stream: Optional[TextIO] = None) -> str:
    stream = sys.stdout if stream is None else stream
    g = graph6.decode(line)
    r = reduce(g, a, b)
    text = format_report(r, prop1_evaluate(r)) + "multiplicities:\n" + multigraph_sidecar(r.reduced)
    stream.write(text)
    return text


def cmd_certify(line: str, stream: Optional[TextIO] = None) -> Optional[MinorWitness]:
    stream = sys.stdout if stream is None else stream
    g = graph6.decode(line)
    w = certify_ik(g)
    stream.write(w.format() if w else "none\n")
    return w


# ------------------------------------------------------------------ replay


def parse_witness(host: SimpleGraph, text: str) -> Optional[MinorWitness]:
    """Rebuild a witness from its ``compact()`` form; None if it does not verify."""
    name, _, body = text.partition("|")
    pattern = pattern_by_name(name)
    sets = [[int(x) for x in part.split(",")] for part in body.split(";")]
    if len(sets) != pattern.order:
        return None
    return witness_from_sets(host, pattern, name, sets)


def replay_verdicts(path: str) -> list[str]:
    """Re-check every certificate in a verdict table from its graph6 payload; returns failures."""
    failures = []
    with open(path) as fh:
        next(fh)
        for row in fh:
            tag, line, cls, apex, ik = row.rstrip("\n").split("\t")
            g = graph6.decode(line)
            if apex != "-":
                a, b = map(int, apex.split(","))
                if not ApexCertificate((a, b)).verify(g):
                    failures.append(f"apex {line}")
            if ik != "-" and parse_witness(g, ik) is None:
                failures.append(f"ik {line}")
            expected = NOT_IK if apex != "-" else IK if ik != "-" else UNRESOLVED
            if cls != expected or (apex != "-" and ik != "-"):
                failures.append(f"classification {line}")
    return failures
