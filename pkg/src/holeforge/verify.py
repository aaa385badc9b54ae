"""Corpus-level checks of the decomposition theorem and the K6-minor results.

Each property is recorded per instance; failing instances are written out as
edge lists named by the hash of their contents so reruns overwrite rather
than pile up.
"""

from __future__ import annotations

import hashlib
import os
import random

import networkx as nx

from .corpus import CorpusConfig, generate_corpus
from .decomposition import TheoremViolation, certificate_violations, decompose_subcubic, reassemble, tree_decomposition_subcubic
from .detectors import is_ring
from .generators import make_ring, random_ring_spec
from .graph import Graph
from .io import format_edges
from .treewidth import exact_treewidth, has_minor, validate_tree_decomposition

ORACLE_LIMIT = 18
REASSEMBLY_LIMIT = 40


def digest(g: Graph) -> str:
    return hashlib.sha256(format_edges(g).encode("ascii")).hexdigest()


def archive(g: Graph, directory) -> str:
    os.makedirs(directory, exist_ok=True)
    path = os.path.join(directory, digest(g)[:16] + ".edges")
    with open(path, "w", encoding="ascii", newline="\n") as fh:
        fh.write(format_edges(g))
    return path


def check_instance(g: Graph) -> dict:
    """Decompose, build the width-3 decomposition and cross-check; returns property -> bool."""
    out: dict = {"n": g.n}
    try:
        tree = decompose_subcubic(g)
    except TheoremViolation:
        out["decomposes"] = False
        return out
    out["decomposes"] = True
    out["leaf_certificates"] = all(not certificate_violations(lf.graph, lf.certificate) for lf in tree.leaves())
    td = tree_decomposition_subcubic(g, tree)
    chk = validate_tree_decomposition(g, td)
    out["td_width"] = chk.width
    out["td_valid"] = chk.valid and chk.width <= 3
    if g.n <= ORACLE_LIMIT:
        out["oracle_tw"] = exact_treewidth(g)
        out["oracle_ok"] = out["oracle_tw"] <= 3
    if g.n <= REASSEMBLY_LIMIT:
        out["reassembly_isomorphic"] = nx.is_isomorphic(reassemble(tree).to_networkx(), g.to_networkx())
    return out


def random_degree4_rings(seed: int, count: int) -> list[Graph]:
    rng = random.Random(seed)
    rings = []
    while len(rings) < count:
        g, _ = make_ring(random_ring_spec(rng, (3, 8), 2))
        if g.max_degree() <= 4 and g.n <= 16:
            rings.append(g)
    return rings


def verify_corpus(seed: int, count: int, depth: int, rings: int = 10, archive_dir=None, max_vertices: int = 60) -> dict:
    """Run every corpus property; the payload is deterministic for a given seed."""
    instances = generate_corpus(CorpusConfig(seed=seed, count=count, depth=depth, max_vertices=max_vertices))
    rows = []
    failures = []
    for idx, inst in enumerate(instances):
        res = check_instance(inst.graph)
        res["index"] = idx
        res["digest"] = digest(inst.graph)[:16]
        ok = all(v for k, v in res.items() if k in ("decomposes", "leaf_certificates", "td_valid", "oracle_ok", "reassembly_isomorphic"))
        res["pass"] = ok
        if not ok:
            failures.append(idx)
            if archive_dir is not None:
                res["archived"] = archive(inst.graph, archive_dir)
        rows.append(res)
    ring_rows = []
    for idx, g in enumerate(random_degree4_rings(seed, rings)):
        ok = is_ring(g) is not None and has_minor(g, 6) is None
        ring_rows.append({"index": idx, "n": g.n, "pass": ok})
        if not ok:
            failures.append(f"ring-{idx}")
            if archive_dir is not None:
                ring_rows[-1]["archived"] = archive(g, archive_dir)
    summary = {
        "instances": len(rows),
        "max_td_width": max((r.get("td_width", -1) for r in rows), default=-1),
        "oracle_checked": sum("oracle_tw" in r for r in rows),
        "reassembled": sum("reassembly_isomorphic" in r for r in rows),
        "rings": len(ring_rows),
        "failures": failures,
        "pass": not failures,
    }
    return {"summary": summary, "instances": rows, "rings": ring_rows}
