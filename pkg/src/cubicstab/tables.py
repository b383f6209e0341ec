"""Loaders for the bundled expected tables and inclusion chains.

The expected tables carry the published reference values the reproduction
pipeline diffs against; they are never recomputed.  A stored checksum guards
against silent edits.
"""

from __future__ import annotations

import hashlib
import json
from importlib import resources

from .inclusion import ChainStep, InclusionChain, Substitution
from .simplex import SimplexContext


def _data(name):
    path = resources.files("cubicstab") / "data" / name
    return json.loads(path.read_text())


def load_expected_tables() -> dict:
    doc = _data("expected_tables.json")
    blob = json.dumps(doc["tables"], sort_keys=True,
                      separators=(",", ":")).encode()
    digest = hashlib.sha256(blob).hexdigest()
    if digest != doc["sha256"]:
        raise ValueError("expected-tables checksum mismatch: data file was "
                         "modified (%s != %s)" % (digest, doc["sha256"]))
    return doc["tables"]


def family_vectors(tables) -> list:
    """All 23 canonical vectors: the 22 table rows, then the unstable one.

    The unstable family is canonicalized to the lexicographically smallest of
    its alternate vectors, matching the enumeration's convention.
    """
    vecs = [tuple(v) for v in tables["families"]]
    alts = [tuple(tables["unstable"]["vector"])]
    alts += [tuple(v) for v in tables["unstable"]["alternates"]]
    vecs.append(min(alts))
    return vecs


def atlas_index(atlas, tables) -> dict:
    """Map 1-based published family ids (23 = unstable) to atlas positions."""
    by_vector = {fam.vector: i for i, fam in enumerate(atlas)}
    out = {}
    for fid, vec in enumerate(family_vectors(tables), start=1):
        if vec not in by_vector:
            raise ValueError("family vector %r missing from atlas" % (vec,))
        out[fid] = by_vector[vec]
    return out


def load_chains(ctx: SimplexContext, atlas, tables) -> list:
    """The bundled inclusion chains, resolved against an atlas."""
    doc = _data("chains.json")
    if (doc["n"], doc["d"]) != (ctx.n, ctx.d):
        raise ValueError("chains bundled for n=%d, d=%d" % (doc["n"], doc["d"]))
    ids = atlas_index(atlas, tables)
    chains = []
    for c in doc["chains"]:
        steps = []
        for s in c["steps"]:
            sub = None
            if "matrix" in s:
                sub = Substitution(tuple(tuple(v for v in row)
                                         for row in s["matrix"]))
            steps.append(ChainStep(
                kind=s["kind"],
                expected=ctx.support(tuple(e) for e in s["expected"]),
                sub=sub,
                quad_vars=tuple(s.get("quad_vars", ())),
                pencil=tuple(s.get("pencil", ()))))
        chains.append(InclusionChain(
            source=ids[c["source"]], target=ids[c["target"]],
            steps=tuple(steps), description=c.get("description", "")))
    return chains
