"""Command-line interface.

Subcommands: simplex, enumerate, classify, singular, inclusions, reproduce.
Flags can be overridden by environment variables with the CUBICSTAB_ prefix
(e.g. CUBICSTAB_WORKERS=8).  Primary output is deterministic and diffable;
progress logging goes to stderr.
"""

from __future__ import annotations

import argparse
import logging
import os
import sys
from multiprocessing import get_context

from . import __version__
from .classify import classify_wrt_torus, containing_families
from .codec import DocumentError, parse_polynomial
from .enumerate import enumerate_maximal, split_by_eta
from .inclusion import antichain_screen, verify_chain
from .poly import field_from_name
from .report import emit_csv, emit_json, emit_markdown
from .simplex import build_simplex, halfspace_support
from .singular import singular_dim_deg, verify_locus_equations
from .tables import atlas_index, load_chains, load_expected_tables

log = logging.getLogger("cubicstab")

EXIT_OK = 0
EXIT_DIFF = 1
EXIT_USAGE = 2
EXIT_RESOURCE = 3


def _env(name, default, cast=str):
    raw = os.environ.get("CUBICSTAB_" + name)
    return cast(raw) if raw is not None else default


def _add_common(p, workers=False, seeds=False, field=False):
    p.add_argument("--json", action="store_true",
                   help="machine-readable JSON output")
    p.add_argument("--csv", action="store_true", help="CSV output")
    p.add_argument("--out", metavar="PATH", help="write output to a file")
    if workers:
        p.add_argument("--workers", type=int,
                       default=_env("WORKERS", 1, int),
                       help="parallel worker count")
    if seeds:
        p.add_argument("--seeds", type=int, default=_env("SEEDS", 3, int),
                       help="number of agreeing coefficient draws required")
        p.add_argument("--seed", type=int, default=_env("SEED", 0, int),
                       help="base random seed")
    if field:
        p.add_argument("--field", default=_env("FIELD", None),
                       help="coefficient field: rational or prime:<p>")


def _build_parser():
    ap = argparse.ArgumentParser(
        prog="cubicstab",
        description="Torus stability, singular loci, and boundary structure "
                    "of cubic hypersurface moduli via exact computation.")
    ap.add_argument("--version", action="version", version=__version__)
    ap.add_argument("-v", "--verbose", action="store_true",
                    help="progress logging on stderr")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("simplex", help="describe the exponent simplex")
    p.add_argument("--n", type=int, default=_env("N", 6, int))
    p.add_argument("--d", type=int, default=_env("D", 3, int))
    _add_common(p)

    p = sub.add_parser("enumerate",
                       help="enumerate all maximal halfspace families")
    p.add_argument("--n", type=int, default=_env("N", 6, int))
    p.add_argument("--d", type=int, default=_env("D", 3, int))
    _add_common(p, workers=True)

    p = sub.add_parser("classify",
                       help="classify a polynomial document w.r.t. the torus")
    p.add_argument("file", help="polynomial document (JSON), - for stdin")
    p.add_argument("--workers", type=int, default=_env("WORKERS", 1, int))
    _add_common(p)

    p = sub.add_parser("singular",
                       help="dimension/degree of family singular loci")
    p.add_argument("--family", type=int, default=0, metavar="K",
                   help="1-based family id; 0 = all 22")
    _add_common(p, workers=True, seeds=True, field=True)

    p = sub.add_parser("inclusions",
                       help="verify bundled inclusion chains and the "
                            "antichain screen")
    _add_common(p)

    p = sub.add_parser("reproduce",
                       help="recompute a pipeline stage and diff against "
                            "the bundled expected tables")
    p.add_argument("scope",
                   choices=["enumerate", "singular", "inclusions", "all"])
    _add_common(p, workers=True, seeds=True, field=True)
    return ap


def _output(args, command, params, rows, diffs=None, ok=None):
    if args.json:
        text = emit_json(command, params, rows, diffs, ok)
    elif args.csv:
        text = emit_csv(rows)
    else:
        text = emit_markdown(rows)
        if diffs:
            text += "\ndiffs:\n" + emit_markdown(diffs)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _cmd_simplex(args):
    ctx = build_simplex(args.n, args.d)
    rows = [{"index": i, "monomial": ctx.monomial_string(m),
             "exponents": list(m)} for i, m in enumerate(ctx.monomials)]
    _output(args, "simplex", {"n": args.n, "d": args.d, "size": ctx.size},
            rows)
    return EXIT_OK


def _family_rows(ctx, families):
    semi, unstable = split_by_eta(ctx, families)
    rows = []
    for fam in semi + unstable:
        rows.append({"vector": list(fam.vector),
                     "support_size": len(fam.support),
                     "class": "semi-stable" if fam.eta_in_hull
                              else "unstable",
                     "vectors": [list(v) for v in fam.vectors]})
    rows.sort(key=lambda r: r["vector"], reverse=True)
    return rows, semi, unstable


def _cmd_enumerate(args):
    ctx = build_simplex(args.n, args.d)
    families = enumerate_maximal(ctx, workers=args.workers)
    rows, _, _ = _family_rows(ctx, families)
    _output(args, "enumerate",
            {"n": args.n, "d": args.d, "families": len(families)}, rows)
    return EXIT_OK


def _cmd_classify(args):
    data = (sys.stdin.buffer.read() if args.file == "-"
            else open(args.file, "rb").read())
    try:
        doc = parse_polynomial(data)
    except DocumentError as exc:
        print("parse error [%s]: %s" % (exc.code, exc), file=sys.stderr)
        return EXIT_USAGE
    ctx = build_simplex(doc.n, doc.d)
    s = doc.support(ctx)
    verdict = classify_wrt_torus(ctx, s)
    atlas = enumerate_maximal(ctx, workers=args.workers)
    containing = containing_families(s, atlas)
    rows = [{"class": verdict.verdict,
             "witness": list(verdict.witness) if verdict.witness else None,
             "containing_families": [list(atlas[i].vector)
                                     for i in containing]}]
    _output(args, "classify", {"n": doc.n, "d": doc.d,
                               "support_size": len(s)}, rows)
    return EXIT_OK


def _paper_atlas(ctx, workers):
    """Atlas plus the published-id -> atlas-position map."""
    tables = load_expected_tables()
    atlas = enumerate_maximal(ctx, workers=workers)
    return tables, atlas, atlas_index(atlas, tables)


def _singular_one(job):
    fid, mask, size, seed, seeds, field_name, vanishing = job
    from .simplex import SupportSet
    ctx = build_simplex(6, 3)
    fld = field_from_name(field_name) if field_name else None
    s = SupportSet(mask, size)
    hd = singular_dim_deg(ctx, s, seed=seed, field=fld, draws=seeds)
    locus = verify_locus_equations(ctx, s, vanishing, seed=seed, field=fld)
    return {"family": fid, "dimension": hd.dimension, "degree": hd.degree,
            "locus_check": locus, "seeds": seeds}


def _singular_rows(args, tables, atlas, ids):
    vanishing = tables["equations_table"]["vanishing_counts"]
    wanted = ([args.family] if getattr(args, "family", 0)
              else list(range(1, 23)))
    jobs = [(fid, atlas[ids[fid]].support.mask, atlas[ids[fid]].support.size,
             args.seed, args.seeds, args.field, vanishing[fid - 1])
            for fid in wanted]
    if args.workers > 1 and len(jobs) > 1:
        with get_context("fork").Pool(args.workers) as pool:
            rows = pool.map(_singular_one, jobs)
    else:
        rows = [_singular_one(j) for j in jobs]
    return rows


def _cmd_singular(args):
    ctx = build_simplex(6, 3)
    tables, atlas, ids = _paper_atlas(ctx, args.workers)
    rows = _singular_rows(args, tables, atlas, ids)
    _output(args, "singular",
            {"seeds": args.seeds, "seed": args.seed,
             "field": args.field or "prime:2147483647"}, rows)
    return EXIT_OK


def _inclusion_rows(ctx, tables, atlas, ids):
    chains = load_chains(ctx, atlas, tables)
    rows = []
    for chain in chains:
        ok = verify_chain(ctx, chain, atlas)
        rows.append({"kind": "chain", "description": chain.description,
                     "steps": len(chain.steps), "verified": ok})
    keep_ids = sorted(fid for group in tables["final_19"].values()
                      for fid in group)
    keep = [ids[fid] for fid in keep_ids]
    hits = antichain_screen(ctx, atlas, keep)
    rows.append({"kind": "antichain-screen", "description":
                 "permutation inclusions among %d retained families"
                 % len(keep), "steps": len(keep) * (len(keep) - 1),
                 "verified": not hits})
    return rows


def _cmd_inclusions(args):
    ctx = build_simplex(6, 3)
    tables, atlas, ids = _paper_atlas(ctx, 1)
    rows = _inclusion_rows(ctx, tables, atlas, ids)
    ok = all(r["verified"] for r in rows)
    _output(args, "inclusions", {}, rows, ok=ok)
    return EXIT_OK if ok else EXIT_DIFF


def _diff_enumerate(ctx, tables, atlas):
    diffs = []
    semi, unstable = split_by_eta(ctx, atlas)
    if len(atlas) != 23:
        diffs.append({"where": "family-count", "expected": 23,
                      "got": len(atlas)})
    expected = [tuple(v) for v in tables["families"]]
    got = sorted((f.vector for f in semi), reverse=True)
    if sorted(expected, reverse=True) != got:
        diffs.append({"where": "semi-stable-vectors",
                      "expected": [list(v) for v in expected],
                      "got": [list(v) for v in got]})
    alts = [tuple(tables["unstable"]["vector"])] + \
           [tuple(v) for v in tables["unstable"]["alternates"]]
    if len(unstable) != 1:
        diffs.append({"where": "unstable-count", "expected": 1,
                      "got": len(unstable)})
    else:
        fam = unstable[0]
        if set(fam.vectors) != set(alts):
            diffs.append({"where": "unstable-vectors",
                          "expected": [list(v) for v in alts],
                          "got": [list(v) for v in fam.vectors]})
        for v in alts:
            if halfspace_support(ctx, v).mask != fam.support.mask:
                diffs.append({"where": "unstable-support",
                              "vector": list(v),
                              "note": "alternate vector support differs"})
    listed = tables["listed_support_family_1"]
    r1 = tuple(tables["families"][0])
    if halfspace_support(ctx, r1) != ctx.support(tuple(e) for e in listed):
        diffs.append({"where": "listed-support-family-1",
                      "note": "halfspace support differs from the "
                              "transcribed listing"})
    return diffs


def _diff_singular(rows, tables):
    diffs = []
    table = tables["singular_table"]
    for row in rows:
        exp_dim, exp_deg = table[row["family"] - 1]
        if (row["dimension"], row["degree"]) != (exp_dim, exp_deg):
            diffs.append({"where": "singular", "family": row["family"],
                          "expected": [exp_dim, exp_deg],
                          "got": [row["dimension"], row["degree"]]})
        if not row["locus_check"]:
            diffs.append({"where": "locus-equations",
                          "family": row["family"], "note": "containment "
                          "check failed"})
    return diffs


def _cmd_reproduce(args):
    ctx = build_simplex(6, 3)
    try:
        tables, atlas, ids = _paper_atlas(ctx, args.workers)
        rows, diffs = [], []
        if args.scope in ("enumerate", "all"):
            frows, _, _ = _family_rows(ctx, atlas)
            rows += [dict(r, stage="enumerate") for r in frows]
            diffs += _diff_enumerate(ctx, tables, atlas)
        if args.scope in ("singular", "all"):
            args.family = 0
            srows = _singular_rows(args, tables, atlas, ids)
            rows += [dict(r, stage="singular") for r in srows]
            diffs += _diff_singular(srows, tables)
        if args.scope in ("inclusions", "all"):
            irows = _inclusion_rows(ctx, tables, atlas, ids)
            rows += [dict(r, stage="inclusions") for r in irows]
            diffs += [{"where": "inclusions", "description":
                       r["description"]} for r in irows if not r["verified"]]
    except MemoryError:
        print("out of memory", file=sys.stderr)
        return EXIT_RESOURCE
    ok = not diffs
    _output(args, "reproduce",
            {"scope": args.scope, "seeds": getattr(args, "seeds", None),
             "workers": args.workers,
             "field": args.field or "prime:2147483647"},
            rows, diffs=diffs, ok=ok)
    return EXIT_OK if ok else EXIT_DIFF


_COMMANDS = {"simplex": _cmd_simplex, "enumerate": _cmd_enumerate,
             "classify": _cmd_classify, "singular": _cmd_singular,
             "inclusions": _cmd_inclusions, "reproduce": _cmd_reproduce}


def main(argv=None):
    args = _build_parser().parse_args(argv)
    logging.basicConfig(
        level=logging.INFO if args.verbose else logging.WARNING,
        stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s")
    return _COMMANDS[args.command](args)


if __name__ == "__main__":
    sys.exit(main())
