"""Enumeration of all maximal halfspace families, up to coordinate permutation.

The driver sweeps every (n-1)-element subset of the simplex, takes the normal
vector of the hyperplane spanned with the barycenter, keeps only monotone
normals (which kills the coordinate-permutation symmetry), orients them
descending, and maintains the antichain of maximal halfspace supports.

The subset sweep is vectorized: a batched float LU gives candidate integer
kernel vectors (entries are small minors, far below the rounding threshold),
every surviving candidate is re-verified by exact integer arithmetic, and any
numerically doubtful row falls back to fraction-free elimination.  The final
family list is therefore exact and deterministic, independent of chunking.
"""

from __future__ import annotations

import logging
import math
from collections import deque
from dataclasses import dataclass, replace
from itertools import combinations, islice
from multiprocessing import get_context
from typing import Optional

import numpy as np

from .linalg import BOUNDARY, INTERIOR, hull_locate, integer_kernel_vector
from .simplex import (SimplexContext, SupportSet, build_simplex, is_monotone,
                      reduce_vector)

log = logging.getLogger(__name__)

CHUNK = 1 << 16


@dataclass(frozen=True)
class MaximalFamily:
    """A maximal halfspace support with its reduced descending vector(s).

    ``vectors`` holds every reduced monotone vector the sweep produced for
    this support (several vectors can cut out the same halfspace support);
    ``vector`` is the canonical one (lexicographically smallest).
    """

    vector: tuple
    support: SupportSet
    vectors: tuple
    eta_in_hull: Optional[bool] = None


def _monotone_descending(v):
    mono = is_monotone(v)
    if not mono:
        return None
    v = reduce_vector(v, orient="descending")
    if is_monotone(v) != "descending":
        return None
    return v


def _process_chunk(ctx: SimplexContext, combs: np.ndarray, found: dict):
    """Exact-verified candidate vectors from a block of point subsets.

    found maps reduced descending vector -> support mask; updated in place.
    """
    n, nv = ctx.n, ctx.nvars
    B = combs.shape[0]
    M = np.empty((B, n, nv))
    M[:, : n - 1, :] = ctx.exponents[combs]
    M[:, n - 1, :] = 1.0
    A = M[:, :, :n]
    dets = np.linalg.det(A)
    # rank < n or a kernel with last entry 0 cannot give a monotone normal
    nz = np.abs(dets) > 0.5
    if not nz.any():
        return
    x = np.linalg.solve(A[nz], -M[nz, :, n:])[:, :, 0]
    v = np.empty((int(nz.sum()), nv))
    v[:, :n] = dets[nz, None] * x
    v[:, n] = dets[nz]
    vr = np.rint(v)
    doubtful = np.abs(v - vr).max(axis=1) > 0.1
    diffs = np.diff(vr, axis=1)
    mono = np.all(diffs <= 0, axis=1) | np.all(diffs >= 0, axis=1)
    rows = np.nonzero(mono | doubtful)[0]
    if not rows.size:
        return
    vi = vr.astype(np.int64)
    sub = combs[nz]
    for row in rows.tolist():
        cand = tuple(int(c) for c in vi[row])
        points = [ctx.monomials[j] for j in sub[row]]
        ok = (sum(cand) == 0
              and all(sum(a * b for a, b in zip(cand, p)) == 0 for p in points))
        if not ok:
            kern = integer_kernel_vector([list(p) for p in points]
                                         + [[1] * nv])
            if kern is None:
                continue
            cand = kern
        vec = _monotone_descending(cand)
        if vec is None or vec in found:
            continue
        pair = ctx.exponents @ np.array(vec, dtype=np.int64)
        mask = 0
        for i in np.nonzero(pair >= 0)[0].tolist():
            mask |= 1 << i
        found[vec] = mask


def _sweep_range(args):
    n, d, worker, nworkers = args
    ctx = build_simplex(n, d)
    it = combinations(range(ctx.size), n - 1)
    found = {}
    idx = 0
    while True:
        if idx % nworkers == worker:
            block = list(islice(it, CHUNK))
            if not block:
                break
            combs = np.array(block, dtype=np.intp)
            _process_chunk(ctx, combs, found)
            if worker == 0:
                log.info("chunk %d done, %d vectors so far", idx, len(found))
        else:
            skipped = deque(islice(it, CHUNK), maxlen=1)
            if not skipped:
                break
        idx += 1
    return found


def maximal_antichain(supports: dict) -> dict:
    """Restrict a mask -> vectors mapping to its maximal elements."""
    masks = sorted(supports, key=lambda m: (-m.bit_count(), -m))
    keep = []
    for m in masks:
        if not any(m & ~k == 0 for k in keep):
            keep.append(m)
    return {m: supports[m] for m in keep}


def _families_from(found: dict, size: int) -> list:
    by_mask = {}
    for vec, mask in found.items():
        by_mask.setdefault(mask, []).append(vec)
    by_mask = maximal_antichain(by_mask)
    fams = []
    for mask, vecs in by_mask.items():
        vecs = tuple(sorted(vecs))
        fams.append(MaximalFamily(vecs[0], SupportSet(mask, size), vecs))
    fams.sort(key=lambda f: f.vector, reverse=True)
    return fams


def enumerate_maximal(ctx: SimplexContext, workers: int = 1) -> list:
    """All maximal halfspace supports of the simplex, with their vectors.

    Deterministic: the result is a canonically sorted antichain, identical
    for any worker count.
    """
    total = math.comb(ctx.size, ctx.n - 1)
    log.info("sweeping %d subsets of size %d with %d workers",
             total, ctx.n - 1, workers)
    if workers <= 1:
        found = _sweep_range((ctx.n, ctx.d, 0, 1))
    else:
        args = [(ctx.n, ctx.d, w, workers) for w in range(workers)]
        with get_context("fork").Pool(workers) as pool:
            parts = pool.map(_sweep_range, args)
        found = {}
        for part in parts:
            found.update(part)
    return _families_from(found, ctx.size)


def _descending_weight_vectors(nvars, bound):
    """All non-increasing nonzero integer vectors with entries in
    [-bound, bound] and total weight 0."""

    def rec(prefix, remaining, hi):
        if remaining == 1:
            last = -sum(prefix)
            if -bound <= last <= hi:
                yield tuple(prefix + [last])
            return
        # keep enough room for the remaining entries to cancel the sum
        for v in range(min(hi, -sum(prefix) + bound * (remaining - 1)),
                       -bound - 1, -1):
            yield from rec(prefix + [v], remaining - 1, v)

    for vec in rec([], nvars, bound):
        if any(vec):
            yield vec


def brute_force_oracle(ctx: SimplexContext, bound: int) -> list:
    """Independent ground truth: scan every monotone reduced weight-0 vector
    in a box and keep the maximal halfspace supports.

    Intended for small simplices; saturation (the antichain not changing when
    the bound grows) is the caller's evidence that the box was large enough.
    """
    if bound < 1:
        raise ValueError("bound must be >= 1")
    found = {}
    for vec in _descending_weight_vectors(ctx.nvars, bound):
        red = reduce_vector(vec, orient="descending")
        if red in found:
            continue
        pair = ctx.exponents @ np.array(red, dtype=np.int64)
        mask = 0
        for i in np.nonzero(pair >= 0)[0].tolist():
            mask |= 1 << i
        found[red] = mask
    return _families_from(found, ctx.size)


def split_by_eta(ctx: SimplexContext, families) -> tuple:
    """Partition families by whether the barycenter lies in the hull of the
    support (boundary or interior -> semi-stable, outside -> unstable)."""
    semi, unstable = [], []
    for fam in families:
        verdict = hull_locate(ctx, fam.support).verdict
        inside = verdict in (BOUNDARY, INTERIOR)
        fam = replace(fam, eta_in_hull=inside)
        (semi if inside else unstable).append(fam)
    return semi, unstable
