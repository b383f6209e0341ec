"""Stability of a support with respect to the fixed maximal torus.

The numerical criterion at the torus level: a form is non-stable exactly when
some nonzero weight-0 integer vector pairs nonnegatively with its whole
support, and unstable when some vector pairs strictly positively.  Witnesses
come from the exact-LP cone machinery and are re-checked by raw pairings.
Classification depends only on the support of the form.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .linalg import cone_witness
from .simplex import (SimplexContext, SupportSet, WeightVector, build_simplex,
                      pairing)

STABLE = "stable"
STRICTLY_NOT_STABLE = "strictly-not-stable"
UNSTABLE = "unstable"


@dataclass(frozen=True)
class StabilityVerdict:
    """Three-way verdict with a destabilizing witness for non-stable classes.

    The witness pairs >= 0 (strictly-not-stable) or > 0 (unstable) with every
    support monomial; stable verdicts carry no witness.
    """

    verdict: str
    witness: Optional[WeightVector] = None


def classify_wrt_torus(ctx: SimplexContext, s: SupportSet) -> StabilityVerdict:
    """Classify a support as stable / strictly-not-stable / unstable.

    The cheap non-strict cone query runs first; only non-stable supports pay
    for the strict query.
    """
    if not s:
        raise ValueError("empty support")
    witness = cone_witness(ctx, s, strict=False)
    if witness is None:
        return StabilityVerdict(STABLE)
    strict = cone_witness(ctx, s, strict=True)
    if strict is not None:
        _recheck(ctx, s, strict, strict_pairing=True)
        return StabilityVerdict(UNSTABLE, strict)
    _recheck(ctx, s, witness, strict_pairing=False)
    return StabilityVerdict(STRICTLY_NOT_STABLE, witness)


def _recheck(ctx, s, r, strict_pairing):
    for i in s.indices():
        v = pairing(r, ctx.monomials[i])
        if v < 0 or (strict_pairing and v == 0):
            raise AssertionError("witness %r fails raw pairing check" % (r,))


def containing_families(s: SupportSet, atlas) -> list:
    """Indices of atlas families whose support contains s up to permutation.

    The atlas stores one representative per coordinate-permutation orbit
    (monotone weight vectors), so containment is tested against every
    rearrangement of each family's vector.  With the complete atlas, an
    empty result certifies torus-stability of every form supported on s.
    """
    out = []
    for i, fam in enumerate(atlas):
        if s.size != fam.support.size:
            raise ValueError("support and atlas from different contexts")
    if not atlas or not s.mask:
        return out
    nvars = len(atlas[0].vector)
    d = next(k for k in itertools.count(1)
             if math.comb(nvars - 1 + k, k) == s.size)
    ctx = build_simplex(nvars - 1, d)
    mons = np.array([ctx.monomials[i] for i in s.indices()], dtype=np.int64)
    for i, fam in enumerate(atlas):
        perms = np.array(sorted(set(itertools.permutations(fam.vector))),
                         dtype=np.int64)
        if ((mons @ perms.T) >= 0).all(axis=0).any():
            out.append(i)
    return out
