"""Exact computational toolkit for torus stability of cubic hypersurfaces.

Modules:

* ``simplex``   -- exponent lattice, supports, weight vectors
* ``lp``        -- exact rational linear programming (two-phase simplex)
* ``linalg``    -- hull membership and destabilizing-cone certificates
* ``enumerate`` -- sweep for all maximal halfspace families
* ``classify``  -- three-way torus-stability verdicts with witnesses
* ``poly`` / ``groebner`` / ``hilbert`` -- exact polynomial algebra
* ``singular``  -- dimension/degree of family singular loci
* ``inclusion`` -- support images under coordinate changes, chains
* ``tables``    -- bundled reference tables and chains
* ``cli``       -- command-line surface
"""

__version__ = "0.1.0"
