"""Tunable constants for IsoHorn.

Defaults for the probabilistic checks and the desk-scale caps live here so
they can be read in one place. Runtime values come from ConfigManager,
which falls back to these.
"""

# =============================================================================
# FINITE FIELD
# =============================================================================

DEFAULT_PRIME = 2**31 - 1
"""int: Field prime for modular rank computations (fits int64 products)"""

AUDIT_ENTRY_BOUND = 9
"""int: Random matrix entries lie in [-bound, bound] in rational audit mode"""


# =============================================================================
# RANDOMNESS
# =============================================================================

DEFAULT_SEED = 20240601
"""int: Seed used when neither the config file nor the environment sets one"""

DEFAULT_TRIALS = 20
"""int: Independent flag draws per Monte Carlo check"""

MAX_REDRAWS = 16
"""int: Redraw attempts for a degenerate flag before giving up"""


# =============================================================================
# DESK-SCALE CAPS
# =============================================================================

RANK_CAP = 4
"""int: Largest rank n accepted by the Weyl-group and character engines"""

CELL_CAP = 8
"""int: Largest m*(N-m) for which intersections are solved by elimination"""

WEIGHT_CAP = 24
"""int: Largest coordinate of a highest weight accepted by the character engine"""


# =============================================================================
# SCANS
# =============================================================================

DEFAULT_FACTORS = 3
"""int: Number of tensor factors / Schubert classes in exhaustive scans"""

DEFAULT_N_MAX = 4
"""int: Largest dilation tried when looking for invariants at N*nu"""

DEFAULT_SAMPLES = 1000
"""int: Sample points drawn by the cone comparison"""


# =============================================================================
# ENVIRONMENT
# =============================================================================

ENV_PRIME = "ISOHORN_PRIME"
"""str: Environment variable overriding the field prime"""

ENV_SEED = "ISOHORN_SEED"
"""str: Environment variable overriding the default seed"""

ENV_SLOW_TESTS = "ISOHORN_SLOW_TESTS"
"""str: Set to 1 to enable the long exhaustive test scans"""


# =============================================================================
# EIGENCONES
# =============================================================================

CONE_SIZE_CAP = 7
"""int: Largest N for which SU(N) eigencone inequalities are generated"""

SAMPLE_DENOMINATOR = 4
"""int: Sampled cone points have coordinates with denominators up to this"""
