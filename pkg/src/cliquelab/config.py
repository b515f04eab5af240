"""Package-wide tunables.

Every constant that a measured bound or an enumeration guard depends on
lives here so that tests and reports reference a single source of truth.
"""

import os

# Hard ceiling on exhaustive searches over certificate / game spaces,
# counted in total configurations.  CLIQUE_LAB_GUARD overrides it for
# tests only.
DEFAULT_GUARD = 2**24

# Measured round ceiling for the dominating set search:
# rounds <= KDS_ROUND_BOUND_C * k * n^(1 - 1/k).  The k = 1 instances are
# the binding case (4 rounds against c * n^0).
KDS_ROUND_BOUND_C = 4

# Default multiplier for edge-label widths: labels carry at most
# ceil(C_LABEL_DEFAULT * log2 n) bits.
C_LABEL_DEFAULT = 4

# Report schema version emitted and accepted by the CLI.
REPORT_VERSION = 1
REPORT_KIND = "clique-lab-report"


def enumeration_guard() -> int:
    """Current guard value; CLIQUE_LAB_GUARD (test-only) takes precedence."""
    raw = os.environ.get("CLIQUE_LAB_GUARD")
    if raw is None:
        return DEFAULT_GUARD
    return int(raw)
