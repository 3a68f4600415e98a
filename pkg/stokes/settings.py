"""
Defaults shared by the library and the command line. Every
value can be overridden per call; nothing here is mutated at
runtime.
"""

DEFAULT_SEED = 0

DEFAULT_RESOLUTION = 4096

DEFAULT_TRIALS = 3

DEFAULT_NODE_LIMIT = 5 * 10 ** 6

# fresh seeds tried when a random choice turns out non-generic
RETRY_SEEDS = 5

# the "sufficiently large" modulus at which growth points are drawn
GROWTH_RADIUS = 100.0

# bisection stops below this width in the sweep parameter
TIME_TOLERANCE = 1e-12

# events closer than this are treated as simultaneous
CLUSTER_TOLERANCE = 1e-9

# generic parameter values are drawn as n/d with 1 <= n, d <= PARAMETER_BOUND
PARAMETER_BOUND = 9

# random connection entries are drawn as +-n/d with 1 <= n, d <= ENTRY_BOUND
ENTRY_BOUND = 50

MILNOR_MAX_DEGREE = 8

# R is raised until faster growth points lie this many times further out
DOMINANCE_MARGIN = 2.0
