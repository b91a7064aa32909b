"""Size caps and environment knobs."""

MAX_GENERATOR = 10**6  # largest accepted generator
MAX_ELEMENT = 10**9  # largest n accepted by membership queries
FACTORIZATION_BUDGET = 10**7  # cap on |Z(n)| during enumeration
SWEEP_CAP = 3 * 10**7  # largest DP sweep window, in elements
LENGTH_TABLE_CAP = 10**5  # largest N for materialized length-set tables
CERT_MAX_ESCALATIONS = 64  # extra periods tried before certification gives up
CERT_SPANS = 2  # consecutive verified periods in a certificate
CSV_FLOAT_DIGITS = 12  # significant digits for float convenience columns
PROPORTION_TOLERANCE = 0.05  # accepted deviation from the limit ratio at N = 300

JOBS_ENV = "SEMIGROUP_LD_JOBS"  # mirrors the --jobs flag
PURE_ENV = "SEMIGROUP_LD_PURE"  # set to force the pure-python kernel
