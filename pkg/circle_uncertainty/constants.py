"""Numerical limits, tolerances and output settings"""

# ============================================================================
# Modified Bessel Functions
# ============================================================================
BESSEL_MAX_ORDER = 200
BESSEL_MAX_ARGUMENT = 700.0  # e^x stays finite in double precision
BESSEL_SERIES_CUTOFF = 10.0  # power series below, normalised downward recurrence above
BESSEL_START_OFFSET = 20  # start order = n + offset + sqrt(scale * x)
BESSEL_START_SCALE = 80.0
BESSEL_RESCALE_THRESHOLD = 1e250
BESSEL_SERIES_MAX_TERMS = 500

# ============================================================================
# States on the Circle
# ============================================================================
DEFAULT_TAIL_TOL = 1e-14
MAX_TAIL_TOL = 1e-6
DEFAULT_L_MAX_HINT = 64
MAX_L_WINDOW = 4096
NORM_TOLERANCE = 1e-12
GRID_OVERSAMPLING = 4  # grid points per coefficient when sampling a wavefunction
MAX_KAPPA = 50.0

# ============================================================================
# Moments & Covariance
# ============================================================================
EIGENVALUE_CLAMP = 1e-12  # negative eigenvalues above -this are roundoff
QUADRATURE_OVERSAMPLING = 4

# ============================================================================
# Bounds
# ============================================================================
SINGULAR_DET = 1e-14
DEGENERATE_TRACE = 1e-14
DEGENERATE_VARIANCE = 1e-14
ZERO_MEAN_NORM = 1e-15  # |c| below this counts as a vanishing mean vector
CHAIN_SLACK = 1e-10
DEFAULT_SATURATION_TOL = 1e-8
MAX_SATURATION_TOL = 1e-4
MIN_ALPHA_SAMPLES = 360
DEFAULT_ALPHA_SAMPLES = 720
ALPHA_REFINE_TOL = 1e-10

# ============================================================================
# Ladder Operator
# ============================================================================
LADDER_MAX_L = 700  # e^{|l|} must stay representable

# ============================================================================
# Output
# ============================================================================
REPORT_DIGITS = 12
STATE_FILE_DIGITS = 17
SWEEP_CSV_HEADER = ['family', 'kappa', 'var_e', 'var_l', 'standard', 'v2', 'u2', 'gap_uv', 'chain_ok']
SWEEP_FAMILIES = ('von-mises', 'cat', 'x-extremal')
HOME_DIR_NAME = '.circle_uncertainty'
HOME_ENV_VAR = 'CIRCLE_UNCERTAINTY_HOME'
LOG_FILE_NAME = 'circle_uncertainty.log'
REPRODUCER_FILE_NAME = 'verify_failure_state.json'

# ============================================================================
# Exit Codes
# ============================================================================
EXIT_OK = 0
EXIT_INVARIANT_FAILURE = 1
EXIT_INPUT_ERROR = 2
EXIT_NUMERIC_ERROR = 3
