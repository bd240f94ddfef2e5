"""Constants for ptn-kit."""

# Default log levels
DEFAULT_LOG_LEVEL = "INFO"
VERBOSE_LOG_LEVEL = "DEBUG"

# Exit codes
SUCCESS = 0
FAILURE = 1
GUARD_EXCEEDED = 2
NEGATIVE = 3
VERSION = "0.1.0"

# Report schema version written into every JSON report
REPORT_SCHEMA = 1

# Default values for configuration
DEFAULT_THREADS = 1
DEFAULT_COLOR = True
DEFAULT_SEED = 0
DEFAULT_ORACLE_MAX_NODES = 16
DEFAULT_ORACLE_MAX_LEAVES = 8
DEFAULT_ORACLE_MAX_TRANSFERS = 4
DEFAULT_RECONSTRUCT_MAX_TAXA = 6
DEFAULT_MAX_K = 16

# Configuration key names
CONFIG_KEY_LOG_LEVEL = "log_level"
CONFIG_KEY_THREADS = "threads"
CONFIG_KEY_COLOR = "color"
CONFIG_KEY_SEED = "seed"
CONFIG_KEY_OUTPUT_DIR = "output_dir"
CONFIG_KEY_ORACLE_MAX_NODES = "oracle_max_nodes"
CONFIG_KEY_ORACLE_MAX_LEAVES = "oracle_max_leaves"
CONFIG_KEY_ORACLE_MAX_TRANSFERS = "oracle_max_transfers"
CONFIG_KEY_RECONSTRUCT_MAX_TAXA = "reconstruct_max_taxa"
CONFIG_KEY_MAX_K = "max_k"

# Environment variable names
ENV_LOG_LEVEL = "PTNKIT_LOG_LEVEL"
ENV_THREADS = "PTNKIT_THREADS"
ENV_COLOR = "PTNKIT_COLOR"
ENV_SEED = "PTNKIT_SEED"
ENV_OUTPUT_DIR = "PTNKIT_OUTPUT_DIR"
ENV_HOME_DIR = "PTNKIT_HOME_DIR"

# Configuration
DEFAULT_CONFIG_FILENAME = "ptnkit.ini"
PTNKIT_DIR = ".ptnkit"
CONFIG_DIR = "config"
CONFIG_SECTION = "ptn-kit"

# Config keys that match both env vars and config file keys
CONFIG_KEYS = {
    CONFIG_KEY_LOG_LEVEL: ENV_LOG_LEVEL,
    CONFIG_KEY_THREADS: ENV_THREADS,
    CONFIG_KEY_COLOR: ENV_COLOR,
    CONFIG_KEY_SEED: ENV_SEED,
    CONFIG_KEY_OUTPUT_DIR: ENV_OUTPUT_DIR,
}

# Output file suffixes, appended to an --out PREFIX
NETWORK_SUFFIX = ".network"
TREE_SUFFIX = ".tree"
MATRIX_SUFFIX = ".matrix.csv"
LABELING_SUFFIX = ".labeling.json"
PRELABEL_SUFFIX = ".prelabel.json"
DOT_SUFFIX = ".dot"
REPORT_SUFFIX = ".report.json"
TABLE_SUFFIX = ".parquet"

# Network file format
TRANSFERS_SENTINEL = "#TRANSFERS"
TRANSFER_ARROW = "->"
BIDIRECTIONAL_ARROWS = ("<->", "<-")
AUTO_LABEL_PREFIX = "n"
MATRIX_TAXON_HEADER = "taxon"
NAME_PATTERN = r"[A-Za-z0-9_.\-]+"

# DOT rendering
DOT_GRAPH_NAME = "ptn"
DOT_SUPPORT_STYLE = "solid"
DOT_TRANSFER_STYLE = "dashed"
DOT_TRANSFER_COLOR = "red"
