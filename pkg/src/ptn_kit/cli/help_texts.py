"""
Help text constants for the ptn-kit CLI.

This module centralizes all help and usage text for CLI commands and options,
ensuring consistent and maintainable documentation across the toolkit.
"""

# Command group descriptions
GEN_GROUP_HELP = "Generate worst-case and random instances."
ORACLE_GROUP_HELP = "Exhaustive reference searches for toy-scale instances."
CONFIG_GROUP_HELP = "Show the effective ptn-kit configuration."

# Command option descriptions
ARGS_HELP = "Show this help message and exit."
ARGS_VERBOSE_HELP = "Enable verbose output and debug logging"
ARGS_CONFIG_HELP = "Path to custom configuration file"
ARGS_THREADS_HELP = "Maximum worker threads for per-character work (default 1)"
ARGS_SEED_HELP = "Seed for randomized instance generation"
ARGS_NETWORK_HELP = "Network file (extended Newick plus #TRANSFERS section)"
ARGS_TREE_HELP = "Tree file (Newick, no transfers)"
ARGS_MATRIX_HELP = "Character matrix CSV (taxon column, then one 0/1 column per character)"
ARGS_LABELING_HELP = "Labeling JSON file with labels and/or times keyed by node label"
ARGS_PRELABEL_HELP = "No-loss pre-labeling JSON for the tree"
ARGS_FITCH_HELP = "Use the Fitch pre-labeling (the default)"
ARGS_PRUNE_HELP = "Remove transfers that are not needed after completion"
ARGS_NO_PRUNE_HELP = "Keep every transfer the greedy completion inserts"
ARGS_OUT_HELP = "Output prefix; artifact suffixes are appended"
ARGS_ALL_VIOLATIONS_HELP = "Report every failing character instead of the first"
ARGS_EMIT_LABELING_HELP = "Write the explaining labeling to this JSON file"
ARGS_TABLE_HELP = "Also write per-character rows as a Parquet table"
ARGS_K_HELP = "Number of characters (the matrix has 2^k taxa)"
ARGS_TAXA_HELP = "Number of taxa"
ARGS_CHARACTERS_HELP = "Number of characters"
ARGS_TRANSFERS_HELP = "Number of random transfers to add"
ARGS_DENSITY_HELP = "Probability that a taxon has a character"
ARGS_MAX_TRANSFERS_HELP = "Largest transfer count to search"
ARGS_COUNT_HELP = "Number of random instances"
ARGS_MAX_TAXA_HELP = "Largest number of taxa per random instance"
ARGS_MAX_CHARACTERS_HELP = "Largest number of characters per random instance"
ARGS_INIT_HELP = "Write the effective configuration to this INI file"
ARGS_FORCE_HELP = "Overwrite an existing file"

# --- Main CLI Help ---
MAIN_HELP = """ptn-kit: perfect transfer networks from binary character data."""

MAIN_HELP_DETAILED = f"""
ptn-kit: perfect transfer networks from binary character data.

USAGE:
  ptn-kit [OPTIONS] COMMAND [ARGS]...

  For detailed information about any command:
    ptn-kit <command> --help

Options:
  --version             Show the version and exit.
  --verbose             {ARGS_VERBOSE_HELP}
  --config TEXT         {ARGS_CONFIG_HELP}
  --threads INTEGER     {ARGS_THREADS_HELP}
  --seed INTEGER        {ARGS_SEED_HELP}
  --help                {ARGS_HELP}

Exit codes:
  0  success
  1  input or parse error
  2  size guard exceeded
  3  negative answer (not a PTN, or not time consistent)
"""
