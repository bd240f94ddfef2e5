"""Tests for the const module."""
from ptn_kit.utils.const import (
    CONFIG_KEYS,
    FAILURE,
    GUARD_EXCEEDED,
    MATRIX_SUFFIX,
    NEGATIVE,
    NETWORK_SUFFIX,
    REPORT_SUFFIX,
    SUCCESS,
    TRANSFERS_SENTINEL,
    VERSION,
)


def test_exit_codes():
    assert (SUCCESS, FAILURE, GUARD_EXCEEDED, NEGATIVE) == (0, 1, 2, 3)


def test_version_format():
    assert len(VERSION.split(".")) == 3


def test_suffixes_are_distinct():
    assert len({NETWORK_SUFFIX, MATRIX_SUFFIX, REPORT_SUFFIX}) == 3
    assert all(suffix.startswith(".") for suffix in (NETWORK_SUFFIX, MATRIX_SUFFIX, REPORT_SUFFIX))


def test_config_keys_map_to_env_vars():
    assert all(env.startswith("PTNKIT_") for env in CONFIG_KEYS.values())


def test_sentinel():
    assert TRANSFERS_SENTINEL == "#TRANSFERS"
