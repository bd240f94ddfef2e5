"""Test suite for ptn-kit."""
