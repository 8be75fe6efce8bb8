"""Test suite for IsoHorn."""
