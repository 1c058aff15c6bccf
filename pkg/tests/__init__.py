"""Test package for blockweyl."""
