"""Tests for grasscat package."""
