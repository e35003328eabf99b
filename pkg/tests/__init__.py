"""Tests for n6-algebra."""
