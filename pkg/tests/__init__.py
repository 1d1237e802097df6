"""Test suite for the blocks toolkit."""
