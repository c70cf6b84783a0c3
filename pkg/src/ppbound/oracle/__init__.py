"""Brute-force ground truth for small simple groups."""
