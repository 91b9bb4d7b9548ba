"""Exact arithmetic for Calabi-Yau type differential operators."""

__version__ = "0.1.0"
