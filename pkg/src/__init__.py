"""Elnitsky polygon tiling toolkit package root."""

__all__ = [
    "config",
    "elnitsky",
    "qa",
    "render",
]
