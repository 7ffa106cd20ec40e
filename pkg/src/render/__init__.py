"""Rendering of tilings to SVG."""

from .svg import RenderOptions, render_tiling, write_svg

__all__ = ["RenderOptions", "render_tiling", "write_svg"]
