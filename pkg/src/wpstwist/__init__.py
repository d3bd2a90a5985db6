"""Twist maps between weighted hypersurfaces and the fibrations they produce."""

__version__ = "0.1.0"
