"""Degree-diameter graphs: Moore-bound gaps, spectra and exact expansion."""

__version__ = "0.1.0"
