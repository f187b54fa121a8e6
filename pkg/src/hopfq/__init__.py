"""Hopf quasigroups, their integrals and integral duals, verified over exact fields."""

__version__ = "0.1.0"
