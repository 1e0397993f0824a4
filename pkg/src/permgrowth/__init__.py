"""Certified growth rates of sum-closed permutation classes."""

__version__ = "0.1.0"
