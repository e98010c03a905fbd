"""Projective atlas of planar polynomial differential systems."""
