"""Nilpotent orbits attached to admissible levels."""
