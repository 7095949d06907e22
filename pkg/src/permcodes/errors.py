"""Shared exception types."""


class CapacityError(Exception):
    """An exhaustive computation was requested beyond its configured cap."""
