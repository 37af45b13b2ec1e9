"""Serialization, generators, fixtures and the command line."""
