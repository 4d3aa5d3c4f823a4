"""Shared helpers: export writers, validators, hashing."""
