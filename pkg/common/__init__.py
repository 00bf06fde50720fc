"""Shared constants, exceptions, logging and word helpers."""
