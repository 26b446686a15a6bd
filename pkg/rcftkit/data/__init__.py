"""Packaged reference data read by the infrastructure layer."""
