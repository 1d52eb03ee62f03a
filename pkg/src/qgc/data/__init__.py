"""Bundled data assets (stored codes in the report format)."""
