"""Configuration and logging for crcartan."""
