"""Configuration, logging and the check base classes."""
