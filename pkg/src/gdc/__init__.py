"""Graded differential exponential modalities: models, a law checker and a proof language."""
__version__ = "0.1.0"
