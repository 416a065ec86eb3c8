"""HTTP service wrapping the engine: stateless JSON in, JSON out."""

from .app import app

__all__ = ["app"]
