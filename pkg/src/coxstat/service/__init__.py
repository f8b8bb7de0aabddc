"""FastAPI service wrapping the core package.

Run with ``uvicorn coxstat.service:app``.
"""

from .app import app

__all__ = ["app"]
