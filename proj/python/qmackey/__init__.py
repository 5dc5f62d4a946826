"""Python bindings for the qmackey toolkit."""
from ._core import Instance, QMackeyError

__all__ = ["Instance", "QMackeyError"]
