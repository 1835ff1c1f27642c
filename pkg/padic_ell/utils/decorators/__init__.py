from .singleton import singleton

__all__ = [
    "singleton",
]
