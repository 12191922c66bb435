"""Weight enumerators and linear-programming bounds for amplitude-damping codes."""

__version__ = "0.1.0"
