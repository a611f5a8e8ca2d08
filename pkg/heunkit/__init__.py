"""heunkit: local Heun, Gauss and 3F2 series with their transformation catalogs."""

__version__ = "0.1.0"
