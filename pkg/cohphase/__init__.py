"""cohphase - Pegg-Barnett phase properties of generalized coherent states."""

__version__ = "0.1.0"
