"""quasicyc: exact twisted group quasialgebras and braided cyclic cohomology."""

__version__ = "0.1.0"
