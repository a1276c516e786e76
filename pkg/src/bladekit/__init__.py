"""bladekit: exact geometric algebra kernel and blade decomposability toolkit."""

__version__ = "0.1.0"
