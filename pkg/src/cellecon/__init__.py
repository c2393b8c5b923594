"""Techno-economic model of LTE (4G) versus HSPA (3G) macro-cell networks."""

__version__ = "0.1.0"
