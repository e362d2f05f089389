"""Configuration module."""

from config.settings import Settings, settings
from config.tolerances import TOLERANCES, Tolerances

__all__ = ["Settings", "settings", "TOLERANCES", "Tolerances"]
