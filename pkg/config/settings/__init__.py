"""
Settings package: the pydantic-settings instance shared by every app.
Path: config/settings/__init__.py
"""

from config.settings.config import BASE_DIR, MainSettings, settings

__all__ = ["BASE_DIR", "MainSettings", "settings"]
