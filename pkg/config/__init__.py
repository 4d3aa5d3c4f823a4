"""
Project configuration package (settings and logging).
Path: config/__init__.py
"""
