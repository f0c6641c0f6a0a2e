"""
Tests package for config
"""
