"""
Tests package for adapters output persistence
"""
