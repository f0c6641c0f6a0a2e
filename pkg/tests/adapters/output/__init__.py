"""
Tests package for adapters output
"""
