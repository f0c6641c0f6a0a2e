"""
Tests package for adapters
"""
