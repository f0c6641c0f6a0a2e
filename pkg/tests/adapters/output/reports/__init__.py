"""
Tests package for adapters output reports
"""
