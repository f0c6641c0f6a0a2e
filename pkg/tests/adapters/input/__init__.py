"""
Tests package for adapters input
"""
