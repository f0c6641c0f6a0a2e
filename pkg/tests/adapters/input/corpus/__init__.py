"""
Tests package for adapters input corpus
"""
