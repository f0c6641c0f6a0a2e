"""
Tests package for adapters input cli
"""
