"""
Tests package for domain entities
"""
