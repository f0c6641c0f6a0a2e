"""
Tests package for domain
"""
