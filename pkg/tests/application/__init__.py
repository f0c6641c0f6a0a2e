"""
Tests package for application
"""
