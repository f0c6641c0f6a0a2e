"""
Tests package for application services
"""
