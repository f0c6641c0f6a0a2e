"""
Tests package for application use_cases
"""
