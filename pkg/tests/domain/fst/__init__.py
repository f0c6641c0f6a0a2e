"""
Tests package for the finite-state rewrite engine
"""
