"""
Test package for curvemoduli.

This package contains all test modules for the curvemoduli library and CLI.
"""
