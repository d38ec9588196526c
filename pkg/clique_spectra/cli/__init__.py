"""
Command Line Interface Components
"""
