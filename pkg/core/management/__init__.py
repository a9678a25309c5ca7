"""
Management package of the core app.
"""
