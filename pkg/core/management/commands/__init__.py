"""
Corpus seeding command of the core app.
"""
