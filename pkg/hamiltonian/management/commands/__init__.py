"""
The planar command: every analysis of the toolkit from the shell.
"""
