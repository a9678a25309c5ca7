"""
Management package of the hamiltonian app.
"""
