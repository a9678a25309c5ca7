from django.apps import AppConfig


class HamiltonianConfig(AppConfig):
    name = 'hamiltonian'
    verbose_name = "Hamiltonian walks and Grinberg bounds"
