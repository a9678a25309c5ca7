"""
WSGI entry point serving the graph analysis API (``/api/core/``, ``/api/hamiltonian/``).

Run behind any WSGI server, e.g. ``gunicorn config.wsgi``.
"""

import os

from django.core.wsgi import get_wsgi_application

os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'config.settings')

application = get_wsgi_application()
