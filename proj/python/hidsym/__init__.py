"""Hidden two-point symmetry detection toolkit."""

from ._hidsym import *  # noqa: F401,F403
