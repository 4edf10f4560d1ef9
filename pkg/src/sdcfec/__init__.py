"""Superdense coding over a noisy Pauli channel with classical FEC and interleaving."""

from .analytic import *  # noqa: F401,F403
from .channel import *  # noqa: F401,F403
from .codes import *  # noqa: F401,F403
from .interleave import *  # noqa: F401,F403
from .pipeline import *  # noqa: F401,F403
from . import analytic, channel, codes, interleave, pipeline

__version__ = "0.1.0"
