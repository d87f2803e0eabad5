"""The four schemes: conjugacy exchange, power-conjugacy exchange, classical
Cramer-Shoup, and the non-abelian Cramer-Shoup."""

from . import ccs, kk06, ncs, pcke
from .common import REJECT, Reject

__all__ = ["ccs", "kk06", "ncs", "pcke", "REJECT", "Reject"]
