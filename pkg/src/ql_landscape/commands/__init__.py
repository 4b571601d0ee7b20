from .example1 import example1
from .mnist import mnist
from .oracle import oracle
from .poly import poly
from .scaling_check import scaling_check
from .sweep import sweep

ROUTES = {
    "sweep": sweep,
    "mnist": mnist,
    "example1": example1,
    "scaling-check": scaling_check,
    "poly": poly,
    "oracle": oracle,
}

__all__ = [
    "example1",
    "mnist",
    "oracle",
    "poly",
    "ROUTES",
    "scaling_check",
    "sweep",
]
