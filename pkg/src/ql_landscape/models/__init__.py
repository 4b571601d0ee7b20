from .basis import basis_size, multisets, pair_basis, poly_basis_init, two_layer_widths, width_schedule
from .checkpoint import Model, variant_of
from .deep_ql_net import DeepQLNet, forward_deep, matricized_weights
from .poly_layer import PolyLayer, forward_poly
from .ql_layer import QLLayer, forward_single
from . import checkpoint, initializers

__all__ = [
    "basis_size",
    "checkpoint",
    "DeepQLNet",
    "forward_deep",
    "forward_poly",
    "forward_single",
    "initializers",
    "matricized_weights",
    "Model",
    "multisets",
    "pair_basis",
    "poly_basis_init",
    "PolyLayer",
    "QLLayer",
    "two_layer_widths",
    "variant_of",
    "width_schedule",
]
