import json
from typing import Any, Dict, Optional, Union

import numpy as np

from .deep_ql_net import DeepQLNet
from .poly_layer import PolyLayer
from .ql_layer import QLLayer

Model = Union[QLLayer, DeepQLNet, PolyLayer]


def variant_of(model: Model) -> str:
    if isinstance(model, QLLayer):
        return "single"
    if isinstance(model, DeepQLNet):
        return "deep"
    if isinstance(model, PolyLayer):
        return "poly"
    raise TypeError(f"Don't know how to checkpoint a {model.__class__.__name__}")


def _layer_to_dict(layer: QLLayer) -> Dict[str, Any]:
    return {
        "Q": layer.Q.tolist(),
        "lambda": layer.W.tolist(),
        "alpha": layer.alpha.tolist(),
    }


def to_dict(model: Model, seed: Optional[int] = None) -> Dict[str, Any]:
    variant = variant_of(model)
    data: Dict[str, Any] = {"variant": variant, "seed": seed}
    if variant == "single":
        data["dims"] = {"d": model.d_in, "k": model.k, "outputs": model.outputs}
        data["layers"] = [_layer_to_dict(model)]
    elif variant == "deep":
        data["dims"] = {"h": model.widths, "m": model.hidden_widths}
        data["layers"] = [_layer_to_dict(layer) for layer in model.layers]
    else:
        data["dims"] = {"d": model.d_in, "k": model.k, "degree": model.degree}
        data["layers"] = [{"Q": model.Q.tolist(), "lambda": model.lam.tolist()}]
    return data


def from_dict(data: Dict[str, Any]) -> Model:
    variant = data.get("variant")
    layers = data.get("layers", [])
    if variant == "single":
        layer = layers[0]
        return QLLayer(Q=np.array(layer["Q"]), W=np.array(layer["lambda"]), alpha=np.array(layer["alpha"]))
    if variant == "deep":
        return DeepQLNet.from_weights([(np.array(layer["Q"]), np.array(layer["lambda"])) for layer in layers])
    if variant == "poly":
        return PolyLayer(degree=data["dims"]["degree"], Q=np.array(layers[0]["Q"]), lam=np.array(layers[0]["lambda"]))
    raise ValueError(f"Unknown checkpoint variant '{variant}'")


def save(model: Model, path: str, seed: Optional[int] = None) -> None:
    with open(path, "w") as checkpoint_file:
        json.dump(to_dict(model, seed=seed), checkpoint_file)


def load(path: str) -> Model:
    with open(path, "r") as checkpoint_file:
        return from_dict(json.load(checkpoint_file))
