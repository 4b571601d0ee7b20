"""
MNIST two-digit regression tasks: IDX parsing, a seeded split, PCA fit on the training rows only, row normalization
and a constant leading coordinate.
"""
from __future__ import annotations

import gzip
import hashlib
import logging
import os
import struct
from dataclasses import dataclass
from typing import Tuple

import numpy as np
from scipy import linalg

from ..exceptions import DataFormatError
from .dataset import Dataset

logger = logging.getLogger(__name__)

IMAGES_MAGIC = 0x00000803
LABELS_MAGIC = 0x00000801

FILES = {
    "train_images": "train-images-idx3-ubyte",
    "train_labels": "train-labels-idx1-ubyte",
    "test_images": "t10k-images-idx3-ubyte",
    "test_labels": "t10k-labels-idx1-ubyte",
}

DEFAULT_TRAIN_FRACTION = 1.0 / 7.0
DEFAULT_COMPONENTS = 10


@dataclass(frozen=True, eq=False)
class MnistTask:
    train: Dataset
    test: Dataset
    pca_components: np.ndarray
    pca_mean: np.ndarray
    digit_pair: Tuple[int, int]
    seed: int
    covariance_checksum: str


def _open(path: str):
    if path.endswith(".gz"):
        return gzip.open(path, "rb")
    return open(path, "rb")


def read_idx(path: str, magic: int) -> np.ndarray:
    """
    Reads an unsigned-byte IDX file: a big-endian magic number, one 32-bit big-endian size per dimension, then the
    payload.  Image files come back as (count, rows * cols) and label files as (count,).
    """
    try:
        with _open(path) as idx_file:
            content = idx_file.read()
    except OSError as e:
        raise DataFormatError(f"Could not read IDX file '{path}': {e}")
    if len(content) < 4:
        raise DataFormatError(f"IDX file '{path}' is too short to hold a header")
    (found,) = struct.unpack(">I", content[:4])
    if found != magic:
        raise DataFormatError(f"IDX file '{path}' has magic number {found:#010x} but {magic:#010x} was expected")
    dimensions = magic & 0xFF
    header_size = 4 + 4 * dimensions
    if len(content) < header_size:
        raise DataFormatError(f"IDX file '{path}' is truncated inside its header")
    sizes = struct.unpack(">" + "I" * dimensions, content[4:header_size])
    expected = int(np.prod(sizes))
    payload = np.frombuffer(content, dtype=np.uint8, offset=header_size)
    if payload.size != expected:
        raise DataFormatError(
            f"IDX file '{path}' should hold {expected} bytes of data for sizes {sizes} but holds {payload.size}"
        )
    return payload.reshape(sizes[0], -1) if dimensions > 1 else payload.copy()


def find_idx_file(directory: str, name: str) -> str:
    for candidate in [name, name + ".gz"]:
        path = os.path.join(directory, candidate)
        if os.path.isfile(path):
            return path
    raise FileNotFoundError(f"Could not find the MNIST file '{name}' (or '{name}.gz') in '{directory}'")


def load_pool(directory: str) -> Tuple[np.ndarray, np.ndarray]:
    """Train and test images/labels from the standard file names, concatenated into one pool."""
    images = []
    labels = []
    for split in ["train", "test"]:
        split_images = read_idx(find_idx_file(directory, FILES[f"{split}_images"]), IMAGES_MAGIC)
        split_labels = read_idx(find_idx_file(directory, FILES[f"{split}_labels"]), LABELS_MAGIC)
        if split_images.shape[0] != split_labels.shape[0]:
            raise DataFormatError(
                f"The {split} split has {split_images.shape[0]} images but {split_labels.shape[0]} labels"
            )
        images.append(split_images)
        labels.append(split_labels)
    return np.concatenate(images), np.concatenate(labels)


def split_indexes(labels: np.ndarray, digit_pair: Tuple[int, int], rng: np.random.Generator, train_fraction: float):
    """floor(count * train_fraction) training rows per digit, picked by a seeded shuffle; the rest are test rows."""
    train = []
    test = []
    for digit in digit_pair:
        indexes = np.flatnonzero(labels == digit)
        rng.shuffle(indexes)
        cut = int(np.floor(indexes.size * train_fraction))
        train.append(indexes[:cut])
        test.append(indexes[cut:])
    return np.sort(np.concatenate(train)), np.sort(np.concatenate(test))


def fit_pca(rows: np.ndarray, components: int) -> Tuple[np.ndarray, np.ndarray, str]:
    """
    (components x features principal directions, mean, checksum of the covariance that was decomposed).
    """
    mean = rows.mean(axis=0)
    centered = rows - mean
    covariance = centered.T @ centered / rows.shape[0]
    checksum = hashlib.sha256(np.ascontiguousarray(covariance).tobytes()).hexdigest()
    (eigenvalues, eigenvectors) = linalg.eigh(covariance)
    order = np.argsort(eigenvalues)[::-1][:components]
    return eigenvectors[:, order].T, mean, checksum


def preprocess(rows: np.ndarray, components: np.ndarray, mean: np.ndarray) -> np.ndarray:
    """Project, scale each row to unit norm, then prepend the constant 1."""
    projected = (rows - mean) @ components.T
    norms = np.linalg.norm(projected, axis=1, keepdims=True)
    projected = np.divide(projected, norms, out=np.zeros_like(projected), where=norms > 0)
    return np.hstack([np.ones((rows.shape[0], 1)), projected])


def build_task(
    images: np.ndarray,
    labels: np.ndarray,
    digit_pair: Tuple[int, int],
    seed: int,
    train_fraction: float = DEFAULT_TRAIN_FRACTION,
    components: int = DEFAULT_COMPONENTS,
) -> MnistTask:
    if len(digit_pair) != 2 or digit_pair[0] == digit_pair[1]:
        raise ValueError(f"digit_pair must name two different digits, not {digit_pair}")
    if not 0 < train_fraction < 1:
        raise ValueError(f"train_fraction must be between 0 and 1, not {train_fraction}")
    rng = np.random.default_rng(seed)
    (train_indexes, test_indexes) = split_indexes(labels, digit_pair, rng, train_fraction)
    if not train_indexes.size or not test_indexes.size:
        raise ValueError(f"The digits {digit_pair} leave an empty train or test split")
    pixels = images.astype(np.float64) / 255.0
    (pca_components, pca_mean, checksum) = fit_pca(pixels[train_indexes], components)

    def to_dataset(indexes, split):
        targets = np.where(labels[indexes] == digit_pair[0], 1.0, -1.0)
        return Dataset(
            inputs=preprocess(pixels[indexes], pca_components, pca_mean),
            targets=targets,
            meta={"generator": "mnist", "split": split, "digit_pair": list(digit_pair), "seed": seed},
        )

    train = to_dataset(train_indexes, "train")
    test = to_dataset(test_indexes, "test")
    logger.info(f"MNIST task {digit_pair}: {train.N} training and {test.N} test samples")
    return MnistTask(
        train=train,
        test=test,
        pca_components=pca_components,
        pca_mean=pca_mean,
        digit_pair=tuple(digit_pair),
        seed=seed,
        covariance_checksum=checksum,
    )


def load_mnist_task(
    path: str,
    digit_pair: Tuple[int, int],
    seed: int,
    train_fraction: float = DEFAULT_TRAIN_FRACTION,
    components: int = DEFAULT_COMPONENTS,
) -> MnistTask:
    (images, labels) = load_pool(path)
    return build_task(images, labels, digit_pair, seed, train_fraction=train_fraction, components=components)


def classify_sign(model, data: Dataset) -> float:
    """Fraction of samples where sign(prediction) equals the +-1 label, counting sign(0) as +1."""
    if data.is_lifted:
        predictions = model.forward_lifted(data.lifted)
    else:
        predictions = model.forward(data.inputs)
    predictions = np.asarray(predictions).reshape(data.N, -1)[:, 0]
    predicted_labels = np.where(predictions >= 0, 1.0, -1.0)
    return float(np.mean(predicted_labels == data.targets[:, 0]))
