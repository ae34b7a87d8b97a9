"""Batch Matrix Kernels

Vectorised arithmetic on arrays of projective elements. An array of shape
(n, 4) holds n matrices as rows (a, b, c, d) of field encodings; every
kernel looks results up in the FieldSpec tables, so a whole orbit or
coset family is multiplied with a handful of numpy operations.
"""

from typing import Sequence

import numpy as np

from src.field import FieldSpec


def as_batch(rows: Sequence[Sequence[int]]) -> np.ndarray:
    """Stack rows of encodings into an (n, 4) int64 array"""
    batch = np.asarray(rows, dtype=np.int64)
    return batch.reshape(-1, 4)


def batch_mul(spec: FieldSpec, left: np.ndarray, right: np.ndarray) -> np.ndarray:
    """Row-wise products left[i] * right[i], normalized

    Either operand may have a single row, which is broadcast.
    """
    add, mul = spec.add_table, spec.mul_table
    a1, b1, c1, d1 = (left[:, i] for i in range(4))
    a2, b2, c2, d2 = (right[:, i] for i in range(4))
    product = np.stack([
        add[mul[a1, a2], mul[b1, c2]],
        add[mul[a1, b2], mul[b1, d2]],
        add[mul[c1, a2], mul[d1, c2]],
        add[mul[c1, b2], mul[d1, d2]],
    ], axis=1).astype(np.int64)
    return batch_normalize(spec, product)


def batch_normalize(spec: FieldSpec, batch: np.ndarray) -> np.ndarray:
    """Scale every row so its first nonzero entry is 1 (rows must be nonsingular)"""
    pivot = np.where(batch[:, 0] != 0, batch[:, 0], batch[:, 1])
    scale = spec.inv_table[pivot]
    return spec.mul_table[batch, scale[:, None]].astype(np.int64)


def batch_inv(spec: FieldSpec, batch: np.ndarray) -> np.ndarray:
    """Row-wise inverses via the adjugate"""
    neg = spec.neg_table
    adjugate = np.stack([
        batch[:, 3],
        neg[batch[:, 1]],
        neg[batch[:, 2]],
        batch[:, 0],
    ], axis=1).astype(np.int64)
    return batch_normalize(spec, adjugate)


def batch_conjugate(spec: FieldSpec, by: np.ndarray, target: np.ndarray) -> np.ndarray:
    """Row-wise conjugates by[i] * target[i] * by[i]^-1"""
    return batch_mul(spec, batch_mul(spec, by, target), batch_inv(spec, by))


def batch_det(spec: FieldSpec, batch: np.ndarray) -> np.ndarray:
    add, mul, neg = spec.add_table, spec.mul_table, spec.neg_table
    return add[
        mul[batch[:, 0], batch[:, 3]],
        neg[mul[batch[:, 1], batch[:, 2]]],
    ].astype(np.int64)


def batch_trace_invariant(spec: FieldSpec, batch: np.ndarray) -> np.ndarray:
    """Tr^2 / det for every row"""
    add, mul = spec.add_table, spec.mul_table
    trace = add[batch[:, 0], batch[:, 3]]
    det_inv = spec.inv_table[batch_det(spec, batch)]
    return mul[mul[trace, trace], det_inv].astype(np.int64)


def batch_keys(spec: FieldSpec, batch: np.ndarray) -> np.ndarray:
    """Canonical integer keys ((a*q + b)*q + c)*q + d"""
    q = spec.q
    return ((batch[:, 0] * q + batch[:, 1]) * q + batch[:, 2]) * q + batch[:, 3]


def batch_is_identity(batch: np.ndarray) -> np.ndarray:
    return (
        (batch[:, 0] == 1) & (batch[:, 1] == 0)
        & (batch[:, 2] == 0) & (batch[:, 3] == 1)
    )


def batch_orders(spec: FieldSpec, batch: np.ndarray) -> np.ndarray:
    """Element orders of every row, by repeated multiplication up to q + 1"""
    orders = np.zeros(len(batch), dtype=np.int64)
    power = batch.copy()
    for n in range(1, spec.q + 2):
        hit = (orders == 0) & batch_is_identity(power)
        orders[hit] = n
        if np.all(orders > 0):
            break
        power = batch_mul(spec, power, batch)
    return orders
