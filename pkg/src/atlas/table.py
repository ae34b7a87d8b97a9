"""Group Table Module

This module enumerates PGL(2,q) and PSL(2,q) as arrays of normalized
matrices sorted by canonical key, so that element lookup is a binary search
and whole-group products are single vectorised calls.
"""

from typing import Iterator, List, Optional, Sequence
from dataclasses import dataclass
from enum import Enum
from functools import cached_property
import logging
import time

import numpy as np

from src.errors import NoSuchInvolutionError, TooLargeError, VerificationError
from src.field import FieldSpec
from src.projective import ProjectiveElement, pnormalize
from src.projective.batch import (
    batch_conjugate,
    batch_det,
    batch_inv,
    batch_keys,
    batch_mul,
    batch_orders,
)

logger = logging.getLogger(__name__)

DEFAULT_MAX_GROUP_ORDER = 30000


class GroupKind(Enum):
    PSL = "psl"
    PGL = "pgl"


def group_order(q: int, kind: GroupKind) -> int:
    """(q-1)q(q+1) for PGL(2,q), half of it for PSL(2,q) (q odd)"""
    order = (q - 1) * q * (q + 1)
    return order if kind is GroupKind.PGL else order // 2


@dataclass(eq=False)
class GroupTable:
    """Every element of PSL(2,q) or PGL(2,q), indexed by sorted canonical key

    Attributes:
        spec: Field the matrices live over
        kind: Which group was enumerated
        entries: (n, 4) array of normalized encodings, sorted by key
        keys: Canonical key of every element, strictly increasing
        psl_mask: Whether each element lies in PSL(2,q)
        orders: Element orders
    """
    spec: FieldSpec
    kind: GroupKind
    entries: np.ndarray
    keys: np.ndarray
    psl_mask: np.ndarray
    orders: np.ndarray

    def __len__(self) -> int:
        return len(self.keys)

    @property
    def q(self) -> int:
        return self.spec.q

    @property
    def is_pgl(self) -> bool:
        return self.kind is GroupKind.PGL

    def element(self, index: int) -> ProjectiveElement:
        return ProjectiveElement(self.spec, tuple(int(e) for e in self.entries[index]))

    def elements(self) -> List[ProjectiveElement]:
        return [self.element(i) for i in range(len(self))]

    def lookup(self, keys: np.ndarray) -> np.ndarray:
        """Indices of the given keys, -1 where a key is not in the table"""
        keys = np.asarray(keys, dtype=np.int64)
        position = np.searchsorted(self.keys, keys)
        clipped = np.minimum(position, len(self.keys) - 1)
        return np.where(self.keys[clipped] == keys, clipped, -1)

    def indices_of(self, batch: np.ndarray) -> np.ndarray:
        """Indices of normalized rows, raising if any row is missing"""
        indices = self.lookup(batch_keys(self.spec, batch))
        if np.any(indices < 0):
            raise VerificationError(f"Product left {self.kind.value.upper()}(2,{self.q})")
        return indices

    def index_of(self, g: ProjectiveElement) -> int:
        index = int(self.lookup(np.array([g.key]))[0])
        if index < 0:
            raise KeyError(f"{g} is not in {self.kind.value.upper()}(2,{self.q})")
        return index

    @cached_property
    def identity_index(self) -> int:
        return int(self.lookup(batch_keys(self.spec, np.array([[1, 0, 0, 1]])))[0])

    @cached_property
    def inverse_index(self) -> np.ndarray:
        return self.indices_of(batch_inv(self.spec, self.entries))

    def multiply(self, i: int, j: int) -> int:
        return int(self.products([i], [j])[0])

    def products(self, left: Sequence[int], right: Sequence[int]) -> np.ndarray:
        """Indices of left[k] * right[k]; a single index on either side is broadcast"""
        product = batch_mul(
            self.spec,
            self.entries[np.asarray(left, dtype=np.int64)],
            self.entries[np.asarray(right, dtype=np.int64)],
        )
        return self.indices_of(product)

    def conjugates(self, target: int, by: Optional[np.ndarray] = None) -> np.ndarray:
        """Indices of x * target * x^-1 for every x in `by` (default: the whole table)"""
        by = np.arange(len(self)) if by is None else np.asarray(by, dtype=np.int64)
        conjugated = batch_conjugate(self.spec, self.entries[by], self.entries[[target]])
        return self.indices_of(conjugated)

    def conjugacy_class(self, target: int) -> np.ndarray:
        return np.unique(self.conjugates(target))

    def cyclic_subgroup(self, index: int) -> np.ndarray:
        """Powers g^0, g^1, ..., g^(n-1) of g as indices"""
        powers = [self.identity_index]
        current = index
        while current != self.identity_index:
            powers.append(current)
            current = self.multiply(current, index)
        return np.array(powers, dtype=np.int64)

    def subgroup_closure(self, generators: Sequence[int]) -> np.ndarray:
        """Sorted indices of the subgroup generated by the given elements"""
        members = {self.identity_index}
        frontier = [self.identity_index]
        generators = list(generators)
        while frontier:
            products = self.products(np.repeat(frontier, len(generators)), np.tile(generators, len(frontier)))
            frontier = [int(x) for x in np.unique(products) if int(x) not in members]
            members.update(frontier)
        return np.array(sorted(members), dtype=np.int64)

    @cached_property
    def class_of_h(self) -> np.ndarray:
        """The conjugacy class C_3 of the canonical order-3 element"""
        return self.conjugacy_class(canonical_h(self))

    def dump_lines(self) -> Iterator[str]:
        """One element per line as four comma-separated field encodings"""
        for row in self.entries:
            yield ",".join(str(int(e)) for e in row)


def enumerate_group(
    spec: FieldSpec,
    kind: GroupKind = GroupKind.PGL,
    max_group_order: int = DEFAULT_MAX_GROUP_ORDER,
) -> GroupTable:
    """Enumerate PGL(2,q) or PSL(2,q) through normalized forms

    Normalized matrices are exactly [[1,b],[c,d]] with d - bc != 0 and
    [[0,1],[c,d]] with c != 0, so the enumeration is duplicate-free.

    Args:
        spec: Field of odd order q
        kind: PGL or PSL
        max_group_order: Largest admissible group order

    Returns:
        GroupTable sorted by canonical key
    """
    q = spec.q
    expected = group_order(q, kind)
    if expected > max_group_order:
        raise TooLargeError(
            f"{kind.value.upper()}(2,{q}) has {expected} elements, "
            f"above max_group_order={max_group_order}"
        )

    start = time.time()
    values = np.arange(q, dtype=np.int64)
    b, c, d = (axis.ravel() for axis in np.meshgrid(values, values, values, indexing='ij'))
    upper = np.stack([np.ones_like(b), b, c, d], axis=1)
    upper = upper[batch_det(spec, upper) != 0]

    c0, d0 = (axis.ravel() for axis in np.meshgrid(values[1:], values, indexing='ij'))
    lower = np.stack([np.zeros_like(c0), np.ones_like(c0), c0, d0], axis=1)

    entries = np.concatenate([lower, upper])
    keys = batch_keys(spec, entries)
    order = np.argsort(keys, kind='stable')
    entries, keys = entries[order], keys[order]
    psl_mask = spec.square_mask[batch_det(spec, entries)]

    if kind is GroupKind.PSL:
        entries, keys = entries[psl_mask], keys[psl_mask]
        psl_mask = np.ones(len(entries), dtype=bool)

    if len(entries) != expected:
        raise VerificationError(f"Enumerated {len(entries)} elements, expected {expected}")

    table = GroupTable(
        spec=spec,
        kind=kind,
        entries=entries,
        keys=keys,
        psl_mask=psl_mask,
        orders=batch_orders(spec, entries),
    )
    logger.info(
        f"Enumerated {kind.value.upper()}(2,{q}): {len(table)} elements "
        f"in {time.time() - start:.2f}s"
    )
    return table


def canonical_h(table: GroupTable) -> int:
    """Index of the normalization of [[0,-1],[1,-1]]"""
    return table.index_of(pnormalize(table.spec, [[0, -1], [1, -1]]))


def find_inverting_involution(table: GroupTable, h: int) -> int:
    """Least-index involution nu outside PSL(2,q) with nu h nu^-1 = h^-1

    Raises:
        NoSuchInvolutionError: when every involution inverting h lies in PSL
    """
    if table.orders[h] != 3:
        raise ValueError(f"Element {table.element(h)} does not have order 3")

    candidates = np.nonzero((table.orders == 2) & ~table.psl_mask)[0]
    if len(candidates):
        hits = candidates[table.conjugates(h, by=candidates) == table.inverse_index[h]]
        if len(hits):
            nu = int(hits[0])
            logger.debug(f"Inverting involution for q={table.q}: {table.element(nu)}")
            return nu

    raise NoSuchInvolutionError(
        f"No involution outside PSL(2,{table.q}) inverts {table.element(h)}"
    )
