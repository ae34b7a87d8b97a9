"""Structure Module

Structural subgroups of PGL(2,q) used by the density argument: the
centralizer S of h, the upper-triangular family K, normalizers of cyclic
subgroups and the conjugacy classes of S3 subgroups.
"""

from typing import Dict, List, Optional, Tuple
from dataclasses import dataclass
from enum import Enum
import logging

import numpy as np

from src.atlas.table import GroupTable, canonical_h
from src.errors import VerificationError, WrongCharacteristicError
from src.projective import from_encodings
from src.projective.batch import batch_keys

logger = logging.getLogger(__name__)


def centralizer_of_h(table: GroupTable, h: int) -> np.ndarray:
    """All g in PGL(2,q) commuting with h, checked against the closed form

    For q = 2 mod 3 the centralizer is cyclic of order q + 1; for q = 1 mod 3
    it is the split torus, cyclic of order q - 1.

    Args:
        table: PGL(2,q) table with p != 3
        h: Index of the canonical order-3 element

    Returns:
        Sorted indices of the centralizer
    """
    spec = table.spec
    if spec.p == 3:
        raise WrongCharacteristicError("Order-3 subgroups are not self-centralizing when p = 3")
    if not table.is_pgl:
        raise ValueError("Centralizers are taken in the PGL(2,q) table")

    everything = np.arange(len(table))
    commuting = table.products(everything, [h]) == table.products([h], everything)
    centralizer = np.nonzero(commuting)[0]

    q = table.q
    expected = q + 1 if q % 3 == 2 else q - 1
    if len(centralizer) != expected:
        raise VerificationError(f"Centralizer of h has order {len(centralizer)}, expected {expected}")
    if not np.any(table.orders[centralizer] == expected):
        raise VerificationError(f"Centralizer of h is not cyclic for q={q}")

    closed_form = [(0, 1, spec.neg(1), 1)]
    for alpha in spec.elements():
        if spec.add(spec.add(spec.mul(alpha, alpha), alpha), 1) == 0:
            continue
        closed_form.append((1, alpha, spec.neg(alpha), spec.add(1, alpha)))
    keys = [from_encodings(spec, entries).key for entries in closed_form]
    if not np.array_equal(np.sort(table.lookup(np.array(keys))), centralizer):
        raise VerificationError("Centralizer of h differs from its closed form")

    return centralizer


@dataclass
class TransversalReport:
    """How K = {[[1,a],[0,b]]} sits against the centralizer S

    Attributes:
        elements: Sorted indices of K
        intersection_trivial: K and S meet only in the identity
        injective: Every product k*s is distinct
        surjective: The products k*s cover the group
    """
    elements: np.ndarray
    intersection_trivial: bool
    injective: bool
    surjective: bool

    @property
    def is_transversal(self) -> bool:
        return self.intersection_trivial and self.injective and self.surjective


def transversal_K(table: GroupTable) -> TransversalReport:
    """The q(q-1) elements [[1,a],[0,b]] and their factorization against S

    K is a left transversal of S exactly when |S| = q + 1, i.e. q = 2 mod 3.
    """
    q = table.q
    values = np.arange(q, dtype=np.int64)
    a, b = (axis.ravel() for axis in np.meshgrid(values, values[1:], indexing='ij'))
    rows = np.stack([np.ones_like(a), a, np.zeros_like(a), b], axis=1)
    elements = np.sort(table.lookup(batch_keys(table.spec, rows)))
    if len(elements) != q * (q - 1) or np.any(elements < 0):
        raise VerificationError("K is not contained in the table")

    centralizer = centralizer_of_h(table, canonical_h(table))
    intersection = np.intersect1d(elements, centralizer)
    products = table.products(np.repeat(elements, len(centralizer)), np.tile(centralizer, len(elements)))
    distinct = np.unique(products).size

    report = TransversalReport(
        elements=elements,
        intersection_trivial=intersection.tolist() == [table.identity_index],
        injective=distinct == len(products),
        surjective=distinct == len(table),
    )
    if not (report.intersection_trivial and report.injective):
        raise VerificationError(f"K*S factorization is not unique for q={q}")
    if report.surjective != (q % 3 == 2):
        raise VerificationError(f"K*S covers the group only when q = 2 mod 3 (q={q})")
    return report


class ShapeKind(Enum):
    DIHEDRAL = "dihedral"
    AFFINE = "affine"
    OTHER = "other"


@dataclass(frozen=True)
class NormalizerShape:
    """Isomorphism type of a normalizer; D_n has order n"""
    kind: ShapeKind
    order: int

    def __str__(self) -> str:
        if self.kind is ShapeKind.DIHEDRAL:
            return f"D_{self.order}"
        if self.kind is ShapeKind.AFFINE:
            return f"AffineType({self.order})"
        return f"Other({self.order})"


def _detect_shape(table: GroupTable, subgroup: np.ndarray) -> NormalizerShape:
    n = len(subgroup)
    p, q = table.spec.p, table.q
    orders = table.orders[subgroup]

    if np.count_nonzero(orders == p) + 1 == q:
        return NormalizerShape(ShapeKind.AFFINE, n)

    if n % 2 == 0:
        for c in subgroup[orders == n // 2]:
            cyclic = table.cyclic_subgroup(int(c))
            outside = np.setdiff1d(subgroup, cyclic)
            if np.all(table.orders[outside] == 2):
                return NormalizerShape(ShapeKind.DIHEDRAL, n)

    return NormalizerShape(ShapeKind.OTHER, n)


def normalizer_of_cyclic(table: GroupTable, g: int) -> Tuple[int, NormalizerShape]:
    """Brute-force normalizer of <g> in the table's group with its shape

    Returns:
        (order of the normalizer, detected shape)
    """
    if g == table.identity_index:
        raise ValueError("Normalizer of the trivial subgroup is not tabulated")

    cyclic = table.cyclic_subgroup(g)
    normalizer = np.nonzero(np.isin(table.conjugates(g), cyclic))[0]
    shape = _detect_shape(table, normalizer)
    logger.debug(f"N(<{table.element(g)}>) in q={table.q}: {shape}")
    return len(normalizer), shape


# Dihedral normalizers per column and q mod 4: -1 selects q - 1, +1 selects q + 1.
# D_n has order n; PGL(2,q) doubles every entry of the PSL(2,q) row.
PSL_NORMALIZER_ROWS: Dict[int, Dict[str, int]] = {
    1: {"involution": -1, "order|q-1": -1, "order|q+1": 1},
    3: {"involution": 1, "order|q-1": -1, "order|q+1": 1},
}
PGL_NORMALIZER_ROWS: Dict[int, Dict[str, int]] = {
    1: {"involution-in-psl": -1, "involution-outside-psl": 1, "order|q-1": -1, "order|q+1": 1},
    3: {"involution-in-psl": 1, "involution-outside-psl": -1, "order|q-1": -1, "order|q+1": 1},
}


def normalizer_column(table: GroupTable, g: int) -> Optional[str]:
    """Column of the normalizer tables selected by g

    Involutions have their own columns: one in PSL(2,q), and in PGL(2,q)
    one each for g inside and outside PSL(2,q). Other orders are placed by
    which of p, (q - 1)/d and (q + 1)/d they divide, with d = 2 for PSL(2,q)
    and d = 1 for PGL(2,q).
    """
    q, p = table.q, table.spec.p
    order = int(table.orders[g])
    scale = 2 if table.is_pgl else 1

    if order == 1:
        return None
    if order == p:
        return "order=p"
    if order == 2:
        if not table.is_pgl:
            return "involution"
        return "involution-in-psl" if table.psl_mask[g] else "involution-outside-psl"
    if ((q - 1) * scale // 2) % order == 0:
        return "order|q-1"
    if ((q + 1) * scale // 2) % order == 0:
        return "order|q+1"
    return None


def normalizer_row(table: GroupTable) -> Dict[str, int]:
    """Row of the normalizer table for this group and q mod 4"""
    rows = PGL_NORMALIZER_ROWS if table.is_pgl else PSL_NORMALIZER_ROWS
    return rows[table.q % 4]


def expected_normalizer(table: GroupTable, g: int) -> Optional[NormalizerShape]:
    """Normalizer of <g> as tabulated for PSL(2,q) and PGL(2,q)

    Returns None when g selects no column.
    """
    q, p = table.q, table.spec.p
    scale = 2 if table.is_pgl else 1
    column = normalizer_column(table, g)

    if column is None:
        return None
    if column == "order=p":
        return NormalizerShape(ShapeKind.AFFINE, q * (p - 1) * scale // 2)
    sign = normalizer_row(table)[column]
    return NormalizerShape(ShapeKind.DIHEDRAL, (q + sign) * scale)


def normalizer_samples(table: GroupTable) -> Dict[str, int]:
    """Least-index element for every normalizer column present in this group"""
    columns: Dict[str, int] = {}
    for index in range(len(table)):
        column = normalizer_column(table, index)
        if column is not None:
            columns.setdefault(column, index)
    return columns


@dataclass
class S3ClassCount:
    """Conjugacy classes of subgroups isomorphic to S3"""
    classes: int
    inside_psl: int
    subgroups: int
    representatives: List[Tuple[int, ...]]


def s3_subgroups(table: GroupTable) -> List[Tuple[int, ...]]:
    """Every subgroup <x, y> with o(x) = 3, o(y) = 2 and yxy = x^-1, as sorted index tuples"""
    identity = table.identity_index
    involutions = np.nonzero(table.orders == 2)[0]
    found = set()
    seen = set()

    for x in np.nonzero(table.orders == 3)[0]:
        x = int(x)
        if x in seen:
            continue
        x2 = int(table.inverse_index[x])
        seen.update((x, x2))
        inverting = involutions[table.conjugates(x, by=involutions) == x2]
        if not len(inverting):
            continue
        yx = table.products(inverting, [x])
        yx2 = table.products(inverting, [x2])
        for y, a, b in zip(inverting, yx, yx2):
            found.add(tuple(sorted((identity, x, x2, int(y), int(a), int(b)))))

    return sorted(found)


def s3_class_count(table: GroupTable) -> S3ClassCount:
    """Count conjugacy classes of S3 subgroups under the table's group"""
    subgroups = s3_subgroups(table)
    remaining = set(subgroups)
    representatives = []

    while remaining:
        rep = min(remaining)
        conjugated = np.stack([table.conjugates(s) for s in rep], axis=1)
        remaining -= set(map(tuple, np.sort(conjugated, axis=1).tolist()))
        representatives.append(rep)

    inside = sum(1 for rep in representatives if np.all(table.psl_mask[list(rep)]))
    logger.info(
        f"{len(subgroups)} S3 subgroups in {len(representatives)} class(es) for q={table.q}"
    )
    return S3ClassCount(
        classes=len(representatives),
        inside_psl=inside,
        subgroups=len(subgroups),
        representatives=representatives,
    )


def conjugate_closure(table: GroupTable, subset: np.ndarray, by: Optional[np.ndarray] = None) -> np.ndarray:
    """Sorted indices of every conjugate x s x^-1, s in subset, x in `by`"""
    parts = [table.conjugates(int(s), by=by) for s in subset]
    return np.unique(np.concatenate(parts))
