"""Projective Element Module

Elements of PGL(2,q) as normalized invertible 2x2 matrices modulo scalars,
with the trace-based order classification.
"""

from typing import Optional, Sequence, Tuple, Union
from dataclasses import dataclass
from enum import Enum
import logging

from src.errors import MixedFieldsError, SingularMatrixError, VerificationError
from src.field import FieldElement, FieldSpec, is_square

logger = logging.getLogger(__name__)

Entry = Union[FieldElement, int]


@dataclass(frozen=True)
class ProjectiveElement:
    """A normalized matrix [[a, b], [c, d]] over F_q modulo scalars

    Entries are stored as canonical field encodings, scaled so that the
    first nonzero entry in the order (a, b, c, d) equals 1.
    """
    spec: FieldSpec
    entries: Tuple[int, int, int, int]

    @property
    def a(self) -> FieldElement:
        return FieldElement(self.spec, self.entries[0])

    @property
    def b(self) -> FieldElement:
        return FieldElement(self.spec, self.entries[1])

    @property
    def c(self) -> FieldElement:
        return FieldElement(self.spec, self.entries[2])

    @property
    def d(self) -> FieldElement:
        return FieldElement(self.spec, self.entries[3])

    @property
    def key(self) -> int:
        """Canonical integer encoding, ordered lexicographically by (a, b, c, d)"""
        q = self.spec.q
        a, b, c, d = self.entries
        return ((a * q + b) * q + c) * q + d

    def det(self) -> FieldElement:
        return self.a * self.d - self.b * self.c

    def trace(self) -> FieldElement:
        return self.a + self.d

    def is_identity(self) -> bool:
        return self.entries == (1, 0, 0, 1)

    def serialize(self) -> str:
        """Comma-separated canonical field encodings"""
        return ",".join(str(e) for e in self.entries)

    def __mul__(self, other: "ProjectiveElement") -> "ProjectiveElement":
        return pmul(self, other)

    def __invert__(self) -> "ProjectiveElement":
        return pinv(self)

    def __pow__(self, n: int) -> "ProjectiveElement":
        if n < 0:
            return pinv(self) ** (-n)
        result = identity(self.spec)
        base = self
        while n:
            if n & 1:
                result = pmul(result, base)
            base = pmul(base, base)
            n >>= 1
        return result

    def __repr__(self) -> str:
        a, b, c, d = self.entries
        return f"[[{a},{b}],[{c},{d}]]"


def _as_encoding(spec: FieldSpec, entry: Entry) -> int:
    if isinstance(entry, FieldElement):
        if entry.spec != spec:
            raise MixedFieldsError(f"Entry from {entry.spec} used in {spec}")
        return entry.value
    return spec.embed(int(entry))


def from_encodings(spec: FieldSpec, entries: Sequence[int]) -> ProjectiveElement:
    """Normalize a matrix given as four raw field encodings (a, b, c, d)"""
    a, b, c, d = (int(e) for e in entries)
    if spec.sub(spec.mul(a, d), spec.mul(b, c)) == 0:
        raise SingularMatrixError(f"Matrix [[{a},{b}],[{c},{d}]] is singular")
    pivot = a if a != 0 else b
    scale = spec.inv(pivot)
    return ProjectiveElement(
        spec,
        tuple(spec.mul(e, scale) for e in (a, b, c, d)),
    )


def pnormalize(spec: FieldSpec, matrix: Sequence[Sequence[Entry]]) -> ProjectiveElement:
    """Canonical representative of a nonsingular 2x2 matrix

    Args:
        spec: Field of the entries
        matrix: [[a, b], [c, d]]; ints are read as integers in the prime
            subfield, FieldElements as they are

    Returns:
        Normalized projective element
    """
    (a, b), (c, d) = matrix
    return from_encodings(spec, [_as_encoding(spec, e) for e in (a, b, c, d)])


def identity(spec: FieldSpec) -> ProjectiveElement:
    return ProjectiveElement(spec, (1, 0, 0, 1))


def pmul(g: ProjectiveElement, h: ProjectiveElement) -> ProjectiveElement:
    """Product g*h"""
    if g.spec != h.spec:
        raise MixedFieldsError(f"Cannot multiply elements over {g.spec} and {h.spec}")
    f = g.spec
    a1, b1, c1, d1 = g.entries
    a2, b2, c2, d2 = h.entries
    return from_encodings(f, (
        f.add(f.mul(a1, a2), f.mul(b1, c2)),
        f.add(f.mul(a1, b2), f.mul(b1, d2)),
        f.add(f.mul(c1, a2), f.mul(d1, c2)),
        f.add(f.mul(c1, b2), f.mul(d1, d2)),
    ))


def pinv(g: ProjectiveElement) -> ProjectiveElement:
    """Inverse via the adjugate"""
    f = g.spec
    a, b, c, d = g.entries
    return from_encodings(f, (d, f.neg(b), f.neg(c), a))


def element_order(g: ProjectiveElement) -> int:
    """Least n >= 1 with g^n = 1, searched up to q + 1"""
    bound = g.spec.q + 1
    x = g
    for n in range(1, bound + 1):
        if x.is_identity():
            return n
        x = pmul(x, g)
    raise VerificationError(f"{g} has no order <= {bound}")


def in_psl(g: ProjectiveElement) -> bool:
    """True iff the determinant of the normalized representative is a square"""
    return is_square(g.det())


@dataclass(frozen=True)
class TraceInvariant:
    """Tr(A)^2 / det(A), independent of the representative A"""
    tau: FieldElement


def trace_invariant(g: ProjectiveElement) -> TraceInvariant:
    tr = g.trace()
    return TraceInvariant(tau=tr * tr / g.det())


class ElementKind(Enum):
    IDENTITY = "identity"
    ORDER3 = "order3"
    INVOLUTION_IN_PSL = "involution_in_psl"
    INVOLUTION_OUTSIDE_PSL = "involution_outside_psl"
    OTHER = "other"


@dataclass(frozen=True)
class Classification:
    """Order class of an element together with its trace invariant"""
    kind: ElementKind
    order: int
    tau: FieldElement
    psl: bool

    def __str__(self) -> str:
        if self.kind is ElementKind.OTHER:
            return f"Other({self.order})"
        return self.kind.value


def classify(g: ProjectiveElement, order: Optional[int] = None) -> Classification:
    """Classify g by order and PSL membership, checking the trace laws

    Args:
        g: Element to classify
        order: Precomputed order of g, if known

    Returns:
        Classification of g
    """
    order = element_order(g) if order is None else order
    psl = in_psl(g)
    tau = trace_invariant(g).tau

    if order == 1:
        kind = ElementKind.IDENTITY
    elif order == 3:
        kind = ElementKind.ORDER3
        if tau.value != 1:
            raise VerificationError(f"Order-3 element {g} has tau = {tau.value}")
    elif order == 2:
        kind = ElementKind.INVOLUTION_IN_PSL if psl else ElementKind.INVOLUTION_OUTSIDE_PSL
        if tau.value != 0:
            raise VerificationError(f"Involution {g} has tau = {tau.value}")
    else:
        kind = ElementKind.OTHER

    return Classification(kind=kind, order=order, tau=tau, psl=psl)
