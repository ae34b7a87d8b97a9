"""Field Element Module

Immutable elements of F_q carrying a reference to their FieldSpec.
"""

from typing import Tuple, Union
from dataclasses import dataclass

from src.errors import MixedFieldsError

from .spec import FieldSpec

Operand = Union["FieldElement", int]


@dataclass(frozen=True)
class FieldElement:
    """An element of F_q stored by its canonical encoding"""
    spec: FieldSpec
    value: int

    @property
    def coeffs(self) -> Tuple[int, ...]:
        """Little-endian coefficients over Z_p"""
        return self.spec.decode(self.value)

    def is_zero(self) -> bool:
        return self.value == 0

    def __int__(self) -> int:
        return self.value

    def __index__(self) -> int:
        return self.value

    def __repr__(self) -> str:
        return f"FieldElement({self.value} in {self.spec})"

    def __str__(self) -> str:
        return str(self.value)

    def _coerce(self, other: Operand) -> int:
        if isinstance(other, FieldElement):
            if other.spec != self.spec:
                raise MixedFieldsError(
                    f"Cannot combine elements of {self.spec} and {other.spec}"
                )
            return other.value
        if isinstance(other, int):
            return self.spec.embed(other)
        return NotImplemented

    def _wrap(self, value: int) -> "FieldElement":
        return FieldElement(self.spec, value)

    def __add__(self, other: Operand) -> "FieldElement":
        b = self._coerce(other)
        if b is NotImplemented:
            return NotImplemented
        return self._wrap(self.spec.add(self.value, b))

    __radd__ = __add__

    def __sub__(self, other: Operand) -> "FieldElement":
        b = self._coerce(other)
        if b is NotImplemented:
            return NotImplemented
        return self._wrap(self.spec.sub(self.value, b))

    def __rsub__(self, other: Operand) -> "FieldElement":
        b = self._coerce(other)
        if b is NotImplemented:
            return NotImplemented
        return self._wrap(self.spec.sub(b, self.value))

    def __mul__(self, other: Operand) -> "FieldElement":
        b = self._coerce(other)
        if b is NotImplemented:
            return NotImplemented
        return self._wrap(self.spec.mul(self.value, b))

    __rmul__ = __mul__

    def __truediv__(self, other: Operand) -> "FieldElement":
        b = self._coerce(other)
        if b is NotImplemented:
            return NotImplemented
        return self._wrap(self.spec.div(self.value, b))

    def __rtruediv__(self, other: Operand) -> "FieldElement":
        b = self._coerce(other)
        if b is NotImplemented:
            return NotImplemented
        return self._wrap(self.spec.div(b, self.value))

    def __neg__(self) -> "FieldElement":
        return self._wrap(self.spec.neg(self.value))

    def __pow__(self, n: int) -> "FieldElement":
        return self._wrap(self.spec.pow(self.value, n))

    def inverse(self) -> "FieldElement":
        return self._wrap(self.spec.inv(self.value))


def arith(a: FieldElement, b: FieldElement, op: str) -> FieldElement:
    """Apply a binary field operation

    Args:
        a: Left operand
        b: Right operand, same field as a
        op: One of 'add', 'sub', 'mul', 'div'

    Returns:
        The resulting field element
    """
    if a.spec != b.spec:
        raise MixedFieldsError(f"Cannot combine elements of {a.spec} and {b.spec}")
    operations = {
        'add': a.spec.add,
        'sub': a.spec.sub,
        'mul': a.spec.mul,
        'div': a.spec.div,
    }
    if op not in operations:
        raise ValueError(f"Unknown operation {op!r}")
    return FieldElement(a.spec, operations[op](a.value, b.value))
