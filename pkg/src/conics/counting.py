"""Conic Counting Module

Exhaustive point counts on affine conics X^2 + aY^2 + b = 0, the trace
equation b^2 - ab + a^2 + a + 1 = +-b describing the neighbours of h, and
the substitutions that turn each branch of that equation into a conic.
Every displayed step is its own function so it can be checked in isolation.
"""

from typing import FrozenSet, Tuple, Union
import logging

from src.errors import VerificationError, WrongCharacteristicError, WrongCongruenceError
from src.field import FieldElement, FieldSpec, is_square
from src.projective import ProjectiveElement, pnormalize

logger = logging.getLogger(__name__)

Scalar = Union[FieldElement, int]


def _el(spec: FieldSpec, value: Scalar) -> FieldElement:
    if isinstance(value, FieldElement):
        return value
    return FieldElement(spec, spec.embed(value))


def count_conic(spec: FieldSpec, a: Scalar, b: Scalar) -> int:
    """Number of affine points (X, Y) on X^2 + aY^2 + b = 0

    Args:
        spec: Field F_q
        a: Nonzero coefficient of Y^2
        b: Constant term

    Returns:
        Exact solution count
    """
    a, b = _el(spec, a), _el(spec, b)
    if a.is_zero():
        raise ValueError("The coefficient of Y^2 must be nonzero")

    count = 0
    for y in spec.elements():
        y = FieldElement(spec, y)
        target = -(a * y * y + b)
        if target.is_zero():
            count += 1
        elif is_square(target):
            count += 2
    return count


def gamma_constant(spec: FieldSpec) -> FieldElement:
    """1 - 3^-2"""
    three = _el(spec, 3)
    return 1 - (three * three).inverse()


def minus_branch_point(spec: FieldSpec, a: Scalar, b: Scalar) -> Tuple[FieldElement, FieldElement]:
    """(X, Y) = (2z, a + 1) with z = b + (1 - a) 2^-1; lies on X^2 + 3Y^2 = 0"""
    a, b = _el(spec, a), _el(spec, b)
    z = b + (1 - a) / 2
    return 2 * z, a + 1


def plus_branch_point(spec: FieldSpec, a: Scalar, b: Scalar) -> Tuple[FieldElement, FieldElement]:
    """(X, Y) = (2z, a + 3^-1) with z = b - (a + 1) 2^-1; lies on X^2 + 3Y^2 + 3gamma = 0"""
    a, b = _el(spec, a), _el(spec, b)
    z = b - (a + 1) / 2
    return 2 * z, a + _el(spec, 3).inverse()


def _require_order3_case(spec: FieldSpec) -> None:
    if spec.p == 3:
        raise WrongCharacteristicError("The trace equation needs p != 3")
    if spec.q % 3 != 2:
        raise WrongCongruenceError(f"The trace equation needs q = 2 mod 3, got q={spec.q}")


def trace_equation_solutions(spec: FieldSpec, sign: int) -> FrozenSet[Tuple[int, int]]:
    """All (a, b) with b != 0 and b^2 - ab + a^2 + a + 1 = sign * b

    The minus branch is exactly {(-1, -1)}, the pair giving h^-1; the plus
    branch has q + 1 pairs, one per point of X^2 + 3Y^2 + 3gamma = 0.
    """
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    _require_order3_case(spec)

    solutions = set()
    for a_value in spec.elements():
        a = FieldElement(spec, a_value)
        for b_value in range(1, spec.q):
            b = FieldElement(spec, b_value)
            if b * b - a * b + a * a + a + 1 == b * sign:
                solutions.add((a_value, b_value))

    minus_one = spec.neg(1)
    three = _el(spec, 3)
    if sign == -1:
        if solutions != {(minus_one, minus_one)}:
            raise VerificationError(f"Minus branch is {sorted(solutions)}, expected only (-1, -1)")
        for a, b in solutions:
            x, y = minus_branch_point(spec, FieldElement(spec, a), FieldElement(spec, b))
            if not (x * x + three * y * y).is_zero():
                raise VerificationError(f"({a}, {b}) does not map onto X^2 + 3Y^2 = 0")
    else:
        if len(solutions) != spec.q + 1:
            raise VerificationError(f"Plus branch has {len(solutions)} pairs, expected {spec.q + 1}")
        gamma = gamma_constant(spec)
        for a, b in solutions:
            x, y = plus_branch_point(spec, FieldElement(spec, a), FieldElement(spec, b))
            if not (x * x + three * y * y + three * gamma).is_zero():
                raise VerificationError(f"({a}, {b}) does not map onto X^2 + 3Y^2 + 3gamma = 0")

    return frozenset(solutions)


def conjugate_h_by_k(spec: FieldSpec, a: Scalar, b: Scalar) -> ProjectiveElement:
    """k h k^-1 for k = [[1, a], [0, b]], as [[a, -b^-1(a^2+a+1)], [b, -1-a]]"""
    a, b = _el(spec, a), _el(spec, b)
    return pnormalize(spec, [[a, -(a * a + a + 1) / b], [b, -1 - a]])


def commutator_with_h(spec: FieldSpec, a: Scalar, b: Scalar) -> ProjectiveElement:
    """k h k^-1 h^-1 as [[-a + b^-1(a^2+a+1), a], [a - b + 1, b]]"""
    a, b = _el(spec, a), _el(spec, b)
    return pnormalize(spec, [[-a + (a * a + a + 1) / b, a], [a - b + 1, b]])


def cayley_trace(spec: FieldSpec, alpha: Scalar) -> FieldElement:
    """Trace of V U V^-1 U^-1 for V = [[1, alpha], [-alpha, 1+alpha]]: 2(alpha+1)(alpha^2+alpha+1)^-1"""
    alpha = _el(spec, alpha)
    return 2 * (alpha + 1) / (alpha * alpha + alpha + 1)


def literal_cayley_trace(spec: FieldSpec, alpha: Scalar, a: Scalar, b: Scalar) -> FieldElement:
    """Trace of the raw product V U V^-1 U^-1 with det(U) = 1

    U = [[a, b-a-1], [b, -1-a]] and V^-1 = (alpha^2+alpha+1)^-1 adj(V).
    """
    alpha, a, b = _el(spec, alpha), _el(spec, a), _el(spec, b)
    scale = (alpha * alpha + alpha + 1).inverse()
    v = [[_el(spec, 1), alpha], [-alpha, 1 + alpha]]
    v_inv = [[(1 + alpha) * scale, -alpha * scale], [alpha * scale, scale]]
    u = [[a, b - a - 1], [b, -1 - a]]
    u_inv = [[-1 - a, -b + a + 1], [-b, a]]

    def mul(x, y):
        return [
            [x[0][0] * y[0][0] + x[0][1] * y[1][0], x[0][0] * y[0][1] + x[0][1] * y[1][1]],
            [x[1][0] * y[0][0] + x[1][1] * y[1][0], x[1][0] * y[0][1] + x[1][1] * y[1][1]],
        ]

    product = mul(mul(mul(v, u), v_inv), u_inv)
    return product[0][0] + product[1][1]
