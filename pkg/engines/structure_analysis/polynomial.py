"""Integer polynomials in one variable t, exact arithmetic."""

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Sequence, Tuple, Union


@dataclass(frozen=True)
class IntegerPolynomial:
    """Coefficients with the constant term first, trailing zeros trimmed"""

    coefficients: Tuple[int, ...] = ()

    def __post_init__(self):
        terms = [int(c) for c in self.coefficients]
        while terms and terms[-1] == 0:
            terms.pop()
        object.__setattr__(self, "coefficients", tuple(terms))

    @classmethod
    def monomial(cls, exponent: int, coefficient: int = 1) -> "IntegerPolynomial":
        return cls((0,) * exponent + (coefficient,))

    @classmethod
    def from_roots(cls, roots: Iterable[int]) -> "IntegerPolynomial":
        """∏ (t - r)"""
        result = cls((1,))
        for root in roots:
            result = result * cls((-root, 1))
        return result

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def coefficient(self, exponent: int) -> int:
        return self.coefficients[exponent] if 0 <= exponent < len(self.coefficients) else 0

    def evaluate(self, t: int) -> int:
        value = 0
        for c in reversed(self.coefficients):
            value = value * t + c
        return value

    def __add__(self, other: "IntegerPolynomial") -> "IntegerPolynomial":
        size = max(len(self.coefficients), len(other.coefficients))
        return IntegerPolynomial(tuple(self.coefficient(i) + other.coefficient(i) for i in range(size)))

    def __neg__(self) -> "IntegerPolynomial":
        return IntegerPolynomial(tuple(-c for c in self.coefficients))

    def __sub__(self, other: "IntegerPolynomial") -> "IntegerPolynomial":
        return self + (-other)

    def __mul__(self, other: Union["IntegerPolynomial", int]) -> "IntegerPolynomial":
        if not isinstance(other, IntegerPolynomial):
            return IntegerPolynomial(tuple(c * other for c in self.coefficients))
        if not self.coefficients or not other.coefficients:
            return IntegerPolynomial()
        product = [0] * (len(self.coefficients) + len(other.coefficients) - 1)
        for i, a in enumerate(self.coefficients):
            for j, b in enumerate(other.coefficients):
                product[i + j] += a * b
        return IntegerPolynomial(tuple(product))

    __rmul__ = __mul__

    def format_expanded(self) -> str:
        """e.g. t^3-5t^2+7t-3"""
        if not self.coefficients:
            return "0"
        parts = []
        for exponent in range(self.degree, -1, -1):
            c = self.coefficients[exponent]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            size = abs(c)
            if exponent == 0:
                body = str(size)
            else:
                power = "t" if exponent == 1 else f"t^{exponent}"
                body = power if size == 1 else f"{size}{power}"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        text = ("-" if first_sign == "-" else "") + first_body
        return text + "".join(sign + body for sign, body in parts[1:])

    def __str__(self) -> str:
        return self.format_expanded()


def format_factored(roots: Sequence[int]) -> str:
    """∏ (t - r) as e.g. t*(t-1)^2 or (t-1)^2*(t-3)"""
    if not roots:
        return "1"
    factors = []
    for root, multiplicity in sorted(Counter(roots).items()):
        if root == 0:
            base = "t"
        else:
            base = f"(t-{root})" if root > 0 else f"(t+{-root})"
        factors.append(base if multiplicity == 1 else f"{base}^{multiplicity}")
    return "*".join(factors)
