"""Q/Z-valued linking forms on cyclic groups Z_p and their metabolizers."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd


def mod1(x: Fraction) -> Fraction:
    return x - (x.numerator // x.denominator)


@dataclass(frozen=True)
class CyclicLinkingForm:
    """Linking form on Z_p determined by the self-pairing of a generator."""

    order: int
    self_pairing: Fraction

    def __post_init__(self):
        object.__setattr__(self, "self_pairing", mod1(Fraction(self.self_pairing)))
        if self.order < 1:
            raise ValueError("order must be positive")
        if self.order == 1:
            if self.self_pairing != 0:
                raise ValueError("the form on the trivial group is zero")
        elif self.self_pairing.denominator != self.order:
            raise ValueError(
                f"form with self-pairing {self.self_pairing} on Z_{self.order} is singular"
            )

    def pair(self, a: int, b: int) -> Fraction:
        return mod1(a * b * self.self_pairing)

    def subgroup(self, gen: int) -> frozenset[int]:
        g = gcd(gen, self.order)
        return frozenset(range(0, self.order, g))

    def perp(self, elements) -> frozenset[int]:
        elements = list(elements)
        return frozenset(
            x for x in range(self.order) if all(self.pair(x, y) == 0 for y in elements)
        )

    def is_metabolizer(self, gen: int) -> bool:
        sub = self.subgroup(gen)
        return self.perp(sub) == sub

    def metabolizers(self) -> list[int]:
        """Generators ``d`` (divisors of p) of the self-perpendicular subgroups <d>."""
        p = self.order
        divisors = [d for d in range(1, p + 1) if p % d == 0]
        return [d % p for d in divisors if self.is_metabolizer(d)]


# H_1 of the branched cover Z_n, generated by a meridian with self-linking -4/9
Z_N_FORM = CyclicLinkingForm(9, Fraction(-4, 9))
