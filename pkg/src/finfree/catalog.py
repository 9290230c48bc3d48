"""A desk-scale catalog of concrete algebras used across the test batteries.

Covers the classical quadratic and cubic number rings, split algebras,
products, both rank-4 biquadratic shapes, and the classical cubic order whose
fiber at 2 splits completely yet admits no single generator mod 2.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .algebra import FiniteFreeAlgebra, biquadratic, diagonal, from_monogenic, product
from .ringkit import GF, MultiPoly, ZZ


def gaussian_integers() -> FiniteFreeAlgebra:
    return from_monogenic(ZZ, [1, 0])  # Y^2 + 1


def sqrt2_ring() -> FiniteFreeAlgebra:
    return from_monogenic(ZZ, [-2, 0])  # Y^2 - 2


def cbrt2_ring() -> FiniteFreeAlgebra:
    return from_monogenic(ZZ, [-2, 0, 0])  # Y^3 - 2


def dual_numbers() -> FiniteFreeAlgebra:
    return from_monogenic(ZZ, [0, 0])  # Y^2


def quartic_ring() -> FiniteFreeAlgebra:
    return from_monogenic(ZZ, [1, 1, 0, 0])  # Y^4 + Y + 1


def quintic_ring() -> FiniteFreeAlgebra:
    return from_monogenic(ZZ, [2, 2, 0, 0, 0])  # Y^5 + 2Y + 2


def split_ring(n: int) -> FiniteFreeAlgebra:
    return diagonal(ZZ, n)


def gaussian_pair() -> FiniteFreeAlgebra:
    return product(from_monogenic(ZZ, [1, 0]), from_monogenic(ZZ, [1, 0]))


def nilpotent_biquadratic() -> FiniteFreeAlgebra:
    return biquadratic(ZZ, "nilpotent")


def radicial_biquadratic() -> FiniteFreeAlgebra:
    return biquadratic(GF(2), "radicial", base_vars=("x", "y"))


def dedekind_order() -> FiniteFreeAlgebra:
    """The cubic order ZZ[theta, (theta^2+theta)/2] with theta^3 = theta^2 + 2 theta + 8.

    Its fiber at 2 is split (three copies of GF(2)) but has no single
    generator over GF(2); the ring is nevertheless locally simple.
    """
    def c(n):
        return MultiPoly.from_int(ZZ, (), n)

    z, o = c(0), c(1)
    table = [
        [[o, z, z], [z, o, z], [z, z, o]],
        [[z, o, z], [c(0), c(-1), c(2)], [c(4), c(0), c(2)]],
        [[z, z, o], [c(4), c(0), c(2)], [c(6), c(2), c(3)]],
    ]
    return FiniteFreeAlgebra(ZZ, (), 3, table, [o, z, z], kind="order")


def symbolic_cubic() -> FiniteFreeAlgebra:
    """ZZ[a0,a1,a2][Y]/(Y^3 + a2 Y^2 + a1 Y + a0), the generic cubic presentation."""
    av = ("a0", "a1", "a2")
    coeffs = [MultiPoly.var(ZZ, av, n) for n in av]
    return from_monogenic(ZZ, coeffs, base_vars=av)


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    build: Callable[[], FiniteFreeAlgebra]
    locally_simple: bool  # the known ground truth
    monogenic: bool
    disc_zero: bool = False
    extra_primes: tuple[int, ...] = ()
    field_base: bool = False  # base is a finite field (possibly with variables)


CATALOG: tuple[CatalogEntry, ...] = (
    CatalogEntry("gaussian-integers", gaussian_integers, True, True),
    CatalogEntry("sqrt2-ring", sqrt2_ring, True, True),
    CatalogEntry("cbrt2-ring", cbrt2_ring, True, True),
    CatalogEntry("split-rank-2", lambda: split_ring(2), True, False),
    CatalogEntry("split-rank-3", lambda: split_ring(3), True, False),
    CatalogEntry("split-rank-4", lambda: split_ring(4), True, False),
    CatalogEntry("gaussian-pair", gaussian_pair, True, False),
    CatalogEntry("nilpotent-biquadratic", nilpotent_biquadratic, False, False,
                 disc_zero=True, extra_primes=(2, 3)),
    CatalogEntry("radicial-biquadratic", radicial_biquadratic, False, False,
                 field_base=True),
    CatalogEntry("dedekind-order", dedekind_order, True, False),
    CatalogEntry("dual-numbers", dual_numbers, True, True,
                 disc_zero=True, extra_primes=(2, 3, 5)),
    CatalogEntry("quartic-ring", quartic_ring, True, True),
    CatalogEntry("quintic-ring", quintic_ring, True, True),
)
