import random

import pytest

from finfree.ringkit import GF, ZZ, MultiPoly


@pytest.fixture
def rng():
    return random.Random(20260810)


def random_multipoly(rng, domain, variables, max_terms=4, max_deg=3, coeff_range=6):
    terms = {}
    for _ in range(rng.randint(0, max_terms)):
        exp = tuple(rng.randint(0, max_deg) for _ in variables)
        if domain == ZZ:
            c = rng.randint(-coeff_range, coeff_range)
        else:
            c = domain.from_int(rng.randint(0, coeff_range))
        terms[exp] = domain.add(terms.get(exp, domain.zero()), c if domain != ZZ else c)
    return MultiPoly(domain, variables, {e: c for e, c in terms.items() if not domain.is_zero(c)})
