import random

import pytest

from dompoly.graphs import Graph


def random_graph(n: int, rng: random.Random, p: float = 0.5) -> Graph:
    """Erdos-Renyi-style graph on n vertices with edge probability p."""
    edges = [
        (u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p
    ]
    return Graph(n, edges)


def expand_from_roots(root_set, lead: int) -> list[float]:
    """Coefficients of lead * x^m * prod (x - z) over the found roots.

    Conjugate pairs are merged into real quadratic factors and factors are
    multiplied in ascending-modulus order; expanding one linear complex
    factor at a time in arbitrary order is itself numerically unstable at
    degree ~60 and would mask how accurate the roots are.
    """
    roots = sorted(root_set.complex_roots(), key=lambda z: (abs(z), z.real, z.imag))
    used = [False] * len(roots)
    factors = []
    for i, z in enumerate(roots):
        if used[i]:
            continue
        used[i] = True
        if abs(z.imag) > 0:
            for j in range(i + 1, len(roots)):
                partner_gap = abs(roots[j] - z.conjugate())
                if not used[j] and partner_gap <= 1e-8 * max(1.0, abs(z)):
                    used[j] = True
                    factors.append([(z * roots[j]).real, -(z + roots[j]).real, 1.0])
                    break
            else:
                factors.append([-z.real, 1.0])
        else:
            factors.append([-z.real, 1.0])
    acc = [float(lead)]
    for f in factors:
        new = [0.0] * (len(acc) + len(f) - 1)
        for ai, a in enumerate(acc):
            for bi, b in enumerate(f):
                new[ai + bi] += a * b
        acc = new
    return [0.0] * root_set.zero_multiplicity + acc


@pytest.fixture
def rng() -> random.Random:
    return random.Random(0xD0117)
