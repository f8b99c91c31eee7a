"""Closed forms and composition rules for domination polynomials.

Everything here is computed by direct expansion in exact integer arithmetic;
floating point never enters.  The composition rules take the operand
polynomials together with the operand orders, and refuse order/degree
mismatches (the degree of a domination polynomial always equals the order of
the graph, since the full vertex set dominates).
"""

from __future__ import annotations

import operator

from .enumeration import domination_polynomial
from .graphs import FamilySpec, build_family
from .polynomials import Poly, binomial_power

X = Poly.X


def poly_complete(n: int) -> Poly:
    """Domination polynomial of the complete graph: (1+x)**n - 1."""
    if n < 1:
        raise ValueError("complete graph closed form needs n >= 1")
    return binomial_power(n) - 1


def poly_join(dg: Poly, n: int, dh: Poly, m: int) -> Poly:
    """Domination polynomial of the join from the operands' polynomials.

    ((1+x)**n - 1) * ((1+x)**m - 1) + dg + dh, for operands of order n and m.
    """
    n, m = operator.index(n), operator.index(m)
    if n < 1 or m < 1:
        raise ValueError("join closed form needs nonempty operands")
    if dg.degree != n or dh.degree != m:
        raise ValueError(
            f"operand degrees ({dg.degree}, {dh.degree}) must equal orders ({n}, {m})"
        )
    return (binomial_power(n) - 1) * (binomial_power(m) - 1) + dg + dh


def poly_corona(n: int, dh: Poly, m: int) -> Poly:
    """Domination polynomial of g∘h: (x*(1+x)**m + dh)**n.

    Depends on g only through its order n; the edge set of g is irrelevant.
    """
    n, m = operator.index(n), operator.index(m)
    if n < 1 or m < 1:
        raise ValueError("corona closed form needs nonempty operands")
    if dh.degree != m:
        raise ValueError(f"operand degree {dh.degree} must equal order {m}")
    return (X * binomial_power(m) + dh) ** n


def poly_union(dg: Poly, dh: Poly) -> Poly:
    """Domination polynomial of a disjoint union: the product of the parts."""
    return dg * dh


def poly_friendship(n: int) -> Poly:
    """Friendship graph (n triangles on a common vertex): (2x+x^2)^n + x(1+x)^(2n)."""
    if n < 1:
        raise ValueError("friendship index must be at least 1")
    return (2 * X + X**2) ** n + X * binomial_power(2 * n)


def poly_cocktail(n: int) -> Poly:
    """Cocktail party graph K_{2n} minus a perfect matching: (1+x)^(2n) - (1+2nx)."""
    if n < 1:
        raise ValueError("cocktail party index must be at least 1")
    return binomial_power(2 * n) - Poly((1, 2 * n))


def poly_complement_friendship(n: int) -> Poly:
    """Complement of the friendship graph: x * ((1+x)^(2n) - (1+2nx))."""
    return X * poly_cocktail(n)


def poly_book(n: int) -> Poly:
    """Book graph (n 4-cycles on a common edge): (x^2+2x)^n (2x+1) + x^2 (x+1)^(2n) - 2x^n."""
    if n < 1:
        raise ValueError("book index must be at least 1")
    return (
        (X**2 + 2 * X) ** n * Poly((1, 2))
        + X**2 * binomial_power(2 * n)
        - 2 * X**n
    )


_H_EVEN_FACTOR = Poly((0, 2, 6, 4, 1))  # x^4 + 4x^3 + 6x^2 + 2x
_H_ODD_FACTOR = Poly((0, 1, 3, 1))  # x^3 + 3x^2 + x


def poly_H(n: int) -> Poly:
    """Domination polynomial of the n-th H-family graph.

    (x^4+4x^3+6x^2+2x)^k for n = 2k, and (x^3+3x^2+x) times that for n = 2k+1.
    """
    if n < 1:
        raise ValueError("H-family index must be at least 1")
    k, odd = divmod(n, 2)
    p = _H_EVEN_FACTOR**k
    return _H_ODD_FACTOR * p if odd else p


def order_of_H(n: int) -> int:
    """Vertex count of the n-th H-family graph: 4k for n=2k, 4k+3 for n=2k+1."""
    if n < 1:
        raise ValueError("H-family index must be at least 1")
    k, odd = divmod(n, 2)
    return 4 * k + 3 if odd else 4 * k


def cg_family_factor(kind: str, *params: int) -> Poly:
    """Base factor x*(1+x)**m + D(H) for the iterated-corona families G∘H.

    Raising the factor to the order of G gives the corona polynomial, so the
    whole iterated family is generated by powers of this one polynomial.

    kind "K": H = K_order, order must be even.
    kind "S": H = S_{k,n-k} (a k-clique plus n-k vertices joined to it),
              n must be odd; its polynomial comes from the enumerator.
    kind "B2": H = the two-page book graph; polynomial from the enumerator.
    """
    if kind == "K":
        (order,) = params
        if order < 2 or order % 2:
            raise ValueError(f"kind K needs an even clique order >= 2, got {order}")
        return X * binomial_power(order) + poly_complete(order)
    if kind == "S":
        k, n = params
        if n % 2 == 0:
            raise ValueError(f"kind S needs odd order n, got {n}")
        dh = domination_polynomial(build_family(FamilySpec("k_star", (k, n))))
        return X * binomial_power(n) + dh
    if kind == "B2":
        if params:
            raise ValueError("kind B2 takes no parameters")
        dh = domination_polynomial(build_family(FamilySpec("book", (2,))))
        return X * binomial_power(6) + dh
    raise ValueError(f"unknown factor kind {kind!r} (expected K, S, or B2)")


#: Families whose polynomial has a closed form, keyed by family name.
_CLOSED_FORMS = {
    "complete": poly_complete,
    "friendship": poly_friendship,
    "complement_friendship": poly_complement_friendship,
    "cocktail_party": poly_cocktail,
    "book": poly_book,
    "h_witness": poly_H,
}


def closed_form(spec: FamilySpec) -> Poly | None:
    """Closed-form polynomial for the family instance, or None if it has none.

    Degenerate indices (complete:0, the empty graph) also return None so the
    caller can fall back to enumeration.
    """
    fn = _CLOSED_FORMS.get(spec.name)
    if fn is None or any(p < 1 for p in spec.params):
        return None
    return fn(*spec.params)
