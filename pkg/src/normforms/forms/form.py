"""Homogeneous forms and the basic constructions on them."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from ..exactalg.fields import QQ, Field
from ..exactalg.poly import SparsePoly


def default_names(n: int, prefix: str = "x") -> list[str]:
    if prefix == "x" and n <= 4:
        return ["x", "y", "z", "w"][:n]
    return [f"{prefix}{i}" for i in range(1, n + 1)]


class Form:
    """A form of degree ``d`` in the variables ``variables``.

    ``params`` are extra symbols allowed in the coefficients (for instance a
    symbolic extension parameter ``c``); homogeneity is only required in
    ``variables``. ``algebra`` optionally records a multiplication under
    which the form composes, and ``origin`` a structural descriptor used by
    the triviality classifier.
    """

    __slots__ = ("poly", "degree", "variables", "params", "algebra", "origin")

    def __init__(self, poly: SparsePoly, degree: int | None = None,
                 variables: Sequence[str] | None = None, params: Sequence[str] = (),
                 algebra=None, origin: dict | None = None):
        params = tuple(params)
        if variables is None:
            variables = tuple(v for v in poly.vars if v not in params)
        variables = tuple(variables)
        if set(variables) & set(params):
            raise ValueError("a name is both a variable and a parameter")
        if not variables:
            raise ValueError("a form needs at least one variable")
        poly = poly.with_vars(variables + params) if poly.terms else \
            SparsePoly.zero(variables + params, poly.field)
        degrees = poly.degree_in(variables)
        if degree is None:
            if len(degrees) != 1:
                raise ValueError(f"polynomial is not homogeneous: degrees {sorted(degrees)}")
            degree = degrees.pop()
        elif degrees and degrees != {degree}:
            raise ValueError(f"polynomial is not homogeneous of degree {degree}")
        if degree < 1:
            raise ValueError("form degree must be positive")
        char = poly.field.characteristic
        if char and char <= degree:
            raise ValueError(f"characteristic {char} does not exceed the degree {degree}")
        self.poly = poly
        self.degree = degree
        self.variables = variables
        self.params = params
        self.algebra = algebra
        self.origin = origin or {"kind": "explicit"}

    @property
    def dim(self) -> int:
        return len(self.variables)

    @property
    def field(self) -> Field:
        return self.poly.field

    @property
    def permits_composition(self) -> bool:
        return self.algebra is not None

    def var_polys(self) -> list[SparsePoly]:
        return [SparsePoly.var(v, self.poly.vars, self.field) for v in self.variables]

    def __call__(self, *values):
        if len(values) == 1 and isinstance(values[0], (list, tuple)):
            values = values[0]
        return self.evaluate(values)

    def evaluate(self, values: Sequence):
        """Value at a point; parameters stay symbolic if present."""
        if len(values) != self.dim:
            raise ValueError(f"expected {self.dim} values, got {len(values)}")
        if not self.params and not any(isinstance(v, SparsePoly) for v in values):
            return self.poly.eval(list(values))
        return self.poly.substitute(dict(zip(self.variables, values)))

    def with_params(self, values: dict) -> "Form":
        """Specialize some parameters to field values."""
        poly = self.poly.substitute(values)
        params = tuple(p for p in self.params if p not in values)
        return Form(poly, self.degree, self.variables, params, self.algebra, self.origin)

    def renamed(self, mapping: dict) -> "Form":
        variables = tuple(mapping.get(v, v) for v in self.variables)
        return Form(self.poly.rename(mapping), self.degree, variables, self.params,
                    self.algebra, self.origin)

    def __eq__(self, other):
        return (isinstance(other, Form) and self.degree == other.degree
                and self.variables == other.variables and self.poly == other.poly)

    __hash__ = None

    def __str__(self):
        return str(self.poly)

    def __repr__(self):
        return f"Form(degree={self.degree}, dim={self.dim}, {self.poly})"


def diagonal_form(coeffs: Sequence, d: int, names: Sequence[str] | None = None,
                  field: Field = QQ) -> Form:
    """``a1*x1^d + ... + an*xn^d``."""
    coeffs = [field(c) for c in coeffs]
    if not coeffs or any(c == 0 for c in coeffs):
        raise ValueError("diagonal coefficients must be nonzero")
    n = len(coeffs)
    names = list(names) if names else default_names(n)
    terms = {}
    for i, c in enumerate(coeffs):
        e = [0] * n
        e[i] = d
        terms[tuple(e)] = c
    algebra = None
    if n == 1 and coeffs[0] == 1:
        from .algebra import AlgebraStructure

        algebra = AlgebraStructure.componentwise(1, field)
    origin = {"kind": "diagonal", "degree": d, "coeffs": [field.format(c) for c in coeffs]}
    return Form(SparsePoly(names, terms, field), d, names, algebra=algebra, origin=origin)


def scale(phi: Form, a) -> Form:
    """The form ``a * phi``."""
    if isinstance(a, SparsePoly):
        if a.is_zero():
            raise ValueError("scale factor must be nonzero")
    elif a == 0:
        raise ValueError("scale factor must be nonzero")
    one = not isinstance(a, SparsePoly) and a == 1
    origin = phi.origin if one else {"kind": "scaled", "base": phi.origin}
    return Form(phi.poly * a, phi.degree, phi.variables, phi.params,
                phi.algebra if one else None, origin)


def power_form(phi: Form, m: int) -> Form:
    """``phi(u)^m``; composition is inherited from ``phi``."""
    if m < 2:
        raise ValueError("power must be at least 2")
    return Form(phi.poly ** m, phi.degree * m, phi.variables, phi.params, phi.algebra,
                {"kind": "power", "exponent": m, "base": phi.origin})


def product_form(phi1: Form, phi2: Form) -> Form:
    """``phi1(u1) * phi2(u2)`` on the direct sum, with fresh names for clashes."""
    taken = set(phi1.variables) | set(phi1.params) | set(phi2.params)
    mapping = {}
    for v in phi2.variables:
        if v in taken:
            k = 2
            while f"{v}_{k}" in taken or f"{v}_{k}" in phi2.variables:
                k += 1
            mapping[v] = f"{v}_{k}"
            taken.add(mapping[v])
        else:
            taken.add(v)
    phi2 = phi2.renamed(mapping) if mapping else phi2
    params = phi1.params + tuple(p for p in phi2.params if p not in phi1.params)
    algebra = None
    if phi1.algebra is not None and phi2.algebra is not None:
        algebra = phi1.algebra.direct_sum(phi2.algebra)
    return Form(phi1.poly * phi2.poly, phi1.degree + phi2.degree,
                phi1.variables + phi2.variables, params, algebra,
                {"kind": "product", "factors": [phi1.origin, phi2.origin]})


def homogeneity_defect(phi: Form, t: str = "t") -> SparsePoly:
    """``phi(t*x) - t^d * phi(x)``; zero for every valid form."""
    while t in phi.poly.vars:
        t += "_"
    tv = SparsePoly.var(t, (t,), phi.field)
    scaled = phi.evaluate([tv * x for x in phi.var_polys()])
    return scaled - phi.poly * tv ** phi.degree


def factorial(n: int) -> int:
    out = 1
    for k in range(2, n + 1):
        out *= k
    return out


def inverse_factorial(n: int, field: Field):
    return field(Fraction(1, factorial(n)))


def determinant_form(k: int, field: Field = QQ, prefix: str = "m") -> Form:
    """``det`` of a generic ``k x k`` matrix, variables in row-major order."""
    from ..exactalg.matrix import RingMatrix
    from .algebra import AlgebraStructure

    names = [f"{prefix}{r}{s}" for r in range(1, k + 1) for s in range(1, k + 1)]
    gens = SparsePoly.gens(names, field)
    M = RingMatrix([gens[r * k:(r + 1) * k] for r in range(k)])
    return Form(M.det(), k, names, algebra=AlgebraStructure.matrices(k, field),
                origin={"kind": "determinant", "degree": k})


def scalar_times_form(phi0: Form, scalar: str = "a") -> Form:
    """``phi(a + u) = a * phi0(u)`` of degree ``deg(phi0) + 1``."""
    from .algebra import AlgebraStructure

    if scalar in phi0.poly.vars:
        raise ValueError(f"name {scalar!r} already used by the form")
    names = (scalar,) + phi0.variables
    a = SparsePoly.var(scalar, (scalar,), phi0.field)
    algebra = None
    if phi0.algebra is not None:
        algebra = AlgebraStructure.componentwise(1, phi0.field).direct_sum(phi0.algebra)
    d = phi0.degree + 1
    return Form(phi0.poly * a, d, names, phi0.params, algebra,
                {"kind": "scalar-times-form", "degree": d,
                 "characteristic": phi0.field.characteristic, "base": phi0.origin})
