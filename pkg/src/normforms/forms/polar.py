"""Polarization of forms and the radical (nondegeneracy test)."""

from __future__ import annotations

import itertools
from fractions import Fraction

from ..exactalg.matrix import RingMatrix
from ..exactalg.poly import SparsePoly
from .form import Form, factorial


class MultilinearMap:
    """A symmetric ``d``-linear map given as a polynomial in ``d`` variable blocks."""

    def __init__(self, poly: SparsePoly, blocks: list[list[str]], base_vars: tuple[str, ...],
                 params: tuple[str, ...] = ()):
        self.poly = poly
        self.blocks = [list(b) for b in blocks]
        self.base_vars = tuple(base_vars)
        self.params = tuple(params)

    @property
    def arity(self) -> int:
        return len(self.blocks)

    @property
    def dim(self) -> int:
        return len(self.base_vars)

    def evaluate(self, vectors):
        """``theta(v1, ..., vd)`` for ``d`` vectors of length ``n``."""
        if len(vectors) != self.arity or any(len(v) != self.dim for v in vectors):
            raise ValueError("expected d vectors of length n")
        mapping = {}
        for block, vec in zip(self.blocks, vectors):
            mapping.update(zip(block, vec))
        if self.params or any(isinstance(x, SparsePoly) for x in mapping.values()):
            return self.poly.substitute(mapping)
        return self.poly.eval(mapping)

    def is_multilinear(self) -> bool:
        """Every monomial has degree exactly one in each block."""
        return all(self.poly.degree_in(b) <= {1} for b in self.blocks)

    def second_derivatives_vanish(self) -> bool:
        return all(self.poly.diff(v).diff(v).is_zero() for b in self.blocks for v in b)

    def is_symmetric(self) -> bool:
        for k in range(self.arity - 1):
            swap = dict(zip(self.blocks[k], self.blocks[k + 1]))
            swap.update(zip(self.blocks[k + 1], self.blocks[k]))
            if self.poly.rename(swap) != self.poly:
                return False
        return True

    def diagonal(self) -> SparsePoly:
        """``theta(v, ..., v)`` in the base variables."""
        mapping = {}
        for block in self.blocks:
            for name, base in zip(block, self.base_vars):
                mapping[name] = SparsePoly.var(base, (base,), self.poly.field)
        return self.poly.substitute(mapping)

    def __repr__(self):
        return f"MultilinearMap(arity={self.arity}, dim={self.dim}, {self.poly})"


def _blocks(phi: Form) -> list[list[str]]:
    taken = set(phi.poly.vars)
    blocks = []
    for k in range(1, phi.degree + 1):
        block = []
        for v in phi.variables:
            name = f"{v}_{k}"
            while name in taken:
                name += "'"
            taken.add(name)
            block.append(name)
        blocks.append(block)
    return blocks


def _check_char(phi: Form):
    char = phi.field.characteristic
    if char and char <= phi.degree:
        raise ValueError(f"polarization needs characteristic 0 or > {phi.degree}")


def polarize(phi: Form) -> MultilinearMap:
    """Inclusion-exclusion polarization.

    ``theta(v1..vd) = 1/d! * sum over nonempty S of (-1)^(d-|S|) phi(sum_{i in S} vi)``.
    """
    _check_char(phi)
    d = phi.degree
    blocks = _blocks(phi)
    names = tuple(n for b in blocks for n in b) + phi.params
    gens = {n: SparsePoly.var(n, names, phi.field) for n in names}
    total = SparsePoly.zero(names, phi.field)
    for size in range(1, d + 1):
        sign = -1 if (d - size) % 2 else 1
        for S in itertools.combinations(range(d), size):
            vec = []
            for i in range(phi.dim):
                acc = gens[blocks[S[0]][i]]
                for k in S[1:]:
                    acc = acc + gens[blocks[k][i]]
                vec.append(acc)
            val = phi.evaluate(vec)
            total = total + val if sign > 0 else total - val
    theta = total * phi.field(Fraction(1, factorial(d)))
    return MultilinearMap(theta.with_vars(names), blocks, phi.variables, phi.params)


def polarize_by_derivatives(phi: Form) -> MultilinearMap:
    """Independent route: ``1/d! * d^d/dt1..dtd phi(t1 v1 + ... + td vd)``."""
    _check_char(phi)
    d = phi.degree
    blocks = _blocks(phi)
    taken = set(phi.poly.vars) | {n for b in blocks for n in b}
    ts = []
    for k in range(1, d + 1):
        t = f"t{k}"
        while t in taken:
            t += "'"
        taken.add(t)
        ts.append(t)
    names = tuple(n for b in blocks for n in b) + phi.params + tuple(ts)
    gens = {n: SparsePoly.var(n, names, phi.field) for n in names}
    vec = []
    for i in range(phi.dim):
        acc = gens[ts[0]] * gens[blocks[0][i]]
        for k in range(1, d):
            acc = acc + gens[ts[k]] * gens[blocks[k][i]]
        vec.append(acc)
    val = phi.evaluate(vec)
    for t in ts:
        val = val.diff(t)
    keep = tuple(n for n in names if n not in ts)
    theta = val.with_vars(keep) * phi.field(Fraction(1, factorial(d)))
    return MultilinearMap(theta, blocks, phi.variables, phi.params)


def radical(phi: Form, theta: MultilinearMap | None = None) -> list[list]:
    """Basis of ``{v : theta(v, e_i2, ..., e_id) = 0 for all basis tuples}``."""
    if phi.params:
        raise ValueError("radical needs a form without symbolic parameters")
    theta = theta or polarize(phi)
    n, d = phi.dim, phi.degree
    pos = {}
    for k, block in enumerate(theta.blocks):
        for i, name in enumerate(block):
            pos[name] = (k, i)
    idx = [pos[v] for v in theta.poly.vars]
    zero = phi.field.zero
    rows: dict[tuple, list] = {
        ms: [zero] * n for ms in itertools.combinations_with_replacement(range(n), d - 1)}
    for e, c in theta.poly.terms.items():
        first = None
        rest = []
        for (k, i), a in zip(idx, e):
            if not a:
                continue
            if k == 0:
                first = i
            else:
                rest.append((k, i))
        rest.sort()
        key = tuple(i for _, i in rest)
        if first is None or key != tuple(sorted(key)):
            continue
        rows[key][first] = rows[key][first] + c
    M = RingMatrix(list(rows.values()))
    return [[phi.field(c) for c in v] for v in M.nullspace()]


def is_nondegenerate(phi: Form) -> bool:
    return not radical(phi)
