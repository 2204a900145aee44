"""Sparse multivariate polynomials with exact coefficients.

A :class:`SparsePoly` is a dict from exponent tuples to nonzero
coefficients together with an ordered variable list and a coefficient
field. Operands with different variable lists are aligned on the union of
their names, so ``x + y`` works without declaring a ring up front.

Monomials are ordered graded-lexicographically (total degree first, then
lexicographic in variable order) for printing and leading terms.
"""

from __future__ import annotations

from fractions import Fraction
from operator import add as _add
from typing import Iterable, Mapping, Sequence

from .fields import QQ, Field, FieldMismatch, NotInvertible, format_rational, inverse


def _grlex_key(exps):
    return (sum(exps), exps)


class SparsePoly:
    """Immutable multivariate polynomial.

    >>> x, y = SparsePoly.gens("x y")
    >>> (x + y) * (x - y)
    x^2 - y^2
    """

    __slots__ = ("vars", "terms", "field")

    def __init__(self, variables: Iterable[str] = (), terms: Mapping | None = None,
                 field: Field = QQ, *, check: bool = True):
        self.vars = tuple(variables)
        self.field = field
        if terms is None:
            self.terms = {}
        elif check:
            n = len(self.vars)
            clean = {}
            for e, c in terms.items():
                e = tuple(e)
                if len(e) != n:
                    raise ValueError(f"exponent {e} does not match {n} variables")
                if any(k < 0 for k in e):
                    raise ValueError(f"negative exponent in {e}")
                c = field(c)
                if c != 0:
                    clean[e] = c
            self.terms = clean
        else:
            self.terms = terms

    # -- constructors -------------------------------------------------
    @classmethod
    def const(cls, c, variables: Iterable[str] = (), field: Field = QQ) -> "SparsePoly":
        variables = tuple(variables)
        return cls(variables, {(0,) * len(variables): c}, field)

    @classmethod
    def zero(cls, variables: Iterable[str] = (), field: Field = QQ) -> "SparsePoly":
        return cls(variables, {}, field, check=False)

    @classmethod
    def var(cls, name: str, variables: Iterable[str] | None = None,
            field: Field = QQ) -> "SparsePoly":
        variables = tuple(variables) if variables is not None else (name,)
        if name not in variables:
            raise ValueError(f"{name} not among {variables}")
        exps = tuple(1 if v == name else 0 for v in variables)
        return cls(variables, {exps: field.one}, field, check=False)

    @classmethod
    def gens(cls, names: str | Sequence[str], field: Field = QQ) -> list["SparsePoly"]:
        if isinstance(names, str):
            names = names.replace(",", " ").split()
        names = tuple(names)
        return [cls.var(n, names, field) for n in names]

    # -- structure ----------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def total_degree(self) -> int:
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def degree(self, name: str) -> int:
        if name not in self.vars:
            return 0 if self.terms else -1
        i = self.vars.index(name)
        return max((e[i] for e in self.terms), default=-1)

    def degree_in(self, names: Iterable[str]) -> set[int]:
        """Set of total degrees of the monomials restricted to ``names``."""
        idx = [i for i, v in enumerate(self.vars) if v in set(names)]
        return {sum(e[i] for i in idx) for e in self.terms}

    def used_vars(self) -> tuple[str, ...]:
        return tuple(v for i, v in enumerate(self.vars) if any(e[i] for e in self.terms))

    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    def constant_term(self):
        for e, c in self.terms.items():
            if not any(e):
                return c
        return self.field.zero

    def coefficient(self, monomial: Mapping[str, int]):
        """Coefficient of the monomial given as ``{name: exponent}``."""
        for name in monomial:
            if name not in self.vars and monomial[name]:
                return self.field.zero
        e = tuple(monomial.get(v, 0) for v in self.vars)
        return self.terms.get(e, self.field.zero)

    def sorted_terms(self) -> list[tuple[tuple[int, ...], object]]:
        """Terms in descending graded-lex order."""
        return sorted(self.terms.items(), key=lambda t: _grlex_key(t[0]), reverse=True)

    def leading_term(self):
        e = max(self.terms, key=_grlex_key)
        return e, self.terms[e]

    # -- variable management -------------------------------------------
    def with_vars(self, variables: Sequence[str]) -> "SparsePoly":
        """Re-express over ``variables`` (a superset of the used variables)."""
        variables = tuple(variables)
        if variables == self.vars:
            return self
        pos = {v: i for i, v in enumerate(variables)}
        n = len(variables)
        moves = []
        for i, v in enumerate(self.vars):
            if v in pos:
                moves.append((i, pos[v]))
            elif any(e[i] for e in self.terms):
                raise ValueError(f"variable {v} is used but absent from {variables}")
        terms = {}
        for e, c in self.terms.items():
            ne = [0] * n
            for i, j in moves:
                ne[j] = e[i]
            terms[tuple(ne)] = c
        return SparsePoly(variables, terms, self.field, check=False)

    def drop_unused(self) -> "SparsePoly":
        return self.with_vars(self.used_vars())

    def rename(self, mapping: Mapping[str, str]) -> "SparsePoly":
        new = tuple(mapping.get(v, v) for v in self.vars)
        if len(set(new)) != len(new):
            raise ValueError("renaming collapses variables")
        return SparsePoly(new, self.terms, self.field, check=False)

    def _aligned(self, other: "SparsePoly"):
        if self.field is not other.field and self.field != other.field:
            raise FieldMismatch(f"{self.field} vs {other.field}")
        if self.vars == other.vars:
            return self.vars, self.terms, other.terms
        union = self.vars + tuple(v for v in other.vars if v not in self.vars)
        return union, self.with_vars(union).terms, other.with_vars(union).terms

    def _lift(self, x) -> "SparsePoly | None":
        if isinstance(x, SparsePoly):
            return x
        try:
            c = self.field(x)
        except (FieldMismatch, TypeError, ValueError):
            return None
        return SparsePoly(self.vars, {(0,) * len(self.vars): c} if c != 0 else {},
                          self.field, check=False)

    # -- arithmetic -----------------------------------------------------
    def __add__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        variables, a, b = self._aligned(other)
        if len(a) < len(b):
            a, b = b, a
        out = dict(a)
        for e, c in b.items():
            s = out.get(e)
            if s is None:
                out[e] = c
            else:
                s = s + c
                if s == 0:
                    del out[e]
                else:
                    out[e] = s
        return SparsePoly(variables, out, self.field, check=False)

    __radd__ = __add__

    def __neg__(self):
        return SparsePoly(self.vars, {e: -c for e, c in self.terms.items()}, self.field,
                          check=False)

    def __sub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def _scale(self, c) -> "SparsePoly":
        if c == 0:
            return SparsePoly(self.vars, {}, self.field, check=False)
        return SparsePoly(self.vars, {e: v * c for e, v in self.terms.items()}, self.field,
                          check=False)

    def __mul__(self, other):
        if not isinstance(other, SparsePoly):
            try:
                c = self.field(other)
            except (FieldMismatch, TypeError, ValueError):
                return NotImplemented
            return self._scale(c)
        variables, a, b = self._aligned(other)
        if not a or not b:
            return SparsePoly(variables, {}, self.field, check=False)
        if len(a) < len(b):
            a, b = b, a
        out: dict = {}
        get = out.get
        for eb, cb in b.items():
            for ea, ca in a.items():
                e = tuple(map(_add, ea, eb))
                s = get(e)
                out[e] = ca * cb if s is None else s + ca * cb
        out = {e: c for e, c in out.items() if c != 0}
        return SparsePoly(variables, out, self.field, check=False)

    def __rmul__(self, other):
        return self.__mul__(other)

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = SparsePoly.const(self.field.one, self.vars, self.field)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __truediv__(self, other):
        if isinstance(other, SparsePoly):
            if other.is_constant() and other.terms:
                return self._scale(inverse(other.constant_term()))
            return self.divexact(other)
        c = self.field(other)
        if c == 0:
            raise NotInvertible("polynomial division by zero")
        return self._scale(inverse(c))

    def divexact(self, divisor: "SparsePoly") -> "SparsePoly":
        """Exact quotient; raises ``ValueError`` when ``divisor`` does not divide."""
        if not divisor.terms:
            raise NotInvertible("polynomial division by zero")
        variables, r_terms, d_terms = self._aligned(divisor)
        d = SparsePoly(variables, d_terms, self.field, check=False)
        r = SparsePoly(variables, dict(r_terms), self.field, check=False)
        ld, lc = d.leading_term()
        lc_inv = inverse(lc)
        q: dict = {}
        while r.terms:
            lr, cr = r.leading_term()
            diff = tuple(a - b for a, b in zip(lr, ld))
            if any(k < 0 for k in diff):
                raise ValueError("polynomial division is not exact")
            coef = cr * lc_inv
            q[diff] = coef
            mono = SparsePoly(variables, {diff: coef}, self.field, check=False)
            r = r - mono * d
        return SparsePoly(variables, q, self.field, check=False)

    # -- comparison -------------------------------------------------------
    def __eq__(self, other):
        other = self._lift(other) if not isinstance(other, SparsePoly) else other
        if other is None:
            return NotImplemented
        try:
            _, a, b = self._aligned(other)
        except FieldMismatch:
            return False
        if len(a) != len(b):
            return False
        for e, c in a.items():
            d = b.get(e)
            if d is None or not (c == d):
                return False
        return True

    def __ne__(self, other):
        r = self.__eq__(other)
        return r if r is NotImplemented else not r

    __hash__ = None

    # -- calculus and substitution ----------------------------------------
    def diff(self, name: str) -> "SparsePoly":
        if name not in self.vars:
            return SparsePoly(self.vars, {}, self.field, check=False)
        i = self.vars.index(name)
        out = {}
        for e, c in self.terms.items():
            if e[i]:
                ne = e[:i] + (e[i] - 1,) + e[i + 1:]
                v = c * e[i]
                if v != 0:
                    out[ne] = v
        return SparsePoly(self.vars, out, self.field, check=False)

    def __call__(self, *point):
        if len(point) == 1 and isinstance(point[0], (list, tuple)):
            point = point[0]
        return self.eval(point)

    def eval(self, point):
        """Evaluate at ``point`` (sequence in variable order, or name mapping).

        Values may live in the coefficient field or in any ring the
        coefficients multiply into (extension elements, polynomials, ...).
        """
        if isinstance(point, Mapping):
            missing = [v for v in self.used_vars() if v not in point]
            if missing:
                raise ValueError(f"no value for {missing}")
            values = [point.get(v, 0) for v in self.vars]
        else:
            values = list(point)
            if len(values) != len(self.vars):
                raise ValueError(
                    f"arity mismatch: {len(values)} values for {len(self.vars)} variables")
        powers: dict = {}
        acc = None
        for e, c in self.terms.items():
            term = c
            for i, k in enumerate(e):
                if k:
                    key = (i, k)
                    pw = powers.get(key)
                    if pw is None:
                        pw = values[i] ** k
                        powers[key] = pw
                    term = term * pw
            acc = term if acc is None else acc + term
        if acc is None:
            return values[0] * 0 if values else self.field.zero
        return acc

    def substitute(self, mapping: Mapping[str, object]) -> "SparsePoly":
        """Replace variables by polynomials or scalars; others stay symbolic."""
        keep = [v for v in self.vars if v not in mapping]
        values = []
        for v in self.vars:
            if v in mapping:
                val = mapping[v]
                if not isinstance(val, SparsePoly):
                    val = SparsePoly.const(val, (), self.field)
                values.append(val)
            else:
                values.append(SparsePoly.var(v, (v,), self.field))
        if not self.terms:
            return SparsePoly.zero(keep, self.field)
        out = SparsePoly.zero(keep, self.field)
        result = self.eval(values)
        if not isinstance(result, SparsePoly):
            result = SparsePoly.const(result, (), self.field)
        return out + result

    def eval_mod(self, point: Sequence[int], p: int) -> int:
        """Evaluate a rational polynomial at an integer point modulo ``p``."""
        if len(point) != len(self.vars):
            raise ValueError("arity mismatch")
        acc = 0
        for e, c in self.terms.items():
            if isinstance(c, int):
                t = c % p
            else:
                c = Fraction(c)
                if c.denominator % p == 0:
                    raise NotInvertible(f"coefficient {c} not defined mod {p}")
                t = c.numerator * pow(c.denominator, -1, p) % p
            for x, k in zip(point, e):
                if k:
                    t = t * pow(x, k, p) % p
            acc += t
        return acc % p

    def map_coeffs(self, fn, field: Field | None = None) -> "SparsePoly":
        field = field or self.field
        return SparsePoly(self.vars, {e: fn(c) for e, c in self.terms.items()}, field)

    def change_field(self, field: Field) -> "SparsePoly":
        return self.map_coeffs(field, field)

    def univariate_coeffs(self, name: str | None = None) -> list:
        """Dense coefficient list (low degree first) of a univariate polynomial."""
        used = self.used_vars()
        if name is None:
            if len(used) > 1:
                raise ValueError("polynomial is not univariate")
            name = used[0] if used else (self.vars[0] if self.vars else "x")
        elif any(v != name for v in used):
            raise ValueError(f"polynomial involves variables other than {name}")
        if not self.terms:
            return []
        i = self.vars.index(name) if name in self.vars else None
        out = [self.field.zero] * (self.degree(name) + 1)
        for e, c in self.terms.items():
            out[e[i] if i is not None else 0] = c
        return out

    @classmethod
    def from_univariate(cls, coeffs: Sequence, name: str = "x", field: Field = QQ) -> "SparsePoly":
        return cls((name,), {(k,): c for k, c in enumerate(coeffs)}, field)

    # -- printing -----------------------------------------------------------
    def _coeff_str(self, c) -> str:
        if isinstance(c, (int, Fraction)):
            return format_rational(c)
        return self.field.format(c)

    def __str__(self):
        return self._render(latex=False)

    __repr__ = __str__

    def to_latex(self) -> str:
        return self._render(latex=True)

    def _render(self, latex: bool) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.sorted_terms():
            mono = []
            for v, k in zip(self.vars, e):
                if not k:
                    continue
                name = _latex_name(v) if latex else v
                if k == 1:
                    mono.append(name)
                else:
                    mono.append(f"{name}^{{{k}}}" if latex else f"{name}^{k}")
            cs = self._coeff_str(c)
            neg = cs.startswith("-") and " " not in cs and "+" not in cs
            if neg:
                cs = cs[1:]
            if latex and "/" in cs and " " not in cs:
                num, den = cs.split("/")
                cs = f"\\frac{{{num}}}{{{den}}}"
            if not _is_atomic(cs):
                cs = f"({cs})"
            joiner = " " if latex else "*"
            if mono:
                body = joiner.join(mono) if cs == "1" else joiner.join([cs] + mono)
            else:
                body = cs
            parts.append(("- " if neg else "+ ") + body)
        text = " ".join(parts)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]


def _is_atomic(s: str) -> bool:
    return all(ch.isalnum() or ch in "/\\{}_." for ch in s)


def _latex_name(v: str) -> str:
    head = v.rstrip("0123456789_")
    tail = v[len(head):].strip("_")
    greek = {"alpha", "beta", "gamma", "delta", "theta", "sigma", "omega"}
    if head in greek:
        head = "\\" + head
    return f"{head}_{{{tail}}}" if tail else head


def poly_arith(p: SparsePoly, q: SparsePoly, op: str) -> SparsePoly:
    """Dispatch ``add``/``sub``/``mul`` on two polynomials."""
    if op == "add":
        return p + q
    if op == "sub":
        return p - q
    if op == "mul":
        return p * q
    raise ValueError(f"unknown polynomial operation {op!r}")


def poly_eval(p: SparsePoly, point):
    return p.eval(point)
