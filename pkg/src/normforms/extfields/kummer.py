"""Norms from a quadratic extension through ``x^d = c`` and ``x^d = b*x + c``.

Setting: ``K = F(s)`` with ``s^2 = e`` and ``sigma: s -> -s``; ``z_i = u_i + v_i s``.
For the extension ``F(alpha)`` with ``alpha^d = b*alpha + c`` (``b = 0`` is
the pure case) the claim checked here is

    N_{K/F}( phi_K(z_1, ..., z_d) ) = phi(vector(A_0, ..., A_{2d-2}))

where ``phi`` is the norm form of ``F(alpha)/F`` and the ``A_i`` are the
sigma-invariant sums of products ``z_i sigma(z_j)``:

* ``A_{2k}   = sum_{i+j = k+2}   z_i sigma(z_j)``  for ``0 <= k <= d-1``
* ``A_{2k+1} = sum_{i+j = k+d+2} z_i sigma(z_j)``  for ``0 <= k <= d-2``

The left side is computed independently as ``w * sigma(w)`` with
``w = det rho(z)`` over ``K``; the right side applies the symbolic norm form.
"""

from __future__ import annotations

import hashlib
from functools import lru_cache

from ..exactalg.ext import QElem, QuotientRing, quadratic_ring
from ..exactalg.fields import GF
from ..exactalg.identity import (DEFAULT_PRIME, DEFAULT_TRIALS, blackbox_identity_test,
                                 identity_test)
from ..exactalg.poly import SparsePoly
from ..forms.form import Form
from ..report import VerifyReport
from .norms import kummer_extension, norm_form


class SigmaInvariantError(ArithmeticError):
    """An ``A_i`` still involves ``s``; never expected from a correct build."""


def context_names(d: int, with_b: bool) -> list[str]:
    names = ["c", "e"] + [f"u{i}" for i in range(1, d + 1)] + [f"v{i}" for i in range(1, d + 1)]
    return names + (["b"] if with_b else [])


class QuadraticContext:
    """``K = R[s]/(s^2 - e)`` over a coefficient ring ``R`` holding c, e, u, v, b.

    ``values`` maps each name to an element of ``R``: polynomial generators
    for symbolic work or ``ModInt`` values at a sample point.
    """

    def __init__(self, d: int, values: dict):
        if d < 2:
            raise ValueError("degree must be at least 2")
        self.d = d
        self.values = values
        self.c = values["c"]
        self.b = values.get("b", self.c * 0)
        self.K = quadratic_ring(values["e"], "s")
        self.z = [self.K.element([values[f"u{i}"], values[f"v{i}"]]) for i in range(1, d + 1)]

    @classmethod
    def symbolic(cls, d: int, b="symbolic") -> "QuadraticContext":
        names = context_names(d, b == "symbolic")
        gens = dict(zip(names, SparsePoly.gens(names)))
        if b != "symbolic" and b is not None:
            gens["b"] = SparsePoly.const(b, tuple(names))
        return cls(d, gens)

    def sigma(self, x: QElem) -> QElem:
        return self.K.conj(x)

    def _invariant(self, x: QElem, label: str):
        if x.coords[1]:
            raise SigmaInvariantError(f"{label} is not sigma-invariant: {x}")
        return x.coords[0]

    def a_list(self) -> list:
        """``[A_0, A_1, ..., A_{2d-2}]`` as elements of the coefficient ring."""
        d, z = self.d, self.z
        sz = [self.sigma(x) for x in z]
        out = [None] * (2 * d - 1)
        for k in range(d):
            acc = self.K.zero
            for i in range(1, k + 2):
                acc = acc + z[i - 1] * sz[k + 1 - i]
            out[2 * k] = self._invariant(acc, f"A_{2 * k}")
        for k in range(d - 1):
            acc = self.K.zero
            for i in range(k + 2, d + 1):
                acc = acc + z[i - 1] * sz[d + k + 1 - i]
            out[2 * k + 1] = self._invariant(acc, f"A_{2 * k + 1}")
        return out

    def kummer_vector(self) -> list:
        """``(A_0 + cA_1, A_2 + cA_3, ..., A_{2d-4} + cA_{2d-3}, A_{2d-2})``."""
        A, c, d = self.a_list(), self.c, self.d
        return [A[2 * k] + c * A[2 * k + 1] for k in range(d - 1)] + [A[2 * d - 2]]

    def trinomial_vector(self) -> list:
        """Entry ``k`` is ``A_2k + cA_2k+1 + bA_2k-1`` with the end terms truncated."""
        A, b, c, d = self.a_list(), self.b, self.c, self.d
        vec = [A[0] + c * A[1]]
        for k in range(1, d - 1):
            vec.append(A[2 * k] + c * A[2 * k + 1] + b * A[2 * k - 1])
        vec.append(A[2 * d - 2] + b * A[2 * d - 3])
        return vec

    def extension_over_k(self) -> QuotientRing:
        """``K[alpha]/(alpha^d - b alpha - c)``."""
        K = self.K
        coeffs = [K.embed(-self.c), K.embed(-self.b)] + [K.zero] * (self.d - 2) + [K.one]
        return QuotientRing(coeffs, name="alpha", base=K)

    def lhs(self):
        """``N_{K/F}(N_{K(alpha)/K}(z))`` as ``w * sigma(w)``."""
        L = self.extension_over_k()
        w = L.regular_rep(QElem(self.z, L)).det()
        return self._invariant(w * self.sigma(w), "w*sigma(w)")


@lru_cache(maxsize=None)
def _symbolic_norm_form(d: int, trinomial: bool) -> Form:
    E = kummer_extension(d, "c", "b" if trinomial else None)
    return norm_form(E, prefix="x")


def _apply_norm_form(d: int, trinomial: bool, vec, ctx: QuadraticContext):
    phi = _symbolic_norm_form(d, trinomial)
    mapping = dict(zip(phi.variables, vec))
    mapping["c"] = ctx.c
    if trinomial:
        mapping["b"] = ctx.b
    if isinstance(ctx.c, SparsePoly):
        return phi.poly.substitute(mapping)
    return phi.poly.eval(mapping)


def digest(p) -> str:
    text = str(p.drop_unused()) if isinstance(p, SparsePoly) else str(p)
    return hashlib.sha256(text.encode()).hexdigest()[:16]


def degree_bound(d: int) -> int:
    """Total-degree bound for ``lhs - rhs`` in all context variables."""
    return 6 * d


def _verify(d: int, trinomial: bool, mode: str, b, prime: int, trials: int, seed: int,
            identity: str, anchors: list) -> VerifyReport:
    if d < 2:
        raise ValueError("degree must be at least 2")
    if mode == "auto":
        mode = "exact" if d <= 3 else "probabilistic"
    params = {"d": d, "minpoly": "x^d - b*x - c" if trinomial else "x^d - c"}
    if trinomial:
        params["b"] = "symbolic" if b == "symbolic" else b
    symbolic_b = trinomial and b == "symbolic"

    def vector(ctx):
        return ctx.trinomial_vector() if trinomial else ctx.kummer_vector()

    if mode == "exact":
        ctx = QuadraticContext.symbolic(d, b if trinomial else None)
        lhs = ctx.lhs()
        rhs = _apply_norm_form(d, trinomial, vector(ctx), ctx)
        if symbolic_b is False:
            lhs, rhs = lhs.drop_unused(), rhs.drop_unused()
        rep = identity_test(lhs, rhs, "exact", identity=identity)
        rep.anchors = anchors
        rep.parameters.update(params)
        rep.witness["lhs_digest"] = digest(lhs)
        rep.witness["lhs_terms"] = len(lhs)
        return rep
    if mode != "probabilistic":
        raise ValueError(f"unknown mode {mode!r}")
    names = context_names(d, symbolic_b)
    F = GF(prime)
    b_value = None if symbolic_b or not trinomial else F(b)

    def sampler(rng, F):
        pt = {n: F(rng.randrange(prime)) for n in names}
        if b_value is not None:
            pt["b"] = b_value
        return pt

    cache: dict = {}

    def evaluate(point):
        key = tuple(sorted((k, int(v)) for k, v in point.items()))
        if key not in cache:
            ctx = QuadraticContext(d, dict(point))
            cache[key] = (ctx.lhs(), _apply_norm_form(d, trinomial, vector(ctx), ctx))
        return cache[key]

    rep = blackbox_identity_test(lambda p: evaluate(p)[0], lambda p: evaluate(p)[1], names,
                                 degree_bound(d), prime=prime, trials=trials, seed=seed,
                                 identity=identity, sampler=sampler)
    rep.anchors = anchors
    rep.parameters.update(params)
    rep.witness["evaluations"] = [int(v[0]) for v in cache.values()]
    return rep


KUMMER_ANCHORS = ["norm through a quadratic extension for alpha^d = c",
                  "A_i list of sigma-invariant sums"]
TRINOMIAL_ANCHORS = ["norm through a quadratic extension for alpha^d = b*alpha + c",
                     "shifted vector A_2k + cA_2k+1 + bA_2k-1"]


def verify_kummer_norm_identity(d: int, mode: str = "auto", *, prime: int = DEFAULT_PRIME,
                                trials: int = DEFAULT_TRIALS, seed: int = 0) -> VerifyReport:
    """Check the ``alpha^d = c`` identity in ``Q[c, e, u, v]``."""
    return _verify(d, False, mode, None, prime, trials, seed, "kummer-norm-identity",
                   KUMMER_ANCHORS)


def verify_trinomial_norm_identity(d: int, mode: str = "auto", *, b="symbolic",
                                   prime: int = DEFAULT_PRIME, trials: int = DEFAULT_TRIALS,
                                   seed: int = 0) -> VerifyReport:
    """Check the ``alpha^d = b*alpha + c`` identity; ``b`` may be fixed to a number."""
    return _verify(d, True, mode, b, prime, trials, seed, "trinomial-norm-identity",
                   TRINOMIAL_ANCHORS)


def kummer_vector(d: int, context: QuadraticContext | None = None) -> list:
    return (context or QuadraticContext.symbolic(d, None)).kummer_vector()


def trinomial_vector(d: int, context: QuadraticContext | None = None) -> list:
    return (context or QuadraticContext.symbolic(d)).trinomial_vector()


def a_list_latex(d: int) -> str:
    """LaTeX display of the ``A_i`` in terms of ``z_i`` and ``sigma``."""
    lines = []
    for k in range(d):
        terms = [f"z_{{{i}}}\\sigma(z_{{{k + 2 - i}}})" for i in range(1, k + 2)]
        lines.append(f"A_{{{2 * k}}} &= " + " + ".join(terms))
        if k < d - 1:
            terms = [f"z_{{{i}}}\\sigma(z_{{{d + k + 2 - i}}})" for i in range(k + 2, d + 1)]
            lines.append(f"A_{{{2 * k + 1}}} &= " + " + ".join(terms))
    lines.sort(key=lambda s: int(s[3:s.index("}")]))
    return "\\begin{aligned}\n" + " \\\\\n".join(lines) + "\n\\end{aligned}"
