"""Schubert calculus on the (truncated) cohomology of the affine flag manifold.

Classes are finitely supported maps from affine Weyl elements to polynomials
in the quantum parameters ``q_0..q_n``.  The coefficients are exact, so the
truncation bound L is an interface guard, not a numerical watermark: asking an
operator to produce support at length >= L raises :class:`TruncationOverflow`
naming the bound that would suffice.

The operators:

* ``chevalley(i, a)`` — affine cup product with the divisor ``eps_i``, summed
  over Bruhat covers with coefficients ``<lambda_i, alpha^vee>``;
* ``D_word / D_elt`` — the nil-BGG operators, ``D_i(eps_v) = eps_{v s_i}``
  on right descents and 0 otherwise;
* ``lambda_op(i, a)`` — the quantum Chevalley operator: cup part plus
  ``<lambda_i, alpha^vee> q^{alpha^vee}`` terms over the distinguished roots,
  computed both from the length condition and from ``D_{s_alpha}`` words and
  asserted equal;
* ``modified_lambda(i, a)`` — ``(Lambda_i - m_i Lambda_0)(a)``, the family
  that commutes exactly;
* ``e1_pullback`` — the ring map determined by ``sigma_i -> eps_i - m_i eps_0``;
* ``qsharp_product`` — ``a * b := Lambda_a Lambda_b (1)`` reduced modulo the
  principal ideal generated by ``q^c``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations_with_replacement

from .bgg import FinCohClass, finite_schubert
from .chevalley import enumerate_chevalley_roots
from .polynomials import Poly, solve_exact
from .roots import CorootVec, coroot_ht
from .weyl import AffW, AffineWeylGroup, affine_weyl


class TruncationOverflow(RuntimeError):
    """An operation needs support beyond the configured truncation."""

    def __init__(self, needed: int, configured: int):
        super().__init__(
            f"result needs truncation L >= {needed}, configured L = {configured}; "
            f"rerun with --trunc {needed} or higher"
        )
        self.needed = needed
        self.configured = configured


def default_truncation(rank: int) -> int:
    return 8 if rank <= 2 else 6


@dataclass
class AffCohClass:
    """A finitely supported class with exact q-polynomial coefficients."""

    W: AffineWeylGroup = field(repr=False)
    L: int
    terms: dict[AffW, Poly]

    def _nq(self) -> int:
        return self.W.n + 1

    def __post_init__(self):
        self.terms = {w: c for w, c in self.terms.items() if not c.is_zero()}

    def __add__(self, other: "AffCohClass") -> "AffCohClass":
        out = dict(self.terms)
        for w, c in other.terms.items():
            s = out.get(w)
            s = c if s is None else s + c
            if s.is_zero():
                out.pop(w, None)
            else:
                out[w] = s
        return AffCohClass(self.W, max(self.L, other.L), out)

    def __sub__(self, other: "AffCohClass") -> "AffCohClass":
        return self + other.scale(Fraction(-1))

    def scale(self, c) -> "AffCohClass":
        if isinstance(c, (int, Fraction)):
            c = Poly.const(self._nq(), c)
        return AffCohClass(self.W, self.L, {w: c * v for w, v in self.terms.items()})

    def __eq__(self, other: object) -> bool:
        return isinstance(other, AffCohClass) and self.terms == other.terms

    def is_zero(self) -> bool:
        return not self.terms

    def max_length(self) -> int:
        return max((self.W.length(w) for w in self.terms), default=0)

    def homogeneous_degree(self) -> int | None:
        """Total degree ``len(w) + 2 ht(e)`` if constant over the support."""
        degs = {
            self.W.length(w) + 2 * sum(e)
            for w, c in self.terms.items()
            for e in c.terms
        }
        if len(degs) > 1:
            return None
        return degs.pop() if degs else 0

    def specialize_q0(self) -> "AffCohClass":
        return AffCohClass(
            self.W, self.L, {w: c.set_var_zero(0) for w, c in self.terms.items()}
        )

    def to_json_obj(self) -> list[dict]:
        out = []
        for w in sorted(self.terms, key=lambda w: (self.W.length(w), self.W.reduced_word(w))):
            for e, c in sorted(self.terms[w].terms.items()):
                out.append(
                    {
                        "w": list(self.W.reduced_word(w)),
                        "coeff": {
                            "q": list(e),
                            "num": c.numerator,
                            "den": c.denominator,
                        },
                    }
                )
        return out


class AffineCoh:
    """Operator calculator over one affine type."""

    def __init__(self, W: AffineWeylGroup, L: int | None = None):
        self.W = W
        self.ard = W.ard
        self.n = W.n
        self.L = default_truncation(self.n) if L is None else L
        self.fs = finite_schubert(W.rs.letter, W.rs.rank)
        self._chev = enumerate_chevalley_roots(W)
        self._e1_cache: dict = {}
        self._mono_cache: dict[tuple[int, ...], AffCohClass] = {}

    # -- constructors ---------------------------------------------------------

    def zero(self) -> AffCohClass:
        return AffCohClass(self.W, self.L, {})

    def unit(self) -> AffCohClass:
        return self.basis(self.W.identity)

    def basis(self, w: AffW, coeff=1) -> AffCohClass:
        nq = self.n + 1
        c = coeff if isinstance(coeff, Poly) else Poly.const(nq, coeff)
        return AffCohClass(self.W, self.L, {w: c})

    def q_monomial(self, e: CorootVec, num=1) -> Poly:
        return Poly.monomial(self.n + 1, tuple(e), num)

    def _guard(self, a: AffCohClass, room: int = 1) -> None:
        top = a.max_length()
        if top + room > self.L:
            raise TruncationOverflow(top + room, self.L)

    # -- cup and BGG operators ---------------------------------------------------

    def chevalley(self, i: int, a: AffCohClass) -> AffCohClass:
        """Affine divisor multiplication ``eps_i . a``."""
        self._guard(a)
        out: dict[AffW, Poly] = {}
        for w, c in a.terms.items():
            for u, alpha in self.W.bruhat_covers_up(w):
                k = self.ard.coroot(alpha)[i]
                if not k:
                    continue
                add = k * c
                s = out.get(u)
                s = add if s is None else s + add
                if s.is_zero():
                    out.pop(u, None)
                else:
                    out[u] = s
        return AffCohClass(self.W, self.L, out)

    def D_letter(self, i: int, a: AffCohClass) -> AffCohClass:
        out: dict[AffW, Poly] = {}
        si = self.W.simple(i)
        for w, c in a.terms.items():
            u = self.W.multiply(w, si)
            if self.W.length(u) < self.W.length(w):
                s = out.get(u)
                s = c if s is None else s + c
                if s.is_zero():
                    out.pop(u, None)
                else:
                    out[u] = s
        return AffCohClass(self.W, self.L, out)

    def D_word(self, word: tuple[int, ...], a: AffCohClass) -> AffCohClass:
        for i in reversed(word):
            if a.is_zero():
                break
            a = self.D_letter(i, a)
        return a

    def D_elt(self, w_aff: AffW, a: AffCohClass) -> AffCohClass:
        return self.D_word(self.W.reduced_word(w_aff), a)

    # -- quantum Chevalley operators ------------------------------------------------

    def lambda_op(self, i: int, a: AffCohClass) -> AffCohClass:
        """The affine quantum Chevalley operator, two ways (asserted equal)."""
        cup = self.chevalley(i, a)

        # route 1: the quantum-cover length condition
        route1: dict[AffW, Poly] = {}
        for w, c in a.terms.items():
            lw = self.W.length(w)
            for cr in self._chev:
                k = cr.coroot[i]
                if not k:
                    continue
                u = self.W.multiply(w, self.W.reflection(cr.root))
                if self.W.length(u) != lw + 1 - 2 * cr.coroot_height:
                    continue
                add = self.q_monomial(cr.coroot, k) * c
                s = route1.get(u)
                s = add if s is None else s + add
                if s.is_zero():
                    route1.pop(u, None)
                else:
                    route1[u] = s
        q1 = AffCohClass(self.W, self.L, route1)

        # route 2: q^{alpha^vee} D_{s_alpha}, letters applied along the word
        q2 = self.zero()
        for cr in self._chev:
            k = cr.coroot[i]
            if not k:
                continue
            moved = self.D_word(cr.word, a)
            if not moved.is_zero():
                q2 = q2 + moved.scale(self.q_monomial(cr.coroot, k))
        assert q1 == q2, "length-condition and D_word forms of Lambda disagree"
        return cup + q1

    def modified_lambda(self, i: int, a: AffCohClass) -> AffCohClass:
        """``(Lambda_i - m_i Lambda_0)(a)`` for a finite index i >= 1."""
        if not 1 <= i <= self.n:
            raise ValueError("modified operator needs a finite index")
        m_i = self.ard.rs.theta_coroot[i - 1]
        out = self.lambda_op(i, a)
        if m_i:
            out = out - self.lambda_op(0, a).scale(Fraction(m_i))
        return out

    # -- pullback along evaluation at the base point ---------------------------------

    def divisor_pullback(self, i: int, a: AffCohClass) -> AffCohClass:
        """Multiply by ``eps_i - m_i eps_0``, the image of the finite divisor."""
        m_i = self.ard.rs.theta_coroot[i - 1]
        out = self.chevalley(i, a)
        if m_i:
            out = out - self.chevalley(0, a).scale(Fraction(m_i))
        return out

    def e1_pullback(self, a: FinCohClass) -> AffCohClass:
        out = self.zero()
        for w, c in a.items():
            key = w
            if key not in self._e1_cache:
                img = self.zero()
                for coef, mono in self.fs.express_in_divisors(w):
                    cls = self.unit()
                    for i in reversed(mono):
                        cls = self.divisor_pullback(i, cls)
                    img = img + cls.scale(coef)
                self._e1_cache[key] = img
            out = out + self._e1_cache[key].scale(c)
        return out

    # -- the divisor subring and its product ------------------------------------------

    def divisor_monomial_class(self, mono: tuple[int, ...]) -> AffCohClass:
        """Cup product ``eps_{i_1} ... eps_{i_k}`` (affine indices, may repeat)."""
        if mono not in self._mono_cache:
            cls = self.unit()
            for i in reversed(mono):
                cls = self.chevalley(i, cls)
            self._mono_cache[mono] = cls
        return self._mono_cache[mono]

    def express_in_divisor_monomials(
        self, a: AffCohClass
    ) -> list[tuple[tuple[int, ...], Fraction, tuple[int, ...]]]:
        """Write ``a`` as sum of ``q^e * coeff * eps-monomial``; graded elimination.

        Raises ValueError when some layer lies outside the divisor span.
        """
        # split into (q-exponent, length) layers of plain rational classes
        layers: dict[tuple[tuple[int, ...], int], dict[AffW, Fraction]] = {}
        for w, poly in a.terms.items():
            lw = self.W.length(w)
            for e, c in poly.terms.items():
                layers.setdefault((e, lw), {})[w] = c
        out: list[tuple[tuple[int, ...], Fraction, tuple[int, ...]]] = []
        for (e, lw), layer in sorted(layers.items()):
            monos = list(combinations_with_replacement(range(self.n + 1), lw))
            cols = [self.divisor_monomial_class(m) for m in monos]
            support: list[AffW] = sorted(
                {w for col in cols for w in col.terms} | set(layer),
                key=lambda w: self.W.reduced_word(w),
            )
            rows = [
                [col.terms.get(w, Poly.zero(self.n + 1)).constant_term for col in cols]
                for w in support
            ]
            rhs = [layer.get(w, Fraction(0)) for w in support]
            sol = solve_exact(rows, rhs)
            if sol is None:
                raise ValueError(
                    "class lies outside the subring generated by divisor classes"
                )
            out.extend((e, c, m) for c, m in zip(sol, monos) if c)
        return out

    def _apply_lambda_expr(self, expr, target: AffCohClass) -> AffCohClass:
        out = self.zero()
        for e, c, mono in expr:
            cls = target
            for i in reversed(mono):
                cls = self.lambda_op(i, cls)
            out = out + cls.scale(self.q_monomial(e, c))
        return out

    def reduce_mod_qc(self, a: AffCohClass) -> AffCohClass:
        """Kill every coefficient monomial divisible by ``q^c``."""
        c = self.ard.c
        out = {}
        for w, poly in a.terms.items():
            kept = {
                e: v
                for e, v in poly.terms.items()
                if not all(x >= y for x, y in zip(e, c))
            }
            if kept:
                out[w] = Poly(self.n + 1, kept)
        return AffCohClass(self.W, a.L, out)

    def qsharp_product(self, a: AffCohClass, b: AffCohClass) -> AffCohClass:
        """``a * b = Lambda_a Lambda_b (1)`` modulo ``q^c``."""
        expr_a = self.express_in_divisor_monomials(a)
        expr_b = self.express_in_divisor_monomials(b)
        inner = self._apply_lambda_expr(expr_b, self.unit())
        outer = self._apply_lambda_expr(expr_a, inner)
        return self.reduce_mod_qc(outer)

    # -- formatting --------------------------------------------------------------

    def format_class(self, a: AffCohClass) -> str:
        if a.is_zero():
            return "0"
        qnames = [f"q{i}" for i in range(self.n + 1)]
        bits = []
        for w in sorted(a.terms, key=lambda w: (self.W.length(w), self.W.reduced_word(w))):
            c = a.terms[w].format(qnames)
            label = f"e[{self.W.format(w)}]"
            bits.append(f"({c})*{label}" if ("+" in c or "-" in c[1:]) else f"{c}*{label}")
        return " + ".join(bits)


@lru_cache(maxsize=None)
def affine_coh(letter: str, rank: int, L: int | None = None) -> AffineCoh:
    return AffineCoh(affine_weyl(letter, rank), L)


if __name__ == "__main__":
    import doctest

    doctest.testmod()
