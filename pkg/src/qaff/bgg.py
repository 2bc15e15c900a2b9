"""BGG calculus on the rational cohomology of the finite flag variety.

Polynomials live in the fundamental-weight variables ``omega_1..omega_n`` over
the rationals; the coinvariant presentation never appears explicitly because
every class is reduced to the Schubert basis through divided differences:

    partial_beta(f) = (f - s_beta f) / beta,
    coefficient of sigma_w in [f]  =  constant term of partial_w(f).

Representatives are normalized by ``rep(w_0) = (1/|W|) * prod(positive roots)``
and pushed down with ``rep(w s_i) = partial_i rep(w)``; this pins the Poincare
pairing to ``<sigma_u, sigma_v> = delta(v = w_0 u)``, which the tests verify
against the polynomial-level integral rather than assuming.

The nil-Coxeter letters ``D_i`` of the affine Weyl group act here through

    pi(D_i) = partial_i (1 <= i <= n),     pi(D_0) = partial_{-theta} = -partial_theta,

with words applied rightmost letter first.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import combinations_with_replacement

from .polynomials import Poly, exact_div_linear, solve_exact
from .roots import RootSystem, Vec
from .weyl import FinW, FiniteWeyl, finite_weyl

FinCohClass = dict  # FinW -> coefficient (Fraction, or any Fraction-module element)


class FiniteSchubert:
    """Calculator bound to one finite root system."""

    def __init__(self, rs: RootSystem):
        self.rs = rs
        self.n = rs.rank
        self.W = finite_weyl(rs.letter, rs.rank)
        self.w0 = self.W.w0
        # simple roots as linear polynomials in the omega variables
        self._alpha = [
            Poly(
                self.n,
                {
                    tuple(1 if r == i else 0 for r in range(self.n)): Fraction(
                        rs.cartan[i][j]
                    )
                    for i in range(self.n)
                    if rs.cartan[i][j]
                },
            )
            for j in range(self.n)
        ]
        self._reps: dict[FinW, Poly] | None = None
        self._theta_matrix: dict[FinW, FinCohClass] | None = None
        self._divisor_expr: dict[FinW, list[tuple[Fraction, tuple[int, ...]]]] = {}

    # -- polynomial-level operators -----------------------------------------

    def root_poly(self, beta: Vec) -> Poly:
        out = Poly.zero(self.n)
        for j, b in enumerate(beta):
            if b:
                out = out + b * self._alpha[j]
        return out

    def reflect_poly(self, beta: Vec, f: Poly) -> Poly:
        bco = self.rs.coroot(beta)
        bpoly = self.root_poly(beta)
        images = [
            Poly.variable(self.n, i) - bco[i] * bpoly for i in range(self.n)
        ]
        return f.substitute(images)

    def divided_difference(self, beta: Vec, f: Poly) -> Poly:
        """``(f - s_beta f) / beta`` — exact by construction."""
        num = f - self.reflect_poly(beta, f)
        if num.is_zero():
            return Poly.zero(self.n)
        return exact_div_linear(num, self.root_poly(beta))

    def dd_simple(self, j: int, f: Poly) -> Poly:
        """Divided difference along alpha_j, 0-indexed."""
        return self.divided_difference(self.rs.simple_root(j + 1), f)

    def dd_word(self, word: tuple[int, ...], f: Poly) -> Poly:
        """``partial_{i_1} ... partial_{i_k}`` applied rightmost first (0-indexed)."""
        for j in reversed(word):
            f = self.dd_simple(j, f)
            if f.is_zero():
                break
        return f

    # -- Schubert representatives --------------------------------------------

    def rep(self, w: FinW) -> Poly:
        if self._reps is None:
            top = Poly.one(self.n)
            for beta in self.rs.positive_roots:
                top = top * self.root_poly(beta)
            top = top * Fraction(1, len(self.W))
            reps = {self.w0: top}
            order = sorted(self.W.elements, key=lambda x: -self.W.length[x])
            for v in order:
                for j in range(self.n):
                    u = v * self.W.gens[j]
                    if self.W.length[u] < self.W.length[v] and u not in reps:
                        reps[u] = self.dd_simple(j, reps[v])
                reps.setdefault(v, reps.get(v))
            self._reps = reps
        return self._reps[w]

    def expand_in_schubert(self, f: Poly) -> FinCohClass:
        """Decompose the class of f; degrees above len(w_0) vanish in H*."""
        out: FinCohClass = {}
        for deg, comp in f.homogeneous_components().items():
            for w in self.W.by_length.get(deg, []):
                c = self.dd_word(self.W.word[w], comp).constant_term
                if c:
                    out[w] = out.get(w, Fraction(0)) + c
        return {w: c for w, c in out.items() if c}

    def class_poly(self, a: FinCohClass) -> Poly:
        out = Poly.zero(self.n)
        for w, c in a.items():
            out = out + c * self.rep(w)
        return out

    # -- ring structure ---------------------------------------------------------

    def cup_product(self, a: FinCohClass, b: FinCohClass) -> FinCohClass:
        return self.expand_in_schubert(self.class_poly(a) * self.class_poly(b))

    def chevalley_cup(self, i: int, a: FinCohClass) -> FinCohClass:
        """``sigma_i . a`` by the classical Chevalley rule (i is 1-indexed).

        sigma_i . sigma_w = sum over positive roots alpha with
        len(w s_alpha) = len(w) + 1 of <omega_i, alpha^vee> sigma_{w s_alpha},
        and <omega_i, alpha^vee> is the i-th coordinate of alpha^vee.
        """
        from .weyl import finite_reflection

        out: FinCohClass = {}
        for w, c in a.items():
            lw = self.W.length[w]
            for beta in self.rs.positive_roots:
                u = w * finite_reflection(self.rs, beta)
                if self.W.length[u] != lw + 1:
                    continue
                k = self.rs.coroot(beta)[i - 1]
                if not k:
                    continue
                out[u] = out.get(u, Fraction(0)) + k * c
        return {w: c for w, c in out.items() if c}

    def poincare_pairing(self, a: FinCohClass, b: FinCohClass) -> Fraction:
        """Integral over G/B, computed at polynomial level via partial_{w_0}."""
        prod = self.class_poly(a) * self.class_poly(b)
        top = prod.homogeneous_components().get(self.W.length[self.w0])
        if top is None:
            return Fraction(0)
        return self.dd_word(self.W.word[self.w0], top).constant_term

    # -- the pi map on nil-Coxeter words -----------------------------------------

    def theta_matrix(self) -> dict[FinW, FinCohClass]:
        """partial_theta on the Schubert basis, computed once."""
        if self._theta_matrix is None:
            self._theta_matrix = {
                w: self.expand_in_schubert(
                    self.divided_difference(self.rs.theta, self.rep(w))
                )
                for w in self.W.elements
            }
        return self._theta_matrix

    def pi_letter(self, i: int, a: FinCohClass) -> FinCohClass:
        """Apply pi(D_i) for one affine letter i (0 = -partial_theta)."""
        out: FinCohClass = {}
        if i == 0:
            mat = self.theta_matrix()
            for w, c in a.items():
                for u, k in mat[w].items():
                    s = out.get(u, 0) + (-k) * c
                    if s:
                        out[u] = s
                    else:
                        out.pop(u, None)
            return out
        j = i - 1
        for w, c in a.items():
            u = w * self.W.gens[j]
            if self.W.length[u] < self.W.length[w]:
                s = out.get(u, 0) + c
                if s:
                    out[u] = s
                else:
                    out.pop(u, None)
        return out

    def pi_word(self, word: tuple[int, ...], a: FinCohClass) -> FinCohClass:
        """pi(D_{i_1} ... D_{i_k}) applied rightmost letter first."""
        for i in reversed(word):
            if not a:
                break
            a = self.pi_letter(i, a)
        return a

    # -- divisor monomial expressions ---------------------------------------------

    def divisor_monomials(self, degree: int) -> list[tuple[int, ...]]:
        return list(combinations_with_replacement(range(1, self.n + 1), degree))

    def monomial_class(self, mono: tuple[int, ...]) -> FinCohClass:
        cls: FinCohClass = {self.W.identity: Fraction(1)}
        for i in reversed(mono):
            cls = self.chevalley_cup(i, cls)
        return cls

    def express_in_divisors(self, w: FinW) -> list[tuple[Fraction, tuple[int, ...]]]:
        """Write sigma_w as a rational combination of divisor monomials.

        Possible for every w because divisor classes generate H*(G/B; Q).
        """
        if w in self._divisor_expr:
            return self._divisor_expr[w]
        deg = self.W.length[w]
        monos = self.divisor_monomials(deg)
        basis = self.W.by_length[deg]
        cols = [self.monomial_class(m) for m in monos]
        rows = [[col.get(u, Fraction(0)) for col in cols] for u in basis]
        rhs = [Fraction(1) if u == w else Fraction(0) for u in basis]
        sol = solve_exact(rows, rhs)
        assert sol is not None, "divisor monomials failed to span"
        expr = [(c, m) for c, m in zip(sol, monos) if c]
        self._divisor_expr[w] = expr
        return expr


@lru_cache(maxsize=None)
def finite_schubert(letter: str, rank: int) -> FiniteSchubert:
    from .roots import build_root_system

    return FiniteSchubert(build_root_system(letter, rank))


if __name__ == "__main__":
    import doctest

    doctest.testmod()
