"""The quantum-cover roots: positive real roots with minimal reflection length.

A positive real affine root alpha belongs to the distinguished set when
``len(s_alpha) = 2 ht(alpha^vee) - 1``.  These are exactly the roots that can
contribute quantum terms to divisor multiplication, and each one carries a
palindromic reduced word ``s_i w s_i`` built by peeling simple reflections:
every non-simple member alpha has a simple alpha_i with
``<alpha_i, alpha^vee> = 1``, and ``s_i(alpha)`` is again a member with coroot
``alpha^vee - alpha_i^vee``.

Membership forces ``alpha^vee < c`` componentwise, which pins the candidates
down to finitely many roots: the finite positive roots (level 0) and the
roots ``delta - gamma`` for long finite positive gamma (the only level where
the coroot can stay below the center).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .roots import (
    AffineRoot,
    AffineRootData,
    CorootVec,
    coroot_ht,
    coroot_leq,
)
from .weyl import AffineWeylGroup, affine_weyl


@dataclass(frozen=True)
class ChevalleyRoot:
    root: AffineRoot
    coroot: CorootVec
    coroot_height: int
    reflection_length: int
    word: tuple[int, ...]  # palindromic reduced word for s_root


class ChevalleyRootSet:
    """The full set for one affine type, sorted by coroot height."""

    def __init__(self, W: AffineWeylGroup):
        self.W = W
        self.ard = W.ard
        self.roots = tuple(_enumerate(W))
        self._by_root = {cr.root: cr for cr in self.roots}

    def __iter__(self):
        return iter(self.roots)

    def __len__(self) -> int:
        return len(self.roots)

    def is_chevalley(self, alpha: AffineRoot) -> bool:
        return alpha in self._by_root

    def get(self, alpha: AffineRoot) -> ChevalleyRoot:
        return self._by_root[alpha]

    def by_coroot(self, v: CorootVec) -> ChevalleyRoot | None:
        for cr in self.roots:
            if cr.coroot == v:
                return cr
        return None


def candidate_roots(ard: AffineRootData) -> list[AffineRoot]:
    """All positive real roots that could possibly have coroot below c."""
    out = [AffineRoot(0, g) for g in ard.rs.positive_roots]
    for g in ard.rs.positive_roots:
        if ard.rs.d_root(g) == 1:  # long root: delta - g has an integer coroot ratio
            out.append(AffineRoot(1, tuple(-x for x in g)))
    return out


def _enumerate(W: AffineWeylGroup) -> list[ChevalleyRoot]:
    ard = W.ard
    members: list[tuple[AffineRoot, CorootVec, int, int]] = []
    for alpha in candidate_roots(ard):
        av = ard.coroot(alpha)
        ht = coroot_ht(av)
        ell = W.length(W.reflection(alpha))
        if ell == 2 * ht - 1:
            assert coroot_leq(av, ard.c) and av != ard.c, "member coroot must sit below c"
            members.append((alpha, av, ht, ell))
    members.sort(key=lambda m: (m[2], m[0].level, m[0].finite))

    # attach palindromic words by peeling a simple reflection per height step
    words: dict[AffineRoot, tuple[int, ...]] = {}
    out: list[ChevalleyRoot] = []
    simple_roots = [ard.simple_root(i) for i in range(ard.n + 1)]
    for alpha, av, ht, ell in members:
        if ht == 1:
            i = next(k for k, s in enumerate(simple_roots) if s == alpha)
            words[alpha] = (i,)
        else:
            for i in range(ard.n + 1):
                if ard.pairing(simple_roots[i], av) != 1:
                    continue
                down = ard.reflect(simple_roots[i], alpha)
                if down in words:
                    words[alpha] = (i,) + words[down] + (i,)
                    break
            else:
                raise AssertionError(f"no peeling step found for {alpha}")
        word = words[alpha]
        assert len(word) == ell
        assert W.from_word(word) == W.reflection(alpha)
        out.append(ChevalleyRoot(alpha, av, ht, ell, word))
    return out


@lru_cache(maxsize=None)
def chevalley_root_set(letter: str, rank: int) -> ChevalleyRootSet:
    return ChevalleyRootSet(affine_weyl(letter, rank))


def enumerate_chevalley_roots(W: AffineWeylGroup) -> ChevalleyRootSet:
    return chevalley_root_set(W.rs.letter, W.rs.rank)


def is_chevalley(W: AffineWeylGroup, alpha: AffineRoot) -> bool:
    return enumerate_chevalley_roots(W).is_chevalley(alpha)


def posir_reconstruct(W: AffineWeylGroup) -> dict[AffineRoot, tuple[int, ...]]:
    """Rebuild the set by upward closure, without the ``2 ht - 1`` criterion.

    Start from the affine simple roots and repeatedly apply
    ``beta -> s_i(beta)`` whenever ``<alpha_i, beta^vee> = -1`` and the
    conjugated word stays reduced (word length grows by exactly 2).  Tests
    compare the result against the direct length-test enumeration; agreement
    is precisely the peeling characterization.
    """
    ard = W.ard
    simple_roots = [ard.simple_root(i) for i in range(ard.n + 1)]
    found: dict[AffineRoot, tuple[int, ...]] = {
        s: (i,) for i, s in enumerate(simple_roots)
    }
    frontier = list(found)
    while frontier:
        nxt: list[AffineRoot] = []
        for beta in frontier:
            bv = ard.coroot(beta)
            wlen = len(found[beta])
            for i in range(ard.n + 1):
                if ard.pairing(simple_roots[i], bv) != -1:
                    continue
                alpha = ard.reflect(simple_roots[i], beta)
                if alpha in found:
                    continue
                if W.length(W.reflection(alpha)) == wlen + 2:
                    found[alpha] = (i,) + found[beta] + (i,)
                    nxt.append(alpha)
        frontier = nxt
    return found


if __name__ == "__main__":
    import doctest

    doctest.testmod()
