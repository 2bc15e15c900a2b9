"""Finite and affine Weyl groups with exact Bruhat-order combinatorics.

Affine elements are kept in translation canonical form ``w = v * t_lambda``
with ``v`` in the finite Weyl group and ``lambda`` in the coroot lattice.
The composition rule and the action on real roots follow from
``t_lambda(k delta + beta) = (k - <beta, lambda>) delta + beta``:

* ``(v1, l1) * (v2, l2) = (v1 v2, v2^{-1}(l1) + l2)``
* ``(v, l)^{-1} = (v^{-1}, -v(l))``
* ``(v, l)(k delta + beta) = (k - <beta, l>) delta + v(beta)``

Lengths come from the closed form

    len(v t_l) = sum over beta > 0 of  |<beta,l>| + s(beta)
    where s(beta) = +[v beta < 0] if <beta,l> >= 0, else -[v beta < 0],

which tests cross-validate against breadth-first word enumeration.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import factorial
import re

from .roots import AffineRoot, AffineRootData, RootSystem, Vec

Matrix = tuple[tuple[int, ...], ...]


def _identity_matrix(n: int) -> Matrix:
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def _matmul(a: Matrix, b: Matrix) -> Matrix:
    bt = tuple(zip(*b))
    return tuple(
        tuple(sum(x * y for x, y in zip(row, col)) for col in bt) for row in a
    )


def _matvec(a: Matrix, v: Vec) -> Vec:
    return tuple(sum(x * y for x, y in zip(row, v)) for row in a)


class FinW:
    """A finite Weyl group element, stored as its action on both lattices.

    Carrying the root action, the coroot action, and both inverse actions
    makes multiplication and inversion pure integer matrix work with no
    solving.  Equality and hashing use the root action alone (it determines
    the rest).
    """

    __slots__ = ("mat", "comat", "inv_mat", "inv_comat")

    def __init__(self, mat: Matrix, comat: Matrix, inv_mat: Matrix, inv_comat: Matrix):
        self.mat = mat
        self.comat = comat
        self.inv_mat = inv_mat
        self.inv_comat = inv_comat

    def __eq__(self, other: object) -> bool:
        return isinstance(other, FinW) and self.mat == other.mat

    def __hash__(self) -> int:
        return hash(self.mat)

    def __mul__(self, other: "FinW") -> "FinW":
        return FinW(
            _matmul(self.mat, other.mat),
            _matmul(self.comat, other.comat),
            _matmul(other.inv_mat, self.inv_mat),
            _matmul(other.inv_comat, self.inv_comat),
        )

    def inv(self) -> "FinW":
        return FinW(self.inv_mat, self.inv_comat, self.mat, self.comat)

    def root(self, v: Vec) -> Vec:
        return _matvec(self.mat, v)

    def coroot(self, v: Vec) -> Vec:
        return _matvec(self.comat, v)

    def is_identity(self) -> bool:
        return self.mat == _identity_matrix(len(self.mat))


def finite_identity(n: int) -> FinW:
    e = _identity_matrix(n)
    return FinW(e, e, e, e)


def finite_reflection(rs: RootSystem, beta: Vec) -> FinW:
    """``s_beta`` for any root beta, as a :class:`FinW`."""
    n = rs.rank
    bco = rs.coroot(beta)
    pair_root = [rs.pairing(rs.simple_root(j + 1), bco) for j in range(n)]
    pair_co = [rs.pairing_simple(beta, j) for j in range(n)]
    mat = tuple(
        tuple((1 if r == j else 0) - pair_root[j] * beta[r] for j in range(n))
        for r in range(n)
    )
    comat = tuple(
        tuple((1 if r == j else 0) - pair_co[j] * bco[r] for j in range(n))
        for r in range(n)
    )
    return FinW(mat, comat, mat, comat)  # reflections are involutions


@dataclass(frozen=True)
class AffW:
    """Affine Weyl element ``v * t_lambda`` (lambda in finite coroot coordinates)."""

    v: FinW
    t: Vec

    def is_identity(self) -> bool:
        return self.v.is_identity() and not any(self.t)


class AffineWeylGroup:
    """Calculator for one affine Weyl group; owns the caches.

    >>> from qaff.roots import affinize
    >>> W = AffineWeylGroup(affinize("A", 1))
    >>> W.length(W.from_word([0, 1, 0]))
    3
    """

    def __init__(self, ard: AffineRootData):
        self.ard = ard
        self.rs = ard.rs
        self.n = ard.rs.rank
        self.identity = AffW(finite_identity(self.n), (0,) * self.n)
        self._simple: list[AffW] = []
        for i in range(self.n + 1):
            ai = ard.simple_root(i)
            self._simple.append(self.reflection(ai))
        # <beta, alpha_i^vee> for each positive root, for the length formula
        self._pos_pairs = [
            (beta, tuple(self.rs.pairing_simple(beta, i) for i in range(self.n)))
            for beta in self.rs.positive_roots
        ]
        self._bruhat_memo: dict[tuple[AffW, AffW], bool] = {}
        self._covers_memo: dict[AffW, list[tuple[AffW, AffineRoot]]] = {}
        self._word_memo: dict[AffW, tuple[int, ...]] = {}

    # -- group structure -----------------------------------------------------

    def simple(self, i: int) -> AffW:
        return self._simple[i]

    def multiply(self, a: AffW, b: AffW) -> AffW:
        lam = tuple(x + y for x, y in zip(_matvec(b.v.inv_comat, a.t), b.t))
        return AffW(a.v * b.v, lam)

    def invert(self, a: AffW) -> AffW:
        return AffW(a.v.inv(), tuple(-x for x in a.v.coroot(a.t)))

    def apply(self, a: AffW, alpha: AffineRoot) -> AffineRoot:
        """Action on a real affine root."""
        drop = sum(x * y for x, y in zip(self._root_pairs(alpha.finite), a.t))
        return AffineRoot(alpha.level - drop, a.v.root(alpha.finite))

    def _root_pairs(self, beta: Vec) -> Vec:
        return tuple(self.rs.pairing_simple(beta, i) for i in range(self.n))

    def reflection(self, alpha: AffineRoot) -> AffW:
        """``s_alpha`` for a real affine root ``alpha = k delta + beta``."""
        if not alpha.is_real():
            raise ValueError("no reflection for imaginary roots")
        s = finite_reflection(self.rs, alpha.finite)
        bco = self.rs.coroot(alpha.finite)
        return AffW(s, tuple(alpha.level * x for x in bco))

    def reflection_root(self, w: AffW) -> AffineRoot:
        """The positive real root alpha with ``w = s_alpha``; raises otherwise."""
        for beta in self.rs.positive_roots:
            if w.v != finite_reflection(self.rs, beta):
                continue
            bco = self.rs.coroot(beta)
            ks = {
                (x, y) for x, y in zip(w.t, bco) if y
            }
            levels = {x // y for x, y in ks if x % y == 0}
            if len(levels) != 1:
                break
            k = levels.pop()
            if any(x != k * y for x, y in zip(w.t, bco)):
                break
            alpha = AffineRoot(k, beta) if k >= 0 else AffineRoot(-k, tuple(-b for b in beta))
            if k == 0 and sum(beta) < 0:
                alpha = -alpha
            if self.reflection(alpha) == w:
                return alpha
            break
        raise ValueError("element is not a reflection")

    # -- length and words ------------------------------------------------------

    def length(self, w: AffW) -> int:
        total = 0
        for beta, pv in self._pos_pairs:
            p = sum(x * y for x, y in zip(pv, w.t))
            vneg = sum(w.v.root(beta)) < 0
            if p >= 0:
                total += p + (1 if vneg else 0)
            else:
                total += -p - (1 if vneg else 0)
        return total

    def right_descents(self, w: AffW) -> list[int]:
        return [
            i
            for i in range(self.n + 1)
            if not self.ard.is_positive(self.apply(w, self.ard.simple_root(i)))
        ]

    def reduced_word(self, w: AffW) -> tuple[int, ...]:
        if w in self._word_memo:
            return self._word_memo[w]
        out: list[int] = []
        cur = w
        while not cur.is_identity():
            ds = self.right_descents(cur)
            assert ds, "non-identity element with no descent"
            i = ds[0]
            cur = self.multiply(cur, self._simple[i])
            out.append(i)
        word = tuple(reversed(out))
        self._word_memo[w] = word
        return word

    def from_word(self, word: list[int] | tuple[int, ...]) -> AffW:
        w = self.identity
        for i in word:
            w = self.multiply(w, self._simple[i])
        return w

    # -- Bruhat order ------------------------------------------------------------

    def bruhat_leq(self, u: AffW, w: AffW) -> bool:
        if u == w:
            return True
        key = (u, w)
        hit = self._bruhat_memo.get(key)
        if hit is not None:
            return hit
        lu, lw = self.length(u), self.length(w)
        if lu >= lw:
            res = False
        else:
            i = self.right_descents(w)[0]
            si = self._simple[i]
            ws = self.multiply(w, si)
            us = self.multiply(u, si)
            if self.length(us) < lu:
                res = self.bruhat_leq(us, ws)
            else:
                res = self.bruhat_leq(u, ws)
        self._bruhat_memo[key] = res
        return res

    def bruhat_covers_up(self, w: AffW) -> list[tuple[AffW, AffineRoot]]:
        """All ``(w s_alpha, alpha)`` with ``len(w s_alpha) = len(w) + 1``.

        Completeness: any reflection t with ``len(w t) = len(w) + 1`` has
        ``len(t) <= 2 len(w) + 1``, and a reflection with root at level k has
        length at least ``2k - #(positive roots)``, so scanning levels up to
        ``(2 len(w) + 1 + #pos)/2`` misses nothing.
        """
        if w in self._covers_memo:
            return self._covers_memo[w]
        lw = self.length(w)
        target = 2 * lw + 1
        npos = self.rs.num_positive
        out: list[tuple[AffW, AffineRoot]] = []
        k = 0
        while 2 * k - npos <= target:
            for beta in self.rs.all_roots():
                if k == 0 and sum(beta) < 0:
                    continue
                alpha = AffineRoot(k, beta)
                u = self.multiply(w, self.reflection(alpha))
                if self.length(u) == lw + 1:
                    out.append((u, alpha))
            k += 1
        out.sort(key=lambda pair: (pair[1].level, pair[1].finite))
        self._covers_memo[w] = out
        return out

    def hecke_product(self, u: AffW, v: AffW) -> AffW:
        """Demazure (0-Hecke) product, via any reduced word of v."""
        cur = u
        lcur = self.length(cur)
        for i in self.reduced_word(v):
            nxt = self.multiply(cur, self._simple[i])
            lnxt = self.length(nxt)
            if lnxt > lcur:
                cur, lcur = nxt, lnxt
        return cur

    def enumerate_up_to(self, L: int) -> dict[int, list[AffW]]:
        """Elements grouped by length, for lengths 0..L, by right-multiplication BFS.

        Layers are cached and extended on demand, so repeated calls are cheap.
        """
        if not hasattr(self, "_layers"):
            self._layers: dict[int, list[AffW]] = {0: [self.identity]}
            self._layer_seen: set[AffW] = {self.identity}
        layers = self._layers
        for ell in range(len(layers) - 1, L):
            nxt: list[AffW] = []
            for w in layers[ell]:
                for i in range(self.n + 1):
                    u = self.multiply(w, self._simple[i])
                    if u not in self._layer_seen:
                        assert self.length(u) == ell + 1, "length formula vs BFS depth"
                        self._layer_seen.add(u)
                        nxt.append(u)
            layers[ell + 1] = nxt
        return {ell: layers[ell] for ell in range(L + 1)}

    # -- formatting --------------------------------------------------------------

    def parse(self, text: str) -> AffW:
        """Parse ``"s0s2s1"`` (or ``"e"``) into an element; words need not be reduced."""
        text = text.strip()
        if text in ("e", "", "1"):
            return self.identity
        if not re.fullmatch(r"(?:s\d+)+", text):
            raise ValueError(f"cannot parse Weyl element {text!r}")
        word = [int(m) for m in re.findall(r"s(\d+)", text)]
        bad = [i for i in word if not 0 <= i <= self.n]
        if bad:
            raise ValueError(f"generator index out of range {bad} for rank {self.n}")
        return self.from_word(word)

    def format(self, w: AffW) -> str:
        word = self.reduced_word(w)
        return "".join(f"s{i}" for i in word) if word else "e"


@lru_cache(maxsize=None)
def affine_weyl(letter: str, rank: int) -> AffineWeylGroup:
    from .roots import affinize

    return AffineWeylGroup(affinize(letter, rank))


class FiniteWeyl:
    """The finite Weyl group of a root system, fully enumerated with words."""

    def __init__(self, rs: RootSystem):
        self.rs = rs
        self.n = rs.rank
        self.identity = finite_identity(self.n)
        self.gens = [
            finite_reflection(rs, rs.simple_root(i + 1)) for i in range(self.n)
        ]
        self.elements: list[FinW] = [self.identity]
        self.word: dict[FinW, tuple[int, ...]] = {self.identity: ()}
        self.length: dict[FinW, int] = {self.identity: 0}
        frontier = [self.identity]
        while frontier:
            nxt = []
            for w in frontier:
                for i, s in enumerate(self.gens):
                    u = w * s
                    if u not in self.word:
                        self.word[u] = self.word[w] + (i,)
                        self.length[u] = self.length[w] + 1
                        self.elements.append(u)
                        nxt.append(u)
            frontier = nxt
        self.w0 = max(self.elements, key=self.length.get)  # type: ignore[arg-type]
        self.by_length: dict[int, list[FinW]] = {}
        for w in self.elements:
            self.by_length.setdefault(self.length[w], []).append(w)

    def __len__(self) -> int:
        return len(self.elements)

    def right_descents(self, w: FinW) -> list[int]:
        return [
            i
            for i in range(self.n)
            if sum(w.root(self.rs.simple_root(i + 1))) < 0
        ]

    def format(self, w: FinW) -> str:
        word = self.word[w]
        return "".join(f"s{i + 1}" for i in word) if word else "e"

    def parse(self, text: str) -> FinW:
        text = text.strip()
        if text in ("e", "", "1"):
            return self.identity
        if not re.fullmatch(r"(?:s\d+)+", text):
            raise ValueError(f"cannot parse Weyl element {text!r}")
        w = self.identity
        for m in re.findall(r"s(\d+)", text):
            i = int(m)
            if not 1 <= i <= self.n:
                raise ValueError(f"generator index {i} out of range")
            w = w * self.gens[i - 1]
        return w


@lru_cache(maxsize=None)
def finite_weyl(letter: str, rank: int) -> FiniteWeyl:
    from .roots import build_root_system

    return FiniteWeyl(build_root_system(letter, rank))


_EXCEPTIONAL_ORDER = {("E", 6): 51840, ("E", 7): 2903040, ("E", 8): 696729600,
                      ("F", 4): 1152, ("G", 2): 12}


def weyl_order(letter: str, rank: int) -> int:
    """|W| in closed form, without enumerating the group."""
    if letter == "A":
        return factorial(rank + 1)
    if letter in ("B", "C"):
        return 2**rank * factorial(rank)
    if letter == "D":
        return 2 ** (rank - 1) * factorial(rank)
    return _EXCEPTIONAL_ORDER[(letter, rank)]


if __name__ == "__main__":
    import doctest

    doctest.testmod()
