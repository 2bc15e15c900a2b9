"""Root systems for the simple Lie types and their untwisted affinizations.

Conventions, fixed once and used everywhere downstream:

* ``cartan[i][j]`` is the pairing ``<alpha_j, alpha_i^vee>`` (0-indexed simple
  roots; users see 1-indexed labels, with 0 reserved for the affine node).
* Finite roots are integer coordinate vectors in the simple-root basis;
  coroots are integer vectors in the simple-coroot basis.
* The invariant form is normalized so the highest root theta has
  ``(theta|theta) = 2``; equivalently the symmetrizers ``d_i = (alpha_i|alpha_i)/2``
  have maximum 1.
* ``B2`` puts the short root first (``<alpha_2, alpha_1^vee> = -2``), matching
  the rank-2 running example used throughout; ``B_n`` for n >= 3 and all other
  types follow the Bourbaki tables.
* A real affine root ``k*delta + beta`` is stored as ``AffineRoot(k, beta)``;
  its coroot is the integer vector ``(k/d_beta) * c + beta^vee`` in the affine
  simple-coroot basis, where ``c = alpha_0^vee + theta^vee`` is the canonical
  central element, represented as ``(1, m_1, ..., m_n)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

Vec = tuple[int, ...]
CorootVec = tuple[int, ...]  # coordinates in (alpha_0^vee, ..., alpha_n^vee)

_MIN_RANK = {"A": 1, "B": 2, "C": 2, "D": 3}
_FIXED_RANK = {"E": (6, 7, 8), "F": (4,), "G": (2,)}


def parse_lie_type(s: str) -> tuple[str, int]:
    """Parse a label like ``"B3"`` into ``("B", 3)``, validating the rank.

    >>> parse_lie_type("G2")
    ('G', 2)
    """
    s = s.strip()
    if len(s) < 2 or s[0].upper() not in "ABCDEFG":
        raise ValueError(f"bad Lie type {s!r}: expected letter A..G followed by rank")
    letter = s[0].upper()
    try:
        rank = int(s[1:])
    except ValueError as exc:
        raise ValueError(f"bad Lie type {s!r}: rank is not an integer") from exc
    if letter in _FIXED_RANK:
        if rank not in _FIXED_RANK[letter]:
            raise ValueError(f"type {letter} only exists in ranks {_FIXED_RANK[letter]}")
    elif rank < _MIN_RANK[letter]:
        raise ValueError(f"type {letter} needs rank >= {_MIN_RANK[letter]}")
    return letter, rank


def _cartan_matrix(letter: str, n: int) -> list[list[int]]:
    C = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

    def chain(last: int) -> None:
        for i in range(last):
            C[i][i + 1] = C[i + 1][i] = -1

    if letter == "A":
        chain(n - 1)
    elif letter == "B":
        if n == 2:
            C[0][1], C[1][0] = -2, -1  # short root first
        else:
            chain(n - 1)
            C[n - 1][n - 2] = -2  # <alpha_{n-1}, alpha_n^vee>, alpha_n short
    elif letter == "C":
        chain(n - 1)
        C[n - 2][n - 1] = -2  # <alpha_n, alpha_{n-1}^vee>, alpha_n long
    elif letter == "D":
        chain(n - 2)
        C[n - 3][n - 1] = C[n - 1][n - 3] = -1
    elif letter == "E":
        edges = [(0, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7)][: n - 2] + [(1, 3)]
        for i, j in edges:
            C[i][j] = C[j][i] = -1
    elif letter == "F":
        chain(3)
        C[2][1] = -2  # <alpha_2, alpha_3^vee>, alpha_3 short
    elif letter == "G":
        C[0][1], C[1][0] = -3, -1  # alpha_1 short
    return C


def _symmetrizers(cartan: list[list[int]]) -> tuple[Fraction, ...]:
    """Solve d_i * c_ij = d_j * c_ji over the Dynkin graph, normalized to max 1."""
    n = len(cartan)
    d: list[Fraction | None] = [None] * n
    d[0] = Fraction(1)
    todo = [0]
    while todo:
        i = todo.pop()
        for j in range(n):
            if i != j and cartan[i][j] and d[j] is None:
                d[j] = d[i] * Fraction(cartan[i][j], cartan[j][i])
                todo.append(j)
    if any(x is None for x in d):
        raise ValueError("Dynkin diagram is not connected")
    top = max(d)  # type: ignore[type-var]
    return tuple(x / top for x in d)  # type: ignore[operator]


@dataclass(frozen=True)
class RootSystem:
    """Finite root system data for one simple type."""

    letter: str
    rank: int
    cartan: tuple[tuple[int, ...], ...]
    d: tuple[Fraction, ...]
    positive_roots: tuple[Vec, ...]  # sorted by (height, coords)
    theta: Vec
    theta_coroot: Vec
    _root_set: frozenset[Vec] = field(repr=False)
    killing_coroots: tuple[tuple[Fraction, ...], ...] = field(repr=False)

    @property
    def lie_type(self) -> str:
        return f"{self.letter}{self.rank}"

    @property
    def num_positive(self) -> int:
        return len(self.positive_roots)

    def simple_root(self, i: int) -> Vec:
        """The i-th simple root, 1-indexed."""
        return tuple(1 if j == i - 1 else 0 for j in range(self.rank))

    def all_roots(self) -> frozenset[Vec]:
        return self._root_set

    def is_root(self, v: Vec) -> bool:
        return v in self._root_set

    @staticmethod
    def height(beta: Vec) -> int:
        return sum(beta)

    def is_positive(self, beta: Vec) -> bool:
        if beta not in self._root_set:
            raise ValueError(f"{beta} is not a root")
        return sum(beta) > 0

    # -- pairings and the invariant form -----------------------------------

    def pairing_simple(self, beta: Vec, i: int) -> int:
        """``<beta, alpha_i^vee>`` for 0-indexed i."""
        return sum(b * self.cartan[i][j] for j, b in enumerate(beta))

    def pairing(self, beta: Vec, coroot: Vec) -> int:
        """``<beta, gamma^vee>`` with gamma^vee in simple-coroot coordinates."""
        return sum(g * self.pairing_simple(beta, i) for i, g in enumerate(coroot))

    def norm_sq(self, beta: Vec) -> Fraction:
        """``(beta|beta)`` in the theta-normalized invariant form."""
        return sum(
            self.d[i] * self.cartan[i][j] * beta[i] * beta[j]
            for i in range(self.rank)
            for j in range(self.rank)
            if beta[i] and beta[j]
        ) or Fraction(0)

    def d_root(self, beta: Vec) -> Fraction:
        return self.norm_sq(beta) / 2

    def coroot(self, beta: Vec) -> Vec:
        """``beta^vee = (2/(beta|beta)) beta`` in simple-coroot coordinates."""
        db = self.d_root(beta)
        out = []
        for j, b in enumerate(beta):
            v = Fraction(b) * self.d[j] / db
            if v.denominator != 1:
                raise AssertionError(f"non-integer coroot for {beta}")
            out.append(int(v))
        return tuple(out)

    def inner_coroots(self, x: Vec, y: Vec) -> Fraction:
        """``(x|y)`` for coroot-coordinate vectors, via ``(alpha_i^vee|alpha_j^vee)``."""
        acc = Fraction(0)
        for i, xi in enumerate(x):
            if not xi:
                continue
            for j, yj in enumerate(y):
                if yj:
                    acc += xi * yj * self.killing_coroots[i][j]
        return acc

    # -- reflections --------------------------------------------------------

    def reflect_root(self, alpha: Vec, v: Vec) -> Vec:
        """``s_alpha(v)`` on root coordinates."""
        k = self.pairing(v, self.coroot(alpha))
        return tuple(a - k * b for a, b in zip(v, alpha))

    def reflect_coroot(self, alpha: Vec, x: Vec) -> Vec:
        """``s_alpha(x)`` on coroot coordinates."""
        k = self.pairing(alpha, x)
        return tuple(a - k * b for a, b in zip(x, self.coroot(alpha)))

    def fundamental_weights(self) -> tuple[tuple[Fraction, ...], ...]:
        """omega_1..omega_n in root-basis coordinates (columns of cartan^{-1})."""
        n = self.rank
        from .polynomials import solve_exact

        cols = []
        for k in range(n):
            rhs = [1 if i == k else 0 for i in range(n)]
            sol = solve_exact([list(row) for row in self.cartan], rhs)
            assert sol is not None
            cols.append(tuple(sol))
        return tuple(cols)


def _positive_root_closure(cartan: list[list[int]]) -> list[Vec]:
    """Height-by-height closure using unbroken root strings."""
    n = len(cartan)
    simples = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
    by_height: dict[int, set[Vec]] = {1: set(simples)}
    known: set[Vec] = set(simples)
    h = 1
    while by_height.get(h):
        for beta in by_height[h]:
            for i in range(n):
                if beta == simples[i]:
                    continue
                # walk the alpha_i-string below beta
                p = 0
                back = tuple(b - simples[i][j] for j, b in enumerate(beta))
                while back in known:
                    p += 1
                    back = tuple(b - simples[i][j] for j, b in enumerate(back))
                pair = sum(b * cartan[i][j] for j, b in enumerate(beta))
                if p - pair >= 1:
                    up = tuple(b + simples[i][j] for j, b in enumerate(beta))
                    if up not in known:
                        known.add(up)
                        by_height.setdefault(h + 1, set()).add(up)
        h += 1
    return sorted(known, key=lambda v: (sum(v), v))


@lru_cache(maxsize=None)
def build_root_system(letter: str, rank: int) -> RootSystem:
    """Construct (and cache) the root system for one simple type.

    >>> rs = build_root_system("G", 2)
    >>> rs.theta, rs.theta_coroot
    ((3, 2), (1, 2))
    """
    letter, rank = parse_lie_type(f"{letter}{rank}")
    cartan = _cartan_matrix(letter, rank)
    d = _symmetrizers(cartan)
    positives = _positive_root_closure(cartan)
    top_height = sum(positives[-1])
    highest = [b for b in positives if sum(b) == top_height]
    assert len(highest) == 1, "highest root must be unique"
    theta = highest[0]
    killing = tuple(
        tuple(Fraction(cartan[i][j]) / d[j] for j in range(rank)) for i in range(rank)
    )
    rs = RootSystem(
        letter=letter,
        rank=rank,
        cartan=tuple(tuple(row) for row in cartan),
        d=d,
        positive_roots=tuple(positives),
        theta=theta,
        theta_coroot=(),  # placeholder, fixed below
        _root_set=frozenset(positives) | frozenset(
            tuple(-x for x in b) for b in positives
        ),
        killing_coroots=killing,
    )
    object.__setattr__(rs, "theta_coroot", rs.coroot(theta))
    assert rs.d_root(theta) == 1, "theta must be long in this normalization"
    for i in range(rank):
        up = tuple(t + (1 if j == i else 0) for j, t in enumerate(theta))
        assert not rs.is_root(up), "theta + simple root may not be a root"
    return rs


def build_root_system_str(lie_type: str) -> RootSystem:
    return build_root_system(*parse_lie_type(lie_type))


# ---------------------------------------------------------------------------
# affine layer


@dataclass(frozen=True)
class AffineRoot:
    """A real affine root ``level*delta + finite`` (imaginary when finite = 0)."""

    level: int
    finite: Vec

    def is_real(self) -> bool:
        return any(self.finite)

    def __neg__(self) -> "AffineRoot":
        return AffineRoot(-self.level, tuple(-x for x in self.finite))


def coroot_ht(v: CorootVec) -> int:
    return sum(v)


def coroot_leq(a: CorootVec, b: CorootVec) -> bool:
    """Componentwise comparison in the affine coroot lattice basis."""
    return all(x <= y for x, y in zip(a, b))


def q_degree(v: CorootVec) -> int:
    """Cohomological degree of the quantum monomial q^v, namely 2 ht(v)."""
    return 2 * sum(v)


class AffineRootData:
    """Affine root bookkeeping over one finite root system.

    The central coroot ``c`` has coordinates ``(1, m_1, ..., m_n)`` where the
    ``m_i`` are the coordinates of ``theta^vee``; the affine simple root
    ``alpha_0`` is ``delta - theta``.
    """

    def __init__(self, rs: RootSystem):
        self.rs = rs
        self.n = rs.rank
        self.c: CorootVec = (1,) + rs.theta_coroot
        self.delta_height = 1 + sum(rs.theta)
        self.affine_cartan = tuple(
            tuple(
                self.pairing(self.simple_root(j), self.coroot(self.simple_root(i)))
                for j in range(self.n + 1)
            )
            for i in range(self.n + 1)
        )

    @property
    def lie_type(self) -> str:
        return self.rs.lie_type

    def simple_root(self, i: int) -> AffineRoot:
        if i == 0:
            return AffineRoot(1, tuple(-x for x in self.rs.theta))
        return AffineRoot(0, self.rs.simple_root(i))

    def simple_coroot(self, i: int) -> CorootVec:
        return tuple(1 if j == i else 0 for j in range(self.n + 1))

    def is_root(self, a: AffineRoot) -> bool:
        if a.is_real():
            return a.finite in self.rs.all_roots()
        return a.level != 0

    def is_positive(self, a: AffineRoot) -> bool:
        if a.level:
            return a.level > 0
        return sum(a.finite) > 0

    def height(self, a: AffineRoot) -> int:
        return a.level * self.delta_height + sum(a.finite)

    def coroot(self, a: AffineRoot) -> CorootVec:
        """Integer coordinates of ``a^vee`` in ``(alpha_0^vee, ..., alpha_n^vee)``."""
        if not a.is_real():
            raise ValueError("imaginary roots have no coroot here; use .c for the center")
        ratio = Fraction(a.level) / self.rs.d_root(a.finite)
        assert ratio.denominator == 1
        r = int(ratio)
        fin = self.rs.coroot(a.finite)
        return (r,) + tuple(r * m + f for m, f in zip(self.rs.theta_coroot, fin))

    def finite_part_of_coroot(self, v: CorootVec) -> Vec:
        """Project a coroot vector to the finite coroot lattice (kills c)."""
        return tuple(v[i + 1] - v[0] * m for i, m in enumerate(self.rs.theta_coroot))

    def pairing(self, a: AffineRoot, v: CorootVec) -> int:
        """``<a, v>`` for an affine root and an affine coroot vector (delta pairs to 0)."""
        return self.rs.pairing(a.finite, self.finite_part_of_coroot(v))

    def weight_pairing(self, i: int, v: CorootVec) -> int:
        """``<lambda_i, v>`` for the i-th fundamental weight of the affine datum."""
        return v[i]

    def level_zero_weight_pairing(self, i: int, v: CorootVec) -> int:
        """``<lambda_i - m_i lambda_0, v>`` — the embedded finite fundamental weight."""
        if i == 0:
            raise ValueError("level-zero embedding is for i >= 1")
        return v[i] - self.rs.theta_coroot[i - 1] * v[0]

    def reflect(self, alpha: AffineRoot, mu: AffineRoot) -> AffineRoot:
        """``s_alpha(mu)`` for a real affine root alpha."""
        if not alpha.is_real():
            raise ValueError("cannot reflect by an imaginary root")
        k = self.rs.pairing(mu.finite, self.rs.coroot(alpha.finite))
        return AffineRoot(
            mu.level - alpha.level * k,
            self.rs.reflect_root(alpha.finite, mu.finite),
        )

    def real_positive_roots_leq(self, bound: CorootVec) -> list[AffineRoot]:
        """All real positive roots whose coroot is componentwise <= ``bound``."""
        out = []
        for k in range(0, bound[0] + 1):
            for beta in self.rs.all_roots():
                if k == 0 and sum(beta) < 0:
                    continue
                a = AffineRoot(k, beta)
                if coroot_leq(self.coroot(a), bound):
                    out.append(a)
        out.sort(key=lambda a: (self.height(a), a.finite))
        return out


@lru_cache(maxsize=None)
def affinize(letter: str, rank: int) -> AffineRootData:
    return AffineRootData(build_root_system(letter, rank))


def affinize_str(lie_type: str) -> AffineRootData:
    return affinize(*parse_lie_type(lie_type))


if __name__ == "__main__":
    import doctest

    doctest.testmod()
