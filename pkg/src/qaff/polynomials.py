"""Sparse multivariate Laurent polynomials with exact rational coefficients.

Everything downstream (coinvariant algebra classes, quantum parameters,
integrable-system relations) works over one representation: a dict mapping
exponent tuples to nonzero ``Fraction`` coefficients.  Exponents are plain
``int`` and may be negative, which is what the spectral parameter in the Lax
matrix needs; operations that cannot support negative exponents say so.

>>> x = Poly.variable(2, 0)
>>> y = Poly.variable(2, 1)
>>> str((x + y) * (x - y))
'x0^2 - x1^2'
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Sequence

Exp = tuple[int, ...]
Scalar = int | Fraction


def _as_fraction(c: Scalar) -> Fraction:
    return c if isinstance(c, Fraction) else Fraction(c)


class Poly:
    """Immutable-by-convention sparse polynomial in ``nvars`` variables."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Mapping[Exp, Scalar] | None = None):
        self.nvars = nvars
        clean: dict[Exp, Fraction] = {}
        if terms:
            for e, c in terms.items():
                if len(e) != nvars:
                    raise ValueError(f"exponent {e} has wrong arity for {nvars} variables")
                f = _as_fraction(c)
                if f:
                    clean[tuple(e)] = f
        self.terms = clean

    # -- constructors ---------------------------------------------------

    @classmethod
    def zero(cls, nvars: int) -> "Poly":
        return cls(nvars)

    @classmethod
    def one(cls, nvars: int) -> "Poly":
        return cls(nvars, {(0,) * nvars: Fraction(1)})

    @classmethod
    def const(cls, nvars: int, c: Scalar) -> "Poly":
        return cls(nvars, {(0,) * nvars: _as_fraction(c)})

    @classmethod
    def variable(cls, nvars: int, i: int) -> "Poly":
        e = [0] * nvars
        e[i] = 1
        return cls(nvars, {tuple(e): Fraction(1)})

    @classmethod
    def monomial(cls, nvars: int, exps: Sequence[int], coeff: Scalar = 1) -> "Poly":
        return cls(nvars, {tuple(exps): _as_fraction(coeff)})

    # -- basic queries ---------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def coefficient(self, exps: Sequence[int]) -> Fraction:
        return self.terms.get(tuple(exps), Fraction(0))

    @property
    def constant_term(self) -> Fraction:
        return self.terms.get((0,) * self.nvars, Fraction(0))

    def is_constant(self) -> bool:
        return all(all(x == 0 for x in e) for e in self.terms)

    def __iter__(self) -> Iterator[tuple[Exp, Fraction]]:
        return iter(self.terms.items())

    # -- arithmetic --------------------------------------------------------

    def _check(self, other: "Poly") -> None:
        if self.nvars != other.nvars:
            raise ValueError("mixed variable counts")

    def __add__(self, other: "Poly | Scalar") -> "Poly":
        if isinstance(other, (int, Fraction)):
            other = Poly.const(self.nvars, other)
        self._check(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, Fraction(0)) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        p = Poly.__new__(Poly)
        p.nvars = self.nvars
        p.terms = out
        return p

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        p = Poly.__new__(Poly)
        p.nvars = self.nvars
        p.terms = {e: -c for e, c in self.terms.items()}
        return p

    def __sub__(self, other: "Poly | Scalar") -> "Poly":
        if isinstance(other, (int, Fraction)):
            other = Poly.const(self.nvars, other)
        return self + (-other)

    def __rsub__(self, other: Scalar) -> "Poly":
        return Poly.const(self.nvars, other) - self

    def __mul__(self, other: "Poly | Scalar") -> "Poly":
        if isinstance(other, (int, Fraction)):
            c = _as_fraction(other)
            p = Poly.__new__(Poly)
            p.nvars = self.nvars
            p.terms = {e: c * v for e, v in self.terms.items()} if c else {}
            return p
        self._check(other)
        out: dict[Exp, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = out.get(e, Fraction(0)) + c1 * c2
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        p = Poly.__new__(Poly)
        p.nvars = self.nvars
        p.terms = out
        return p

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Poly":
        if k < 0:
            raise ValueError("negative powers are not defined for Poly")
        out = Poly.one(self.nvars)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Poly.const(self.nvars, other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    __hash__ = None  # type: ignore[assignment]  # mutable dict inside

    # -- structure ----------------------------------------------------------

    def weighted_degree(self, weights: Sequence[int] | None = None) -> int:
        """Maximum weighted total degree over the support (0 for the zero poly)."""
        if not self.terms:
            return 0
        if weights is None:
            weights = (1,) * self.nvars
        return max(sum(w * x for w, x in zip(weights, e)) for e in self.terms)

    def homogeneous_components(self, weights: Sequence[int] | None = None) -> dict[int, "Poly"]:
        if weights is None:
            weights = (1,) * self.nvars
        buckets: dict[int, dict[Exp, Fraction]] = {}
        for e, c in self.terms.items():
            d = sum(w * x for w, x in zip(weights, e))
            buckets.setdefault(d, {})[e] = c
        return {d: Poly(self.nvars, t) for d, t in sorted(buckets.items())}

    def is_homogeneous(self, weights: Sequence[int] | None = None) -> bool:
        return len(self.homogeneous_components(weights)) <= 1

    def coefficient_of(self, var: int, power: int) -> "Poly":
        """Collect the coefficient of ``x_var^power`` (exponent of ``var`` zeroed out)."""
        out: dict[Exp, Fraction] = {}
        for e, c in self.terms.items():
            if e[var] == power:
                ee = list(e)
                ee[var] = 0
                out[tuple(ee)] = c
        return Poly(self.nvars, out)

    def set_var_zero(self, var: int) -> "Poly":
        """Substitute ``x_var := 0`` (drops every term with a positive exponent there)."""
        out: dict[Exp, Fraction] = {}
        for e, c in self.terms.items():
            if e[var] < 0:
                raise ValueError("cannot set a variable with negative exponents to zero")
            if e[var] == 0:
                out[e] = c
        return Poly(self.nvars, out)

    def substitute(self, images: Sequence["Poly"]) -> "Poly":
        """Ring homomorphism sending ``x_i`` to ``images[i]``.

        Requires nonnegative exponents throughout.  All images must share one
        variable count, which becomes the result's.
        """
        if len(images) != self.nvars:
            raise ValueError("need one image per variable")
        m = images[0].nvars if images else 0
        out = Poly.zero(m)
        powers: list[dict[int, Poly]] = [dict() for _ in range(self.nvars)]
        for e, c in self.terms.items():
            term = Poly.const(m, c)
            for i, k in enumerate(e):
                if k < 0:
                    raise ValueError("cannot substitute into negative exponents")
                if k == 0:
                    continue
                cache = powers[i]
                if k not in cache:
                    cache[k] = images[i] ** k
                term = term * cache[k]
            out = out + term
        return out

    # -- display -------------------------------------------------------------

    def format(self, names: Sequence[str] | None = None) -> str:
        if names is None:
            names = [f"x{i}" for i in range(self.nvars)]
        if not self.terms:
            return "0"
        bits: list[str] = []
        for e, c in sorted(self.terms.items(), key=lambda kv: (-sum(kv[0]), kv[0])):
            vars_part = "*".join(
                (names[i] if k == 1 else f"{names[i]}^{k}")
                for i, k in enumerate(e)
                if k != 0
            )
            if not vars_part:
                body = str(abs(c))
            elif abs(c) == 1:
                body = vars_part
            else:
                body = f"{abs(c)}*{vars_part}"
            sign = "-" if c < 0 else "+"
            bits.append(f"{sign} {body}")
        s = " ".join(bits)
        return s[2:] if s.startswith("+ ") else s[0] + s[2:]

    def __str__(self) -> str:
        return self.format()

    def __repr__(self) -> str:
        return f"Poly({self.nvars}, {self.format()})"


def exact_div_linear(f: Poly, linear: Poly) -> Poly:
    """Divide ``f`` by a linear form with zero constant term; remainder must vanish.

    This is the workhorse of divided-difference operators: the numerator there
    is always divisible by construction, and a nonzero remainder means a bug
    upstream, so it raises rather than returning a pair.

    >>> x, y = Poly.variable(2, 0), Poly.variable(2, 1)
    >>> exact_div_linear(x * x - y * y, x - y) == x + y
    True
    """
    lin_terms = [(e, c) for e, c in linear.terms.items()]
    if not lin_terms or any(sum(e) != 1 for e, _ in lin_terms):
        raise ValueError("divisor must be a nonzero linear form without constant term")
    pivot = max(lin_terms, key=lambda ec: abs(ec[1]))[0].index(1)
    a = linear.coefficient(tuple(1 if i == pivot else 0 for i in range(linear.nvars)))
    rest = linear - Poly.monomial(linear.nvars, tuple(1 if i == pivot else 0 for i in range(linear.nvars)), a)

    quot = Poly.zero(f.nvars)
    rem = f
    while rem.terms:
        e, c = max(rem.terms.items(), key=lambda kv: (kv[0][pivot], kv[0]))
        if e[pivot] <= 0:
            break
        te = list(e)
        te[pivot] -= 1
        t = Poly.monomial(f.nvars, tuple(te), c / a)
        quot = quot + t
        rem = rem - t * linear
    if rem.terms:
        raise ValueError(f"nonzero remainder in exact linear division: {rem}")
    return quot


def solve_exact(
    rows: Sequence[Sequence[Scalar]], rhs: Sequence[Scalar]
) -> list[Fraction] | None:
    """Solve ``rows @ x == rhs`` over the rationals; ``None`` when inconsistent.

    Free variables are set to zero, so the answer is one solution, not the
    general one — exactly what expressing a class in a spanning set needs.
    """
    m = len(rows)
    if m != len(rhs):
        raise ValueError("row/rhs length mismatch")
    n = len(rows[0]) if m else 0
    aug = [[_as_fraction(v) for v in row] + [_as_fraction(rhs[i])] for i, row in enumerate(rows)]
    pivots: list[tuple[int, int]] = []
    r = 0
    for col in range(n):
        sel = next((i for i in range(r, m) if aug[i][col]), None)
        if sel is None:
            continue
        aug[r], aug[sel] = aug[sel], aug[r]
        inv = 1 / aug[r][col]
        aug[r] = [v * inv for v in aug[r]]
        for i in range(m):
            if i != r and aug[i][col]:
                f = aug[i][col]
                aug[i] = [a - f * b for a, b in zip(aug[i], aug[r])]
        pivots.append((r, col))
        r += 1
        if r == m:
            break
    for i in range(r, m):
        if aug[i][n]:
            return None
    x = [Fraction(0)] * n
    for row, col in pivots:
        x[col] = aug[row][n]
    return x


def matrix_rank(rows: Sequence[Sequence[Scalar]]) -> int:
    """Rank over the rationals, by fraction-free-ish Gaussian elimination."""
    work = [[_as_fraction(v) for v in row] for row in rows]
    m = len(work)
    n = len(work[0]) if m else 0
    rank = 0
    for col in range(n):
        sel = next((i for i in range(rank, m) if work[i][col]), None)
        if sel is None:
            continue
        work[rank], work[sel] = work[sel], work[rank]
        inv = 1 / work[rank][col]
        work[rank] = [v * inv for v in work[rank]]
        for i in range(rank + 1, m):
            if work[i][col]:
                f = work[i][col]
                work[i] = [a - f * b for a, b in zip(work[i], work[rank])]
        rank += 1
        if rank == m:
            break
    return rank


if __name__ == "__main__":
    import doctest

    doctest.testmod()
