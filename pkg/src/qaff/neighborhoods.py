"""Curve neighborhoods on the moment graph of the affine flag manifold.

Vertices are affine Weyl elements; there is an edge between ``w`` and
``w s_alpha`` for every real positive root alpha, and the T-stable curve it
names has degree ``alpha^vee``.  A degree-d neighborhood question is a
budget-bounded walk problem: which vertices can a walk starting at the
Schubert cell(s) reach while the componentwise degree budget lasts.

``curve_neighborhood`` computes the Bruhat-maximal reachable set through the
Hecke-product shortcut (neighborhood of a point, then one Hecke product per
component); ``neighborhood_by_search`` is the literal walk over the whole
Schubert variety, kept as an independent oracle.
"""

from __future__ import annotations

from dataclasses import dataclass

from .chevalley import enumerate_chevalley_roots
from .roots import AffineRoot, CorootVec, coroot_ht, coroot_leq
from .weyl import AffW, AffineWeylGroup


@dataclass(frozen=True)
class QBruhatCover:
    """One weighted cover ``u -> u s_alpha``; quantum iff ``q_deg`` is not None."""

    source: AffW
    target: AffW
    root: AffineRoot
    coroot: CorootVec
    q_deg: CorootVec | None

    @property
    def is_quantum(self) -> bool:
        return self.q_deg is not None


@dataclass(frozen=True)
class QBruhatChain:
    """A two-step chain u -> mid -> v with its type tag."""

    first: QBruhatCover
    second: QBruhatCover
    kind: str  # "11", "1q", "q1", "qq'", "qq''"

    @property
    def degree(self) -> CorootVec:
        a = self.first.q_deg or (0,) * len(self.first.coroot)
        b = self.second.q_deg or (0,) * len(self.second.coroot)
        return tuple(x + y for x, y in zip(a, b))


@dataclass
class MomentGraphSlice:
    W: AffineWeylGroup
    L: int
    vertices: list[AffW]
    edges: list[tuple[AffW, AffW, AffineRoot, CorootVec]]

    def to_dot(self) -> str:
        fmt = self.W.format
        lines = ["graph moment_slice {"]
        for w in self.vertices:
            lines.append(f'  "{fmt(w)}" [len={self.W.length(w)}];')
        for u, v, alpha, deg in self.edges:
            lines.append(
                f'  "{fmt(u)}" -- "{fmt(v)}" [label="{list(deg)}"];'
            )
        lines.append("}")
        return "\n".join(lines)

    def to_json_obj(self) -> dict:
        fmt = self.W.format
        return {
            "schema_version": 1,
            "truncation": self.L,
            "vertices": [
                {"w": list(self.W.reduced_word(w)), "name": fmt(w), "length": self.W.length(w)}
                for w in self.vertices
            ],
            "edges": [
                {
                    "source": fmt(u),
                    "target": fmt(v),
                    "root": {"level": alpha.level, "finite": list(alpha.finite)},
                    "degree": list(deg),
                }
                for u, v, alpha, deg in self.edges
            ],
        }


def moment_graph_slice(W: AffineWeylGroup, L: int) -> MomentGraphSlice:
    """All vertices of length <= L and the edges staying inside the slice."""
    layers = W.enumerate_up_to(L)
    vertices = [w for ell in sorted(layers) for w in layers[ell]]
    index = set(vertices)
    edges = []
    # a reflection moving within the slice satisfies len(s_alpha) <= 2L
    npos = W.rs.num_positive
    ard = W.ard
    k = 0
    refs: list[AffineRoot] = []
    while 2 * k - npos <= 2 * L:
        for beta in W.rs.all_roots():
            if k == 0 and sum(beta) < 0:
                continue
            refs.append(AffineRoot(k, beta))
        k += 1
    for w in vertices:
        for alpha in refs:
            u = W.multiply(w, W.reflection(alpha))
            if u in index and W.length(u) > W.length(w):
                edges.append((w, u, alpha, ard.coroot(alpha)))
    return MomentGraphSlice(W, L, vertices, edges)


def _reachable(W: AffineWeylGroup, starts: list[AffW], d: CorootVec) -> set[AffW]:
    """Vertices reachable from ``starts`` by walks of componentwise degree <= d."""
    ard = W.ard
    moves = [
        (W.reflection(a), ard.coroot(a)) for a in ard.real_positive_roots_leq(d)
    ]
    budgets: dict[AffW, list[CorootVec]] = {}
    stack: list[tuple[AffW, CorootVec]] = [(w, d) for w in starts]

    def record(w: AffW, b: CorootVec) -> bool:
        kept = budgets.setdefault(w, [])
        if any(coroot_leq(b, old) for old in kept):
            return False
        kept[:] = [old for old in kept if not coroot_leq(old, b)]
        kept.append(b)
        return True

    for w, b in stack:
        record(w, b)
    while stack:
        w, b = stack.pop()
        for s, cost in moves:
            if coroot_leq(cost, b):
                w2 = W.multiply(w, s)
                b2 = tuple(x - y for x, y in zip(b, cost))
                if record(w2, b2):
                    stack.append((w2, b2))
    return set(budgets)


def bruhat_maximal(W: AffineWeylGroup, elts: set[AffW]) -> list[AffW]:
    out = []
    for w in elts:
        if not any(v != w and W.bruhat_leq(w, v) for v in elts):
            out.append(w)
    out.sort(key=lambda w: (W.length(w), W.reduced_word(w)))
    return out


def z_components(W: AffineWeylGroup, d: CorootVec) -> list[AffW]:
    """Bruhat-maximal elements reachable from the identity within budget d."""
    if coroot_ht(d) == 0:
        return [W.identity]
    return bruhat_maximal(W, _reachable(W, [W.identity], d))


def curve_neighborhood(W: AffineWeylGroup, u: AffW, d: CorootVec) -> list[AffW]:
    """Components of the degree-d neighborhood of X(u), via Hecke products."""
    hits = {W.hecke_product(u, z) for z in z_components(W, d)}
    return bruhat_maximal(W, hits)


def neighborhood_by_search(W: AffineWeylGroup, u: AffW, d: CorootVec) -> list[AffW]:
    """Independent oracle: walk from every cell of X(u), then take maxima."""
    lu = W.length(u)
    layers = W.enumerate_up_to(lu)
    cells = [v for ell in layers for v in layers[ell] if W.bruhat_leq(v, u)]
    return bruhat_maximal(W, _reachable(W, cells, d))


def gw_invariant(W: AffineWeylGroup, i: int, u: AffW, w: AffW, d: CorootVec) -> int:
    """Coefficient-level Gromov-Witten number: nonzero only on degree match.

    This is the coefficient of ``q^d eps_w`` in the quantum part of
    ``Lambda_i(eps_u)``: zero unless ``len(u) + 1 = len(w) + 2 ht(d)``, and
    otherwise ``<lambda_i, d>`` times the indicator that u is a component of
    the degree-d neighborhood of X(w).
    """
    if W.length(u) + 1 != W.length(w) + 2 * coroot_ht(d):
        return 0
    comps = curve_neighborhood(W, w, d)
    if u not in comps:
        return 0
    return W.ard.weight_pairing(i, d)


def qbruhat_covers(W: AffineWeylGroup, u: AffW) -> list[QBruhatCover]:
    """All weighted covers out of u: classical ones and quantum ones.

    Classical covers come from the Bruhat cover scan.  Quantum covers need
    ``len(u s_alpha) = len(u) + 1 - 2 ht(alpha^vee)``, which forces alpha into
    the distinguished root set, so only those are scanned.
    """
    ard = W.ard
    out: list[QBruhatCover] = []
    lu = W.length(u)
    for v, alpha in W.bruhat_covers_up(u):
        out.append(QBruhatCover(u, v, alpha, ard.coroot(alpha), None))
    for cr in enumerate_chevalley_roots(W):
        v = W.multiply(u, W.reflection(cr.root))
        if W.length(v) == lu + 1 - 2 * cr.coroot_height:
            out.append(QBruhatCover(u, v, cr.root, cr.coroot, cr.coroot))
    return out


def _chain_kind(first: QBruhatCover, second: QBruhatCover, rs) -> str:
    fq, sq = first.is_quantum, second.is_quantum
    if not fq and not sq:
        return "11"
    if not fq and sq:
        return "1q"
    if fq and not sq:
        return "q1"
    pair = rs.pairing(first.root.finite, rs.coroot(second.root.finite))
    return "qq'" if pair == 0 else "qq''"


def qbruhat_chains(
    W: AffineWeylGroup, u: AffW, v: AffW, kappa: CorootVec
) -> list[QBruhatChain]:
    """All two-step weighted chains from u to v of total quantum degree kappa."""
    out = []
    for c1 in qbruhat_covers(W, u):
        for c2 in qbruhat_covers(W, c1.target):
            if c2.target != v:
                continue
            chain = QBruhatChain(c1, c2, _chain_kind(c1, c2, W.rs))
            if chain.degree == tuple(kappa):
                out.append(chain)
    return out


if __name__ == "__main__":
    import doctest

    doctest.testmod()
