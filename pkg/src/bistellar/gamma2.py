"""The move graph of oriented 2-spheres: cycles, their classification, and
the rational cocycle determined by the catalogued elementary-cycle values.

Complexity of a 2-sphere with k vertices is k, k+1/3 or k+2/3 according to
whether the minimal vertex degree is 3, 4 or at least 5; the complexity of
a move is the larger endpoint complexity, plus 1/6 when they tie.  Every
integer cycle in the move graph decomposes into "elementary" cycles of two
kinds:

* commutation cycles of two moves with disjoint, vertex-sharing or
  edge-sharing supports (kinds ``comm-a`` .. ``comm-i``);
* three special small cycles (kinds ``spec-a``, ``spec-b``, ``spec-c``).

The cocycle value on an elementary cycle is an exact rational determined by
the kind, by triangle counts in marked angular sectors around the shared
vertices of the supports, and by an orientation sign.  The decomposition
algorithm peels the chain stratum by stratum, strictly decreasing the
(max complexity, total weight there) measure, so it terminates and its
output is re-verified by exact chain arithmetic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .canonical import OKey
from .errors import (
    ClosureFailure,
    DecompositionStuck,
    InvalidMove,
    InvalidParams,
    NotACycle,
    NotApplicable,
    UnrecognizedConfiguration,
)
from .moves import (
    BistellarMove,
    GammaEdgeKey,
    apply_move,
    edge_key,
    move_from_endpoint,
    u_set,
)
from .simplicial import OrientedComplex, Simplex

# ---------------------------------------------------------------------------
# complexity stratification
# ---------------------------------------------------------------------------

_COMPLEXITY_CACHE: dict[OKey, Fraction] = {}


def sphere_complexity(L: OrientedComplex) -> Fraction:
    """k, k+1/3 or k+2/3 for a 2-sphere with k vertices and min degree 3, 4, >=5."""
    degs = [L.degree(v) for v in L.vertices]
    m = min(degs)
    bucket = 0 if m <= 3 else (1 if m == 4 else 2)
    return Fraction(len(degs)) + Fraction(bucket, 3)


def complexity_of_key(key: OKey) -> Fraction:
    hit = _COMPLEXITY_CACHE.get(key)
    if hit is None:
        degs: dict[int, int] = {}
        for f in key.facets:
            for v in f:
                degs[v] = degs.get(v, 0) + 1
        m = min(degs.values())
        bucket = 0 if m <= 3 else (1 if m == 4 else 2)
        hit = Fraction(len(degs)) + Fraction(bucket, 3)
        _COMPLEXITY_CACHE[key] = hit
    return hit


def move_complexity(move: BistellarMove, result: OrientedComplex | None = None) -> Fraction:
    a1 = sphere_complexity(move.host)
    a2 = sphere_complexity(result if result is not None else apply_move(move))
    return a1 + Fraction(1, 6) if a1 == a2 else max(a1, a2)


def edge_complexity(key: GammaEdgeKey) -> Fraction:
    a1, a2 = complexity_of_key(key.tail), complexity_of_key(key.head)
    return a1 + Fraction(1, 6) if a1 == a2 else max(a1, a2)


def decreasing_moves(L: OrientedComplex) -> list[tuple[BistellarMove, OrientedComplex]]:
    """All moves strictly decreasing the sphere complexity, with results."""
    from .moves import enumerate_moves

    a = sphere_complexity(L)
    out = []
    for mv in enumerate_moves(L):
        res = apply_move(mv)
        if sphere_complexity(res) < a:
            out.append((mv, res))
    return out


# ---------------------------------------------------------------------------
# integer/rational 1-chains on canonical edges
# ---------------------------------------------------------------------------


@dataclass
class Gamma2Chain:
    """Finitely supported chain on canonical move-graph edges.

    An edge and its inverse are one key with opposite signs, so the
    antisymmetry {beta^-1} = -{beta} holds by construction.
    """

    terms: dict[GammaEdgeKey, Fraction] = field(default_factory=dict)

    def add_edge(self, key: GammaEdgeKey, coeff) -> "Gamma2Chain":
        c = self.terms.get(key, Fraction(0)) + Fraction(coeff)
        if c:
            self.terms[key] = c
        else:
            self.terms.pop(key, None)
        return self

    def add_move(self, move: BistellarMove, coeff=1, result: OrientedComplex | None = None) -> "Gamma2Chain":
        se = edge_key(move, result)
        if se is not None:
            self.add_edge(se.key, se.sign * Fraction(coeff))
        return self

    def coeff(self, key: GammaEdgeKey) -> Fraction:
        return self.terms.get(key, Fraction(0))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        return isinstance(other, Gamma2Chain) and self.terms == other.terms

    def plus(self, other: "Gamma2Chain", scale=1) -> "Gamma2Chain":
        out = Gamma2Chain(dict(self.terms))
        s = Fraction(scale)
        for k, v in other.terms.items():
            out.add_edge(k, v * s)
        return out

    def scaled(self, scale) -> "Gamma2Chain":
        s = Fraction(scale)
        return Gamma2Chain({k: v * s for k, v in self.terms.items() if v * s})

    def boundary(self) -> dict[OKey, Fraction]:
        out: dict[OKey, Fraction] = {}
        for k, c in self.terms.items():
            for key, sgn in ((k.head, 1), (k.tail, -1)):
                v = out.get(key, Fraction(0)) + sgn * c
                if v:
                    out[key] = v
                else:
                    out.pop(key, None)
        return out

    def is_cycle(self) -> bool:
        return not self.boundary()

    def is_integral(self) -> bool:
        return all(v.denominator == 1 for v in self.terms.values())

    def mirror(self) -> "Gamma2Chain":
        """Image under orientation reversal of all spheres."""
        out = Gamma2Chain()
        for k, c in self.terms.items():
            mv = _materialize_cached(k)
            out.add_move(BistellarMove(-mv.host, mv.sigma, mv.tau), c)
        return out

    def max_complexity(self) -> Fraction | None:
        if not self.terms:
            return None
        return max(edge_complexity(k) for k in self.terms)

    def to_json(self) -> list:
        return [
            [k.encode(), str(v.numerator), str(v.denominator)]
            for k, v in sorted(self.terms.items(), key=lambda kv: kv[0].encode())
        ]

    @staticmethod
    def from_json(data: list) -> "Gamma2Chain":
        out = Gamma2Chain()
        for enc, num, den in data:
            out.add_edge(GammaEdgeKey.decode(enc), Fraction(int(num), int(den)))
        return out


_MATERIALIZE_CACHE: dict[GammaEdgeKey, BistellarMove] = {}


def _materialize_cached(key: GammaEdgeKey) -> BistellarMove:
    hit = _MATERIALIZE_CACHE.get(key)
    if hit is None:
        from .moves import materialize_edge

        hit = materialize_edge(key)
        _MATERIALIZE_CACHE[key] = hit
    return hit


# ---------------------------------------------------------------------------
# the value table
# ---------------------------------------------------------------------------


def rho(p: int, q: int) -> Fraction:
    if p < 0 or q < 0:
        raise InvalidParams(f"negative sector count ({p}, {q})")
    return Fraction(q - p, (p + q + 2) * (p + q + 3) * (p + q + 4))


def omega(p: int) -> Fraction:
    if p < 0:
        raise InvalidParams(f"negative sector count {p}")
    return Fraction(1, (p + 2) * (p + 3))


_TWELFTH = Fraction(1, 12)


def c_value(kind: str, params: tuple[int, ...]) -> Fraction:
    """Exact cocycle value on an elementary cycle of the given kind."""
    if kind in ("comm-a", "comm-d", "comm-g"):
        return Fraction(0)
    if kind in ("comm-b", "comm-e", "comm-h"):
        p, q = params
        return rho(p, q)
    if kind in ("comm-c", "comm-i"):
        p, q = params
        return rho(0, q) - rho(0, p)
    if kind == "comm-f":
        p, q = params
        return rho(0, q) + rho(0, p)
    if kind == "spec-a":
        p, q, r = params
        return omega(p) - omega(q) + omega(r) - _TWELFTH
    if kind == "spec-b":
        p, q, r, k = params
        return omega(p) - omega(q) - omega(r) + omega(k)
    if kind == "spec-c":
        p, q, r, k, l = params
        return omega(p) + omega(q) + omega(r) + omega(k) + omega(l) - _TWELFTH
    raise InvalidParams(f"unknown kind {kind}")


@dataclass
class ElementaryCycle:
    """A catalogued cycle: ``<c, chain> = sign * c_value(kind, params)``."""

    kind: str
    params: tuple[int, ...]
    chain: Gamma2Chain
    witness: tuple
    sign: int

    @property
    def value(self) -> Fraction:
        return self.sign * c_value(self.kind, self.params)


# ---------------------------------------------------------------------------
# move descriptors and supports
# ---------------------------------------------------------------------------


def _move_tau(L: OrientedComplex, sigma: Simplex, used: tuple[int, ...] = ()) -> Simplex:
    """The tau of the unique move at sigma, or raise NotApplicable.

    ``used`` reserves vertex ids not to be handed out as fresh labels.
    """
    sigma = tuple(sorted(sigma))
    if sigma not in L.complex:
        raise NotApplicable(f"{sigma} is not a face")
    k = len(sigma) - 1
    if k == L.dim:
        v = 0
        taken = set(L.vertices) | set(used)
        while v in taken:
            v += 1
        return (v,)
    ss = set(sigma)
    stars = [f for f in L.facets if ss <= set(f)]
    m = L.dim - k + 1  # number of tau vertices
    uni: set[int] = set()
    for f in stars:
        uni |= set(f) - ss
    if len(stars) != m or len(uni) != m:
        raise NotApplicable(f"link of {sigma} is not a simplex boundary")
    tau = tuple(sorted(uni))
    if any(set(tau) <= set(f) for f in L.facets):
        raise NotApplicable(f"{tau} is a face, not an empty simplex")
    return tau


def _support_triangles(L: OrientedComplex, sigma: Simplex, tau: Simplex) -> tuple[set, set]:
    """(triangle set, vertex set) of the move's support in the current state."""
    if len(sigma) == 3:
        return {sigma}, set(sigma)
    if len(sigma) == 2:
        tris = {tuple(sorted(sigma + (t,))) for t in tau}
        return tris, set(sigma) | set(tau)
    # removal: support is the closed star of the vertex
    ss = set(sigma)
    tris = {f for f in L.facets if ss <= set(f)}
    return tris, set(sigma) | set(tau)


def _positive_link_cycle(L: OrientedComplex, w: int) -> list[int]:
    return L.link_cycle(w)


def _sector_counts(L: OrientedComplex, w: int, tris1: set, tris2: set) -> tuple[int, int]:
    """Triangle counts (p, q) in the two angular sectors at w between the
    wedges of two supports; q follows support 1 in the positive direction."""
    cycle = _positive_link_cycle(L, w)
    d = len(cycle)
    labels = []
    for i in range(d):
        tri = tuple(sorted((w, cycle[i], cycle[(i + 1) % d])))
        if tri in tris1 and tri in tris2:
            raise UnrecognizedConfiguration("supports overlap in a triangle")
        if tri in tris1:
            labels.append(1)
        elif tri in tris2:
            labels.append(2)
        else:
            labels.append(0)
    if 1 not in labels or 2 not in labels:
        raise UnrecognizedConfiguration("support wedges do not both meet the link")

    def arc_end(mark: int) -> int:
        # index just past the last edge of the (cyclically contiguous) run
        idxs = [i for i, m in enumerate(labels) if m == mark]
        if len(idxs) == d:
            raise UnrecognizedConfiguration("wedge covers the whole link")
        # find the start of the run: an index with the previous label different
        starts = [i for i in idxs if labels[(i - 1) % d] != mark]
        if len(starts) != 1:
            raise UnrecognizedConfiguration("wedge is not contiguous")
        start = starts[0]
        return (start + len(idxs)) % d

    end1, end2 = arc_end(1), arc_end(2)
    # walk from the end of wedge 1 to the start of wedge 2, counting 0-edges
    q = 0
    i = end1
    while labels[i] == 0:
        q += 1
        i = (i + 1) % d
    if labels[i] != 2:
        raise UnrecognizedConfiguration("supports interleave around the vertex")
    p = 0
    i = end2
    while labels[i] == 0:
        p += 1
        i = (i + 1) % d
    if labels[i] != 1:
        raise UnrecognizedConfiguration("supports interleave around the vertex")
    return p, q


def _classify_pair(L: OrientedComplex, m1: tuple[Simplex, Simplex], m2: tuple[Simplex, Simplex]):
    """Classify a normalized ordered pair of moves (no removals) on L.

    Returns (kind, params, sign).  The figure conventions are read with the
    positive rotation induced by the orientation of L.
    """
    (s1, t1), (s2, t2) = m1, m2
    k1, k2 = len(s1) - 1, len(s2) - 1
    if {k1, k2} - {1, 2}:
        raise UnrecognizedConfiguration("normalized pair must consist of flips/insertions")
    tris1, v1 = _support_triangles(L, s1, t1)
    tris2, v2 = _support_triangles(L, s2, t2)
    inter = v1 & v2
    if not inter:
        kind = {(2, 2): "comm-a", (2, 1): "comm-d", (1, 2): "comm-d", (1, 1): "comm-g"}[(k1, k2)]
        return kind, (), 1
    if len(inter) == 1:
        (w,) = inter
        p, q = _sector_counts(L, w, tris1, tris2)
        kind = {(2, 2): "comm-b", (2, 1): "comm-e", (1, 2): "comm-e", (1, 1): "comm-h"}[(k1, k2)]
        sign = 1
        if k1 == 1 and w in s1:
            sign = -sign
        if k2 == 1 and w in s2:
            sign = -sign
        return kind, (p, q), sign
    if len(inter) == 2:
        M = tuple(sorted(inter))
        if M not in L.complex:
            raise UnrecognizedConfiguration("two shared vertices without a shared edge")
        for s, t in (m1, m2):
            if len(s) == 2 and (M == s or M == tuple(sorted(t))):
                raise UnrecognizedConfiguration("supports share a diagonal")
        if k1 == 1 and k2 == 2:
            # pin the insertion-first order; swapping the pair negates the cycle
            kind, params, sign = _classify_pair(L, m2, m1)
            return kind, params, -sign
        # direct M so that support 1 lies on its left
        tri1 = next(t for t in tris1 if set(M) <= set(t))
        (x1,) = set(tri1) - set(M)
        t_, h_ = M
        if L.sign_of((t_, h_, x1)) != 1:
            t_, h_ = h_, t_
        union = tris1 | tris2
        n_h = sum(1 for f in L.facets if h_ in f and f not in union)
        n_t = sum(1 for f in L.facets if t_ in f and f not in union)
        if k1 == 2 and k2 == 2:
            return "comm-c", (n_h, n_t), 1
        if k1 == 2 and k2 == 1:
            sign = 1 if h_ in s2 else -1
            return "comm-f", (n_t, n_h), sign
        # two flips sharing a quad side
        sign = 1
        if t_ in s1:
            sign = -sign
        if h_ in s2:
            sign = -sign
        return "comm-i", (n_t, n_h), sign
    raise UnrecognizedConfiguration(f"supports share {len(inter)} vertices")


def _normalize_witness(L: OrientedComplex, m1, m2):
    """Re-anchor removals as insertions; returns (L, m1, m2, sign)."""
    sign = 1
    (s1, t1), (s2, t2) = m1, m2
    if len(s1) == 1:
        L = apply_move(BistellarMove(L, s1, t1))
        m1 = (t1, s1)
        (s2, t2) = m2
        sign = -sign
    if len(s2) == 1:
        L2 = apply_move(BistellarMove(L, s2, t2))
        m2 = (t2, s2)
        L = L2
        sign = -sign
    return L, m1, m2, sign


def classify_elementary(L: OrientedComplex, sigma1: Simplex, sigma2: Simplex):
    """Kind and sector parameters of the commutation cycle gamma(L, s1, s2)."""
    m1 = (tuple(sorted(sigma1)), _move_tau(L, sigma1))
    m2 = (tuple(sorted(sigma2)), _move_tau(L, sigma2))
    Ln, m1n, m2n, nsign = _normalize_witness(L, m1, m2)
    kind, params, csign = _classify_pair(Ln, m1n, m2n)
    return kind, params, nsign * csign


# ---------------------------------------------------------------------------
# commutation cycles (first type)
# ---------------------------------------------------------------------------


def commutation_cycle(L: OrientedComplex, sigma1, sigma2) -> ElementaryCycle:
    """The 4-move cycle commuting the moves at sigma1 and sigma2.

    Raises NotApplicable when the paper's three conditions fail, and
    ClosureFailure if the constructed chain is not a cycle.
    """
    sigma1, sigma2 = tuple(sorted(sigma1)), tuple(sorted(sigma2))
    tau1 = _move_tau(L, sigma1)
    tau2 = _move_tau(L, sigma2, used=tau1)
    union = tuple(sorted(set(sigma1) | set(sigma2)))
    if union in L.complex:
        raise NotApplicable("a simplex contains both sigma1 and sigma2")
    chain = Gamma2Chain()
    state = L
    plan = [(sigma1, tau1), (sigma2, tau2), (tau1, sigma1), (tau2, sigma2)]
    for s, t in plan:
        mv = BistellarMove(state, s, t)
        try:
            nxt = apply_move(mv)
        except InvalidMove as exc:
            raise NotApplicable(f"move at {s} is not available mid-cycle: {exc}") from exc
        chain.add_move(mv, 1, nxt)
        state = nxt
    if state.complex != L.complex:
        raise ClosureFailure("commutation did not return to the start complex")
    if not chain.is_cycle():
        raise ClosureFailure("commutation chain has nonzero boundary")
    kind, params, sign = classify_elementary(L, sigma1, sigma2)
    return ElementaryCycle(kind, params, chain, (L, sigma1, sigma2), sign)


# ---------------------------------------------------------------------------
# special cycles (second type)
# ---------------------------------------------------------------------------


def _try_moves(state: OrientedComplex, plan) -> tuple[Gamma2Chain, OrientedComplex] | None:
    chain = Gamma2Chain()
    for s, t in plan:
        mv = BistellarMove(state, tuple(sorted(s)), tuple(sorted(t)))
        try:
            nxt = apply_move(mv)
        except InvalidMove:
            return None
        chain.add_move(mv, 1, nxt)
        state = nxt
    return chain, state


def special_cycle_a(move: BistellarMove, result: OrientedComplex | None = None) -> ElementaryCycle | None:
    """The 3-edge cycle (insert, flip, remove) across a flip that trades a
    degree-3 vertex for another; None if the move lacks the pattern."""
    X = move.host
    if len(move.sigma) != 2:
        return None
    Y = result if result is not None else apply_move(move)
    sig, tau = move.sigma, move.tau
    cands = [
        (a, b)
        for a in tau
        if X.degree(a) == 3
        for b in sig
        if X.degree(b) == 4
    ]
    for a, b in cands:
        nbrs_a = {v for f in X.facets if a in f for v in f} - {a}
        if not set(sig) <= nbrs_a:
            continue
        (T,) = nbrs_a - set(sig)
        Lap = next(v for v in tau if v != a)
        Rv = next(v for v in sig if v != b)
        link_tri = tuple(sorted((b, Rv, T)))
        # T-sphere: remove a from X
        got = _try_moves(X, [((a,), link_tri)])
        if got is None:
            continue
        _, Tsphere = got
        built = _try_moves(Tsphere, [(link_tri, (a,)), (sig, tau), ((b,), tuple(sorted((Lap, a, T))))])
        if built is None:
            continue
        chain, end = built
        if not chain.is_cycle():
            continue
        patch = [
            tuple(sorted(t))
            for t in ((Lap, b, T), (b, a, T), (a, Rv, T), (Lap, b, Rv), (b, a, Rv))
        ]
        if any(t not in X.complex for t in patch):
            continue

        def out(v):
            return X.degree(v) - sum(1 for t in patch if v in t)

        params = (out(Lap), out(T), out(Rv))
        s_or = X.sign_of((b, a, T))
        return ElementaryCycle("spec-a", params, chain, (X, sig, (a, b)), s_or)
    return None


def special_cycle_b(R: OrientedComplex, e: int, D: int, C: int) -> ElementaryCycle | None:
    """The 5-edge cycle through removing a degree-4 vertex e; kills the pair
    of flips at {e,D} and {e,C} for adjacent link corners D, C."""
    if R.degree(e) != 4:
        return None
    cycle = R.link_cycle(e)
    if D not in cycle or C not in cycle:
        return None
    i = cycle.index(D)
    d = len(cycle)
    if cycle[(i + 1) % d] == C:
        A = cycle[(i - 1) % d]
        B = cycle[(i + 2) % d]
    elif cycle[(i - 1) % d] == C:
        A = cycle[(i + 1) % d]
        B = cycle[(i - 2) % d]
    else:
        return None  # not adjacent corners
    # states: R --flip {e,D}->{A,C}--> TM --remove e--> TL; then forward
    got = _try_moves(R, [((e, D), (A, C)), ((e,), (A, B, C))])
    if got is None:
        return None
    _, TL = got
    built = _try_moves(
        TL,
        [
            ((A, B, C), (e,)),
            ((A, C), (D, e)),
            ((e, C), (B, D)),
            ((e,), (A, B, D)),
            ((B, D), (A, C)),
        ],
    )
    if built is None:
        return None
    chain, end = built
    if end.complex != TL.complex or not chain.is_cycle():
        return None
    around = {tuple(sorted((e, cycle[j], cycle[(j + 1) % d]))) for j in range(d)}

    def out(v):
        return R.degree(v) - sum(1 for t in around if v in t)

    params = (out(A), out(D), out(C), out(B))
    # orientation read on the state TM where {A,B,e} is a facet; it already
    # is one in R (a triangle around e), with the same sign
    s_or = R.sign_of((A, B, e))
    return ElementaryCycle("spec-b", params, chain, (R, e, (A, B, C, D)), s_or)


def special_cycle_c(L: OrientedComplex, sigma1: Simplex, sigma2: Simplex) -> ElementaryCycle | None:
    """The pentagon 5-flip cycle; kills the pair of fan diagonals sigma1 =
    {A,D}, sigma2 = {A,C} sharing the apex A."""
    s1, s2 = set(sigma1), set(sigma2)
    if len(s1) != 2 or len(s2) != 2 or len(s1 & s2) != 1:
        return None
    (A,) = s1 & s2
    (Dv,) = s1 - {A}
    (Cv,) = s2 - {A}
    try:
        tau1 = _move_tau(L, tuple(sorted(sigma1)))
        tau2 = _move_tau(L, tuple(sorted(sigma2)))
    except NotApplicable:
        return None
    if Cv not in tau1 or Dv not in tau2:
        return None
    (E,) = set(tau1) - {Cv}
    (B,) = set(tau2) - {Dv}
    if len({A, B, Cv, Dv, E}) != 5:
        return None
    built = _try_moves(
        L,
        [
            ((A, Dv), (E, Cv)),
            ((A, Cv), (E, B)),
            ((E, Cv), (Dv, B)),
            ((E, B), (A, Dv)),
            ((Dv, B), (A, Cv)),
        ],
    )
    if built is None:
        return None
    chain, end = built
    if end.complex != L.complex or not chain.is_cycle():
        return None
    fan = [tuple(sorted(t)) for t in ((A, B, Cv), (A, Cv, Dv), (A, Dv, E))]
    if any(t not in L.complex for t in fan):
        return None

    def out(v):
        return L.degree(v) - sum(1 for t in fan if v in t)

    params = (out(A), out(E), out(Dv), out(Cv), out(B))
    s_or = L.sign_of((A, B, Cv))
    return ElementaryCycle("spec-c", params, chain, (L, tuple(sorted(sigma1)), tuple(sorted(sigma2))), s_or)


# ---------------------------------------------------------------------------
# decomposition of cycles
# ---------------------------------------------------------------------------


def _metric(chain: Gamma2Chain):
    if not chain.terms:
        return (Fraction(-1), Fraction(0))
    top = chain.max_complexity()
    weight = sum(abs(v) for k, v in chain.terms.items() if edge_complexity(k) == top)
    return (top, weight)


def _accept(work: Gamma2Chain, key: GammaEdgeKey, gamma: ElementaryCycle) -> Fraction | None:
    ce = gamma.chain.coeff(key)
    if ce == 0 or abs(ce) != 1:
        return None
    scale = work.coeff(key) / ce
    if scale.denominator != 1:
        return None
    candidate = work.plus(gamma.chain, -scale)
    if _metric(candidate) < _metric(work):
        return scale
    return None


def _host_moves_of_edge(key: GammaEdgeKey):
    """Concrete realizations of the edge from both endpoints."""
    yield move_from_endpoint(key, "tail")
    yield move_from_endpoint(key, "head")


def _candidates_single(key: GammaEdgeKey, a: Fraction):
    """Elementary cycles containing the target edge, for odd strata where a
    single edge is a relative cycle (both endpoints lie strictly lower)."""
    for mv in _host_moves_of_edge(key):
        H = mv.host
        res = apply_move(mv)
        # commute with a removal of an untouched degree-3 vertex
        touched = set(u_set(mv)) | set(mv.sigma) | set(mv.tau)
        for v in sorted(H.vertices):
            if v in touched or H.degree(v) != 3:
                continue
            try:
                yield commutation_cycle(H, mv.sigma, (v,))
            except (NotApplicable, ClosureFailure, UnrecognizedConfiguration):
                continue
        # commute with a complexity-decreasing flip
        for other, _ in decreasing_moves(H):
            if len(other.sigma) != 2 or other.sigma == mv.sigma:
                continue
            try:
                yield commutation_cycle(H, mv.sigma, other.sigma)
            except (NotApplicable, ClosureFailure, UnrecognizedConfiguration):
                continue
        # the special 3-edge cycle across a degree-3 trade
        got = special_cycle_a(mv, res)
        if got is not None:
            yield got
        # pentagon cycles through either endpoint
        if len(mv.sigma) == 2:
            for Cv in mv.tau:
                got = special_cycle_c(H, mv.sigma, tuple(sorted((mv.sigma[0], Cv))))
                if got is not None:
                    yield got
                got = special_cycle_c(H, mv.sigma, tuple(sorted((mv.sigma[1], Cv))))
                if got is not None:
                    yield got


def _moves_from_top(key: GammaEdgeKey) -> BistellarMove:
    """The edge realized as a move from its higher-complexity endpoint."""
    at, ah = complexity_of_key(key.tail), complexity_of_key(key.head)
    return move_from_endpoint(key, "head" if ah >= at else "tail")


def _candidates_paired(kt: GammaEdgeKey, kp: GammaEdgeKey):
    """Elementary cycles pairing two edges that share their top endpoint."""
    mt = _moves_from_top(kt)
    mp = _moves_from_top(kp)
    S = mt.host
    if mp.host.complex != S.complex:
        return
    pairs = [(mt, mp), (mp, mt)]
    for m1, m2 in pairs:
        try:
            yield commutation_cycle(S, m1.sigma, m2.sigma)
        except (NotApplicable, ClosureFailure, UnrecognizedConfiguration):
            pass
    # pair of removals is covered by commutation; flips at a common
    # degree-4 vertex need the special 5-edge cycle
    if len(mt.sigma) == 2 and len(mp.sigma) == 2:
        common = set(mt.sigma) & set(mp.sigma)
        if len(common) == 1:
            (e,) = common
            if S.degree(e) == 4:
                (P,) = set(mt.sigma) - {e}
                (Q,) = set(mp.sigma) - {e}
                got = special_cycle_b(S, e, P, Q)
                if got is not None:
                    yield got
                got = special_cycle_b(S, e, Q, P)
                if got is not None:
                    yield got
            for s1, s2 in ((mt.sigma, mp.sigma), (mp.sigma, mt.sigma)):
                got = special_cycle_c(S, s1, s2)
                if got is not None:
                    yield got


def _top_endpoint(key: GammaEdgeKey) -> OKey:
    return key.head if complexity_of_key(key.head) >= complexity_of_key(key.tail) else key.tail


def decompose_cycle(zeta: Gamma2Chain, order_seed: int | None = None) -> list[tuple[int, ElementaryCycle]]:
    """Decompose an integral cycle into elementary cycles, exactly.

    The residual is verified to be zero by chain arithmetic; a failure to
    find an applicable catalogued cycle raises DecompositionStuck with the
    residual attached.  ``order_seed`` permutes the tie-breaking order of
    targets and partners; the well-definedness of the cocycle value across
    orders is a correctness check, not an assumption.
    """
    import random

    if not zeta.is_cycle():
        raise NotACycle("decompose_cycle requires a cycle")
    if not zeta.is_integral():
        raise NotACycle("decompose_cycle requires integer coefficients")
    rng = random.Random(order_seed) if order_seed is not None else None
    work = Gamma2Chain(dict(zeta.terms))
    out: list[tuple[int, ElementaryCycle]] = []
    while work:
        top = work.max_complexity()
        b = int((6 * top) % 6)
        top_edges = sorted(
            (k for k in work.terms if edge_complexity(k) == top),
            key=lambda k: k.encode(),
        )
        if rng is not None:
            rng.shuffle(top_edges)
        key = top_edges[0]
        accepted = None
        if b % 2 == 1:
            for gamma in _candidates_single(key, top):
                scale = _accept(work, key, gamma)
                if scale is not None:
                    accepted = (scale, gamma)
                    break
        else:
            anchor = _top_endpoint(key)
            partners = [k for k in top_edges if k != key and _top_endpoint(k) == anchor]
            for kp in partners:
                for gamma in _candidates_paired(key, kp):
                    scale = _accept(work, key, gamma)
                    if scale is not None:
                        accepted = (scale, gamma)
                        break
                if accepted:
                    break
            if accepted is None:
                # route through a third move from the anchor sphere
                accepted = _route_via_third(work, key, partners)
        if accepted is None:
            raise DecompositionStuck(
                f"no catalogued cycle applies to edge at complexity {top}", residual=work
            )
        scale, gamma = accepted
        if isinstance(gamma, list):
            for sc, g in gamma:
                work = work.plus(g.chain, -sc)
                out.append((int(sc), g))
        else:
            work = work.plus(gamma.chain, -scale)
            out.append((int(scale), gamma))
    # exact verification
    total = Gamma2Chain()
    for n, g in out:
        total = total.plus(g.chain, n)
    if total != zeta:
        raise DecompositionStuck("decomposition does not reproduce the cycle", residual=zeta)
    return out


def _route_via_third(work: Gamma2Chain, key: GammaEdgeKey, partners: list[GammaEdgeKey]):
    """Kill the pair (key, partner) through an intermediate move when the
    direct commutation fails."""
    mt = _moves_from_top(key)
    S = mt.host
    inter: list[BistellarMove] = [m for m, _ in decreasing_moves(S) if m.sigma != mt.sigma]
    for kp in partners:
        mp = _moves_from_top(kp)
        if mp.host.complex != S.complex:
            continue
        for m3 in inter:
            if m3.sigma == mp.sigma:
                continue
            gammas = []
            for s1, s2 in ((mt.sigma, m3.sigma), (m3.sigma, mp.sigma)):
                try:
                    gammas.append(commutation_cycle(S, s1, s2))
                except (NotApplicable, ClosureFailure, UnrecognizedConfiguration):
                    gammas = None
                    break
            if not gammas:
                continue
            combo = gammas[0].chain.plus(gammas[1].chain)
            ce = combo.coeff(key)
            if ce == 0 or abs(ce) != 1:
                continue
            scale = work.coeff(key) / ce
            if scale.denominator != 1:
                continue
            candidate = work.plus(combo, -scale)
            if _metric(candidate) < _metric(work):
                return (None, [(scale, gammas[0]), (scale, gammas[1])])
    return None


def c_of_cycle(zeta: Gamma2Chain) -> Fraction:
    """Evaluate the catalogued cocycle on a (rational) cycle by decomposing
    an integer multiple and scaling back."""
    if not zeta.is_cycle():
        raise NotACycle("c is defined on cycles only")
    if not zeta.terms:
        return Fraction(0)
    den = 1
    for v in zeta.terms.values():
        den = math.lcm(den, v.denominator)
    parts = decompose_cycle(zeta.scaled(den))
    total = sum((n * g.value for n, g in parts), Fraction(0))
    return total / den
