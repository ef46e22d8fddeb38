"""Canonical forms and isomorphism-class keys for small complexes.

The canonical labeling is computed by iterative color refinement on the
facet hypergraph plus backtracking over individualization choices, taking the
lexicographically least facet-set image.  All optimal labelings are collected
so marked simplices and orientations can be canonicalized as well.

Keys:

* the unoriented key of a complex is its canonical facet tuple;
* the oriented key ``OKey(facets, sign)`` adds ``sign`` in ``{+1, -1, 0}``,
  where ``0`` means the complex admits an orientation-reversing automorphism
  (so the oriented class equals its mirror).  ``okey(-K)`` is ``okey(K)``
  with the sign negated.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .simplicial import Complex, OrientedComplex, Simplex, orient, perm_parity

# ---------------------------------------------------------------------------
# keys
# ---------------------------------------------------------------------------

FacetTuple = tuple[Simplex, ...]


class OKey(NamedTuple):
    """Identifier of an oriented isomorphism class."""

    facets: FacetTuple
    sign: int

    def mirror(self) -> "OKey":
        return OKey(self.facets, -self.sign)

    @property
    def self_mirror(self) -> bool:
        return self.sign == 0

    def nvertices(self) -> int:
        return len({v for f in self.facets for v in f})

    def dim(self) -> int:
        return len(self.facets[0]) - 1

    def encode(self) -> str:
        s = {1: "+", -1: "-", 0: "0"}[self.sign]
        return s + ";" + "|".join(",".join(map(str, f)) for f in self.facets)

    @staticmethod
    def decode(text: str) -> "OKey":
        s, body = text.split(";", 1)
        sign = {"+": 1, "-": -1, "0": 0}[s]
        facets = tuple(tuple(int(v) for v in part.split(",")) for part in body.split("|"))
        return OKey(facets, sign)


@dataclass(frozen=True)
class CanonicalForm:
    """Result of ``canonical_form``: labeling plus class keys."""

    labeling: dict
    key: bytes
    oriented_key: bytes | None


# ---------------------------------------------------------------------------
# canonical labeling by refinement + backtracking
# ---------------------------------------------------------------------------


def _refine(vertices, facets, colors):
    """Refine vertex colors by facet signatures until stable."""
    while True:
        sig = {}
        for v in vertices:
            inc = sorted(tuple(sorted(colors[w] for w in f if w != v)) for f in facets if v in f)
            sig[v] = (colors[v], tuple(inc))
        ranking = {s: i for i, s in enumerate(sorted(set(sig.values())))}
        new = {v: ranking[sig[v]] for v in vertices}
        if new == colors:
            return colors
        colors = new


def _cells(vertices, colors):
    byc: dict[int, list[int]] = {}
    for v in vertices:
        byc.setdefault(colors[v], []).append(v)
    return [sorted(byc[c]) for c in sorted(byc)]


class _UCanon:
    __slots__ = ("facets", "labelings")

    def __init__(self, facets: FacetTuple, labelings: list[dict[int, int]]):
        self.facets = facets
        self.labelings = labelings


_UCANON_CACHE: dict[frozenset, _UCanon] = {}


def unoriented_canon(K: Complex) -> _UCanon:
    """Canonical facet tuple of K plus every labeling achieving it."""
    cache_key = K.facets
    hit = _UCANON_CACHE.get(cache_key)
    if hit is not None:
        return hit
    vertices = K.vertices
    facets = sorted(K.facets)
    best: list[FacetTuple] = []
    best_labelings: list[dict[int, int]] = []

    def leaf(colors) -> None:
        lab = {v: colors[v] for v in vertices}
        image = tuple(sorted(tuple(sorted(lab[v] for v in f)) for f in facets))
        if not best or image < best[0]:
            best[:] = [image]
            best_labelings[:] = [lab]
        elif image == best[0]:
            best_labelings.append(lab)

    def search(colors, depth) -> None:
        colors = _refine(vertices, facets, colors)
        cells = _cells(vertices, colors)
        target = None
        for cell in cells:
            if len(cell) > 1:
                target = cell
                break
        if target is None:
            leaf(colors)
            return
        for v in target:
            # individualize: give v a fresh color strictly below its cell
            branched = {w: 2 * colors[w] for w in vertices}
            branched[v] -= 1
            ranking = {c: i for i, c in enumerate(sorted(set(branched.values())))}
            search({w: ranking[branched[w]] for w in vertices}, depth + 1)

    if len(vertices) == 0:
        # the empty complex {()} canonicalizes trivially
        result = _UCanon(tuple(sorted(K.facets)), [{}])
        _UCANON_CACHE[cache_key] = result
        return result
    # seed colors with vertex degrees to shrink the search tree
    deg = {v: K.degree(v) for v in vertices}
    ranking = {d: i for i, d in enumerate(sorted(set(deg.values())))}
    search({v: ranking[deg[v]] for v in vertices}, 0)
    result = _UCanon(best[0], best_labelings)
    _UCANON_CACHE[cache_key] = result
    return result


def _colors_to_labeling_ok(colors, vertices) -> bool:
    return len(set(colors.values())) == len(vertices)


class _OCanon:
    __slots__ = ("okey", "labelings_preserving", "labelings_reversing")

    def __init__(self, okey: OKey, pres, rev):
        self.okey = okey
        self.labelings_preserving = pres
        self.labelings_reversing = rev


_OCANON_CACHE: dict = {}
_REP_ORIENT_CACHE: dict[FacetTuple, dict[Simplex, int]] = {}


def _rep_signs(facets: FacetTuple) -> dict[Simplex, int]:
    """Coherent facet signs of the canonical representative (seed +1)."""
    hit = _REP_ORIENT_CACHE.get(facets)
    if hit is None:
        hit = orient(Complex(facets, _validated=True)).facet_signs
        _REP_ORIENT_CACHE[facets] = hit
    return hit


def oriented_canon(OC: OrientedComplex) -> _OCanon:
    cache_key = (OC.complex.facets, tuple(sorted(OC.facet_signs.items())))
    hit = _OCANON_CACHE.get(cache_key)
    if hit is not None:
        return hit
    u = unoriented_canon(OC.complex)
    rep = _rep_signs(u.facets)
    pres: list[dict[int, int]] = []
    rev: list[dict[int, int]] = []
    for lab in u.labelings:
        eps = None
        ok = True
        for f, s in OC.facet_signs.items():
            image = [lab[v] for v in f]
            transported = s * perm_parity(image)
            e = transported * rep[tuple(sorted(image))]
            if eps is None:
                eps = e
            elif eps != e:
                ok = False
                break
        if not ok:
            # mixed per-component transport; cannot happen for connected input
            continue
        (pres if eps == 1 else rev).append(lab)
    if pres and rev:
        sign = 0
    elif pres:
        sign = 1
    else:
        sign = -1
    result = _OCanon(OKey(u.facets, sign), pres, rev)
    _OCANON_CACHE[cache_key] = result
    return result


# ---------------------------------------------------------------------------
# public helpers
# ---------------------------------------------------------------------------


def okey(OC: OrientedComplex) -> OKey:
    return oriented_canon(OC).okey


def ukey(K: Complex) -> FacetTuple:
    return unoriented_canon(K).facets


def canonical_form(K) -> CanonicalForm:
    """Spec-facing wrapper returning labeling plus byte keys."""
    if isinstance(K, OrientedComplex):
        oc = oriented_canon(K)
        lab = (oc.labelings_preserving or oc.labelings_reversing)[0]
        ufacets = oc.okey.facets
        return CanonicalForm(
            labeling=dict(lab),
            key=repr(ufacets).encode(),
            oriented_key=oc.okey.encode().encode(),
        )
    u = unoriented_canon(K)
    return CanonicalForm(labeling=dict(u.labelings[0]), key=repr(u.facets).encode(), oriented_key=None)


def designated_labelings(OC: OrientedComplex) -> list[dict[int, int]]:
    """Labelings onto the canonical rep carrying OC's orientation to the one
    designated by its oriented key (+rep for sign >= 0, -rep for sign == -1)."""
    oc = oriented_canon(OC)
    if oc.okey.sign >= 0:
        return oc.labelings_preserving
    return oc.labelings_reversing


def marked_encoding(OC: OrientedComplex, sigma: Simplex) -> tuple:
    """Complete invariant of the oriented pair (OC, sigma): min canonical image."""
    labs = designated_labelings(OC)
    return min(tuple(sorted(lab[v] for v in sigma)) for lab in labs)


def materialize(key: OKey) -> OrientedComplex:
    """Concrete oriented representative of an oriented class key."""
    rep = _rep_signs(key.facets)
    signs = rep if key.sign >= 0 else {f: -s for f, s in rep.items()}
    return OrientedComplex(Complex(key.facets, _validated=True), dict(signs), check=False)


def iso_onto_rep(OC: OrientedComplex) -> dict[int, int]:
    """An orientation-preserving labeling of OC onto ``materialize(okey(OC))``."""
    return designated_labelings(OC)[0]


def are_isomorphic(K1: Complex, K2: Complex) -> bool:
    return ukey(K1) == ukey(K2)


def isomorphism(K1: Complex, K2: Complex) -> dict[int, int] | None:
    """Some isomorphism K1 -> K2, or None."""
    u1, u2 = unoriented_canon(K1), unoriented_canon(K2)
    if u1.facets != u2.facets:
        return None
    lab1 = u1.labelings[0]
    inv2 = {c: v for v, c in u2.labelings[0].items()}
    return {v: inv2[c] for v, c in lab1.items()}


def oriented_isomorphism(A: OrientedComplex, B: OrientedComplex) -> dict[int, int] | None:
    """Some orientation-preserving isomorphism A -> B, or None."""
    ca, cb = oriented_canon(A), oriented_canon(B)
    if ca.okey.facets != cb.okey.facets:
        return None
    for pa, pb in ((ca.labelings_preserving, cb.labelings_preserving),
                   (ca.labelings_reversing, cb.labelings_reversing)):
        if pa and pb:
            inv = {c: v for v, c in pb[0].items()}
            return {v: inv[c] for v, c in pa[0].items()}
    return None


def relabel(K: Complex, mapping: dict[int, int]) -> Complex:
    return Complex({tuple(sorted(mapping[v] for v in f)) for f in K.facets}, _validated=True)


def relabel_oriented(OC: OrientedComplex, mapping: dict[int, int]) -> OrientedComplex:
    signs: dict[Simplex, int] = {}
    for f, s in OC.facet_signs.items():
        image = [mapping[v] for v in f]
        signs[tuple(sorted(image))] = s * perm_parity(image)
    return OrientedComplex(Complex(signs.keys(), _validated=True), signs, check=False)
