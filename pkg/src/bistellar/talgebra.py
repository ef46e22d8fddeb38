"""The differential graded algebra of oriented combinatorial spheres.

Grade n is spanned by classes <L> of oriented (n-1)-dimensional
combinatorial spheres, modulo <-L> = -<L>.  Over the rationals the classes
with an orientation-reversing automorphism are torsion and are stored as
zero.  The boundary sums vertex links with their induced orientations; the
product is the join.

``LocalCochain`` is the dual object: a finitely supported rational
function on oriented sphere classes with f(-L) = -f(L); the coboundary,
the chain f_sharp on a manifold, the chain homotopy s through the sphere
of a move, and the fundamental-class cycle alpha live here too.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable

from .canonical import OKey, materialize, okey
from .errors import DimensionTooSmall, NotClosedCycle
from .moves import BistellarMove, sphere_from_move
from .simplicial import Complex, OrientedComplex, Simplex, join_oriented

Rational = Fraction


def _norm_key_coeff(key: OKey, coeff: Fraction) -> tuple[OKey, Fraction] | None:
    """Store <-L> as -<L>: only sign=+1 keys are kept; torsion drops to 0."""
    if key.sign == 0:
        return None
    if key.sign == -1:
        return key.mirror(), -coeff
    return key, coeff


@dataclass
class SphereChain:
    """Finitely supported rational combination of oriented sphere classes."""

    grade: int
    terms: dict[OKey, Fraction] = field(default_factory=dict)

    def add(self, key: OKey, coeff) -> "SphereChain":
        nc = _norm_key_coeff(key, Fraction(coeff))
        if nc is None:
            return self
        k, c = nc
        new = self.terms.get(k, Fraction(0)) + c
        if new:
            self.terms[k] = new
        else:
            self.terms.pop(k, None)
        return self

    def add_sphere(self, L: OrientedComplex, coeff=1) -> "SphereChain":
        return self.add(okey(L), coeff)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        return isinstance(other, SphereChain) and self.grade == other.grade and self.terms == other.terms

    def scaled(self, c) -> "SphereChain":
        c = Fraction(c)
        out = SphereChain(self.grade)
        for k, v in self.terms.items():
            out.add(k, v * c)
        return out

    def plus(self, other: "SphereChain") -> "SphereChain":
        assert self.grade == other.grade
        out = SphereChain(self.grade, dict(self.terms))
        for k, v in other.terms.items():
            out.add(k, v)
        return out

    def to_json(self) -> list:
        return [
            [k.encode(), str(v.numerator), str(v.denominator)]
            for k, v in sorted(self.terms.items(), key=lambda kv: kv[0].encode())
        ]


def sphere_chain(L: OrientedComplex, coeff=1) -> SphereChain:
    return SphereChain(L.dim + 1).add_sphere(L, coeff)


def boundary_t(x: SphereChain) -> SphereChain:
    """d<L> = sum over vertices of <link v>; zero map on grade 1."""
    out = SphereChain(x.grade - 1)
    if x.grade <= 1:
        return out
    for key, coeff in x.terms.items():
        L = materialize(key)
        for v in L.vertices:
            out.add_sphere(L.link((v,)), coeff)
    return out


def join_product_t(x: SphereChain, y: SphereChain) -> SphereChain:
    """Bilinear extension of <L1><L2> = <L1 * L2>."""
    out = SphereChain(x.grade + y.grade)
    for k1, c1 in x.terms.items():
        L1 = materialize(k1)
        for k2, c2 in y.terms.items():
            L2 = materialize(k2)
            out.add_sphere(join_oriented(L1, L2), c1 * c2)
    return out


@dataclass
class LocalCochain:
    """Rational function on oriented (grade-1)-sphere classes, finite table
    plus default zero, with f(-L) = -f(L) enforced by storage."""

    grade: int
    table: dict[OKey, Fraction] = field(default_factory=dict)

    def set(self, key_or_sphere, value) -> "LocalCochain":
        key = key_or_sphere if isinstance(key_or_sphere, OKey) else okey(key_or_sphere)
        nc = _norm_key_coeff(key, Fraction(value))
        if nc is None:
            return self  # torsion class: forced zero over Q
        k, v = nc
        if v:
            self.table[k] = v
        else:
            self.table.pop(k, None)
        return self

    def __call__(self, arg) -> Fraction:
        if isinstance(arg, OrientedComplex):
            key = okey(arg)
        else:
            key = arg
        if key.sign == 0:
            return Fraction(0)
        if key.sign == -1:
            return -self.table.get(key.mirror(), Fraction(0))
        return self.table.get(key, Fraction(0))

    def eval_chain(self, x: SphereChain) -> Fraction:
        return sum((c * self(k) for k, c in x.terms.items()), Fraction(0))

    def to_json(self) -> list:
        return [
            [k.encode(), str(v.numerator), str(v.denominator)]
            for k, v in sorted(self.table.items(), key=lambda kv: kv[0].encode())
        ]


def delta_eval(f: LocalCochain, L: OrientedComplex) -> Fraction:
    """(delta f)(<L>) = (-1)^n sum over vertices of f(<link v>), n = grade of f."""
    total = sum((f(L.link((v,))) for v in L.vertices), Fraction(0))
    return total if f.grade % 2 == 0 else -total


def f_sharp(f: LocalCochain, K: OrientedComplex) -> "SimplicialChain":
    """The chain whose coefficient on each (m-n)-simplex is f of its link.

    Coefficients are attached to simplices in ascending vertex order; the
    sign of a summand does not depend on that choice because flipping the
    simplex orientation also flips the induced link orientation.
    """
    m, n = K.dim, f.grade
    if m < n:
        raise DimensionTooSmall(f"manifold dimension {m} < cochain grade {n}")
    terms: dict[Simplex, Fraction] = {}
    for sig in K.complex.faces_of_dim(m - n):
        c = f(K.link(sig))
        if c:
            terms[sig] = c
    return SimplicialChain(K, m - n, terms)


def s_eval(f: LocalCochain, move: BistellarMove) -> Fraction:
    """Chain homotopy through the sphere of a move:
    s(f)({beta}) = (-1)^(n-1) f(<L_beta>) for beta a move of (n-1)-spheres,
    where f has grade n+1 in this library's indexing."""
    if move.host.dim != f.grade - 2:
        raise DimensionTooSmall("s(f) eats moves of spheres of dimension grade-2")
    val = f(sphere_from_move(move, check_sphere=False))
    return val if f.grade % 2 == 0 else -val


def d_edge(f: LocalCochain, move: BistellarMove, result: OrientedComplex | None = None) -> Fraction:
    """Cellular coboundary of a vertex cochain, evaluated on a move:
    (df)({beta}) = f(head) - f(tail)."""
    from .moves import apply_move

    if result is None:
        result = apply_move(move)
    return f(result) - f(move.host)


def delta_edge(h, move: BistellarMove) -> Fraction:
    """(delta h)({beta}) = (-1)^n sum over v in U(beta) of h({beta_v}),
    where beta moves (n+1)-spheres and h is an edge cochain on Gamma_n.

    ``h`` is any callable taking a concrete move to a rational.
    """
    from .moves import induced_vertex_moves

    n = move.host.dim - 1
    total = Fraction(0)
    for _, sub in induced_vertex_moves(move):
        if sub is not None:
            total += h(sub)
    return total if n % 2 == 0 else -total


def alpha_cycle(K: OrientedComplex) -> SphereChain:
    """Sum of vertex links of an oriented combinatorial manifold; a cycle of
    the sphere-class complex."""
    out = SphereChain(K.dim)
    for v in K.vertices:
        out.add_sphere(K.link((v,)))
    if boundary_t(out):
        raise NotClosedCycle("alpha image has nonzero boundary")
    return out


@dataclass
class SimplicialChain:
    """Rational simplicial chain on an ambient complex.

    Coefficients are attached to ascending-ordered simplices; flipping a
    simplex orientation negates its coefficient.
    """

    ambient: OrientedComplex | Complex
    degree: int
    terms: dict[Simplex, Fraction] = field(default_factory=dict)

    def coefficient(self, ordered_simplex: Iterable[int]) -> Fraction:
        from .simplicial import perm_parity

        t = tuple(ordered_simplex)
        return self.terms.get(tuple(sorted(t)), Fraction(0)) * perm_parity(t)

    def boundary(self) -> "SimplicialChain":
        out: dict[Simplex, Fraction] = {}
        for sig, c in self.terms.items():
            for i in range(len(sig)):
                face = sig[:i] + sig[i + 1 :]
                val = out.get(face, Fraction(0)) + c * (-1) ** i
                if val:
                    out[face] = val
                else:
                    out.pop(face, None)
        return SimplicialChain(self.ambient, self.degree - 1, out)

    def is_cycle(self) -> bool:
        return self.degree == 0 or not self.boundary().terms

    def total(self) -> Fraction:
        return sum(self.terms.values(), Fraction(0))

    def plus(self, other: "SimplicialChain") -> "SimplicialChain":
        assert self.degree == other.degree
        out = dict(self.terms)
        for k, v in other.terms.items():
            val = out.get(k, Fraction(0)) + v
            if val:
                out[k] = val
            else:
                out.pop(k, None)
        return SimplicialChain(self.ambient, self.degree, out)

    def scaled(self, c) -> "SimplicialChain":
        c = Fraction(c)
        return SimplicialChain(self.ambient, self.degree, {k: v * c for k, v in self.terms.items() if v * c})

    def to_json(self) -> list:
        return [
            [list(k), str(v.numerator), str(v.denominator)]
            for k, v in sorted(self.terms.items())
        ]
