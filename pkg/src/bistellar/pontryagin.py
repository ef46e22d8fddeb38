"""The first rational Pontryagin class from a triangulation.

The pipeline evaluates the catalogued cocycle on cycles built from
reduction sequences:

* ``xi_chain``: for every oriented 2-sphere class a rational 1-chain in the
  move graph with boundary {L} - {boundary of the tetrahedron}, defined by
  averaging over all complexity-decreasing moves;
* ``h_value``: the cocycle representative h({beta}) = <c, {beta} + xi_tail
  - xi_head>;
* ``local_f``: the universal local formula on oriented 3-sphere classes,
  via a reduction sequence from the 4-simplex boundary, its induced vertex
  moves, and the xi-corrections of the vertex links;
* ``p1_dual_local`` / ``p1_dual_direct``: the Poincare-dual cycle of the
  first Pontryagin class, by the local formula or by the per-simplex
  procedure that skips the xi recursion;
* ``sw_duals`` lives in :mod:`bistellar.sw` as the mod-2 companion.
"""

from __future__ import annotations

import json
import os
from fractions import Fraction

from .canonical import OKey, materialize, okey
from .errors import InvalidMove, NotACycle
from .gamma2 import Gamma2Chain, c_of_cycle, decreasing_moves
from .moves import BistellarMove, apply_move, induced_vertex_moves, is_inessential
from .reduction import MoveSequence, reduce_to_boundary, replay
from .simplicial import OrientedComplex
from .talgebra import SimplicialChain


class XiCache:
    """Persistent store for xi-chains and reduction certificates.

    Keys are oriented canonical class keys.  The xi-chain of a mirrored
    class is the mirror image of the stored representative's chain, so only
    one representative per unoriented class is ever computed.
    """

    def __init__(self, path: str | None = None):
        self.path = path
        self.chains: dict[OKey, Gamma2Chain] = {}
        self.certs: dict[OKey, MoveSequence] = {}
        self._eta: dict[OKey, Gamma2Chain] = {}
        if path and os.path.exists(path):
            self.load(path)

    def load(self, path: str) -> None:
        with open(path) as fh:
            data = json.load(fh)
        for enc, chain in data.get("xi", {}).items():
            self.chains[OKey.decode(enc)] = Gamma2Chain.from_json(chain)
        for enc, cert in data.get("certificates", {}).items():
            self.certs[OKey.decode(enc)] = MoveSequence.from_json(cert)

    def save(self, path: str | None = None) -> None:
        path = path or self.path
        if not path:
            return
        data = {
            "xi": {k.encode(): v.to_json() for k, v in sorted(self.chains.items(), key=lambda kv: kv[0].encode())},
            "certificates": {
                k.encode(): v.to_json() for k, v in sorted(self.certs.items(), key=lambda kv: kv[0].encode())
            },
        }
        tmp = path + ".tmp"
        with open(tmp, "w") as fh:
            json.dump(data, fh, sort_keys=True)
        os.replace(tmp, path)

    def certificate(self, key: OKey, budget: int = 4000, seed: int = 0) -> MoveSequence:
        hit = self.certs.get(key)
        if hit is None:
            hit = reduce_to_boundary(materialize(key), budget=budget, seed=seed)
            self.certs[key] = hit
        return hit


_D3_KEY: OKey | None = None


def _d3_key() -> OKey:
    global _D3_KEY
    if _D3_KEY is None:
        from .simplicial import boundary_of_simplex, orient

        _D3_KEY = okey(orient(boundary_of_simplex(3)))
    return _D3_KEY


def xi_chain(L: OrientedComplex | OKey, cache: XiCache | None = None) -> Gamma2Chain:
    """The averaged recurrence chain with boundary {L} - {tetrahedron}.

    Grounded at the tetrahedron boundary; branches over all
    complexity-decreasing moves with equal weight.  Memoized per oriented
    class; the mirrored class gets the mirrored chain.
    """
    cache = cache if cache is not None else XiCache()
    key = L if isinstance(L, OKey) else okey(L)
    return _xi(key, cache)


def _xi(key: OKey, cache: XiCache) -> Gamma2Chain:
    hit = cache.chains.get(key)
    if hit is not None:
        return hit
    rep_key = min(key, key.mirror(), key=lambda k: k.encode())
    if rep_key != key:
        out = _xi(rep_key, cache).mirror()
    elif key == _d3_key():
        out = Gamma2Chain()
    else:
        L = materialize(key)
        moves = decreasing_moves(L)
        assert moves, "a 2-sphere above the tetrahedron always has a decreasing move"
        r = Fraction(1, len(moves))
        out = Gamma2Chain()
        for mv, res in moves:
            out = out.plus(_xi(okey(res), cache), r)
            sub = Gamma2Chain().add_move(mv, 1, res)
            out = out.plus(sub, -r)
    bnd = out.boundary()
    want: dict[OKey, Fraction] = {}
    if key != _d3_key():
        want = {key: Fraction(1), _d3_key(): Fraction(-1)}
    if bnd != want:
        raise NotACycle(f"xi boundary invariant failed for {key.encode()[:40]}...")
    cache.chains[key] = out
    return out


def h_value(move: BistellarMove, cache: XiCache | None = None, result: OrientedComplex | None = None) -> Fraction:
    """h({beta}) = <c, {beta} + xi(tail) - xi(head)> for an essential move."""
    cache = cache if cache is not None else XiCache()
    if result is None:
        result = apply_move(move)
    if is_inessential(move, result):
        raise InvalidMove("h is defined on essential moves")
    arg = Gamma2Chain().add_move(move, 1, result)
    arg = arg.plus(_xi(okey(move.host), cache), 1)
    arg = arg.plus(_xi(okey(result), cache), -1)
    if not arg.is_cycle():
        raise NotACycle("h argument chain is not a cycle")
    return c_of_cycle(arg)


def _eta_chain(key: OKey, cache: XiCache, budget: int, seed: int) -> Gamma2Chain:
    """Sum of induced vertex-move edges along the reduction of a 3-sphere
    class toward the 4-simplex boundary."""
    hit = cache._eta.get(key)
    if hit is not None:
        return hit
    cert = cache.certificate(key, budget=budget, seed=seed)
    _, states = replay(cert)
    out = Gamma2Chain()
    for i, (sig, tau) in enumerate(cert.moves):
        mv = BistellarMove(states[i], sig, tau)
        for _, sub in induced_vertex_moves(mv):
            if sub is not None:
                out.add_move(sub)
    cache._eta[key] = out
    return out


def local_f(
    L: OrientedComplex,
    budget: int = 4000,
    seed: int = 0,
    cache: XiCache | None = None,
    certificate: MoveSequence | None = None,
) -> Fraction:
    """The local formula for the first Pontryagin class on an oriented
    3-sphere class.

    A reduction sequence from the 4-simplex boundary to L contributes the
    induced vertex moves; the vertex links of L contribute xi-corrections;
    the resulting cycle is evaluated against the catalogue.  The value is
    independent of the sequence found (tested, not assumed).
    """
    cache = cache if cache is not None else XiCache()
    key = okey(L)
    if certificate is not None:
        if certificate.start != key:
            raise InvalidMove("certificate start does not match the sphere class")
        _, states = replay(certificate)
        eta_red = Gamma2Chain()
        for i, (sig, tau) in enumerate(certificate.moves):
            mv = BistellarMove(states[i], sig, tau)
            for _, sub in induced_vertex_moves(mv):
                if sub is not None:
                    eta_red.add_move(sub)
    else:
        eta_red = _eta_chain(key, cache, budget, seed)
    # the sequence toward L is the reverse of the reduction, so eta negates
    zeta = eta_red.scaled(-1)
    rep = materialize(key)
    for v in rep.vertices:
        zeta = zeta.plus(_xi(okey(rep.link((v,))), cache), -1)
    if not zeta.is_cycle():
        raise NotACycle("local formula cycle check failed: orientation bookkeeping bug")
    return c_of_cycle(zeta)


def _local_f_worker(encoded: str) -> tuple[str, str, str]:
    key = OKey.decode(encoded)
    val = local_f(materialize(key))
    return encoded, str(val.numerator), str(val.denominator)


def p1_dual_local(
    K: OrientedComplex,
    budget: int = 4000,
    seed: int = 0,
    cache: XiCache | None = None,
    jobs: int = 1,
) -> SimplicialChain:
    """The Poincare dual of the first rational Pontryagin class, by the
    universal local formula.  Degree dim-4; coefficients are local_f of the
    codimension-4 links.

    ``jobs`` caps concurrent workers over distinct link classes; the result
    is independent of scheduling because the arithmetic is exact and keyed
    by class.
    """
    cache = cache if cache is not None else XiCache()
    m = K.dim
    values: dict[OKey, Fraction] = {}
    link_keys: dict = {}
    for sig in K.complex.faces_of_dim(m - 4):
        link_keys[sig] = okey(K.link(sig))
    todo = []
    for k in sorted(set(link_keys.values()), key=lambda k: k.encode()):
        if k.sign == 0:
            values[k] = Fraction(0)
        elif k.mirror() in values or k.mirror() in [t for t in todo]:
            continue
        else:
            todo.append(k)
    if jobs > 1 and len(todo) > 1:
        import multiprocessing as mp

        try:
            with mp.get_context("spawn").Pool(min(jobs, len(todo))) as pool:
                for enc, num, den in pool.map(_local_f_worker, [k.encode() for k in todo]):
                    values[OKey.decode(enc)] = Fraction(int(num), int(den))
        except OSError:
            jobs = 1
    if not all(k in values for k in todo):
        for k in todo:
            if k not in values:
                values[k] = local_f(materialize(k), budget=budget, seed=seed, cache=cache)
    terms = {}
    for sig, k in link_keys.items():
        v = values.get(k)
        if v is None:
            v = -values[k.mirror()]
        if v:
            terms[sig] = v
    chain = SimplicialChain(K, m - 4, terms)
    if not chain.is_cycle():
        raise NotACycle("the local-formula chain is not a cycle")
    return chain


def p1_number(K: OrientedComplex, budget: int = 4000, seed: int = 0, cache: XiCache | None = None) -> Fraction:
    """Evaluation of the dual class against the fundamental class of a
    connected oriented 4-manifold: the coefficient sum of the dual 0-cycle."""
    if K.dim != 4:
        raise InvalidMove("the Pontryagin number needs a 4-manifold")
    return p1_dual_local(K, budget=budget, seed=seed, cache=cache).total()


def _red2_chain(key: OKey, cache: XiCache, budget: int, seed: int) -> Gamma2Chain:
    """Edge chain of the fixed reduction certificate of a 2-sphere class."""
    cert = cache.certificate(key, budget=budget, seed=seed)
    _, states = replay(cert)
    out = Gamma2Chain()
    for i, (sig, tau) in enumerate(cert.moves):
        out.add_move(BistellarMove(states[i], sig, tau))
    return out


def p1_dual_direct(
    K: OrientedComplex,
    budget: int = 4000,
    seed: int = 0,
    cache: XiCache | None = None,
) -> SimplicialChain:
    """The per-simplex procedure: no xi recursion.

    For each codimension-4 simplex sigma (taken with ascending orientation)
    the cycle zeta_sigma combines the induced vertex moves of a reduction
    of link(sigma) with the reduction chains of the links of the
    codimension-3 cofaces, oriented so each incidence coefficient is +1.
    """
    cache = cache if cache is not None else XiCache()
    m = K.dim
    terms = {}
    for sig in K.complex.faces_of_dim(m - 4):
        lk3 = K.link(sig)
        zeta = _eta_chain(okey(lk3), cache, budget, seed).scaled(-1)
        rest = [v for v in lk3.vertices]
        for w in rest:
            tau = tuple(sorted(sig + (w,)))
            # orient tau so that the incidence coefficient [tau : sig] is +1
            lk2 = K.link(tau)
            if (-1) ** tau.index(w) == -1:
                lk2 = -lk2
            zeta = zeta.plus(_red2_chain(okey(lk2), cache, budget, seed), 1)
        if not zeta.is_cycle():
            raise NotACycle("zeta_sigma is not a cycle: incidence orientation bug")
        r = c_of_cycle(zeta)
        if r:
            terms[sig] = r
    chain = SimplicialChain(K, m - 4, terms)
    if not chain.is_cycle():
        raise NotACycle("the direct-procedure chain is not a cycle")
    return chain
