"""Search for the 9-vertex CP^2 triangulation.

36 facets on {0..8} with every 4-set in exactly 0 or 2 facets, every 3-set
covered, every vertex in exactly 20 facets, invariant under
g = (012)(345)(678).  Candidates are validated downstream (vertex links
must be 8-vertex combinatorial 3-spheres).
"""
import sys
from itertools import combinations

V = range(9)
g = {0:1,1:2,2:0, 3:4,4:5,5:3, 6:7,7:8,8:6}

def orbit(f):
    out = set()
    cur = tuple(sorted(f))
    for _ in range(3):
        out.add(cur)
        cur = tuple(sorted(g[v] for v in cur))
    return frozenset(out)

orbits = sorted({orbit(f) for f in combinations(V, 5)}, key=lambda o: sorted(o)[0])
oindex = {o: i for i, o in enumerate(orbits)}
quads = list(combinations(V, 4))
tris = list(combinations(V, 3))
quad_index = {q: i for i, q in enumerate(quads)}
tri_index = {t: i for i, t in enumerate(tris)}

orbit_quads, orbit_tris, orbit_vdeg = [], [], []
for o in orbits:
    qs, ts, vd = [], [], [0]*9
    for f in o:
        for q in combinations(f, 4):
            qs.append(quad_index[q])
        for t in combinations(f, 3):
            ts.append(tri_index[t])
        for v in f:
            vd[v] += 1
    orbit_quads.append(qs); orbit_tris.append(ts); orbit_vdeg.append(vd)

qcount = [0]*126
tcount = [0]*84
vdeg = [0]*9
chosen = []
solutions = []
LIMIT = int(sys.argv[1]) if len(sys.argv) > 1 else 50

def choose(oi):
    chosen.append(oi)
    for q in orbit_quads[oi]: qcount[q] += 1
    for t in orbit_tris[oi]: tcount[t] += 1
    for v in range(9): vdeg[v] += orbit_vdeg[oi][v]

def unchoose(oi):
    chosen.pop()
    for q in orbit_quads[oi]: qcount[q] -= 1
    for t in orbit_tris[oi]: tcount[t] -= 1
    for v in range(9): vdeg[v] -= orbit_vdeg[oi][v]

def feasible(oi):
    if oi in chosen: return False
    if any(qcount[q] + orbit_quads[oi].count(q) > 2 for q in set(orbit_quads[oi])): return False
    if any(vdeg[v] + orbit_vdeg[oi][v] > 20 for v in range(9)): return False
    return True

def search():
    if len(solutions) >= LIMIT: return
    if len(chosen) == 12:
        if all(c in (0,2) for c in qcount) and all(c > 0 for c in tcount) and all(d == 20 for d in vdeg):
            solutions.append(list(chosen))
        return
    open_quads = [q for q,c in enumerate(qcount) if c == 1]
    if open_quads:
        q = open_quads[0]
        quad = quads[q]
        cands = sorted({oindex[orbit(tuple(sorted(quad + (v,))))] for v in V if v not in quad})
        for oi in cands:
            if feasible(oi):
                choose(oi); search(); unchoose(oi)
                if len(solutions) >= LIMIT: return
        return
    try:
        t = next(i for i,c in enumerate(tcount) if c == 0)
    except StopIteration:
        return
    tri = tris[t]
    cands = sorted({oindex[orbit(tuple(sorted(tri + r)))] for r in combinations([v for v in V if v not in tri], 2)})
    for oi in cands:
        if feasible(oi):
            choose(oi); search(); unchoose(oi)
            if len(solutions) >= LIMIT: return

search()
print(f"{len(solutions)} solutions", file=sys.stderr)
for sol in solutions:
    facets = sorted(f for oi in sol for f in orbits[oi])
    print(";".join(",".join(map(str,f)) for f in facets))
