import pytest

from bistellar.canonical import okey
from bistellar.errors import BudgetExhausted
from bistellar.moves import apply_move, enumerate_moves
from bistellar.reduction import MoveSequence, reduce_to_boundary, replay
from bistellar.simplicial import boundary_of_simplex, join, orient
from helpers import icosahedron, octahedron


def test_boundary_reduces_to_empty_sequence():
    d4 = orient(boundary_of_simplex(4))
    seq = reduce_to_boundary(d4)
    assert seq.moves == ()
    assert seq.start == seq.end == okey(d4)


def test_six_vertex_sphere_single_move():
    d4 = orient(boundary_of_simplex(4))
    K6 = apply_move(enumerate_moves(d4)[0])
    seq = reduce_to_boundary(K6)
    assert len(seq.moves) == 1
    assert seq.end == okey(d4)


def test_cross_polytope_reduction_replays():
    s0 = boundary_of_simplex(1)
    four, _, _ = join(s0, s0)
    cp, _, _ = join(four, four)
    seq = reduce_to_boundary(orient(cp), seed=3)
    assert len(seq.moves) >= 3
    final, states = replay(seq)
    assert okey(final) == seq.end
    assert len(states) == len(seq.moves) + 1


def test_determinism_and_seed_variation():
    s0 = boundary_of_simplex(1)
    four, _, _ = join(s0, s0)
    cp, _, _ = join(four, four)
    ocp = orient(cp)
    assert reduce_to_boundary(ocp, seed=7) == reduce_to_boundary(ocp, seed=7)
    seqs = {reduce_to_boundary(ocp, seed=s).moves for s in range(5)}
    assert len(seqs) >= 2


def test_two_sphere_reduction():
    assert len(reduce_to_boundary(octahedron()).moves) == 3
    seq = reduce_to_boundary(icosahedron(), seed=2)
    final, _ = replay(seq)
    assert len(final.vertices) == 4


def test_budget_exhaustion_carries_partial_state():
    with pytest.raises(BudgetExhausted) as exc:
        reduce_to_boundary(icosahedron(), budget=0)
    assert exc.value.best_state is not None


def test_certificate_json_round_trip():
    seq = reduce_to_boundary(octahedron(), seed=1)
    again = MoveSequence.from_json(seq.to_json())
    assert again == seq
    replay(again)
