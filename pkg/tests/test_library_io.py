import json

import pytest

from bistellar.errors import NotClosedManifold
from bistellar.library import (
    ComplexLibraryEntry,
    catalog,
    cp2_9,
    cross_polytope_boundary,
    read_facet_file,
    simplex_boundary,
    write_facet_file,
)
from bistellar.simplicial import build_complex


def test_catalog_entries_validate():
    entries = catalog()
    assert {"boundary_delta_2", "octahedron", "icosahedron", "rp2_6", "cross_3", "cross_4"} <= set(entries)
    for e in entries.values():
        assert e.complex.f_vector == e.f_vector


def test_checked_rejects_wrong_data():
    with pytest.raises(NotClosedManifold):
        ComplexLibraryEntry.checked("bad", simplex_boundary(3), (4, 6, 5), 2, True)


def test_cross_polytopes():
    assert cross_polytope_boundary(3).f_vector == (6, 12, 8)
    assert cross_polytope_boundary(4).f_vector == (8, 24, 32, 16)


def test_cp2_loads_and_validates():
    K = cp2_9()
    assert K.f_vector == (9, 36, 84, 90, 36)
    assert K.euler_characteristic == 3


def test_facet_file_round_trip(tmp_path):
    K = simplex_boundary(3)
    path = str(tmp_path / "k.facets")
    write_facet_file(path, K, "a comment header")
    K2, ori = read_facet_file(path)
    assert K2 == K and ori is None


def test_json_facet_format(tmp_path):
    path = str(tmp_path / "k.json")
    doc = {"facets": [[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]], "orientation": [1, -1, 1, -1]}
    path_obj = tmp_path / "k.json"
    path_obj.write_text(json.dumps(doc))
    K, ori = read_facet_file(str(path_obj))
    assert K == build_complex(doc["facets"])
    assert ori == [1, -1, 1, -1]


def test_comments_and_blank_lines(tmp_path):
    p = tmp_path / "c.facets"
    p.write_text("# header\n\n0 1 2  # trailing\n0 1 3\n0 2 3\n1 2 3\n")
    K, _ = read_facet_file(str(p))
    assert K.f_vector == (4, 6, 4)
