import json
import os

import pytest

from bistellar.cli import main
from bistellar.library import RP2_6_FACETS, write_facet_file
from bistellar.simplicial import build_complex


@pytest.fixture()
def data_dir(tmp_path):
    from bistellar.library import catalog

    for name, e in catalog().items():
        write_facet_file(str(tmp_path / f"{name}.facets"), e.complex)
    write_facet_file(str(tmp_path / "rp2.facets"), build_complex(RP2_6_FACETS))
    return tmp_path


def _run(capsys, argv):
    code = main(argv)
    out = capsys.readouterr().out
    return code, out


def test_check_octahedron(capsys, data_dir):
    code, out = _run(capsys, ["check", str(data_dir / "octahedron.facets")])
    assert code == 0
    rep = json.loads(out)
    assert rep["sphere"] == "yes" and rep["manifold"] == "yes"


def test_check_rp2(capsys, data_dir):
    code, out = _run(capsys, ["check", str(data_dir / "rp2.facets")])
    assert code == 0
    rep = json.loads(out)
    assert rep["sphere"] == "no"


def test_reduce_emits_certificate(capsys, data_dir):
    code, out = _run(capsys, ["reduce", str(data_dir / "cross_4.facets")])
    assert code == 0
    rep = json.loads(out)
    assert rep["length"] >= 3
    assert rep["certificate"]["moves"]


def test_reduce_nonorientable_fails_cleanly(capsys, data_dir):
    code, out = _run(capsys, ["reduce", str(data_dir / "rp2.facets")])
    assert code == 1
    rep = json.loads(out)
    assert rep["error"] == "NonOrientable"


def test_sw_flags_rp2(capsys, data_dir):
    code, out = _run(capsys, ["sw", str(data_dir / "rp2.facets")])
    assert code == 0
    rep = json.loads(out)
    w1 = [c for c in rep["chains"] if c["degree"] == 1][0]
    assert w1["is_cycle"] and w1["bounds"] is False


def test_p1_local_4_sphere(capsys, data_dir):
    code, out = _run(capsys, ["p1", "local", str(data_dir / "boundary_delta_5.facets")])
    assert code == 0
    rep = json.loads(out)
    assert rep["p1_number"] == {"num": "0", "den": "1"}


def test_byte_identical_reports(capsys, data_dir, tmp_path):
    cachep = str(tmp_path / "xi.json")
    argv = ["--seed", "1", "--xi-cache", cachep, "p1", "local", str(data_dir / "boundary_delta_5.facets")]
    _, out1 = _run(capsys, argv)
    _, out2 = _run(capsys, argv)
    assert out1 == out2
    assert os.path.exists(cachep)


def test_enumerate_counts(capsys, data_dir):
    code, out = _run(capsys, ["enumerate-spheres", "--max-vertices", "6"])
    assert code == 0
    rep = json.loads(out)
    assert rep["unoriented_counts"] == {"4": "1", "5": "1", "6": "2"} or rep["unoriented_counts"] == {
        "4": 1,
        "5": 1,
        "6": 2,
    }


def test_gamma2_decompose_round_trip(capsys, data_dir, tmp_path):
    from bistellar.gamma2 import commutation_cycle
    from helpers import icosahedron

    g = commutation_cycle(icosahedron(), (0, 1, 2), (0, 5, 6))
    chain_file = tmp_path / "chain.json"
    chain_file.write_text(json.dumps(g.chain.to_json()))
    code, out = _run(capsys, ["--trace", "gamma2", "decompose", str(chain_file)])
    assert code == 0
    rep = json.loads(out)
    num, den = int(rep["value"]["num"]), int(rep["value"]["den"])
    from fractions import Fraction

    assert Fraction(num, den) == g.value
    assert rep["pieces"] and "chain" in rep["pieces"][0]


def test_usage_error_exit_code():
    with pytest.raises(SystemExit) as exc:
        main(["p1", "bogus-procedure", "x"])
    assert exc.value.code == 2


def test_text_format(capsys, data_dir):
    code, out = _run(capsys, ["--format", "text", "check", str(data_dir / "octahedron.facets")])
    assert code == 0
    assert "sphere: yes" in out
