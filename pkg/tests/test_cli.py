import json

import pytest

from torikit.cli import (
    fan_from_document,
    main,
    parse_fan_document,
    serialize_fan_document,
)
from torikit.errors import FanDocumentError

from conftest import DATA_DIR

GOLDEN = sorted(DATA_DIR.glob("*.json"))
COMMANDS = ["analyze", "hilbert-basis", "decompose"]


def test_parse_affine_plane():
    doc = parse_fan_document('{"rank":2,"rays":[[1,0],[0,1]],"cones":[[0,1]]}')
    assert doc.rank == 2
    assert doc.rays == ((1, 0), (0, 1))
    assert doc.cones == ((0, 1),)
    fan = fan_from_document(doc)
    assert fan.euler_characteristic() == 1


def test_parse_punctured_plane():
    doc = parse_fan_document('{"rank":2,"rays":[[1,0],[0,1]],"cones":[[0],[1]]}')
    fan = fan_from_document(doc)
    assert fan.euler_characteristic() == 0


def test_parse_rejects_out_of_range_index():
    with pytest.raises(FanDocumentError):
        parse_fan_document('{"rank":2,"rays":[[1,0]],"cones":[[0,1]]}')


def test_parse_rejects_unknown_fields():
    with pytest.raises(FanDocumentError):
        parse_fan_document('{"rank":1,"rays":[[1]],"cones":[[0]],"extra":true}')


def test_parse_rejects_duplicate_rays():
    with pytest.raises(FanDocumentError):
        parse_fan_document('{"rank":1,"rays":[[1],[1]],"cones":[[0]]}')


def test_parse_rejects_missing_fields():
    with pytest.raises(FanDocumentError):
        parse_fan_document('{"rank":1,"rays":[[1]]}')


def test_parse_rejects_bad_json():
    with pytest.raises(FanDocumentError) as exc:
        parse_fan_document("{not json")
    assert "line" in str(exc.value)


def test_parse_rejects_wrong_vector_length():
    with pytest.raises(FanDocumentError):
        parse_fan_document('{"rank":2,"rays":[[1]],"cones":[[0]]}')


@pytest.mark.parametrize("path", GOLDEN, ids=lambda p: p.stem)
def test_round_trip(path):
    doc = parse_fan_document(path.read_text())
    assert parse_fan_document(serialize_fan_document(doc)) == doc


def test_exit_code_success(capsys):
    assert main(["analyze", str(DATA_DIR / "a2.json")]) == 0
    assert capsys.readouterr().out


def test_exit_code_parse_error(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text('{"rank":2,"rays":[[1,0]],"cones":[[0,3]]}')
    assert main(["analyze", str(bad)]) == 2
    assert "error" in capsys.readouterr().err


def test_exit_code_not_a_fan(tmp_path, capsys):
    bad = tmp_path / "overlap.json"
    bad.write_text(json.dumps({
        "rank": 2,
        "rays": [[1, 0], [0, 1], [1, 2]],
        "cones": [[0, 1], [0, 2]],
    }))
    assert main(["analyze", str(bad)]) == 2


def test_exit_code_missing_file(capsys):
    assert main(["analyze", str(DATA_DIR / "does_not_exist.json")]) == 2


def test_exit_code_math_precondition(capsys):
    assert main(["ga-actions", str(DATA_DIR / "torus2.json")]) == 3
    assert main(["ga-actions", str(DATA_DIR / "a1_times_torus.json")]) == 3
    assert main(["ga-actions", str(DATA_DIR / "p1.json")]) == 3


def test_ga_actions_succeeds_on_affine_plane(capsys):
    assert main(["ga-actions", str(DATA_DIR / "a2.json"), "--json"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["character_rank"] == 2
    assert report["character_determinant"] != 0
    assert report["boundary_annihilation_verified"] is True


def test_roots_command(capsys):
    assert main(["roots", str(DATA_DIR / "a1.json"), "--ray", "0", "--radius", "5",
                 "--json"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["roots"] == [[-1]]


def test_roots_rejects_bad_ray_index(capsys):
    assert main(["roots", str(DATA_DIR / "a1.json"), "--ray", "7"]) == 2


def test_decompose_command(capsys):
    assert main(["decompose", str(DATA_DIR / "a1_times_torus.json"), "--json"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["torus_factor_rank"] == 1
    assert report["reduced_rank"] == 1
    assert report["reduced_rays"] == [[1]]


def test_hilbert_basis_command(capsys):
    assert main(["hilbert-basis", str(DATA_DIR / "a2_minus_origin.json"), "--json"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["generators"] == [[0, 1], [1, 0]]
    assert report["units"] == []


def test_human_and_machine_outputs_agree(capsys):
    for path in GOLDEN:
        assert main(["analyze", str(path), "--json"]) == 0
        machine = json.loads(capsys.readouterr().out)
        assert main(["analyze", str(path)]) == 0
        human = capsys.readouterr().out
        for key, value in machine.items():
            assert f"{key}:" in human
            if not isinstance(value, (list, dict)):
                assert f"{key}: {json.dumps(value)}" in human


@pytest.mark.parametrize("command", COMMANDS)
def test_machine_output_deterministic(command, capsys):
    for path in GOLDEN:
        assert main([command, str(path), "--json"]) == 0
        first = capsys.readouterr().out
        assert main([command, str(path), "--json"]) == 0
        second = capsys.readouterr().out
        assert first == second
