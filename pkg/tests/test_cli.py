import shutil
from pathlib import Path

import pytest

from attache.cli import main
from attache.fixtures import generate_survey_csv

PACKAGE_DATA = Path(__file__).resolve().parent.parent / "src" / "attache" / "data"


@pytest.fixture()
def data_dir(tmp_path):
    (tmp_path / "survey.csv").write_text(generate_survey_csv(n_rows=300, malformed_rate=0.05))
    shutil.copy(PACKAGE_DATA / "mapping_fixture.json", tmp_path / "mapping.json")
    shutil.copy(PACKAGE_DATA / "registry.csv", tmp_path / "registry.csv")
    return tmp_path


def _flags(data_dir):
    return [
        "--data", str(data_dir / "survey.csv"),
        "--mapping", str(data_dir / "mapping.json"),
        "--registry", str(data_dir / "registry.csv"),
    ]


def test_validate_prints_provenance(data_dir, capsys):
    assert main(["validate"] + _flags(data_dir)) == 0
    out = capsys.readouterr().out
    assert "rows accepted: 285" in out
    assert "rows rejected: 15" in out
    assert "communities in registry: 26" in out


def test_report_writes_file(data_dir, tmp_path):
    out = tmp_path / "top5.csv"
    assert main(["report"] + _flags(data_dir) + ["openness_top5", "--out", str(out)]) == 0
    assert out.read_text().startswith("community,region,urbanicity,openness")


def test_env_overrides(data_dir, monkeypatch, tmp_path):
    monkeypatch.setenv("ATTACHE_DATA", str(data_dir / "survey.csv"))
    monkeypatch.setenv("ATTACHE_MAPPING", str(data_dir / "mapping.json"))
    monkeypatch.setenv("ATTACHE_REGISTRY", str(data_dir / "registry.csv"))
    out = tmp_path / "econ.csv"
    assert main(["report", "rustbelt_economy", "--out", str(out)]) == 0
    assert len(out.read_text().strip().splitlines()) == 8
