import pytest

from detmult.cli import run
from detmult.plotting import load_sweep_rows, main, render_length_plot


@pytest.fixture
def sweep_csv(tmp_path, capsys):
    path = tmp_path / "sweep.csv"
    code = run(
        ["sweep", "--m", "2", "--n", "2:3", "--s", "1/1,3/1", "--p", "2",
         "--emin", "1", "--emax", "4", "--format", "csv", "--out", str(path)]
    )
    capsys.readouterr()
    assert code == 0
    return path


class TestLoadRows:
    def test_typed_rows(self, sweep_csv):
        rows = load_sweep_rows(sweep_csv)
        assert len(rows) == 2 * 2 * 4
        first = rows[0]
        assert first["m"] == 2 and first["q"] == 2
        assert isinstance(first["length"], int)

    def test_rejects_foreign_csv(self, tmp_path):
        bad = tmp_path / "bad.csv"
        bad.write_text("a,b\n1,2\n")
        with pytest.raises(ValueError, match="sweep columns"):
            load_sweep_rows(bad)


class TestRender:
    def test_writes_figure(self, sweep_csv, tmp_path):
        out = tmp_path / "lengths.png"
        render_length_plot(load_sweep_rows(sweep_csv), out)
        assert out.exists() and out.stat().st_size > 1000

    def test_log_scale(self, sweep_csv, tmp_path):
        out = tmp_path / "lengths_log.png"
        render_length_plot(load_sweep_rows(sweep_csv), out, log_scale=True)
        assert out.exists() and out.stat().st_size > 1000

    def test_empty_rows_rejected(self, tmp_path):
        with pytest.raises(ValueError):
            render_length_plot([], tmp_path / "nothing.png")


class TestMain:
    def test_end_to_end(self, sweep_csv, tmp_path, capsys):
        out = tmp_path / "fig.png"
        assert main([str(sweep_csv), "--out", str(out)]) == 0
        printed = capsys.readouterr().out.strip()
        assert printed == str(out)
        assert out.exists() and out.stat().st_size > 1000

    def test_default_output_name_and_env_dir(self, sweep_csv, tmp_path, monkeypatch, capsys):
        monkeypatch.setenv("DETMULT_OUTPUT_DIR", str(tmp_path))
        assert main([str(sweep_csv), "--log"]) == 0
        printed = capsys.readouterr().out.strip()
        assert printed == str(tmp_path / "sweep.png")
        assert (tmp_path / "sweep.png").exists()
