import json

import pytest
import yaml

from maneuver_verifier.main import (
    EXIT_ERROR,
    EXIT_NO_SATISFYING_TRACE,
    EXIT_OK,
    build_parser,
    main,
)


@pytest.fixture
def overtaking_file(overtaking_scenario, write_scenario):
    return write_scenario(overtaking_scenario)


class TestVerifyCommand:
    def test_prints_report(self, overtaking_file, capsys):
        assert main(["verify", "--input", overtaking_file]) == EXIT_OK
        report = yaml.safe_load(capsys.readouterr().out)
        assert report["trace_count"] == 81
        assert report["dijkstra"]["signatures"] == ["cw:b"] * 5

    def test_no_satisfying_trace(self, crosswalk_scenario, write_scenario, capsys):
        path = write_scenario(crosswalk_scenario)
        assert main(["verify", "--input", path]) == EXIT_NO_SATISFYING_TRACE
        report = yaml.safe_load(capsys.readouterr().out)
        assert report["satisfying"] == 0
        assert report["traces"][0]["first_violated_rule"] == "R3(p)"
        assert report["traces"][0]["verdicts"][0]["violation_instant"] == 1

    def test_congested_flag(self, overtaking_file, tmp_path):
        output = tmp_path / "report.yaml"
        code = main(
            ["verify", "--input", overtaking_file, "--congested", "true",
             "--output", str(output)]
        )  # fmt: skip
        assert code == EXIT_OK
        report = yaml.safe_load(output.read_text(encoding="utf-8"))
        assert report["congested"] is True
        assert report["satisfying"] == 81

    def test_step_and_max_checked(self, s1_scenario, write_scenario, capsys):
        path = write_scenario(s1_scenario)
        code = main(
            ["verify", "--input", path, "--step", "0.5", "--max-checked", "7"]
        )
        assert code == EXIT_OK
        report = yaml.safe_load(capsys.readouterr().out)
        assert report["num_steps"] == 8
        assert report["checked"] == 7
        assert report["trace_count"] == 256

    def test_config_file(self, overtaking_file, tmp_path, capsys):
        config = tmp_path / "config.json"
        config.write_text(json.dumps({"emit_envelopes": False, "max_checked": 3}))
        assert main(["verify", "--input", overtaking_file, "--config", str(config)]) == 0
        report = yaml.safe_load(capsys.readouterr().out)
        assert report["checked"] == 3
        assert all(t["envelopes"] is None for t in report["traces"])

    def test_extra_rules(self, overtaking_file, tmp_path, capsys):
        rules = tmp_path / "rules.yaml"
        rules.write_text("- {name: Stay, applies_to: vehicle, formula: 'G b_{o}'}\n")
        assert main(["verify", "--input", overtaking_file, "--rules", str(rules)]) == 0
        report = yaml.safe_load(capsys.readouterr().out)
        assert report["rules"] == ["R1(v)", "R2(v)", "Stay(v)"]


class TestErrors:
    def test_missing_file(self, tmp_path, capsys):
        code = main(["verify", "--input", str(tmp_path / "nope.yaml")])
        assert code == EXIT_ERROR
        assert "error:" in capsys.readouterr().err.splitlines()[-1]

    def test_invalid_scenario(self, tmp_path, capsys):
        path = tmp_path / "bad.yaml"
        path.write_text("road: {s_begin: 0}\n", encoding="utf-8")
        assert main(["partition", "--input", str(path)]) == EXIT_ERROR
        assert "road" in capsys.readouterr().err

    def test_infinite_horizon(self, tmp_path, capsys):
        path = tmp_path / "inf.yaml"
        path.write_text(
            "road: {s_begin: 0, s_end: 100, d_min: -4, d_max: 4}\n"
            "obstacles: []\n"
            "ego: {s0: 10, d0: -2}\n"
            "horizon: .inf\n"
            "step: 1\n",
            encoding="utf-8",
        )
        assert main(["verify", "--input", str(path)]) == EXIT_ERROR
        assert "horizon" in capsys.readouterr().err

    def test_ill_typed_config_value(self, overtaking_file, tmp_path, capsys):
        config = tmp_path / "config.json"
        config.write_text(json.dumps({"ds": "0.5", "max_checked": "many"}))
        code = main(["verify", "--input", overtaking_file, "--config", str(config)])
        assert code == EXIT_ERROR
        assert "max_checked" in capsys.readouterr().err.splitlines()[-1]

    def test_infinite_step_flag(self, overtaking_file):
        assert main(["verify", "--input", overtaking_file, "--step", "inf"]) == EXIT_ERROR

    def test_trace_index_out_of_range(self, overtaking_file, capsys):
        code = main(["envelope", "--input", overtaking_file, "--trace", "81"])
        assert code == EXIT_ERROR
        assert "out of range" in capsys.readouterr().err

    def test_bad_boolean(self, overtaking_file):
        with pytest.raises(SystemExit):
            build_parser().parse_args(
                ["verify", "--input", overtaking_file, "--congested", "maybe"]
            )


class TestInspectionCommands:
    def test_partition(self, overtaking_file, capsys):
        assert main(["partition", "--input", overtaking_file]) == EXIT_OK
        document = yaml.safe_load(capsys.readouterr().out)
        assert len(document["steps"]) == 5
        assert [c["signature"] for c in document["steps"][0]["cells"]] == [
            "cw:b",
            "cw:f",
            "cw:l",
            "cw:r",
        ]

    def test_graph(self, overtaking_file, capsys):
        assert main(["graph", "--input", overtaking_file]) == EXIT_OK
        assert capsys.readouterr().out.count(" -> ") == 48

    def test_enumerate(self, overtaking_file, capsys):
        assert main(["enumerate", "--input", overtaking_file]) == EXIT_OK
        listing = yaml.safe_load(capsys.readouterr().out)
        assert listing["trace_count"] == 81
        assert listing["truncated"] is False
        assert listing["traces"][0] == {
            "index": 0,
            "cost": 4.0,
            "signatures": ["cw:b"] * 5,
        }

    def test_envelope(self, overtaking_file, capsys):
        assert main(["envelope", "--input", overtaking_file, "--ds", "5"]) == EXIT_OK
        document = yaml.safe_load(capsys.readouterr().out)
        assert document["trace"] == 0
        assert len(document["envelopes"]) == 5
        assert document["envelopes"][0]["s_max"] == 47.5

    def test_plot(self, overtaking_file, tmp_path):
        output = tmp_path / "plot.svg"
        code = main(
            ["plot", "--input", overtaking_file, "--trace", "3", "--output", str(output)]
        )
        assert code == EXIT_OK
        assert "<svg" in output.read_text(encoding="utf-8")

    def test_export_smv(self, overtaking_file, capsys):
        assert main(["export-smv", "--input", overtaking_file, "--trace", "2"]) == 0
        text = capsys.readouterr().out
        assert text.startswith("MODULE main")
        assert text.count("LTLSPEC") == 2

    def test_log_file(self, overtaking_file, tmp_path):
        log = tmp_path / "logs" / "run.log"
        code = main(
            ["graph", "--input", overtaking_file, "--log-level", "INFO",
             "--log-file", str(log), "--output", str(tmp_path / "g.dot")]
        )  # fmt: skip
        assert code == EXIT_OK
        assert "Navigation graph: 20 vertices, 48 edges" in log.read_text(
            encoding="utf-8"
        )
