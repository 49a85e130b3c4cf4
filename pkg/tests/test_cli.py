import io
import json

import pytest

from src.ui.cli import EXIT_OK, EXIT_REFUTED, EXIT_USAGE, run


@pytest.fixture
def workdir(tmp_path, monkeypatch):
    # без lexseg.json в рабочем каталоге действуют настройки по умолчанию
    monkeypatch.chdir(tmp_path)
    return tmp_path


def _run(*argv):
    out = io.StringIO()
    code = run(list(argv), stdout=out)
    return code, out.getvalue()


def test_classify_case_one_json(workdir):
    # Act
    code, text = _run("classify", "--n", "3", "--d", "2", "--u", "1,1,0", "--v", "1,0,1", "--json")

    # Assert
    assert code == EXIT_OK
    data = json.loads(text)
    assert data["verdict"] == "CompletelyCaseI"
    assert data["a"] == 1
    assert data["completely"] is True


def test_classify_non_completely_text(workdir):
    code, text = _run("classify", "--n", "4", "--d", "3", "--u", "1,0,1,1", "--v", "0,1,0,2")
    assert code == EXIT_OK
    assert "NonCompletely(l=2)" in text


@pytest.mark.parametrize("argv", [
    ("classify", "--n", "3", "--d", "2", "--u", "1,x,1", "--v", "1,0,1"),
    ("classify", "--n", "4", "--d", "2", "--u", "1,1,0", "--v", "1,0,1"),
    ("classify", "--n", "3", "--d", "3", "--u", "1,1,0", "--v", "1,0,1"),
    ("classify", "--n", "3", "--d", "2", "--u", "1,0,1", "--v", "1,1,0"),
    ("frobnicate",),
    ("classify", "--n", "3"),
])
def test_usage_errors(workdir, argv):
    code, _ = _run(*argv)
    assert code == EXIT_USAGE


def test_missing_explicit_config(workdir):
    code, _ = _run("paper-examples", "--config", str(workdir / "absent.json"))
    assert code == EXIT_USAGE


def test_config_file_is_applied(workdir):
    # Arrange
    argv = ("exchange", "--n", "4", "--d", "3", "--final", "1,0,1,1", "--json")
    _, default_text = _run(*argv)
    (workdir / "lexseg.json").write_text(json.dumps({"exchange_bound": 1}), encoding="utf-8")

    # Act
    code, text = _run(*argv)
    _, flag_text = _run(*argv, "--bound", "2")

    # Assert: при N <= 1 проверяются только пары образующих
    assert code == EXIT_OK
    checked = json.loads(text)["pairs_checked"]
    assert 0 < checked < json.loads(default_text)["pairs_checked"]
    assert json.loads(flag_text) == json.loads(default_text)


def test_reference_examples_command(workdir):
    code, text = _run("paper-examples", "--json")
    assert code == EXIT_OK
    assert all(item["ok"] for item in json.loads(text)["examples"])


def test_exchange_counterexample_exit_code(workdir):
    code, text = _run("exchange", "--mode", "l", "--n", "4", "--d", "3", "--final", "1,0,1,1", "--bound", "2")
    assert code == EXIT_REFUTED
    assert "контрпример" in text


def test_exchange_requires_single_source(workdir):
    code, _ = _run("exchange", "--n", "4", "--d", "3", "--final", "1,0,1,1", "--initial", "1,0,1,1")
    assert code == EXIT_USAGE


def test_tableau_from_support(workdir):
    code, text = _run("tableau", "--support", "1,1,2,2", "--N", "2", "--d", "2", "--json")
    assert code == EXIT_OK
    data = json.loads(text)
    assert data["standard"] is True
    assert data["rows"] == [[1, 2], [1, 2]]


def test_tableau_check(workdir):
    code, text = _run("tableau", "--check", "1,1;2,2", "--json")
    assert code == EXIT_OK
    assert json.loads(text)["standard"] is False


def test_tableau_support_needs_shape(workdir):
    code, _ = _run("tableau", "--support", "1,1,2,2")
    assert code == EXIT_USAGE


def test_power_quotients(workdir):
    # Act
    code, text = _run("power-quotients", "--n", "4", "--d", "3", "--u", "1,0,1,1", "--v", "0,1,0,2",
                      "--N", "2", "--json")

    # Assert
    assert code == EXIT_OK
    data = json.loads(text)
    assert data["certificate"]["ok"] is True
    assert data["revalidated"] is True
    assert data["order"] == "revlex-dec"


def test_power_quotients_negative_pair(workdir):
    code, _ = _run("power-quotients", "--n", "3", "--d", "2", "--u", "1,0,1", "--v", "0,2,0", "--N", "1")
    assert code == EXIT_USAGE


def test_rees_gb_verify(workdir):
    code, text = _run("rees-gb", "--n", "4", "--d", "3", "--u", "1,0,1,1", "--v", "0,1,0,2",
                      "--verify", "--check-exchange", "--json")
    assert code == EXIT_OK
    data = json.loads(text)
    assert data["verified"] is True
    assert data["quadratic"] is True
    assert data["warning"] is False


def test_sweep_writes_output(workdir):
    path = workdir / "sweep.json"
    code, text = _run("sweep", "--n-max", "2", "--d-max", "2", "--N-max", "2", "--output", str(path))
    assert code == EXIT_OK
    assert len(json.loads(path.read_text(encoding="utf-8"))) == 5
    assert "расхождений 0" in text


def test_lemmas(workdir):
    code, text = _run("lemmas", "--cases", "20", "--seed", "3", "--json")
    assert code == EXIT_OK
    assert len(json.loads(text)["lemmas"]) == 4


def test_tableau_check_rejects_unordered_rows(workdir):
    code, text = _run("tableau", "--check", "2,2;1,3", "--json")
    assert code == EXIT_USAGE
    assert text == ""


def test_sweep_output_into_missing_directory(workdir):
    path = workdir / "absent" / "sweep.json"
    code, _ = _run("sweep", "--n-max", "2", "--d-max", "2", "--N-max", "1", "--output", str(path))
    assert code == EXIT_USAGE
    assert not path.exists()


def test_config_path_is_directory(workdir):
    (workdir / "conf").mkdir()
    code, _ = _run("paper-examples", "--config", str(workdir / "conf"))
    assert code == EXIT_USAGE
