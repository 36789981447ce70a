import json

import pytest

from resonance.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out.strip()


@pytest.fixture(autouse=True)
def no_env_store(monkeypatch):
    monkeypatch.delenv("STORE_PATH", raising=False)


def test_chi(capsys, tmp_path):
    store = tmp_path / "s.ndjson"
    code, out = run(capsys, "chi", "--S", "0,1", "--n", "3", "--store", str(store))
    assert code == 0
    assert json.loads(out) == {"coeffs": ["1", "-7", "15", "-9"]}
    provs = [json.loads(l)["provenance"] for l in store.read_text().splitlines()]
    assert provs == ["nbc", "finite-field"]
    # re-running leaves the store unchanged
    run(capsys, "chi", "--S", "0,1", "--n", "3", "--store", str(store))
    assert len(store.read_text().splitlines()) == 2


def test_chambers(capsys):
    code, out = run(capsys, "chambers", "--S", "0,1", "--n", "2", "--method", "both")
    assert code == 0 and json.loads(out) == {"count": 6, "agree": True}


def test_fsgen(capsys):
    code, out = run(capsys, "fsgen", "--S", "0,1", "--i", "1", "--E", "4")
    data = json.loads(out)
    assert code == 0
    assert {k: data[k] for k in ("bound", "minimal", "status")} == {"bound": 2, "minimal": 2, "status": "generated"}


def test_store_path_from_environment(capsys, tmp_path, monkeypatch):
    store = tmp_path / "env.ndjson"
    monkeypatch.setenv("STORE_PATH", str(store))
    run(capsys, "betti", "--S=-1,1", "--n", "3")
    assert json.loads(store.read_text().splitlines()[0])["value"] == {"betti": [1, 4, 6, 3]}


def test_csv(capsys):
    code, out = run(capsys, "fqseries", "--q", "2", "--i", "1", "--n", "4", "--format", "csv")
    header, row = out.splitlines()
    assert header.split(",")[:3] == ["q", "i", "series"]
    assert row.split(",")[2] == "0 1 3 7 15"


def test_other_commands(capsys):
    assert json.loads(run(capsys, "decompose", "--S", "0,1", "--n", "3", "--i", "1")[1]) == \
        {"multiplicities": {"3": 3, "2+1": 2}}
    assert json.loads(run(capsys, "rowbound", "--S", "0,1", "--n", "3", "--i", "1")[1])["holds"]
    assert json.loads(run(capsys, "tensorlemma", "--m1", "2", "--m2", "2", "--E", "3")[1])["verified"]
    fit = json.loads(run(capsys, "fit", "--S", "0,1", "--n", "8", "--i", "1")[1])
    assert fit["c"] == {"1": ["-1"], "2": ["1"]} and fit["n0"] == 1
    table = json.loads(run(capsys, "padded", "--S", "0,1", "--n", "5", "--i", "1", "--lambda", "0")[1])
    assert [r["multiplicity"] for r in table["table"]] == [1, 2, 3, 4, 5]
    char = json.loads(run(capsys, "character", "--S", "0,1", "--n", "2", "--parity", "cordovil")[1])
    assert char["character"] == {"2": "2", "1+1": "6"}


def test_errors(capsys):
    code, out = run(capsys, "fit", "--S", "0,1", "--n", "3", "--i", "1")
    assert code == 1 and "InsufficientData" in json.loads(out)["error"]
    assert main(["chi", "--S", "0", "--n", "2"]) == 2
    assert main(["nonsense"]) == 2
    assert main(["chi", "--n", "2"]) == 2


def test_verify_all_tiny(capsys):
    code, out = run(capsys, "verify-all", "--tiny")
    data = json.loads(out)
    status = {c["criterion"]: c["passed"] for c in data["criteria"]}
    assert all(status[k] for k in status if k != 8)
    # the threshold rational function is t/(1-2t) at every size
    assert not status[8] and code == 1
