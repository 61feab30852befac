import io
import json

import pytest

from og10 import __version__
from og10.cli import run


def invoke(*argv):
    out = io.StringIO()
    code = run(list(argv), out=out)
    return code, out.getvalue()


def invoke_json(*argv):
    code, text = invoke(*argv, "--json")
    assert code == 0
    payload = json.loads(text)
    assert set(payload) == {"artifact_version", "command", "inputs", "result"}
    assert payload["artifact_version"] == __version__
    return payload


def test_count_tangent_plain():
    assert invoke("count-tangent", "--degree", "3") == (0, "176904\n")


def test_count_tangent_json():
    payload = invoke_json("count-tangent", "--degree", "4")
    assert payload["result"] == {"degree": 4, "count": "19541289824", "valid_range": True}
    assert invoke_json("count-tangent", "--degree", "2")["result"]["valid_range"] is False


def test_json_is_byte_stable():
    assert invoke("og10-euler", "--trace", "--json") == invoke("og10-euler", "--trace", "--json")


def test_strata_json():
    rows = invoke_json("strata", "--mu-max", "5")["result"]
    assert len(rows) == 22
    assert rows[0] == {
        "configuration": {},
        "label": "smooth",
        "mu_tot": 0,
        "delta": 0,
        "geometric_genus": 6,
        "genus_one": False,
    }
    assert [r["label"] for r in rows if r["genus_one"]] == ["5A1"]
    assert rows[-1]["configuration"] == {"A1": 5}


def test_strata_plain():
    code, text = invoke("strata", "--mu-max", "2")
    assert code == 0
    assert text.strip().endswith("4 configurations")


def test_prym_euler():
    assert invoke("prym-euler", "--nodes", "5", "--genus", "1") == (0, "1\n")
    assert invoke("prym-euler", "--nodes", "3", "--genus", "2") == (0, "0\n")
    result = invoke_json("prym-euler", "--nodes", "5", "--genus", "1", "--brute-force")["result"]
    assert result == {"euler": 1, "closed_form": 1, "strata": 32, "nonzero_strata": 1}


def test_prym_domain_errors(monkeypatch):
    assert invoke("prym-euler", "--nodes", "2", "--genus", "0")[0] == 1
    monkeypatch.delenv("OG10_MAX_BRUTE_NODES", raising=False)
    assert invoke("prym-euler", "--nodes", "40", "--genus", "1", "--brute-force")[0] == 1


def test_og10_euler():
    assert invoke("og10-euler") == (0, "176904\n")
    result = invoke_json("og10-euler", "--trace")["result"]
    assert result["euler"] == "176904"
    assert len(result["strata"]) == 22
    assert result["strata"][0]["label"] == "U"
    assert [s["label"] for s in result["strata"] if s["contribution"] != "0"] == ["5A1"]


def test_og10_trace_plain():
    code, text = invoke("og10-euler", "--trace")
    lines = text.strip().splitlines()
    assert code == 0
    assert len(lines) == 1 + 22 + 1
    assert lines[-1] == "176904"


def test_identities():
    code, text = invoke("identities")
    assert code == 0
    assert "3^5(3^6-1): 176904 = 176904 ok" in text
    assert "2^4(2^5-1)-1: 495 = 495 ok" in text
    result = invoke_json("identities")["result"]
    assert all(r["equal"] for r in result)


def test_betti_search_json():
    payload = invoke_json("betti", "search", "--max-odd", "12", "--limit", "3")
    assert payload["inputs"] == {"max_odd": 12, "limit": 3}
    vectors = payload["result"]["vectors"]
    assert payload["result"]["count"] == 3
    assert all(v["n"] == 5 and len(v["b"]) == 21 for v in vectors)


def test_betti_check(tmp_path):
    good = tmp_path / "good.json"
    half = [1, 0, 24, 0, 300, 0, 2600, 0, 23346, 0, 124362]
    good.write_text(json.dumps({"n": 5, "b": half + half[-2::-1]}))
    code, text = invoke("betti", "check", "--file", str(good))
    assert code == 0
    assert "euler: 176904 (expected 176904): ok" in text

    bad = tmp_path / "bad.json"
    half[4] = 299
    bad.write_text(json.dumps({"n": 5, "b": half + half[-2::-1]}))
    code, text = invoke("betti", "check", "--file", str(bad), "--json")
    assert code == 1
    report = json.loads(text)["result"]
    assert report["verbitsky_violations"] == [{"k": 2, "bound": "300", "actual": "299"}]
    assert "euler" in report["failures"]


def test_betti_check_bad_file(tmp_path):
    assert invoke("betti", "check", "--file", str(tmp_path / "missing.json"))[0] == 1
    wrong = tmp_path / "wrong.json"
    wrong.write_text(json.dumps({"n": 5, "b": [1, 0, 24]}))
    assert invoke("betti", "check", "--file", str(wrong))[0] == 1


@pytest.mark.parametrize(
    "argv",
    [[], ["bogus"], ["count-tangent"], ["count-tangent", "--degree", "x"], ["betti"], ["strata", "--nope"]],
)
def test_usage_errors(argv, capsys):
    assert run(argv) == 2
    assert "usage:" in capsys.readouterr().err
