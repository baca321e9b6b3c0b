import json

import numpy as np
import pytest

from gorkit import cli, fixtures, io
from gorkit import modcat as mc

D = io.data_path


def test_bundled_algebras_match_fixtures():
    for name in ("k", "e1", "e2", "e3", "e4", "e5"):
        A = io.load_algebra(D(f"{name}.json"))
        B = fixtures.by_name(name)
        assert A.dimension == B.dimension
        assert A.labels() == B.labels()


def test_algebra_round_trip(tmp_path, E2):
    path = tmp_path / "a.json"
    io.dump(io.algebra_to_json(E2), path)
    A = io.load_algebra(path)
    assert io.algebra_to_json(A) == io.algebra_to_json(E2)


def test_module_round_trip(tmp_path, E2):
    M = mc.random_module(E2, np.random.default_rng(0))
    path = tmp_path / "m.json"
    io.dump(io.module_to_json(M), path)
    N = io.load_module(path, E2)
    assert N == M
    # loading with the embedded algebra gives a new but equal presentation
    N2 = io.load_module(path)
    assert N2.dims == M.dims and N2.algebra is not E2


def test_module_file_with_relative_algebra():
    M = io.load_module(D("e2_s1.json"))
    assert M.dims == (1, 0)
    assert io.load_module(D("e2_p1.json"), M.algebra).dims == (1, 1)


def test_extension_round_trip(tmp_path, e4_ext):
    path = tmp_path / "x.json"
    io.dump(io.extension_to_json(e4_ext.embedding, np.eye(3, dtype=np.int64)), path)
    emb, alpha = io.load_extension(path)
    assert np.array_equal(emb.map, e4_ext.embedding.map)
    assert np.array_equal(alpha, np.eye(3))


def test_prime_override():
    A = io.load_algebra(D("e1.json"), prime=7)
    assert A.prime == 7


@pytest.mark.parametrize(
    "data, match",
    [
        ({"quiver": {"vertices": ["1"], "arrows": [{"name": "x", "from": "1"}]}}, "missing field 'to'"),
        ({"relations": []}, "missing field 'quiver'"),
        ({"quiver": {"vertices": ["1"], "arrows": [{"name": "x", "from": "1", "to": "1"}]},
          "relations": [{"terms": [{"coef": 1, "path": ["x", "z"]}]}]}, "z"),
        ({"quiver": {"vertices": ["1"], "arrows": []}, "field": {"prime": 12}}, "algebra"),
    ],
)
def test_invalid_algebras(data, match):
    with pytest.raises(io.InvalidFile, match=match):
        io.load_algebra(data)


def test_invalid_modules(E1, E2):
    with pytest.raises(io.InvalidFile, match="unknown vertices"):
        io.module_from_json({"dims": {"9": 1}}, E2)
    with pytest.raises(io.InvalidFile, match="needs a 1x1"):
        io.module_from_json({"dims": {"1": 1, "2": 1}, "action": {"a": [[1, 0]]}}, E2)
    with pytest.raises(io.InvalidFile, match="module"):
        # x acting invertibly violates x^2 = 0
        io.module_from_json({"dims": {"1": 1}, "action": {"x": [[1]]}}, E1)


def test_unreadable_files(tmp_path):
    with pytest.raises(io.InvalidFile, match="no such file"):
        io.load_algebra(tmp_path / "missing.json")
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    with pytest.raises(io.InvalidFile, match="not valid JSON"):
        io.load_algebra(bad)


# -- CLI -----------------------------------------------------------------------------


def run(*argv):
    return cli.run([str(a) for a in argv])


def test_cli_basis():
    r = run("basis", D("e2.json"))
    assert r.exit_code == 0
    assert r.results["dimension"] == 3


def test_cli_certify():
    assert run("ig-certify", D("e1.json")).lines == ["certified d=0"]
    assert run("ig-certify", D("e2.json")).lines == ["certified d=1"]
    r = run("ig-certify", D("e3.json"), "--cap", "10")
    assert r.exit_code == 0 and r.lines[0].startswith("unknown")
    assert run("ig-certify", D("e3.json"), "--cap", "10", "--strict").exit_code == 5


def test_cli_homological_dimensions():
    assert run("pd", D("e2.json"), D("e2_s1.json")).lines == ["pd = 1"]
    assert run("pd", D("e1.json"), D("e1_s.json")).lines[0].startswith("pd = infinity")
    assert run("id", D("e2.json"), D("e2_p1.json")).lines == ["id = 0"]
    assert run("ext", D("e1.json"), D("e1_s.json"), D("e1_s.json"), "--degree", 3).lines == ["dim Ext^3 = 1"]


def test_cli_gorenstein_commands():
    e2, s1, s2, p1 = D("e2.json"), D("e2_s1.json"), D("e2_s2.json"), D("e2_p1.json")
    assert run("gdim", e2, s1).lines == ["Gd = 1 (= pd)"]
    assert run("gp-test", e2, p1).lines == ["GP: yes"]
    assert run("gp-test", e2, s1).lines == ["GP: no (Gd = 1)"]
    assert run("gext", e2, s1, s2, "--degree", 1).results["dimension"] == 1
    assert run("gext-direct", e2, s1, s2, "--degree", 1).results["dimension"] == 1
    t = run("tate", D("e1.json"), D("e1_s.json"), D("e1_s.json"))
    assert t.results["dimensions"] == {str(i): 1 for i in range(-3, 4)}
    am = run("am-check", e2, s1, s2)
    assert am.exit_code == 0 and am.results["exact"]
    assert run("nakayama", e2).results["vertices"] == {"1": "yes", "2": "yes"}


def test_cli_extensions():
    r = run("frob-check", D("e4_over_e2.json"))
    assert r.exit_code == 0 and r.results["frobenius"] is True
    r = run("frob-check", D("e3_over_k.json"), "--trials", 3)
    assert r.results["frobenius"] is None
    assert run("frob-check", D("e3_over_k.json"), "--trials", 3, "--strict").exit_code == 5
    t = run("transfer-check", D("e4_over_e2.json"), "--samples", 3)
    assert t.exit_code == 0 and t.results["ok"] and t.results["d"] == 1


def test_cli_exit_codes(tmp_path):
    assert run("no-such-command").exit_code == 2
    assert run("ext", D("e1.json"), D("e1_s.json"), D("e1_s.json")).exit_code == 2  # --degree missing
    assert run("basis", tmp_path / "missing.json").exit_code == 3
    r = run("gdim", D("e3.json"), D("e3_s.json"), "--cap", 6)
    assert r.exit_code == 4 and "not certified" in r.results["error"]
    assert run("ext", D("e1.json"), D("e1_s.json"), D("e1_s.json"), "--degree", -1).exit_code == 4
    # a module over another algebra
    assert run("gdim", D("e2.json"), D("e1_s.json")).exit_code == 3


def test_cli_json_is_deterministic(capsys):
    argv = ["am-check", D("e2.json"), D("e2_s1.json"), D("e2_s2.json"), "--json"]
    outs = []
    for _ in range(2):
        assert cli.main(argv) == 0
        outs.append(capsys.readouterr().out)
    assert outs[0] == outs[1]
    data = json.loads(outs[0])
    assert data["schema"] == "gorkit/1" and data["exit_code"] == 0
    assert set(data["inputs"]) == set(argv[1:4])


def test_cli_prime_precedence(monkeypatch):
    e1 = D("e1.json")
    assert run("basis", e1).results["prime"] == 32003
    monkeypatch.setenv("GORKIT_PRIME", "5")
    assert run("basis", e1).results["prime"] == 5
    assert run("basis", e1, "--prime", 7).results["prime"] == 7
    monkeypatch.setenv("GORKIT_PRIME", "five")
    assert run("basis", e1).exit_code == 2


def test_cli_cap_from_environment(monkeypatch):
    monkeypatch.setenv("GORKIT_CAP", "4")
    r = run("ig-certify", D("e3.json"))
    assert r.results["cap"] == 4


def test_cli_selftest():
    r = run("selftest", "--algebra", "e1", "--dim-cap", 4)
    assert r.exit_code == 0 and r.results["mismatches"] == 0
