import io
import json
import subprocess
import sys
from pathlib import Path

import pytest

from lensgoeritz.cli import parse_amalgam_file, run

HERE = Path(__file__).parent
DATA = HERE / "data"
GOLDEN = HERE / "golden"


def run_cli(argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def golden_cases():
    for p in range(2, 7):
        yield f"surgery_p{p}.json", ["surgery", "--p", str(p), "--json"]
        yield f"triple_p{p}.json", ["triple", "--p", str(p), "--json"]
        yield f"present_stated_p{p}.json", ["present", "--p", str(p), "--stated", "--json"]
        yield f"present_constructed_p{p}.json", ["present", "--p", str(p), "--json"]
        yield f"verify_p{p}.json", ["verify", "--p", str(p), "--sym-max", "3"]
        yield f"tree_p{p}.json", ["tree", "--p", str(p), "--depth", "2", "--len-cap", "3"]
    yield "primitive_xyxy2.json", ["primitive", "xyxy^2", "--json"]
    yield "tree_edges_p3.txt", ["tree", "--p", "3", "--depth", "2", "--len-cap", "1", "--edges"]
    yield "present_stated_p4.txt", ["present", "--p", "4", "--stated"]


@pytest.mark.parametrize("name,argv", list(golden_cases()))
def test_golden(name, argv):
    code, out, err = run_cli(argv)
    assert code == 0, err
    assert out == (GOLDEN / name).read_text(encoding="utf-8")
    if name.endswith(".json"):
        json.loads(out)


def test_primitive_agreement():
    code, out, _ = run_cli(["primitive", "xyxy^2"])
    assert code == 0
    assert out.splitlines()[0] == "xyxy^2: Primitive"


def test_primitive_not():
    code, out, _ = run_cli(["primitive", "(xy)^3"])
    assert code == 0 and "NotPrimitive" in out


def test_triple_text():
    assert run_cli(["triple", "--p", "5"])[:2] == (0, "xyxy^4: NotPrimitive - no primitive triple\n")
    assert run_cli(["triple", "--p", "3"])[1].startswith("xyxy^2: Primitive")


def test_present_p4_stated_text():
    code, out, _ = run_cli(["present", "--p", "4", "--stated"])
    assert out.splitlines()[0] == "gens: alpha beta gamma sigma"
    assert "rel: sigma^2" in out and "rel: gamma^2" in out


@pytest.mark.parametrize("argv", [
    ["primitive", "xzy"], ["primitive", "x^"], ["surgery", "--p", "1"], ["triple", "--p", "x"],
    ["tree", "--p", "3", "--depth", "-1"], ["verify", "--p", "4", "--sym-max", "9"],
    ["nosuch"], [], ["present", "--p", "3", "--stated", "--constructed"],
    ["homcount", "--file", "/nonexistent", "--n", "2"],
    ["abelian", "--file", str(HERE / "test_cli.py")],
    ["amalgam", "--file", str(DATA / "bad_embedding.amalgam")],
    ["homcount", "--file", str(DATA / "d8.txt"), "--n", "7"],
])
def test_input_errors_exit_1(argv):
    code, out, err = run_cli(argv)
    assert code == 1
    assert err.startswith("error:")


def test_primitive_empty_word():
    code, out, _ = run_cli(["primitive", "1"])
    assert code == 0 and out.startswith("1: NotPrimitive")


def test_disagreement_exit_2(monkeypatch):
    from lensgoeritz import f2core
    real = f2core.is_primitive_christoffel

    def flipped(w):
        v = real(w)
        return f2core.PrimitivityVerdict(
            f2core.Verdict.PRIMITIVE if not v.is_primitive else f2core.Verdict.NOT_PRIMITIVE)

    monkeypatch.setattr(f2core, "is_primitive_christoffel", flipped)
    code, _, err = run_cli(["primitive", "xy"])
    assert code == 2 and "disagree" in err


def test_files():
    d8 = str(DATA / "d8.txt")
    assert run_cli(["homcount", "--file", d8, "--n", "2"])[1] == "4\n"
    assert run_cli(["homcount", "--file", d8, "--n", "3"])[1] == "10\n"
    assert run_cli(["abelian", "--file", d8])[1] == "Z/2 + Z/2\n"
    assert json.loads(run_cli(["abelian", "--file", d8, "--json"])[1]) == {"freeRank": 0,
                                                                         "torsion": [2, 2]}
    assert run_cli(["order", "--file", d8])[1] == "8\n"


def test_amalgam_file():
    code, out, _ = run_cli(["amalgam", "--file", str(DATA / "z4_z6.amalgam"),
                            "--word", "a^2 b^3", "--word", "a b"])
    assert code == 0
    assert out.startswith("gens: a b\n")
    assert "rel: a^2 b^-3" in out
    assert "nf a^2 b^3: 1" in out


def test_amalgam_goeritz_file_matches_module():
    from lensgoeritz.fpgroups import amalgamated_product
    from lensgoeritz.goeritz import stabilizer_data
    spec = parse_amalgam_file((DATA / "goeritz4.amalgam").read_text())
    assert amalgamated_product(spec) == amalgamated_product(stabilizer_data(4).spec)


def test_sweep_seeded():
    code, out, _ = run_cli(["sweep", "--seed", "3", "--count", "200"])
    assert code == 0
    d = json.loads(out)
    assert d["seed"] == 3 and d["disagreements"] == []
    assert run_cli(["sweep", "--seed", "3", "--count", "200"])[1] == out


def test_console_entry_point():
    r = subprocess.run([sys.executable, "-m", "lensgoeritz.cli", "triple", "--p", "4"],
                       capture_output=True, text=True)
    assert r.returncode == 0 and "no primitive triple" in r.stdout


def test_order_respects_env_cap(monkeypatch):
    d8 = str(DATA / "d8.txt")
    monkeypatch.setenv("GOERITZ_COSET_CAP", "5")
    assert run_cli(["order", "--file", d8])[1].startswith("overflow")
    monkeypatch.setenv("GOERITZ_COSET_CAP", "junk")
    assert run_cli(["order", "--file", d8])[0] == 1
