import csv
import io
import json
import os
import subprocess
from pathlib import Path

import jsonschema
import pytest

CLI = os.environ.get("DESCENTLAB_CLI", "build/descentlab")
SCHEMAS = Path(os.environ.get("DESCENTLAB_SCHEMAS", "schemas"))


def cli(*args, env=None):
    full_env = dict(os.environ)
    full_env.pop("DESCENTLAB_SEED", None)
    full_env.update(env or {})
    return subprocess.run([CLI, *args], capture_output=True, text=True, env=full_env)


def json_out(schema, *args):
    r = cli("--output-format", "json", *args)
    assert r.returncode == 0, r.stderr
    doc = json.loads(r.stdout)
    jsonschema.validate(doc, json.loads((SCHEMAS / f"{schema}.schema.json").read_text()))
    return doc


def test_stats_worked_example():
    doc = json_out("stats", "stats", "--perm", "8 5 7 1 2 6 4 3")
    assert (doc["des"], doc["udr"], doc["maj"], doc["imaj"]) == (4, 6, 17, 20)


def test_compact_permutation_text():
    doc = json_out("stats", "stats", "--perm", "1432")
    assert doc["inv"] == 3


def test_signed_stats():
    doc = json_out("signed_stats", "signed-stats", "--perm=-4,7,2,-6,-3,5,1")
    assert (doc["des_b"], doc["fdes"], doc["neg"]) == (4, 7, 3)


def test_poly_plain():
    r = cli("poly", "--family", "eulerian", "--n", "4")
    assert r.returncode == 0
    assert r.stdout == "t + 11*t^2 + 11*t^3 + t^4\n"


def test_poly_json_and_class():
    doc = json_out("poly", "poly", "--family", "eulerian", "--n", "4", "--class", "av231")
    assert doc["polynomial"] == "t + 6*t^2 + 6*t^3 + t^4"


def test_orbit_and_bijection():
    doc = json_out("orbit", "orbit", "--action", "mfs", "--perm", "467125839")
    assert "4 6 7 5 1 2 8 3 9" in doc["members"]
    assert doc["size"] == len(doc["members"])
    doc = json_out("orbit", "orbit", "--action", "sign", "--perm", "2 1 3")
    assert doc["size"] == 8
    doc = json_out("bijection", "bijection", "--map", "psi", "--perm", "219438567")
    assert (doc["image"], doc["pk"], doc["hk"]) == ("UDUUDDUUUUDUDDUDDD", 5, 2)
    doc = json_out("bijection", "bijection", "--map", "theta-tilde", "--perm", "132495876")
    assert (doc["nlc"], doc["tc"]) == (5, 3)


def test_enumerate_csv_has_header():
    r = cli("enumerate", "--class", "av231", "--n", "4", "--stats", "des,pk", "--format", "csv")
    assert r.returncode == 0
    rows = list(csv.reader(io.StringIO(r.stdout)))
    assert rows[0] == ["perm", "des", "pk"]
    assert len(rows) == 1 + 14


def test_enumerate_json():
    doc = json_out("enumerate", "enumerate", "--class", "stack2", "--n", "4", "--stats", "des")
    assert len(doc) == 22


def test_verify_exit_codes():
    assert cli("verify", "--suite", "bijections").returncode == 0
    assert cli("verify", "--suite", "bijections", "--perturb", "lhs").returncode == 1


def test_verify_json_is_byte_deterministic():
    a = cli("--output-format", "json", "verify", "--suite", "actions", "--seed", "5", "--jobs", "1")
    b = cli("--output-format", "json", "verify", "--suite", "actions", "--seed", "5", "--jobs", "3")
    assert a.returncode == 0
    assert a.stdout == b.stdout
    jsonschema.validate(json.loads(a.stdout), json.loads((SCHEMAS / "verify.schema.json").read_text()))


def test_seed_from_environment():
    a = cli("--output-format", "json", "verify", "--suite", "numeric", env={"DESCENTLAB_SEED": "17"})
    assert json.loads(a.stdout)["seed"] == 17
    b = cli("--output-format", "json", "verify", "--suite", "numeric", "--seed", "3", env={"DESCENTLAB_SEED": "17"})
    assert json.loads(b.stdout)["seed"] == 3


def test_verify_csv():
    r = cli("--output-format", "csv", "verify", "--suite", "ncsf")
    rows = list(csv.DictReader(io.StringIO(r.stdout)))
    assert rows and all(row["status"] == "pass" for row in rows)


@pytest.mark.parametrize(
    "args",
    [
        [],
        ["stats"],
        ["stats", "--perm", "1 1 2"],
        ["poly", "--family", "nope", "--n", "3"],
        ["poly", "--family", "eulerian", "--n", "99"],
        ["verify", "--suite", "all", "--max-n", "11"],
        ["verify", "--suite", "series", "--series-degree", "8"],
        ["verify", "--suite", "everything"],
        ["bijection", "--map", "theta", "--perm", "2 3 1"],
        ["orbit", "--action", "mfs", "--perm", "1 2 3 4 5 6 7 8 9 10 11"],
        ["--output-format", "xml", "stats", "--perm", "1 2"],
    ],
)
def test_usage_errors_exit_2_with_one_line(args):
    r = cli(*args)
    assert r.returncode == 2
    assert r.stdout == ""
    assert len(r.stderr.strip().splitlines()) == 1


def test_bad_seed_environment():
    r = cli("verify", "--suite", "numeric", env={"DESCENTLAB_SEED": "abc"})
    assert r.returncode == 2
