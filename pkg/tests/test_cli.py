"""Command line surface: document shapes, exit codes, determinism."""

import json

import pytest

from linkcoh.cli import run


def invoke(capsys, *argv):
    code = run(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def doc_of(capsys, *argv, expect=0):
    code, out, err = invoke(capsys, *argv)
    assert code == expect, (code, out, err)
    doc = json.loads(out)
    # machine output is canonical json, nothing else on stdout
    assert out == json.dumps(doc, sort_keys=True, indent=2) + "\n"
    assert doc["schema_version"] == 1
    return doc


# ---------------------------------------------------------------------------
# Core ideal commands.

def test_gb_doc(capsys):
    doc = doc_of(capsys, "gb", "--ring", "x,y", "--ideal", "x^2 - y, x*y")
    assert doc["reduced_gb"]
    assert all(isinstance(g, str) for g in doc["reduced_gb"])
    assert doc["generators"] == ["x^2 - y", "x*y"]


def test_member(capsys):
    doc = doc_of(
        capsys, "member", "--ring", "x,y", "--ideal", "x^2, y", "--poly", "x^3 + y"
    )
    assert doc["member"] is True
    doc2 = doc_of(
        capsys, "member", "--ring", "x,y", "--ideal", "x^2, y", "--poly", "x"
    )
    assert doc2["member"] is False


def test_colon_intersect_saturate_eliminate(capsys):
    doc = doc_of(capsys, "colon", "--ring", "x,y", "--ideal", "x^2*y", "--by", "x")
    assert doc["quotient"] == ["x*y"]
    doc = doc_of(
        capsys, "intersect", "--ring", "x,y", "--ideal", "x", "--with", "y"
    )
    assert doc["intersection"] == ["x*y"]
    doc = doc_of(
        capsys, "saturate", "--ring", "x,y", "--ideal", "x^2*y, x*y^2", "--poly", "x"
    )
    assert doc["saturation"] == ["y"]
    doc = doc_of(
        capsys,
        "eliminate",
        "--ring", "t,x,y",
        "--ideal", "x - t^2, y - t^3",
        "--drop", "t",
    )
    assert doc["dropped"] == ["t"]
    assert doc["eliminated"] == ["x^3 - y^2"]


def test_monomial_prime_docs(capsys):
    doc = doc_of(capsys, "ass", "--ring", "x,y", "--ideal", "x^2, x*y")
    assert doc["associated_primes"] == [["x"], ["x", "y"]]
    doc = doc_of(capsys, "minprimes", "--ring", "x,y,z", "--ideal", "x*y, x*z")
    assert doc["minimal_primes"] == [["x"], ["y", "z"]]
    doc = doc_of(capsys, "assh", "--ring", "x,y,z", "--ideal", "x*y, x*z")
    assert doc["assh"] == [["x"]]
    doc = doc_of(capsys, "radical", "--ring", "x,y", "--ideal", "x^2, x*y^3")
    assert doc["radical"] == ["x"]
    doc = doc_of(capsys, "decompose", "--ring", "x,y", "--ideal", "x^2, x*y")
    assert doc["components"] == [["y", "x^2"], ["x"]]


def test_depth_doc_matches_worked_example(capsys):
    doc = doc_of(
        capsys, "depth", "--ring", "a,b,c,d", "--ideal", "a*c,a*d,b*c,b*d"
    )
    assert (doc["depth"], doc["dim"], doc["cm"]) == (1, 2, False)


def test_dim_cm_equidim(capsys):
    assert doc_of(capsys, "dim", "--ring", "x,y", "--ideal", "x*y")["dim"] == 1
    doc = doc_of(capsys, "cm", "--ring", "x,y,z", "--ideal", "x*z, y*z")
    assert doc["cm"] is False
    doc = doc_of(capsys, "equidim", "--ring", "x,y,z", "--module", "x*y, x*z")
    assert doc["equidimensional"] is False


def test_cd_and_grade(capsys):
    doc = doc_of(capsys, "cd", "--ring", "x,y,z", "--ideal", "x^2")
    assert doc["cd"] == 1 and doc["radicalized"] is True
    doc = doc_of(
        capsys, "grade", "--ring", "x,y", "--ideal", "x, y", "--module", "x*y"
    )
    assert doc["grade"] == 1


def test_regseq(capsys):
    doc = doc_of(capsys, "regseq", "--ring", "x,y", "--seq", "x, y")
    assert doc["regular"] is True
    doc = doc_of(
        capsys,
        "regseq",
        "--ring", "x,y",
        "--seq", "x, y",
        "--all-permutations",
    )
    assert doc["regular"] is True
    assert doc["regular_all_permutations"] is True


def test_ann_and_hom(capsys):
    doc = doc_of(capsys, "ann", "--ring", "x,y", "--module", "x^2, x*y")
    assert doc["annihilator"] == ["x*y", "x^2"]
    doc = doc_of(
        capsys, "ann", "--ring", "x,y", "--module", "x*y", "--hom", "x"
    )
    assert doc["annihilator"] == ["x"]


def test_assmember(capsys):
    doc = doc_of(
        capsys,
        "assmember",
        "--ring", "x,y",
        "--module", "x^2, x*y",
        "--prime", "x,y",
    )
    assert doc["member"] is True
    doc = doc_of(
        capsys,
        "assmember",
        "--ring", "x,y",
        "--module", "x*y",
        "--hom", "x",
        "--prime", "y",
    )
    assert doc["member"] is False


# ---------------------------------------------------------------------------
# Linkage and cohomology commands.

def test_linkage_check_worked_example(capsys):
    doc = doc_of(
        capsys, "linkage", "check", "--ring", "x,y", "--a", "x", "--b", "y",
        "--I", "x*y",
    )
    assert doc["linked"] is True
    assert doc["geometric"] is True
    assert doc["selflinked"] is False


def test_linkage_check_rejection_is_still_exit_zero(capsys):
    doc = doc_of(
        capsys, "linkage", "check", "--ring", "x,y", "--a", "x", "--b", "x",
        "--I", "x*y",
    )
    assert doc["linked"] is False
    assert doc["reason"] == "(I+J) : a is not b mod J"


def test_linkage_link_of(capsys):
    doc = doc_of(
        capsys, "linkage", "link-of", "--ring", "x,y", "--a", "x", "--I", "x*y"
    )
    assert doc["b"] == ["y"]
    doc = doc_of(
        capsys,
        "linkage", "link-of",
        "--ring", "x,y",
        "--a", "x^2, x*y",
        "--I", "x^2",
        "--close",
    )
    assert doc["a"] == ["x"]


def test_linkage_random_deterministic(capsys):
    args = (
        "linkage", "random", "--ring", "x,y,z", "--count", "4", "--seed", "3",
    )
    one = doc_of(capsys, *args)
    two = doc_of(capsys, *args)
    assert one == two
    assert one["requested"] == one["produced"] == 4
    assert len(one["certificates"]) == 4
    assert all(c["linked"] for c in one["certificates"])


def test_att_top_and_assf0(capsys):
    doc = doc_of(
        capsys, "att-top", "--ring", "x,y", "--ideal", "x", "--module", "x*y"
    )
    assert doc["attached_primes"] == [["y"]]
    assert "note" in doc
    doc = doc_of(
        capsys, "assf0", "--ring", "x,y", "--ideal", "y", "--module", "x^2, x*y"
    )
    assert doc["associated_primes"] == [["x"], ["x", "y"]]


def test_htm(capsys):
    doc = doc_of(
        capsys, "htm", "--ring", "x,y,z", "--prime", "x,y", "--module", "x*y"
    )
    assert doc["height"] == 1


# ---------------------------------------------------------------------------
# Verify and session.

def test_verify_deterministic_and_parallel(capsys):
    base = ("verify", "l08", "--random", "5", "--vars", "3", "--maxdeg", "2", "--seed", "6")
    one_code, one_out, _ = invoke(capsys, *base)
    two_code, two_out, _ = invoke(capsys, *base, "--jobs", "2")
    assert one_code == two_code == 0
    assert one_out == two_out
    doc = json.loads(one_out)
    assert doc["ok"] is True
    assert doc["instances"] == 5


def test_verify_unknown_claim_usage(capsys):
    code, out, err = invoke(capsys, "verify", "zzz", "--random", "1")
    assert code == 1
    assert out == ""


def test_session_roundtrip(tmp_path, capsys):
    p = tmp_path / "demo.session"
    p.write_text(
        "ring x, y\n"
        "ideal a = x\n"
        "ideal b = y\n"
        "ideal c = x*y\n"
        "ideal z0 = 0\n"
        "module M = R / c\n"
        "task linkage check a b z0 over M\n"
        "task depth M\n"
        "task att-top a over M\n",
        encoding="utf-8",
    )
    doc = doc_of(capsys, "session", str(p))
    assert doc["ring"] == ["x", "y"]
    assert doc["canonical"][0] == "ring x, y"
    results = {t["task"]: t for t in doc["tasks"]}
    assert results["linkage check a b z0 over M"]["result"]["linked"] is True
    assert results["att-top a over M"]["result"]["attached_primes"] == [["y"]]
    assert results["depth M"]["result"]["depth"] == 1


def test_session_parse_error_exit_one(tmp_path, capsys):
    p = tmp_path / "bad.session"
    p.write_text("ring x\ntask gb q\n", encoding="utf-8")
    code, out, err = invoke(capsys, "session", str(p))
    assert code == 1
    assert out == ""
    assert f"{p}:2:" in err and "unknown ideal 'q'" in err


def test_session_missing_file(capsys):
    code, out, err = invoke(capsys, "session", "/nonexistent/x.session")
    assert code == 1 and out == ""


# ---------------------------------------------------------------------------
# Exit codes and global flags.

def test_no_arguments_is_usage_error(capsys):
    code, out, err = invoke(capsys)
    assert code == 1
    assert out == ""


def test_unknown_subcommand_usage(capsys):
    code, out, err = invoke(capsys, "frobnicate")
    assert code == 1
    assert "usage" in err.lower()


def test_missing_required_flag_usage(capsys):
    code, out, err = invoke(capsys, "gb", "--ring", "x,y")
    assert code == 1


def test_help_exits_zero(capsys):
    code, out, err = invoke(capsys, "--help")
    assert code == 0


def test_parse_error_exit_one(capsys):
    code, out, err = invoke(capsys, "gb", "--ring", "x,y", "--ideal", "x +")
    assert code == 1
    assert out == ""
    assert "error" in err


def test_budget_exit_two(capsys):
    code, out, err = invoke(
        capsys,
        "--max-spairs", "2",
        "gb",
        "--ring", "x,y,z",
        "--ideal", "x^2 - y*z, x*y - z^2, y^2 - x*z",
    )
    assert code == 2
    doc = json.loads(out)
    assert doc["error"] == "budget-exceeded"


def test_human_summary_on_stderr(capsys):
    code, out, err = invoke(
        capsys, "depth", "--ring", "x,y", "--ideal", "x*y"
    )
    assert code == 0
    assert err.strip()  # a one-line human summary
    json.loads(out)  # stdout stays pure json
