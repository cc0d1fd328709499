import json

import pytest

from clutters.cli import main

TRIANGLE_T3 = "t: 3\n{1,2}\n{1,3}\n{2,3}\n"
TRIANGLE_T4 = "t: 4\n{1,2}\n{1,3}\n{2,3}\n"
SINGLETON_T4 = "t: 4\n{2}\n"
PATH_T4 = "t: 4\n{1,2}\n{2,3}\n{3,4}\n"
COMPLEX_T4 = "t: 4\n{}\n{1}\n{2}\n{3}\n{4}\n{1,2}\n{1,3}\n{2,3}\n"
FACETS_T4 = "t: 4\nclosure: down\n{1,2}\n{1,3}\n{2,3}\n{4}\n"


@pytest.fixture
def write(tmp_path):
    def _write(name, text):
        p = tmp_path / name
        p.write_text(text)
        return str(p)

    return _write


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_blocker_prints_family_text(capsys, write):
    code, out, _ = run(capsys, "blocker", write("tri.fam", TRIANGLE_T3))
    assert code == 0
    assert out == TRIANGLE_T3


def test_blocker_methods_flag(capsys, write):
    path = write("e.fam", "t: 4\n{1,2}\n")
    for method in ("dense", "berge"):
        code, out, _ = run(capsys, "blocker", path, "--method", method)
        assert code == 0
        assert out == "t: 4\n{1}\n{2}\n"


def test_blocker_rejects_non_antichain(capsys, write):
    code, _, err = run(capsys, "blocker", write("bad.fam", "t: 3\n{1}\n{1,2}\n"))
    assert code == 2
    assert "antichain" in err


def test_star_round_trip_through_files(capsys, write, tmp_path):
    src = write("fam.fam", "t: 3\n{2}\n{1,3}\n")
    code, once, _ = run(capsys, "star", src)
    assert code == 0
    mid = write("mid.fam", once)
    code, twice, _ = run(capsys, "star", mid)
    assert code == 0
    # star is an involution; output is the canonical serialization
    assert twice == "t: 3\n{2}\n{1,3}\n"


def test_upset_default_and_list(capsys, write):
    path = write("s.fam", SINGLETON_T4)
    code, out, _ = run(capsys, "upset", path)
    assert code == 0
    assert out == "t: 4\ncount: 8\nf: 0 1 3 3 1\n"
    code, out, _ = run(capsys, "upset", path, "--list")
    assert code == 0
    assert out.startswith("t: 4\n{2}\n{1,2}\n")
    assert out.count("{") == 8


def test_fvector_upset_example(capsys, write):
    code, out, _ = run(capsys, "fvector", "--upset", write("s.fam", SINGLETON_T4))
    assert code == 0
    assert out == "0 1 3 3 1\n"


def test_fvector_plain_complex(capsys, write):
    code, out, _ = run(capsys, "fvector", write("c.fam", COMPLEX_T4))
    assert code == 0
    assert out == "1 4 3 0 0\n"


def test_hvector_examples(capsys, write):
    code, out, _ = run(capsys, "hvector", "--upset", write("t.fam", TRIANGLE_T4))
    assert code == 0
    assert out == "0 0 3 -2 0\n"
    code, out, _ = run(capsys, "hvector", write("c.fam", COMPLEX_T4))
    assert out == "1 0 -3 2 0\n"


def test_vector_json(capsys, write):
    code, out, _ = run(capsys, "fvector", "--json", write("c.fam", COMPLEX_T4))
    assert code == 0
    assert json.loads(out) == {"t": 4, "f": [1, 4, 3, 0, 0]}


def test_check_self_dual_line(capsys, write):
    code, out, _ = run(capsys, "check", write("tri.fam", TRIANGLE_T3))
    assert code == 0
    assert out.splitlines()[0] == "self_dual: true, #upset: 4 = 2^2"
    assert "eq22 pass" in out


def test_check_non_self_dual(capsys, write):
    code, out, _ = run(capsys, "check", write("p.fam", PATH_T4))
    assert code == 0  # computation succeeds; the clutter just is not self-dual
    assert out.splitlines()[0] == "self_dual: false, #upset: 8 = 2^3"


def test_check_json_schema(capsys, write):
    code, out, _ = run(capsys, "check", "--json", write("tri.fam", TRIANGLE_T3))
    payload = json.loads(out)
    assert payload["t"] == 3
    assert payload["f"] == [0, 0, 3, 0]
    assert payload["self_dual"] is True
    assert payload["criterion"] is True
    assert payload["upset_count"] == 4
    for key in ("eq22", "remark_iii", "remark_iv", "eq19"):
        assert payload["identities"][key] is True


def test_check_rejects_trivial(capsys, write):
    code, _, err = run(capsys, "check", write("e.fam", "t: 3\n{}\n"))
    assert code == 2
    assert "nontrivial" in err


def test_bounds_table_text(capsys):
    code, out, _ = run(capsys, "bounds", "--t", "4")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "t: 4"
    assert any("exact" in ln and ln.strip().startswith("2") for ln in lines)
    assert lines[-1] == "pair sums: f_1+f_3 = 4"


def test_bounds_json_schema(capsys):
    code, out, _ = run(capsys, "bounds", "--t", "6", "--json")
    payload = json.loads(out)
    assert payload["t"] == 6
    assert [r["k"] for r in payload["rows"]] == list(range(7))
    assert payload["rows"][3] == {"k": 3, "exact": 10, "lower": 10, "upper": 10}
    assert payload["rows"][1] == {"k": 1, "exact": None, "lower": 0, "upper": 1}
    assert set(payload["rows"][0]) == {"k", "exact", "lower", "upper"}


def test_bounds_rejects_odd_t(capsys):
    code, _, err = run(capsys, "bounds", "--t", "5")
    assert code == 2


def test_verify_theorem3_pass_and_fail(capsys, write):
    code, out, _ = run(capsys, "verify-theorem3", write("t.fam", TRIANGLE_T4))
    assert code == 0
    assert out.rstrip().endswith("result: PASS")
    code, _, err = run(capsys, "verify-theorem3", write("p.fam", PATH_T4))
    assert code == 1
    assert "blocker" in err
    code, _, err = run(capsys, "verify-theorem3", write("o.fam", TRIANGLE_T3))
    assert code == 2  # odd ground set


def test_verify_lemma2_full_and_facet_files(capsys, write):
    for name, text in (("full.fam", COMPLEX_T4), ("facets.fam", FACETS_T4)):
        code, out, _ = run(capsys, "verify-lemma2", write(name, text))
        assert code == 0, name
        assert out.rstrip().endswith("result: PASS")


def test_verify_lemma2_rejects_non_complex(capsys, write):
    code, _, err = run(capsys, "verify-lemma2", write("nc.fam", "t: 3\n{1,2}\n"))
    assert code == 2
    assert "downward" in err


def test_identities_file(capsys, write):
    # the 8-member up-family of {{2}} on E_4 satisfies F* = F
    path = write("f.fam", "t: 4\n{2}\n{1,2}\n{2,3}\n{2,4}\n{1,2,3}\n{1,2,4}\n{2,3,4}\n{1,2,3,4}\n")
    code, out, _ = run(capsys, "identities", path)
    assert code == 0
    assert "eq28: pass" in out
    assert out.rstrip().endswith("result: PASS")


def test_identities_rejects_non_star_family(capsys, write):
    code, _, err = run(capsys, "identities", write("f.fam", "t: 3\n{1}\n"))
    assert code == 1
    assert "complementary" in err


def test_identities_random_json(capsys):
    code, out, _ = run(
        capsys, "identities", "--random", "--t", "6", "--n", "25", "--seed", "3",
        "--json",
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["t"] == 6 and payload["n"] == 25 and payload["seed"] == 3
    assert payload["checks"]["eq28"] == "pass"
    assert payload["checks"]["eq27_block"] == "n/a"
    assert payload["checks"]["odd_t_block"] == "n/a"


def test_identities_requires_t_with_random(capsys):
    code, _, err = run(capsys, "identities", "--random")
    assert code == 2


def test_enumerate_summary_and_outfile(capsys, tmp_path):
    out_path = tmp_path / "all.fam"
    code, out, _ = run(capsys, "enumerate", "--t", "4", "--verify", "--out", str(out_path))
    assert code == 0
    assert out == "t=4 count=12 verified=pass\n"
    from clutters.familyio import parse_families

    docs = parse_families(out_path.read_text())
    assert len(docs) == 12


def test_enumerate_count_only(capsys):
    code, out, _ = run(capsys, "enumerate", "--t", "3", "--count-only")
    assert code == 0
    assert out == "t=3 count=4\n"


def test_enumerate_rejects_t7(capsys):
    code, _, err = run(capsys, "enumerate", "--t", "7")
    assert code == 2


def test_parse_error_exit_code(capsys, write):
    code, _, err = run(capsys, "blocker", write("bad.fam", "t: 3\n{9}\n"))
    assert code == 2
    assert "line 2" in err


def test_missing_file(capsys):
    code, _, err = run(capsys, "blocker", "/nonexistent/x.fam")
    assert code == 2


def test_output_is_deterministic(capsys, write):
    path = write("tri.fam", TRIANGLE_T4)
    _, first, _ = run(capsys, "verify-theorem3", path)
    _, second, _ = run(capsys, "verify-theorem3", path)
    assert first == second
