import json

from fiberdt import cli, formulas, serialize
from fiberdt.geometry import FibrationSpec, registry_lookup


def run(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# --- series -------------------------------------------------------------------


def test_series_hilb_euler_text(capsys):
    code, out, err = run(capsys, "series", "hilb", "--surface", "p2", "--qmax", "3", "--euler")
    assert code == 0, err
    assert [line.split(": ")[1] for line in out.strip().splitlines()[1:]] == ["1", "3", "9", "22"]


def test_series_im1_abelian_vanishing_euler(capsys):
    code, out, err = run(
        capsys, "series", "im1", "--surface", "abelian", "--genus", "1",
        "--qmax", "5", "--euler",
    )
    assert code == 0, err
    values = [line.split(": ")[1] for line in out.strip().splitlines()[1:]]
    assert values == ["0"] * 6


def test_series_text_labels_moduli_index(capsys):
    code, out, _ = run(capsys, "series", "incidence", "--surface", "p2", "--qmax", "2")
    assert code == 0
    assert "q^2 (m=1):" in out
    assert "q^0:" in out


def test_series_unknown_surface(capsys):
    code, out, err = run(capsys, "series", "hilb", "--surface", "bad", "--qmax", "3")
    assert code == 2
    assert "unknown geometry" in err


def test_series_qmax_over_cap(capsys):
    code, _, err = run(capsys, "series", "hilb", "--surface", "p2", "--qmax", "51")
    assert code == 2
    assert "cap" in err


def test_series_bad_kind_is_usage_error(capsys):
    code, _, err = run(capsys, "series", "nope", "--surface", "p2", "--qmax", "3")
    assert code == 1


def test_series_im1_requires_genus(capsys):
    code, _, err = run(capsys, "series", "im1", "--surface", "k3", "--qmax", "3")
    assert code == 1
    assert "genus" in err


def test_series_genus_rejected_for_hilb(capsys):
    code, _, err = run(capsys, "series", "hilb", "--surface", "k3", "--genus", "1", "--qmax", "3")
    assert code == 1


def test_missing_subcommand_is_usage_error(capsys):
    assert run(capsys, )[0] == 1


def test_help_exits_zero(capsys):
    assert run(capsys, "--help")[0] == 0


def test_series_json_byte_stable(capsys):
    a = run(capsys, "series", "hilb", "--surface", "k3", "--qmax", "4", "--format", "json")
    b = run(capsys, "series", "hilb", "--surface", "k3", "--qmax", "4", "--format", "json")
    assert a[0] == b[0] == 0
    assert a[1] == b[1]


def test_series_json_round_trip(capsys):
    code, out, _ = run(capsys, "series", "incidence", "--surface", "p1xp1", "--qmax", "4", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert serialize.checksum_ok(doc)
    parsed = serialize.series_from_document(doc)
    expected = formulas.nested_hodge_series(registry_lookup("p1xp1"), 4)
    assert parsed == expected


def test_series_csv_round_trip(capsys):
    code, out, _ = run(capsys, "series", "hilb", "--surface", "k3", "--qmax", "3", "--format", "csv")
    assert code == 0
    parsed = serialize.series_from_csv(out)
    assert parsed == formulas.hilbert_hodge_series(registry_lookup("k3"), 3)


def test_series_euler_csv_round_trip(capsys):
    code, out, _ = run(
        capsys, "series", "im1", "--surface", "p2", "--genus", "0",
        "--qmax", "4", "--euler", "--format", "csv",
    )
    assert code == 0
    fib = FibrationSpec.from_surface_name("p2", 0)
    assert serialize.euler_from_csv(out) == formulas.ideal_sheaf_euler_sequence(fib, 4)


def test_series_euler_json_round_trip(capsys):
    code, out, _ = run(
        capsys, "series", "hilb", "--surface", "abelian", "--qmax", "5",
        "--euler", "--format", "json",
    )
    assert code == 0
    doc = json.loads(out)
    assert serialize.euler_from_document(doc) == (1, 0, 0, 0, 0, 0)


def test_series_surface_file(tmp_path, capsys):
    path = tmp_path / "k3.json"
    path.write_text(json.dumps(registry_lookup("k3").to_json()))
    code, out, _ = run(capsys, "series", "hilb", "--surface", str(path), "--qmax", "2", "--euler")
    assert code == 0
    assert out.strip().splitlines()[1:] == ["q^0: 1", "q^1: 24", "q^2: 324"]


def test_series_invalid_surface_file_names_invariant(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps({"dim": 2, "h": [[1, 2, 0], [0, 1, 0], [0, 2, 1]]}))
    code, _, err = run(capsys, "series", "hilb", "--surface", str(path), "--qmax", "2")
    assert code == 2
    assert "conjugation symmetry" in err


def test_series_out_file(tmp_path, capsys):
    target = tmp_path / "series.csv"
    code, out, _ = run(
        capsys, "series", "hilb", "--surface", "p2", "--qmax", "2",
        "--format", "csv", "--out", str(target),
    )
    assert code == 0
    assert out == ""
    assert serialize.series_from_csv(target.read_text()).q_max == 2


def test_series_threads_identical(capsys):
    serial = run(capsys, "series", "hilb", "--surface", "k3", "--qmax", "5", "--format", "json")
    threaded = run(
        capsys, "series", "hilb", "--surface", "k3", "--qmax", "5",
        "--format", "json", "--threads", "4",
    )
    assert serial[0] == threaded[0] == 0
    assert serial[1] == threaded[1]


# --- cache ----------------------------------------------------------------------


def test_series_cache_hit_reproduces_output(tmp_path, capsys):
    cache = tmp_path / "cache"
    argv = (
        "series", "im1", "--surface", "k3", "--genus", "1", "--qmax", "4",
        "--format", "json", "--cache", str(cache),
    )
    first = run(capsys, *argv)
    files = list(cache.glob("im1-*.json"))
    assert first[0] == 0 and len(files) == 1
    second = run(capsys, *argv)
    assert second[0] == 0
    assert first[1] == second[1]


def test_series_cache_corrupt_entry_recomputed(tmp_path, capsys):
    cache = tmp_path / "cache"
    argv = (
        "series", "hilb", "--surface", "p2", "--qmax", "3",
        "--format", "json", "--cache", str(cache),
    )
    first = run(capsys, *argv)
    assert first[0] == 0
    entry = next(cache.glob("hilb-*.json"))
    entry.write_text("{not json")
    second = run(capsys, *argv)
    assert second[0] == 0
    assert first[1] == second[1]


def test_series_cache_tampered_payload_fails_crosscheck(tmp_path, capsys):
    cache = tmp_path / "cache"
    argv = (
        "series", "hilb", "--surface", "p2", "--qmax", "3",
        "--format", "json", "--cache", str(cache),
    )
    assert run(capsys, *argv)[0] == 0
    entry = next(cache.glob("hilb-*.json"))
    doc = json.loads(entry.read_text())
    doc["coefficients"][1]["terms"][0]["c"] = "99"
    serialize.attach_checksum(doc)  # checksum valid, payload wrong
    entry.write_text(json.dumps(doc))
    code, _, err = run(capsys, *argv)
    assert code == 3
    assert "direct integer series" in err


# --- dt -------------------------------------------------------------------------


def test_dt_table_abelian(capsys):
    code, out, _ = run(capsys, "dt", "--surface", "abelian", "--mmax", "3")
    assert code == 0
    rows = out.strip().splitlines()[2:]
    assert len(rows) == 4
    assert all(row.split()[-1] == "0" for row in rows)


def test_dt_table_json_k3(capsys):
    code, out, _ = run(capsys, "dt", "--surface", "k3", "--mmax", "2", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert [row["dt"] for row in doc["rows"]] == [0, 0, 0]
    assert [row["dimension"] for row in doc["rows"]] == [3, 5, 7]


def test_dt_rejects_p2(capsys):
    code, _, err = run(capsys, "dt", "--surface", "p2", "--mmax", "3")
    assert code == 2
    assert "K = 0" in err


# --- oracle ---------------------------------------------------------------------


def test_oracle_colored(capsys):
    code, out, _ = run(capsys, "oracle", "colored", "--chi", "3", "--m", "3")
    assert code == 0
    assert out.strip() == "22"


def test_oracle_nested_zero_size(capsys):
    code, out, _ = run(capsys, "oracle", "nested", "--chi", "3", "--m", "0")
    assert code == 0
    assert out.strip() == "3"


def test_oracle_check_passes(capsys):
    for kind in ("colored", "nested"):
        code, out, err = run(capsys, "oracle", kind, "--chi", "2", "--m", "4", "--check")
        assert code == 0, err
        assert "check: pass" in out


def test_oracle_cap_exceeded(capsys):
    code, _, err = run(capsys, "oracle", "colored", "--chi", "9", "--m", "3")
    assert code == 2
    assert "cap exceeded" in err
    code, _, err = run(capsys, "oracle", "nested", "--chi", "2", "--m", "40")
    assert code == 2


# --- localhom -------------------------------------------------------------------


def test_localhom_builtin(capsys):
    code, out, _ = run(capsys, "localhom", "--dmax", "3")
    assert code == 0
    assert "passed" in out
    assert "global jump 10" in out


def test_localhom_builtin_json(capsys):
    code, out, _ = run(capsys, "localhom", "--dmax", "2", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["passed"] is True
    assert [row["d_max"] for row in doc["rows"]] == [1, 2]


def test_localhom_custom_file(tmp_path, capsys):
    path = tmp_path / "point.json"
    path.write_text(json.dumps([[1, 0, 0], [0, 1, 0], [0, 0, 1]]))
    code, out, _ = run(
        capsys, "localhom", "--dmax", "0", "--ideal-file", str(path), "--format", "json"
    )
    assert code == 0
    assert json.loads(out)["dimension"] == 3


def test_localhom_dmax_over_cap(capsys):
    code, _, err = run(capsys, "localhom", "--dmax", "99")
    assert code == 2
    assert "cap" in err


def test_localhom_malformed_ideal_file(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text("[[1, 0, 0], [1,")
    code, _, err = run(capsys, "localhom", "--dmax", "2", "--ideal-file", str(path))
    assert code == 2
    assert "not valid JSON" in err


# --- cross-check wiring ----------------------------------------------------------


def test_broken_direct_route_trips_exit_code(monkeypatch, capsys):
    def wrong(chi, q_max):
        return tuple([1] + [0] * q_max)

    monkeypatch.setattr(formulas, "hilbert_euler_direct", wrong)
    code, _, err = run(capsys, "series", "hilb", "--surface", "p2", "--qmax", "3")
    assert code == 3
    assert "cross-check" in err


def test_oracle_check_mismatch_trips_exit_code(monkeypatch, capsys):
    monkeypatch.setattr(formulas, "hilbert_euler_series", lambda s, m, **kw: (7,) * (m + 1))
    code, out, err = run(capsys, "oracle", "colored", "--chi", "2", "--m", "2", "--check")
    assert code == 3
    assert "check: FAIL" in out
