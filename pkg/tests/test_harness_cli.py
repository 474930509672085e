from math import comb
from pathlib import Path

import pytest

from matroidkit import (
    encode_from_oracle,
    measure_family,
    parse,
    render_csv,
    render_table,
    run_separation_suite,
    serialize,
    uniform,
)
from matroidkit.cli import main
from matroidkit.harness import DEFAULT_RANGES, EXPECTED

GOLDEN = Path(__file__).parent / "golden"


# -- experiment suite ----------------------------------------------------


def test_measure_family_l10_row():
    report = measure_family("L10", 4, 4)
    by_kind = {row.kind: row for row in report.rows}
    assert by_kind["spanning"].listed_sets == 5
    assert by_kind["flats"].listed_sets == 12
    assert by_kind["spanning"].status == "ok"
    assert by_kind["flats"].cells == 12 * 4
    assert report.ok


def test_measure_family_l20_and_l17_rows():
    l20 = {r.kind: r for r in measure_family("L20", 3, 3).rows}
    assert l20["nsc"].listed_sets == 0
    assert l20["circuits"].listed_sets == comb(6, 4) == 15
    l17 = {r.kind: r for r in measure_family("L17", 2, 2).rows}
    assert l17["cyclicflats"].listed_sets == 3
    assert l17["dephyp"].listed_sets == 1


def test_measure_family_l18_formula_mismatch_is_visible():
    # the quoted cyclic-flat closed form undercounts by one (the empty
    # set is a cyclic flat of this family); the suite reports the
    # mismatch instead of adjusting either side
    report = measure_family("L18", 4, 4)
    row = {r.kind: r for r in report.rows}["cyclicflats"]
    assert row.listed_sets == 12
    assert row.expected == "11"
    assert row.status == "mismatch"
    assert not report.ok


def test_measure_family_capacity_rows_are_skipped():
    report = measure_family("L15", 5, 5)  # 27 elements: over the cap
    assert all(row.status == "skipped" for row in report.rows if row.expected)
    assert all(row.listed_sets is None for row in report.rows)
    assert report.ok  # skipped is not a failure


def test_measure_family_input_errors():
    with pytest.raises(ValueError):
        measure_family("L99", 3, 4)
    with pytest.raises(ValueError):
        measure_family("L10", 5, 3)


def test_run_separation_suite_covers_all_families():
    reports = run_separation_suite()
    assert [r.family for r in reports] == list(DEFAULT_RANGES)
    for report in reports:
        lo, hi = DEFAULT_RANGES[report.family]
        assert {row.n for row in report.rows} == set(range(lo, hi + 1))
    checked = {
        (row.family, row.kind)
        for report in reports
        for row in report.rows
        if row.expected
    }
    for family, kinds in EXPECTED.items():
        for kind in kinds:
            assert (family, kind) in checked


def test_render_outputs_are_deterministic_goldens():
    reports = [measure_family("L10", 3, 6)]
    assert render_csv(reports) == (GOLDEN / "l10.sizes.csv").read_text()
    assert render_table(reports) == (GOLDEN / "l10.sizes.table.txt").read_text()


# -- golden description files --------------------------------------------


@pytest.mark.parametrize(
    "name",
    [p.name for p in sorted(GOLDEN.glob("*.txt")) if "sizes" not in p.name],
)
def test_golden_parse_serialize_identity(name):
    text = (GOLDEN / name).read_text()
    assert serialize(parse(text)) == text


def test_golden_u23_bases_content():
    assert (GOLDEN / "u23.bases.txt").read_text() == serialize(
        encode_from_oracle(uniform(2, 3), "bases")
    )


# -- CLI -----------------------------------------------------------------


def _write(tmp_path, name, text):
    path = tmp_path / name
    path.write_text(text)
    return str(path)


def test_cli_gen_and_convert(tmp_path, capsys):
    out = str(tmp_path / "u23.txt")
    assert main(["gen", "uniform", "2", "3", "--as", "bases", "--out", out]) == 0
    assert main(["convert", "--in", out, "--to", "circuits"]) == 0
    captured = capsys.readouterr()
    assert captured.out == "matroid circuits n=3\n111\n"
    assert "plan: bases -> circuits" in captured.err


def test_cli_convert_force_exhaustive(tmp_path, capsys):
    f = _write(tmp_path, "c.txt", "matroid circuits n=3\n111\n")
    assert main(["convert", "--in", f, "--to", "bases", "--force-exhaustive"]) == 0
    captured = capsys.readouterr()
    assert "exhaustive" in captured.err
    assert parse(captured.out).kind == "bases"


def test_cli_validate(tmp_path, capsys):
    good = _write(tmp_path, "good.txt", "matroid bases n=3\n110\n101\n011\n")
    assert main(["validate", good]) == 0
    bad = _write(tmp_path, "bad.txt", "matroid bases n=3\n100\n011\n")
    assert main(["validate", bad]) == 3
    assert "FAIL" in capsys.readouterr().out


def test_cli_minor(tmp_path, capsys):
    host = str(tmp_path / "host.txt")
    pattern = str(tmp_path / "pattern.txt")
    main(["gen", "uniform", "2", "5", "--as", "circuits", "--out", host])
    main(["gen", "uniform", "2", "4", "--as", "circuits", "--out", pattern])
    assert main(["minor", "--host", host, "--pattern", pattern]) == 0
    assert "contract" in capsys.readouterr().out
    assert main(
        ["minor", "--host", pattern, "--pattern", host, "--strict"]
    ) == 1
    assert "none" in capsys.readouterr().out
    assert main(
        ["minor", "--host", host, "--pattern", pattern, "--algorithm", "exhaustive"]
    ) == 0


def test_cli_minor_converts_foreign_host_kinds(tmp_path, capsys):
    host = str(tmp_path / "host.txt")
    pattern = str(tmp_path / "pattern.txt")
    main(["gen", "uniform", "2", "5", "--as", "bases", "--out", host])
    main(["gen", "uniform", "2", "4", "--as", "circuits", "--out", pattern])
    assert main(["minor", "--host", host, "--pattern", pattern]) == 0
    assert "converted to circuits" in capsys.readouterr().err


def test_cli_iso(tmp_path, capsys):
    a = str(tmp_path / "a.txt")
    b = str(tmp_path / "b.txt")
    main(["gen", "uniform", "2", "4", "--as", "bases", "--out", a])
    main(["gen", "uniform", "3", "4", "--as", "bases", "--out", b])
    assert main(["iso", a, a]) == 0
    assert "map" in capsys.readouterr().out
    assert main(["iso", a, b, "--strict"]) == 1
    assert "not isomorphic" in capsys.readouterr().out


def test_cli_iso_encode(tmp_path, capsys):
    a = str(tmp_path / "a.txt")
    main(["gen", "uniform", "1", "1", "--as", "bases", "--out", a])
    assert main(["iso", "--encode", a]) == 0
    out = capsys.readouterr().out
    assert out.startswith("graph n=")


def test_cli_intersect3(tmp_path, capsys):
    f = str(tmp_path / "m.txt")
    main(["gen", "uniform", "1", "2", "--as", "bases", "--out", f])
    assert main(["intersect3", f, f, f, "-k", "1", "--algorithm", "bases"]) == 0
    assert capsys.readouterr().out.strip() == "10"
    assert main(["intersect3", f, f, f, "-k", "2", "--strict"]) == 1


def test_cli_reduce_3dm(tmp_path, capsys):
    f = _write(tmp_path, "ts.txt", "3dm s=2\n0 0 0\n1 1 1\n0 1 1\n")
    prefix = str(tmp_path / "out")
    assert main(["reduce", "3dm", f, "--verify", "--out-prefix", prefix]) == 0
    assert "round trip: ok" in capsys.readouterr().out
    assert parse((tmp_path / "out.m1.circuits.txt").read_text()).kind == "circuits"
    assert parse((tmp_path / "out.m1.hyperplanes.txt").read_text()).kind == "hyperplanes"


def test_cli_reduce_subgraph_and_indepset(tmp_path, capsys):
    g = _write(tmp_path, "g.txt", "graph n=3\n0 1\n1 2\n0 2\n")
    h = _write(tmp_path, "h.txt", "graph n=3\n0 1\n1 2\n")
    prefix = str(tmp_path / "sub")
    assert main(["reduce", "subgraph", g, h, "--verify", "--out-prefix", prefix]) == 0
    assert "round trip: ok" in capsys.readouterr().out
    prefix2 = str(tmp_path / "ind")
    assert main(
        ["reduce", "indepset", h, "-k", "2", "-r", "3", "--verify",
         "--out-prefix", prefix2]
    ) == 0
    out = capsys.readouterr().out
    assert "target: uniform rank 3 size 4" in out
    assert "round trip: ok" in out


def test_cli_sizes(capsys):
    assert main(["sizes", "--family", "L10", "--n-range", "3..6", "--csv"]) == 0
    assert capsys.readouterr().out == (GOLDEN / "l10.sizes.csv").read_text()
    assert main(["sizes", "--family", "L10", "--n-range", "3..6"]) == 0
    assert capsys.readouterr().out == (GOLDEN / "l10.sizes.table.txt").read_text()


def test_cli_error_paths(tmp_path, capsys):
    assert main(["convert", "--in", str(tmp_path / "missing.txt"), "--to", "bases"]) == 2
    assert "error:" in capsys.readouterr().err
    bad = _write(tmp_path, "bad.txt", "not a matroid\n")
    assert main(["validate", bad]) == 2
    with pytest.raises(SystemExit) as exc:
        main(["no-such-command"])
    assert exc.value.code == 2
