import csv
import io
import re

import msgpack
import pytest
import ujson

from digitwalk.commands.app import EXIT_DOMAIN, EXIT_DRIFT, EXIT_OK, EXIT_USAGE


def _rows(text):
    return list(csv.DictReader(io.StringIO(text)))


@pytest.mark.parametrize("argv, expected", [
    (["expand", "2/3"], "|10"),
    (["expand", "1/2"], "1|0"),
    (["expand", "6/7"], "|110"),
    (["expand", "1/2", "--base", "3"], "|1"),
    (["--base=5", "expand", "1/10"], "0|2"),
    (["alternate", "1/2"], "0|1"),
])
def test_expand(cli, argv, expected):
    result = cli(*argv)
    assert result.code == EXIT_OK
    assert result.lines == [expected]


def test_alternate_needs_a_dyadic_rational(cli):
    result = cli("alternate", "1/3")
    assert result.code == EXIT_DOMAIN
    assert result.err.startswith("error: ")


def test_classify_closed(cli):
    result = cli("classify", "6/7")
    assert result.code == EXIT_OK
    [row] = _rows(result.text)
    assert row["kind"] == "closed"
    assert row["k"] == "6"
    assert row["cycle_length"] == "18"
    assert row["distinct_points"] == "18"
    assert row["v"] == "2,-3"
    assert row["v_global"] == ""


def test_classify_drift_has_its_own_exit_code(cli):
    assert cli("classify", "2/3").code == EXIT_DRIFT
    assert cli("classify", "4/5").code == EXIT_DRIFT
    assert cli("classify", "0/1").code == EXIT_OK


def test_classify_accepts_digit_notation(cli):
    [row] = _rows(cli("classify", "|110").text)
    assert row["r"] == "6/7"


def test_jsonl_and_msgpack_records(cli):
    record = ujson.loads(cli("--format", "jsonl", "classify", "2/3").lines[0])
    assert record["kind"] == "drift"
    assert record["v_global"] == "2,-1"
    assert record["k"] is None

    packed = cli("--format", "msgpack", "classify", "6/7").out
    record = msgpack.unpackb(packed, raw=False)
    assert record["cycle_length"] == 18


def test_walk_rows(cli):
    rows = _rows(cli("walk", "0/1", "--steps", "6").text)
    assert len(rows) == 7
    assert (rows[2]["a"], rows[2]["b"], rows[2]["dir"]) == ("-1", "2", "2")
    assert (rows[6]["a"], rows[6]["b"], rows[6]["R"]) == ("0", "0", "6")


def test_walk_from_a_digits_file(cli, tmp_path):
    source = tmp_path / "digits.txt"
    source.write_bytes(b"111111\n")
    rows = _rows(cli("walk", "--digits-file", str(source), "--steps", "6").text)
    assert [(r["a"], r["b"]) for r in rows] == [("0", "0"), ("1", "-1"), ("1", "-2"), ("0", "-2"), ("-1", "-1"),
                                               ("-1", "0"), ("0", "0")]

    short = cli("walk", "--digits-file", str(source), "--steps", "10")
    assert short.code == EXIT_DOMAIN
    assert "ran out" in short.err


def test_decisions_refuse_digit_files(cli, tmp_path):
    source = tmp_path / "digits.txt"
    source.write_bytes(b"0101")
    assert cli("classify", "1/3", "--digits-file", str(source)).code == EXIT_USAGE


def test_torsion(cli):
    rows = _rows(cli("torsion", "0/1", "--steps", "6").text)
    assert rows[-1] == {"step": "6", "R": "6", "t": "1"}
    [summary] = _rows(cli("torsion", "6/7", "--steps", "18", "--summary").text)
    # R dips to -7 at step 17 before the loop closes at -6
    assert summary == {"min_t": "-7/6", "min_step": "17", "max_t": "0", "max_step": "0"}


def test_winding(cli):
    rows = _rows(cli("winding", "6/7", "--steps", "18", "--center", "-2,-2").text)
    assert len(rows) == 19
    assert rows[-1]["winding"] == "-1"
    rows = _rows(cli("winding", "0/1", "--steps", "6", "--center=-1,1").text)
    assert [r["winding"] for r in rows] == ["0", "0", "1", "1", "1", "1", "1"]


def test_render_is_deterministic(cli):
    first = cli("render", "6/7", "--steps", "18")
    second = cli("render", "6/7", "--steps", "18")
    assert first.code == EXIT_OK
    assert first.out == second.out
    assert b"<svg" in first.out
    assert b"polyline" in first.out
    assert cli("--format", "svg", "walk", "6/7", "--steps", "18").out == first.out
    assert cli("render", "6/7", "--steps", "0").code == EXIT_USAGE


def _view_box(svg):
    match = re.search(rb'viewBox="([^"]+)"', svg)
    return [float(v) for v in match.group(1).split()]


def test_drifting_render_grows_linearly(cli):
    _, _, width, height = _view_box(cli("render", "2/3", "--steps", "300").out)
    _, _, width2, height2 = _view_box(cli("render", "2/3", "--steps", "600").out)
    # 1 unit margin on each side, 3/4 of a unit to the right per step
    assert width == pytest.approx(227)
    assert width2 - 2 == pytest.approx(2 * (width - 2))
    assert height2 - 2 == pytest.approx(2 * (height - 2))


def test_svg_is_only_for_walks(cli):
    result = cli("--format", "svg", "classify", "6/7")
    assert result.code == EXIT_USAGE
    assert "--format svg" in result.err
    assert result.out == b""
    assert cli("--format", "svg", "survey", "--max-q", "3").code == EXIT_USAGE


def test_member_and_simple(cli):
    [row] = _rows(cli("member", "6/7", "--radius", "10").text)
    assert row["member"] == "True"
    [row] = _rows(cli("member", "6/7", "--radius", "1").text)
    assert (row["member"], row["witness_step"]) == ("False", "1")
    assert cli("member", "6/7", "--radius", "0").code == EXIT_USAGE

    [row] = _rows(cli("simple", "6/7").text)
    assert (row["simple"], row["recurrent"]) == ("True", "True")


def test_census(cli):
    rows = _rows(cli("census", "2/3", "--window", "4").text)
    by_point = {(r["a"], r["b"]): r for r in rows}
    assert by_point[("0", "0")]["start"] == "True"
    assert by_point[("0", "0")]["count"] == "0"
    assert by_point[("3", "-2")]["eventual"] == "1"

    rows = _rows(cli("census", "0/1", "--window", "12").text)
    assert all(r["eventual"] == "inf" for r in rows)


def test_recurrence(cli):
    [row] = _rows(cli("recurrence", "6/7", "--far", "2", "--near", "2", "--horizon", "36").text)
    assert (row["i"], row["j"], row["excursions"]) == ("3", "16", "2")


def test_recurrence_with_far_inside_near(cli):
    [row] = _rows(cli("recurrence", "2/3", "--far", "1/2", "--near", "2", "--horizon", "50").text)
    assert (row["i"], row["j"], row["excursions"]) == ("1", "2", "1")


def test_sector(cli):
    [row] = _rows(cli("sector", "2/3").text)
    assert (row["kind"], row["right"], row["left"]) == ("sector", "1,-1", "2,-1")
    assert float(row["aperture"]) == pytest.approx(30)

    [row] = _rows(cli("sector", "0/1").text)
    assert (row["right"], row["left"]) == ("0,1", "-1,0")


def test_bases(cli):
    rows = _rows(cli("bases", "1/2").text)
    assert [r["base"] for r in rows] == ["2", "3", "5"]
    assert [r["kind"] for r in rows] == ["closed", "drift", "drift"]


def test_equiv(cli):
    result = cli("equiv", "1/2", "1/128", "--budget", "2")
    assert result.code == EXIT_OK
    assert result.lines == ["insert@1:0", "# difference 63/128"]

    unknown = cli("equiv", "1/2", "1/3", "--budget", "1")
    assert unknown.code == EXIT_DOMAIN
    assert "unknown within budget" in unknown.err


def test_equiv_checks_a_given_witness(cli):
    result = cli("equiv", "1/2", "1/128", "--check", "insert@1:0")
    assert result.code == EXIT_OK
    assert result.lines == ["insert@1:0", "# difference 63/128"]

    wrong = cli("equiv", "1/2", "1/128", "--check", "insert@1:1")
    assert wrong.code == EXIT_DOMAIN
    assert "127/128" in wrong.err or "1111111" in wrong.err

    assert cli("equiv", "1/2", "1/128", "--check", "remove@1").code == EXIT_DOMAIN


def test_insert_remove_and_tails(cli):
    assert cli("insert", "1/2", "1", "0").lines == ["0000001|0", "# 1/128"]
    assert cli("remove", "1/128", "1").lines == ["1|0", "# 1/2"]
    assert cli("remove", "2/3", "1").code == EXIT_DOMAIN
    assert cli("insert", "1/2", "0", "0").code == EXIT_USAGE

    [row] = _rows(cli("tails", "1/2", "1/128").text)
    assert (row["i1"], row["i2"]) == ("0", "6")
    assert cli("tails", "2/3", "1/3", "--horizon", "50").code == EXIT_DOMAIN


def test_survey_small_range(cli):
    result = cli("survey", "--max-q", "2")
    assert result.code == EXIT_OK
    lines = result.lines
    records = _rows("\n".join(lines[:3]))
    assert [(r["r"], r["kind"]) for r in records] == [("0/1", "closed"), ("1/2", "closed")]
    footer = _rows("\n".join(lines[3:]))
    assert footer == [
        {"group": "kind", "value": "closed", "count": "2"},
        {"group": "kind", "value": "drift", "count": "0"},
        {"group": "k", "value": "6", "count": "2"}
    ]


def test_survey_contains_the_worked_examples(cli):
    text = cli("survey", "--max-q", "7").text
    records = {r["r"]: r for r in _rows(text.split("group,value,count")[0])}
    assert records["2/3"]["kind"] == "drift"
    assert records["4/5"]["kind"] == "drift"
    assert records["6/7"]["cycle_length"] == "18"


def test_survey_empty_range(cli):
    lines = cli("survey", "--max-q", "5", "--min-q", "9").lines
    assert lines[0].startswith("r,base,digits,kind")
    assert lines[1] == "group,value,count"


def test_survey_is_independent_of_jobs(cli):
    single = cli("survey", "--max-q", "50", "--jobs", "1")
    pooled = cli("survey", "--max-q", "50", "--jobs", "8")
    assert single.code == pooled.code == EXIT_OK
    assert single.out == pooled.out


@pytest.mark.parametrize("argv, code", [
    (["frobnicate"], EXIT_USAGE),
    (["classify"], EXIT_USAGE),
    (["classify", "1/2", "1/3"], EXIT_USAGE),
    (["classify", "one half"], EXIT_USAGE),
    (["classify", "3/2"], EXIT_DOMAIN),
    (["--base", "4", "classify", "1/3"], EXIT_USAGE),
    (["--base", "3", "--grid", "hex", "classify", "1/3"], EXIT_USAGE),
    (["--jobs", "0", "survey", "--max-q", "3"], EXIT_USAGE),
    (["survey", "--max-q", "1"], EXIT_USAGE),
    (["walk", "1/3", "--lines", "4"], EXIT_USAGE),
    (["walk"], EXIT_USAGE),
])
def test_usage_and_domain_errors(cli, argv, code):
    result = cli(*argv)
    assert result.code == code
    assert result.out == b""
    assert result.err


def test_custom_turns(cli):
    rows = _rows(cli("--turns", "1,1", "walk", "1/3", "--steps", "6").text)
    assert (rows[-1]["a"], rows[-1]["b"]) == ("0", "0")
    assert cli("--turns", "1", "walk", "1/3").code == EXIT_USAGE


def test_turn_sign_mirrors(cli):
    rows = _rows(cli("--turn-sign", "-1", "walk", "0/1", "--steps", "1").text)
    assert (rows[1]["a"], rows[1]["b"]) == ("1", "-1")


def test_help(cli):
    result = cli("help")
    assert result.code == EXIT_OK
    assert "classify" in result.text
    assert "--digits-file" in result.text

    usage = cli("survey", "--help")
    assert "--max-q <max_q>" in usage.text
    assert cli().code == EXIT_OK


def test_jobs_default_comes_from_the_environment(monkeypatch):
    from digitwalk.commands import RunConfig
    monkeypatch.setenv("DIGITWALK_JOBS", "3")
    assert RunConfig().jobs == 3


def test_escape(cli):
    [row] = _rows(cli("escape", "0/1", "--radius", "3", "--budget", "1").text)
    assert row == {"witness": "insert@3:1", "digits": "00111111|0", "r": "63/256", "witness_step": "4"}
    assert cli("escape", "0/1", "--radius", "3", "--budget", "0").code == EXIT_DOMAIN
