import json

import pytest

from multrep import (
    build,
    count_system_reps,
    dump_coloring,
    mh_table,
    window_stats,
)
from multrep.cli import main, parse_system_spec

from conftest import pentagon_coloring


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_parse_system_spec_shorthands():
    assert parse_system_spec("fundamental:h=2") == build("fundamental", 2).system
    assert parse_system_spec("one-t:h=2,t=3") == build("one-t", 2, t=3).system
    assert parse_system_spec("one-inf:h=3") == build("one-inf", 3).system
    assert parse_system_spec("s-inf:h=3,s=2") == build("s-inf", 3, s=2).system


def test_parse_system_spec_parts_and_file(tmp_path):
    sys_a = parse_system_spec("parts:AllNaturals;Singleton(1,2)")
    assert sys_a.h == 2
    path = tmp_path / "system.txt"
    path.write_text("AllNaturals\nSingleton(1,2)  # second part\n")
    assert parse_system_spec(f"@{path}") == sys_a


def test_count_command(capsys):
    code, out, _ = run(capsys, "count", "--system", "fundamental:h=2", "--n", "360")
    assert code == 0
    assert "count: 1" in out


def test_count_matches_library(capsys):
    code, out, _ = run(
        capsys, "count", "--system", "one-t:h=2,t=3", "--n", "40", "--format", "json"
    )
    record = json.loads(out)
    lib = count_system_reps(build("one-t", 2, t=3).system, 40)
    assert code == 0 and record == lib.to_record()


def test_window_command(capsys):
    code, out, _ = run(
        capsys, "window", "--system", "one-t:h=2,t=3",
        "--lo", "2", "--hi", "64", "--format", "json",
    )
    record = json.loads(out)
    assert code == 0
    assert record == window_stats(build("one-t", 2, t=3).system, 2, 64).to_record()
    assert record["min_count"] == 1 and record["max_count"] == 3


def test_window_csv(capsys):
    code, out, _ = run(
        capsys, "window", "--system", "fundamental:h=2",
        "--lo", "2", "--hi", "5", "--format", "csv",
    )
    assert code == 0
    assert out.splitlines() == ["n,count", "2,1", "3,1", "4,1", "5,1"]


def test_catalog_verify_command(capsys):
    code, out, _ = run(
        capsys, "catalog-verify", "--name", "one-t", "--h", "2", "--t", "2",
        "--max-n", "200", "--format", "json",
    )
    assert code == 0
    record = json.loads(out)
    assert record["all_match"] is True


def test_catalog_verify_csv_matches_library(capsys):
    code, out, _ = run(
        capsys, "catalog-verify", "--name", "fundamental", "--h", "2",
        "--max-n", "20", "--format", "csv",
    )
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "n,closed_form,brute_force,match"
    assert len(lines) == 21
    assert all(line.endswith(",1") for line in lines[1:])


def test_mh_table_command(capsys):
    code, out, _ = run(capsys, "mh-table", "--h", "2", "--t-cutoff", "3")
    assert code == 0
    assert len(out.splitlines()) == len(mh_table(2, 3)) == 5


def test_ramsey_command_pentagon(capsys, tmp_path):
    path = tmp_path / "pentagon.txt"
    path.write_text(dump_coloring(pentagon_coloring()))
    code, out, _ = run(capsys, "ramsey", "--coloring", str(path), "--m", "3")
    assert code == 0
    assert out.strip() == "none"


def test_ramsey_command_finds_subset(capsys, tmp_path):
    path = tmp_path / "constant.txt"
    lines = ["ground: 1 2 3 4", "k: 1"]
    lines += [f"{i} : 0" for i in range(1, 5)]
    path.write_text("\n".join(lines) + "\n")
    code, out, _ = run(
        capsys, "ramsey", "--coloring", str(path), "--m", "2", "--format", "json"
    )
    assert code == 0
    assert json.loads(out) == {"subset": [1, 2], "color": 0}


def test_witness_command(capsys):
    code, out, _ = run(
        capsys, "witness", "--system", "fundamental:h=2", "--target", "2",
        "--max-n", "500", "--max-candidates", "499",
        "--strategy", "exhaustive", "--format", "json",
    )
    assert code == 0
    record = json.loads(out)
    assert record["found"] is False and record["max_count_seen"] == 1


def test_partitions_command(capsys):
    code, out, _ = run(capsys, "partitions", "--q", "6", "--h", "2", "--format", "json")
    assert code == 0
    assert json.loads(out) == [
        [[2, 3], []], [[2], [3]], [[3], [2]], [[], [2, 3]],
    ]


def test_correspond_command(capsys):
    code, out, _ = run(
        capsys, "correspond", "--system", "s-inf:h=2,s=2", "--q", "30",
        "--format", "json",
    )
    assert code == 0
    record = json.loads(out)
    assert record["equal"] is True
    assert record["system_count"] == record["cover_count"] == 4  # 1 + omega = 4


def test_usage_errors_exit_2(capsys):
    assert run(capsys, "count", "--system", "bogus:h=2", "--n", "5")[0] == 2
    assert run(capsys, "count", "--system", "parts:Nope", "--n", "5")[0] == 2
    assert run(capsys, "nonsense")[0] == 2


def test_byte_identical_output(capsys):
    args = ("window", "--system", "one-t:h=2,t=2", "--lo", "2", "--hi", "50",
            "--format", "csv")
    _, out_a, _ = run(capsys, *args)
    _, out_b, _ = run(capsys, *args)
    assert out_a == out_b
