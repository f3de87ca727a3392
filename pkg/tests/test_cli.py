import json
import subprocess
import sys

import pytest

from chadwsd.cli import main

TOY_LINE = "bass#n#1 catch#v#1 river#n#1 play#v#1"


@pytest.fixture
def toy_args(data_dir):
    return ["--lexicon", str(data_dir / "toy_lexicon.txt"),
            "--stems", str(data_dir / "toy_stems.txt")]


def test_disambiguate_toy(tmp_path, data_dir, toy_args):
    out, js = tmp_path / "tags.txt", tmp_path / "tags.jsonl"
    rc = main(["--command", "disambiguate", *toy_args, "--corpus",
               str(data_dir / "toy_corpus.tsv"), "--measure", "dice",
               "--out", str(out), "--json", str(js)])
    assert rc == 0
    assert out.read_text(encoding="utf-8") == TOY_LINE + "\n"
    tokens = json.loads(js.read_text(encoding="utf-8").splitlines()[0])["tokens"]
    assert [t["fallback"] for t in tokens] == [False, False, False, True]


def test_disambiguate_to_stdout(capsys, data_dir, toy_args):
    assert main(["--command", "disambiguate", *toy_args, "--corpus",
                 str(data_dir / "toy_corpus.tsv"), "--pos", "n"]) == 0
    assert capsys.readouterr().out == "bass#n#1 river#n#1\n"


def test_baseline(capsys, data_dir, toy_args):
    assert main(["--command", "baseline", *toy_args,
                 "--corpus", str(data_dir / "toy_corpus.tsv")]) == 0
    assert capsys.readouterr().out == TOY_LINE + "\n"


def test_evaluate_toy(tmp_path, data_dir, toy_args):
    out = tmp_path / "report.tsv"
    rc = main(["--command", "evaluate", *toy_args, "--corpus",
               str(data_dir / "toy_corpus.tsv"), "--out", str(out), "--trace",
               "--json", str(tmp_path / "report.json")])
    assert rc == 0
    assert out.read_text(encoding="utf-8").splitlines() == [
        "File\tWords\tDice\tJaccard\tOverlap\tWN1",
        "toy_corpus\t4\t1.0\t1.0\t1.0\t1.0"]
    trace = (tmp_path / "report.trace.tsv").read_text(encoding="utf-8").splitlines()
    assert trace == ["index\tprecision", "1\t1.0", "2\t1.0", "3\t1.0", "4\t1.0"]
    assert json.loads((tmp_path / "report.json").read_text())[0]["precision"] == 1.0


def test_evaluate_many_files_sorted(tmp_path, data_dir, toy_args):
    bad = tmp_path / "worse.tsv"
    bad.write_text("bass\tbass\tn\t2\nriver\triver\tn\t1\n", encoding="utf-8")
    out = tmp_path / "report.tsv"
    assert main(["--command", "evaluate", *toy_args, "--corpus", str(bad),
                 "--corpus", str(data_dir / "toy_corpus.tsv"), "--out", str(out),
                 "--trace"]) == 0
    rows = out.read_text(encoding="utf-8").splitlines()
    assert [r.split("\t")[0] for r in rows[1:]] == ["toy_corpus", "worse"]
    assert (tmp_path / "report.worse.trace.tsv").exists()
    assert (tmp_path / "report.toy_corpus.trace.tsv").exists()


def test_translate(capsys, data_dir, toy_args):
    assert main(["--command", "translate", *toy_args, "--measure", "dice",
                 "--bilingual", str(data_dir / "toy_bilingual.txt"),
                 "--corpus", str(data_dir / "toy_source.txt")]) == 0
    assert capsys.readouterr().out == (
        "Word: (Rom)biban (Eng)Bass#n#1 , Word: (Rom)prinde (Eng)Catch#v#1 , "
        "Word: (Rom)rau (Eng)River#n#1 , Word: (Rom)canta (Eng)Play#v#1\n")


def test_missing_file_exit_2(capsys, tmp_path, toy_args):
    rc = main(["--command", "disambiguate", *toy_args, "--corpus", str(tmp_path / "no.tsv")])
    assert rc == 2
    err = capsys.readouterr().err
    assert err.startswith("chadwsd:error:io:") and err.count("\n") == 1


def test_missing_lemma_column_exit_3(capsys, tmp_path, toy_args):
    bad = tmp_path / "bad.tsv"
    bad.write_text("bass\tbass\tn\t1\nriver\tn\t1\n", encoding="utf-8")
    rc = main(["--command", "evaluate", *toy_args, "--corpus", str(bad)])
    assert rc == 3
    err = capsys.readouterr().err
    assert err.startswith("chadwsd:error:format:") and ":2:" in err


def test_bad_lexicon_exit_3(capsys, tmp_path, data_dir):
    lex = tmp_path / "lex.txt"
    lex.write_text("x\tn\n1\t\ta\n3\t\tb\n", encoding="utf-8")
    rc = main(["--command", "baseline", "--lexicon", str(lex),
               "--corpus", str(data_dir / "toy_corpus.tsv")])
    assert rc == 3
    assert "rank gap" in capsys.readouterr().err


@pytest.mark.parametrize("extra", [
    ["--command", "translate"],
    ["--command", "disambiguate", "--trace"],
    ["--command", "evaluate", "--pos", "n,x"],
    ["--command", "evaluate", "--trace"],
])
def test_usage_errors(capsys, data_dir, toy_args, extra):
    rc = main([*toy_args, "--corpus", str(data_dir / "toy_corpus.tsv"), *extra])
    assert rc == 2
    assert capsys.readouterr().err.startswith("chadwsd:error:usage:")


def test_argparse_error_is_single_line(capsys):
    with pytest.raises(SystemExit) as e:
        main(["--command", "nope"])
    assert e.value.code == 2
    err = capsys.readouterr().err
    assert err.startswith("chadwsd:error:usage:") and err.count("\n") == 1


def test_byte_determinism(tmp_path, data_dir, toy_args):
    outputs = []
    for i in range(2):
        d = tmp_path / str(i)
        d.mkdir()
        assert main(["--command", "evaluate", *toy_args, "--corpus",
                     str(data_dir / "toy_corpus.tsv"), "--out", str(d / "r.tsv"),
                     "--trace", "--json", str(d / "r.json")]) == 0
        outputs.append([(d / n).read_bytes() for n in ("r.tsv", "r.trace.tsv", "r.json")])
    assert outputs[0] == outputs[1]


def test_module_entry_point(data_dir, toy_args):
    proc = subprocess.run(
        [sys.executable, "-m", "chadwsd", "--command", "disambiguate", *toy_args,
         "--corpus", str(data_dir / "toy_corpus.tsv"), "--measure", "dice"],
        capture_output=True, text=True, check=False)
    assert proc.returncode == 0, proc.stderr
    assert proc.stdout == TOY_LINE + "\n"
