import io
import json

import pytest

from assertconvert.cli import RunConfig, main, run

SAMPLE = """class AccountTest {
  void t() {
    assertNotNull(myNum);
    assertThat(items, hasSize(3));
  }
}
"""


@pytest.fixture
def tree(tmp_path):
    (tmp_path / "b").mkdir()
    (tmp_path / "b" / "AccountTest.java").write_text(SAMPLE)
    (tmp_path / "a").mkdir()
    (tmp_path / "a" / "LedgerTests.java").write_text("class LedgerTests { void t() { assertTrue(ok); } }\n")
    (tmp_path / "a" / "Helper.java").write_text("class Helper { void t() { assertTrue(skip); } }\n")
    return tmp_path


def capture(config):
    out, err = io.StringIO(), io.StringIO()
    code = run(config, out, err)
    return code, out.getvalue(), err.getvalue()


def test_text_output(tree):
    code, out, _ = capture(RunConfig(inputs=[str(tree)]))
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 2
    assert lines[0].endswith("a/LedgerTests.java:1\tok is true.")
    assert lines[1].endswith("b/AccountTest.java:3\tmy num is not null.")


def test_jsonl_and_unconvertible(tree):
    code, out, _ = capture(RunConfig(inputs=[str(tree / "b")], format="jsonl", include_unconvertible=True))
    records = [json.loads(line) for line in out.splitlines()]
    assert code == 0
    assert [r["status"] for r in records] == ["converted", "unconvertible"]
    assert records[0]["english"] == "my num is not null"
    assert records[1]["assertion"] == "assertThat(items, hasSize(3));"
    assert set(records[0]) == {"file", "line", "assertion", "condition", "english", "status", "rule_trace"}


def test_deterministic(tree):
    cfg = RunConfig(inputs=[str(tree)], format="jsonl", include_unconvertible=True)
    assert capture(cfg)[1] == capture(cfg)[1]


def test_empty_directory(tmp_path):
    assert capture(RunConfig(inputs=[str(tmp_path)])) == (0, "", "")


def test_missing_path(tmp_path):
    code, _, err = capture(RunConfig(inputs=[str(tmp_path / "nope")]))
    assert code == 1
    assert "nope" in err


def test_explicit_file_ignores_glob(tree):
    code, out, _ = capture(RunConfig(inputs=[str(tree / "a" / "Helper.java")]))
    assert "skip is true" in out


def test_custom_glob(tree):
    code, out, _ = capture(RunConfig(inputs=[str(tree)], globs=("*.java",)))
    assert "skip is true" in out


def test_bad_arguments_exit_2(capsys):
    with pytest.raises(SystemExit) as info:
        main(["--format", "xml", "x"])
    assert info.value.code == 2


def test_missing_lexicon_exit_2(tree, tmp_path):
    assert main([str(tree), "--lexicon", str(tmp_path / "none.txt")]) == 2


def test_config_validation():
    with pytest.raises(ValueError):
        RunConfig(inputs=[])
    with pytest.raises(ValueError):
        RunConfig(inputs=["x"], format="csv")
