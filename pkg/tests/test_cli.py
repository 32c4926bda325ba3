import io
import json
import sys

import pytest

from pocketforge import cli
from pocketforge.document import serialize
from pocketforge.share import encode_permalink
from pocketforge.history import EditorState
from pocketforge.tiles import default_tileset, generate


def run_cli(argv, capsys, stdin_text=None, monkeypatch=None):
    if stdin_text is not None:
        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin_text))
    code = cli.main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_generate_deterministic_for_seed(capsys):
    code1, out1, _ = run_cli(["generate", "--seed", "7", "--tileset", "default"], capsys)
    code2, out2, _ = run_cli(["generate", "--seed", "7", "--tileset", "default"], capsys)
    assert code1 == code2 == 0
    assert out1 == out2
    assert out1 == serialize(generate(default_tileset(), 7)) + "\n"


def test_generate_without_seed_reports_it(capsys):
    code, out, err = run_cli(["generate"], capsys)
    assert code == 0
    assert out.startswith("<!DOCTYPE html>")
    assert err.startswith("seed: ")


def test_generate_out_file_matches_stdout(tmp_path, capsys):
    out_file = tmp_path / "page.html"
    code, out, _ = run_cli(["generate", "--seed", "3", "--out", str(out_file)], capsys)
    assert code == 0 and out == ""
    code, out, _ = run_cli(["generate", "--seed", "3"], capsys)
    assert out_file.read_text(encoding="utf-8") == out


def test_generate_custom_tileset(tmp_path, capsys):
    source = {
        "version": "1",
        "slots": [{"id": "border", "kind": "css_property", "target": "border", "tiles": ["1px solid"]}],
    }
    path = tmp_path / "tiles.json"
    path.write_text(json.dumps(source))
    code, out, _ = run_cli(["generate", "--seed", "0", "--tileset", str(path)], capsys)
    assert code == 0
    assert "border: 1px solid" in out


def test_generate_invalid_tileset_is_validation_error(tmp_path, capsys):
    path = tmp_path / "tiles.json"
    path.write_text('{"version": "1", "slots": [{"id": "a", "kind": "css_property", "target": "a", "tiles": []}]}')
    code, _, err = run_cli(["generate", "--tileset", str(path)], capsys)
    assert code == 1
    assert "error:" in err


def test_generate_seed_out_of_range_is_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main(["generate", "--seed", str(2**64)])
    assert exc.value.code == 2


def test_unknown_subcommand_is_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main(["frobnicate"])
    assert exc.value.code == 2


def test_analyze_reports_byte_count(tmp_path, capsys):
    page = tmp_path / "page.html"
    page.write_text("<p>hi</p>", encoding="utf-8")
    code, out, _ = run_cli(["analyze", str(page)], capsys)
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "9 bytes"
    assert any("smaller than" in line for line in lines[1:])


def test_analyze_stdin(capsys, monkeypatch):
    code, out, _ = run_cli(["analyze", "-"], capsys, stdin_text="<p>hi</p>", monkeypatch=monkeypatch)
    assert code == 0
    assert out.splitlines()[0] == "9 bytes"


def test_analyze_custom_refs(tmp_path, capsys):
    page = tmp_path / "page.html"
    page.write_text("x" * 100, encoding="utf-8")
    refs = tmp_path / "refs.json"
    refs.write_text(json.dumps([{"name": "tiny site", "bytes": 200, "recorded_on": "2026-08-01"}]))
    code, out, _ = run_cli(["analyze", str(page), "--refs", str(refs)], capsys)
    assert code == 0
    assert "2.0× smaller than tiny site" in out


def test_permalink_roundtrip_via_stdio(capsys, monkeypatch):
    text = "<p>shared page</p>\n"
    code, permalink, _ = run_cli(["permalink", "encode"], capsys, stdin_text=text, monkeypatch=monkeypatch)
    assert code == 0
    code, out, _ = run_cli(["permalink", "decode"], capsys, stdin_text=permalink, monkeypatch=monkeypatch)
    assert code == 0
    assert out == text


def test_permalink_decode_garbage_fails(capsys, monkeypatch):
    code, _, err = run_cli(["permalink", "decode"], capsys, stdin_text="!!!", monkeypatch=monkeypatch)
    assert code == 1
    assert "error:" in err


def test_bookmarks_add_and_list(tmp_path, capsys, monkeypatch):
    store = tmp_path / "store.json"
    code, _, _ = run_cli(["bookmarks", "add", "my page", "--store", str(store)],
                         capsys, stdin_text="<p>x</p>", monkeypatch=monkeypatch)
    assert code == 0
    code, out, _ = run_cli(["bookmarks", "list", "--store", str(store)], capsys)
    assert code == 0
    assert "my page" in out


def test_bookmarks_store_env_override(tmp_path, capsys, monkeypatch):
    store = tmp_path / "env-store.json"
    monkeypatch.setenv(cli.STORE_ENV_VAR, str(store))
    code, _, _ = run_cli(["bookmarks", "add", "via env"], capsys,
                         stdin_text="<p>x</p>", monkeypatch=monkeypatch)
    assert code == 0
    assert store.exists()
    code, out, _ = run_cli(["bookmarks", "list"], capsys)
    assert "via env" in out


def test_bookmarks_empty_label_fails(tmp_path, capsys, monkeypatch):
    code, _, err = run_cli(["bookmarks", "add", "", "--store", str(tmp_path / "s.json")],
                           capsys, stdin_text="<p>x</p>", monkeypatch=monkeypatch)
    assert code == 1
    assert "label" in err


def test_audit_prints_manifest_and_passes(capsys):
    code, out, _ = run_cli(["audit"], capsys)
    assert code == 0
    data = json.loads(out)
    assert data["audit"]["ok"] is True
    assert len(data["patterns"]) == 11
