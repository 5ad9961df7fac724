import json
import subprocess
import sys

from evenpairs.cli import main
from evenpairs.families import complete_graph, cycle, prism3
from evenpairs.formats import to_graph6, to_text


def run_cli(capsys, *args):
    code = main(list(args))
    captured = capsys.readouterr()
    doc = json.loads(captured.out) if captured.out.strip() else None
    return code, doc, captured.err


def test_analyze_pass(capsys, c6):
    code, doc, _ = run_cli(capsys, "analyze", to_graph6(c6))
    assert code == 0
    assert doc["report"]["ok"] is True


def test_analyze_bsp_failure_exit_one(capsys, p4):
    code, doc, _ = run_cli(capsys, "analyze", to_graph6(p4))
    assert code == 1
    names = {c["name"]: c["passed"] for c in doc["report"]["checks"]}
    assert names["no_balanced_skew_partition"] is False


def test_even_pair_command(capsys, c6):
    code, doc, _ = run_cli(capsys, "even-pair", to_graph6(c6))
    assert code == 0
    assert doc["result"]["outcome"] == "even_pair"
    assert doc["result"]["pair"] == [0, 2]


def test_even_pair_precondition_exit(capsys, p4):
    code, doc, _ = run_cli(capsys, "even-pair", to_graph6(p4))
    assert code == 1
    assert doc["result"]["outcome"] == "precondition_failed"


def test_contract_color(capsys, c6):
    code, doc, _ = run_cli(capsys, "contract-color", to_graph6(c6))
    assert code == 0
    assert doc["coloring"]["color_count"] == 2
    assert doc["sequence"]["outcome"] == "complete"


def test_contract_color_rejects_trigraph(capsys):
    code, _, err = run_cli(capsys, "contract-color", "trigraph 2\n0 1 S\n")
    assert code == 2 and "graph input" in err


def test_contract_color_non_berge_exit(capsys, c5):
    code, _, err = run_cli(capsys, "contract-color", to_graph6(c5))
    assert code == 1 and "Berge" in err


def test_decompose(capsys, c8):
    code, doc, _ = run_cli(capsys, "decompose", to_graph6(c8))
    assert code == 0
    assert doc["two_join"]["a1"] == [0] and doc["two_join"]["parity"] == "odd"
    assert len(doc["blocks"]) == 2
    assert doc["blocks"][0]["marker_kind"] == "small"


def test_decompose_none(capsys, c6):
    code, doc, _ = run_cli(capsys, "decompose", to_graph6(c6))
    assert code == 0 and doc["two_join"] is None and doc["blocks"] is None


def test_classify(capsys, c6):
    code, doc, _ = run_cli(capsys, "classify", to_graph6(c6))
    assert code == 0
    assert doc["classification"]["verdict"] == "bipartite"


def test_classify_trigraph_literal(capsys):
    code, doc, _ = run_cli(capsys, "classify", "trigraph 2\n0 1 S\n")
    assert code == 0 and doc["classification"]["verdict"] == "bipartite"


def test_verify_command(capsys):
    code, doc, _ = run_cli(capsys, "verify", "--nmax", "4", "--scope", "graphs")
    assert code == 0
    assert doc["summary"]["failures"] == []


def test_input_error_exit_two(capsys):
    code, _, err = run_cli(capsys, "analyze", "trigraph 3\n0 1 E\n0 1 S\n")
    assert code == 2 and "duplicate" in err
    code, _, err = run_cli(capsys, "analyze", "Eh?not-a-graph6###")
    assert code == 2


def test_emit_cert_jsonl(capsys, tmp_path, c8):
    cert = tmp_path / "certs.jsonl"
    code, _, _ = run_cli(capsys, "even-pair", to_graph6(c8),
                         "--emit-cert", str(cert))
    assert code == 0
    lines = [json.loads(line) for line in cert.read_text().splitlines()]
    assert lines and lines[0]["kind"] == "engine_result"


def test_need_disjoint_flag(capsys, c8):
    from evenpairs.decomposition import build_block, find_2join

    block = build_block(c8, find_2join(c8), 1)
    code, doc, _ = run_cli(capsys, "even-pair", to_text(block.trigraph),
                           "--need-disjoint")
    assert code == 0
    assert not (set(doc["result"]["pair"]) & set(block.markers))


def test_exit_codes_are_function_of_outcome(capsys, c5, c6, p4, k4):
    # outcome category fully determines the exit code across a fixture corpus
    fixtures = [c5, c6, p4, k4, cycle(8), prism3(), complete_graph(2)]
    for g in fixtures:
        code, doc, _ = run_cli(capsys, "even-pair", to_graph6(g))
        outcome = doc["result"]["outcome"]
        assert code == (0 if outcome in ("complete", "even_pair") else 1)


def test_console_entry_point_runs():
    proc = subprocess.run(
        [sys.executable, "-m", "evenpairs.cli", "classify", to_graph6(cycle(4))],
        capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["classification"]["verdict"] == "bipartite"


def test_help_lists_subcommands():
    proc = subprocess.run(
        [sys.executable, "-m", "evenpairs.cli", "--help"],
        capture_output=True, text=True)
    assert proc.returncode == 0
    for name in ("analyze", "even-pair", "contract-color", "decompose",
                 "classify", "verify"):
        assert name in proc.stdout


def test_even_pair_cert_line_is_golden(capsys, tmp_path, c6):
    # certificates are stable sorted-key JSON lines, diffable as goldens
    cert = tmp_path / "c.jsonl"
    code, _, _ = run_cli(capsys, "even-pair", to_graph6(c6),
                         "--emit-cert", str(cert))
    assert code == 0
    line = cert.read_text().splitlines()[0]
    assert line == (
        '{"kind": "engine_result", "outcome": "even_pair", "pair": [0, 2], '
        '"report": null, "trace": [{"class": "bipartite", "n": 6, '
        '"pair": [0, 2], "step": "basic_leaf"}]}'
    )


def test_verify_sampled_via_cli(capsys):
    code, doc, _ = run_cli(capsys, "verify", "--nmax", "8",
                           "--sample", "30", "--seed", "7")
    assert code == 0
    assert doc["summary"]["instances"] == 30
    assert doc["summary"]["failures"] == []
