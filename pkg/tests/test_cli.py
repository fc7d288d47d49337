"""End-to-end CLI tests against a live uvicorn server on an ephemeral port."""

import json
import threading
import time

import pytest
import uvicorn

from stepgain import cli
from stepgain.lm import SeededScorer
from stepgain.service import create_app


@pytest.fixture(scope="module")
def server_url():
    app = create_app(SeededScorer(seed=3))
    config = uvicorn.Config(app, host="127.0.0.1", port=0, log_level="warning")
    server = uvicorn.Server(config)
    thread = threading.Thread(target=server.run, daemon=True)
    thread.start()
    deadline = time.monotonic() + 15.0
    while not server.started:
        if time.monotonic() > deadline:
            raise RuntimeError("test server failed to start")
        time.sleep(0.02)
    port = server.servers[0].sockets[0].getsockname()[1]
    yield f"http://127.0.0.1:{port}"
    server.should_exit = True
    thread.join(timeout=5.0)


def run_cli(capsys, *argv):
    rc = cli.main(list(argv))
    captured = capsys.readouterr()
    return rc, captured


def test_parse(server_url, capsys):
    rc, captured = run_cli(
        capsys,
        "parse",
        "--url", server_url,
        "--text", "Step 1: read it.\nStep 2: solve it.\nAnswer: 7",
    )
    assert rc == 0
    body = json.loads(captured.out)
    assert body["answer"] == "7"
    assert body["num_steps"] == 2


def test_score_with_steps(server_url, capsys):
    rc, captured = run_cli(
        capsys,
        "score",
        "--url", server_url,
        "--question", "What is 3*5?",
        "--answer", "15",
        "--steps", "Write 3*5 as repeated addition.", "5+5+5 gives 15.",
    )
    assert rc == 0
    body = json.loads(captured.out)
    assert len(body["steps"]) == 2
    total = sum(s["logprob_gain"] for s in body["steps"])
    assert total == pytest.approx(
        body["aggregates"]["final_logprob"] - body["prior_logprob"], abs=1e-9
    )


def test_score_with_text_file(server_url, capsys, tmp_path):
    trace = tmp_path / "trace.txt"
    trace.write_text("Double 8 to get 16.\nDouble again to get 32.\nAnswer: 32\n")
    rc, captured = run_cli(
        capsys,
        "score",
        "--url", server_url,
        "--question", "What is 8*4?",
        "--text", f"@{trace}",
    )
    assert rc == 0
    assert json.loads(captured.out)["answer"] == "32"


def test_score_requires_steps_or_text(server_url, capsys):
    rc, captured = run_cli(capsys, "score", "--url", server_url, "--question", "Q?")
    assert rc == 2
    assert "--steps or --text" in captured.err


def test_score_file_round_trip(server_url, capsys, tmp_path):
    records = [
        {"question": "Q1?", "answer": "a", "steps": ["first step", "second step"]},
        {"question": "Q2?", "answer": "b", "text": "reason a bit.\nAnswer: b"},
    ]
    src = tmp_path / "in.jsonl"
    src.write_text("".join(json.dumps(r) + "\n" for r in records))
    dst = tmp_path / "out.jsonl"

    rc, captured = run_cli(
        capsys, "score-file", "--url", server_url, str(src), "-o", str(dst)
    )
    assert rc == 0
    assert "scored 2 records, 0 failed" in captured.err
    lines = [json.loads(l) for l in dst.read_text().splitlines()]
    assert [r["question"] for r in lines] == ["Q1?", "Q2?"]
    assert all("aggregates" in r for r in lines)


def test_score_file_skips_bad_lines(server_url, capsys, tmp_path):
    src = tmp_path / "in.jsonl"
    src.write_text(
        json.dumps({"question": "Q1?", "answer": "a", "steps": ["one step here"]})
        + "\n"
        + json.dumps({"question": "Q2?", "text": ""})
        + "\n"
    )
    rc, captured = run_cli(capsys, "score-file", "--url", server_url, str(src))
    assert rc == 1
    assert "skipping line 2" in captured.err
    assert "scored 1 records, 1 failed" in captured.err


def test_advantages_with_clip(server_url, capsys):
    rc, captured = run_cli(
        capsys,
        "advantages",
        "--url", server_url,
        "--rewards", "[[-9.0, 0.0, 9.0]]",
        "--clip", "-1", "1",
    )
    assert rc == 0
    row = json.loads(captured.out)["advantages"][0]
    assert row[0] == pytest.approx(-row[2])
    assert row[1] == pytest.approx(0.0)


def test_shape(server_url, capsys):
    rc, captured = run_cli(
        capsys,
        "shape",
        "--url", server_url,
        "--sequences", "[[0.0, 2.0, 3.0]]",
        "--discount", "0.9",
    )
    assert rc == 0
    assert json.loads(captured.out)["rewards"][0] == pytest.approx([1.8, 0.7])


def test_auc_inline(server_url, capsys):
    rc, captured = run_cli(
        capsys,
        "auc",
        "--url", server_url,
        "--scores", "0.1,0.4,0.35,0.8",
        "--labels", "0,0,1,1",
    )
    assert rc == 0
    assert json.loads(captured.out)["auc"] == pytest.approx(0.75)


def test_auc_from_file_with_curve(server_url, capsys, tmp_path):
    payload = tmp_path / "eval.json"
    payload.write_text(
        json.dumps({"scores": [0.2, 0.9, 0.4, 0.7], "labels": [0, 1, 0, 1]})
    )
    rc, captured = run_cli(
        capsys, "auc", "--url", server_url, "--file", f"@{payload}", "--curve"
    )
    assert rc == 0
    body = json.loads(captured.out)
    assert body["auc"] == pytest.approx(1.0)
    assert body["curve"]["thresholds"][0] is None


def test_auc_requires_input(server_url, capsys):
    rc, captured = run_cli(capsys, "auc", "--url", server_url)
    assert rc == 2
    assert "--scores" in captured.err


def test_profile(server_url, capsys):
    rc, captured = run_cli(
        capsys,
        "profile",
        "--url", server_url,
        "--trajectories", "[[0.0, 1.0], [0.0, 3.0]]",
        "--num-points", "3",
    )
    assert rc == 0
    body = json.loads(captured.out)
    assert body["mean"] == pytest.approx([0.0, 1.0, 2.0])
    assert body["count"] == 2


def test_http_error_becomes_exit_1(server_url, capsys):
    with pytest.raises(SystemExit) as exc_info:
        cli.main(
            ["auc", "--url", server_url, "--scores", "0.1,0.2", "--labels", "1,1"]
        )
    assert exc_info.value.code == 1
    assert "HTTP 400" in capsys.readouterr().err


def test_unreachable_service_exits_1(capsys):
    with pytest.raises(SystemExit) as exc_info:
        cli.main(
            ["parse", "--url", "http://127.0.0.1:9", "--text", "some trace text"]
        )
    assert exc_info.value.code == 1
    assert "cannot reach service" in capsys.readouterr().err
