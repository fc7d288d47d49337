"""Command-line client for the stepgain service, plus a `serve` launcher.

Every subcommand except `serve` talks HTTP to a running service; point it
somewhere with --url or STEPGAIN_URL. Arguments accepting text or JSON also
take @path/to/file to read from disk.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

import httpx

DEFAULT_URL = os.environ.get("STEPGAIN_URL", "http://127.0.0.1:8000")


def _load_arg(value: str) -> str:
    if value.startswith("@"):
        with open(value[1:], "r", encoding="utf-8") as f:
            return f.read()
    return value


def _load_json_arg(value: str):
    return json.loads(_load_arg(value))


def _post(base_url: str, path: str, payload: dict) -> dict:
    try:
        response = httpx.post(base_url.rstrip("/") + path, json=payload, timeout=120.0)
    except httpx.TransportError as exc:
        sys.stderr.write(f"error: cannot reach service at {base_url}: {exc}\n")
        raise SystemExit(1)
    if response.status_code >= 400:
        try:
            detail = response.json().get("detail", response.text)
        except ValueError:
            detail = response.text
        sys.stderr.write(f"error: HTTP {response.status_code}: {detail}\n")
        raise SystemExit(1)
    return response.json()


def _emit(data: dict) -> None:
    json.dump(data, sys.stdout, indent=2)
    sys.stdout.write("\n")


def cmd_serve(args: argparse.Namespace) -> int:
    import uvicorn

    if args.backend:
        os.environ["STEPGAIN_BACKEND"] = args.backend
    from .service import create_app

    uvicorn.run(create_app(), host=args.host, port=args.port, log_level="info")
    return 0


def cmd_parse(args: argparse.Namespace) -> int:
    payload = {"text": _load_arg(args.text), "question": args.question}
    _emit(_post(args.url, "/v1/parse", payload))
    return 0


def cmd_score(args: argparse.Namespace) -> int:
    payload: dict = {"question": _load_arg(args.question), "answer": args.answer}
    if args.steps:
        payload["steps"] = [_load_arg(s) for s in args.steps]
    elif args.text:
        payload["text"] = _load_arg(args.text)
    else:
        sys.stderr.write("error: provide --steps or --text\n")
        return 2
    if args.answer_lead_in is not None:
        payload["answer_lead_in"] = args.answer_lead_in
    _emit(_post(args.url, "/v1/score", payload))
    return 0


def cmd_score_file(args: argparse.Namespace) -> int:
    """Score a JSONL file of records {question, answer?, steps?|text?}."""
    out = open(args.output, "w", encoding="utf-8") if args.output else sys.stdout
    n_ok = n_failed = 0
    try:
        with open(args.input, "r", encoding="utf-8") as f:
            for line_no, line in enumerate(f, 1):
                line = line.strip()
                if not line:
                    continue
                record = json.loads(line)
                try:
                    result = _post(args.url, "/v1/score", record)
                except SystemExit:
                    n_failed += 1
                    sys.stderr.write(f"warning: skipping line {line_no}\n")
                    continue
                out.write(json.dumps(result) + "\n")
                n_ok += 1
    finally:
        if out is not sys.stdout:
            out.close()
    sys.stderr.write(f"scored {n_ok} records, {n_failed} failed\n")
    return 0 if n_failed == 0 else 1


def cmd_advantages(args: argparse.Namespace) -> int:
    payload = {
        "rewards": _load_json_arg(args.rewards),
        "center_only": args.center_only,
        "ddof": args.ddof,
    }
    if args.clip is not None:
        payload["clip_low"], payload["clip_high"] = args.clip
    _emit(_post(args.url, "/v1/rewards/advantages", payload))
    return 0


def cmd_shape(args: argparse.Namespace) -> int:
    payload = {"sequences": _load_json_arg(args.sequences), "discount": args.discount}
    _emit(_post(args.url, "/v1/rewards/shape", payload))
    return 0


def cmd_auc(args: argparse.Namespace) -> int:
    if args.file:
        data = _load_json_arg(args.file)
        scores, labels = data["scores"], data["labels"]
    else:
        scores = [float(x) for x in args.scores.split(",")]
        labels = [int(x) for x in args.labels.split(",")]
    payload: dict = {
        "scores": scores,
        "labels": labels,
        "include_curve": args.curve,
    }
    if args.bootstrap:
        payload["bootstrap_resamples"] = args.bootstrap
        payload["seed"] = args.seed
    _emit(_post(args.url, "/v1/eval/auc", payload))
    return 0


def cmd_profile(args: argparse.Namespace) -> int:
    payload = {
        "trajectories": _load_json_arg(args.trajectories),
        "num_points": args.num_points,
        "standardize": args.standardize,
    }
    _emit(_post(args.url, "/v1/profiles/aggregate", payload))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="stepgain", description="Client for the stepgain scoring service."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_url(p: argparse.ArgumentParser) -> None:
        p.add_argument("--url", default=DEFAULT_URL, help="service base URL")

    p = sub.add_parser("serve", help="run the service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    p.add_argument(
        "--backend",
        choices=["seeded", "completions"],
        help="override STEPGAIN_BACKEND",
    )
    p.set_defaults(func=cmd_serve)

    p = sub.add_parser("parse", help="segment a trace into steps")
    add_url(p)
    p.add_argument("--text", required=True, help="trace text or @file")
    p.add_argument("--question")
    p.set_defaults(func=cmd_parse)

    p = sub.add_parser("score", help="score one trace")
    add_url(p)
    p.add_argument("--question", required=True, help="question text or @file")
    p.add_argument("--answer", help="candidate answer (else extracted from text)")
    p.add_argument("--steps", nargs="+", help="pre-segmented steps")
    p.add_argument("--text", help="raw trace text or @file")
    p.add_argument("--answer-lead-in", dest="answer_lead_in")
    p.set_defaults(func=cmd_score)

    p = sub.add_parser("score-file", help="score a JSONL file of trace records")
    add_url(p)
    p.add_argument("input", help="input JSONL path")
    p.add_argument("-o", "--output", help="output JSONL path (default stdout)")
    p.set_defaults(func=cmd_score_file)

    p = sub.add_parser("advantages", help="group-normalize rewards")
    add_url(p)
    p.add_argument("--rewards", required=True, help="JSON [[...]] or @file")
    p.add_argument("--center-only", action="store_true")
    p.add_argument("--ddof", type=int, default=0, choices=[0, 1])
    p.add_argument("--clip", nargs=2, type=float, metavar=("LOW", "HIGH"))
    p.set_defaults(func=cmd_advantages)

    p = sub.add_parser("shape", help="potential-based shaping rewards")
    add_url(p)
    p.add_argument("--sequences", required=True, help="JSON [[...]] or @file")
    p.add_argument("--discount", type=float, default=1.0)
    p.set_defaults(func=cmd_shape)

    p = sub.add_parser("auc", help="ROC/AUC of scores against binary labels")
    add_url(p)
    p.add_argument("--scores", help="comma-separated scores")
    p.add_argument("--labels", help="comma-separated 0/1 labels")
    p.add_argument("--file", help='JSON {"scores": [...], "labels": [...]} or @file')
    p.add_argument("--curve", action="store_true", help="include ROC points")
    p.add_argument("--bootstrap", type=int, help="bootstrap resamples for a CI")
    p.add_argument("--seed", type=int)
    p.set_defaults(func=cmd_auc)

    p = sub.add_parser("profile", help="mean/std band over score trajectories")
    add_url(p)
    p.add_argument("--trajectories", required=True, help="JSON [[...]] or @file")
    p.add_argument("--num-points", type=int, default=50)
    p.add_argument("--standardize", action="store_true")
    p.set_defaults(func=cmd_profile)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "auc" and not args.file and not (args.scores and args.labels):
        sys.stderr.write("error: provide --file or both --scores and --labels\n")
        return 2
    return args.func(args)


if __name__ == "__main__":
    raise SystemExit(main())
