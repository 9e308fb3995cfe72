"""Command-line front end: ``tevrsk count|verify|words|rsk|table``."""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
import time
from dataclasses import dataclass

from .ltab import tev_ltab
from .params import DEFAULT_WORK_BOUND, InvalidParams, Params, WorkBoundExceeded, is_valid
from .rsk import max_ii1_subseq, rsk
from .schubert import tev_schubert
from .tableau import conjugate
from .verify import verify_bijection
from .words import check_word, list_words, tev_words

EXIT_USAGE = 1
EXIT_PARAMS = 2
EXIT_DISAGREE = 3
EXIT_WORK = 4

METHODS = ("words", "ltableaux", "schubert")
FIELDS = ("r", "d", "g", "n", "tev")


class UsageError(Exception):
    pass


class Disagreement(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


@dataclass
class RunConfig:
    r: int | None = None
    d: int | None = None
    g: int | None = None
    method: str = "all"
    fmt: str = "text"
    work_bound: int = DEFAULT_WORK_BOUND
    threads: int = 1
    limit: int | None = None
    out: str | None = None

    def params(self) -> Params:
        if None in (self.r, self.d, self.g):
            raise UsageError("--r, --d and --g are required")
        return Params(self.g, self.r, self.d)


def resolve_threads(flag: int | None) -> int:
    if flag is not None:
        return max(1, flag)
    env = os.environ.get("TEV_THREADS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            raise UsageError(f"TEV_THREADS must be an integer, got {env!r}")
    return os.cpu_count() or 1


def compute(params: Params, method: str, cfg: RunConfig) -> int:
    if method == "words":
        return tev_words(params, cfg.threads, cfg.work_bound)
    if method == "ltableaux":
        return tev_ltab(params, cfg.threads, cfg.work_bound)
    if method == "schubert":
        params.check_work(cfg.work_bound)
        return tev_schubert(params)
    raise UsageError(f"unknown method {method!r}")


def _row(params: Params, tev: int, method: str, **extra) -> dict:
    return {"r": params.r, "d": params.d, "g": params.g, "n": params.n, "tev": tev, "method": method, **extra}


def cmd_count(cfg: RunConfig) -> list[dict]:
    params = cfg.params()
    methods = METHODS if cfg.method == "all" else (cfg.method,)
    rows = []
    for m in methods:
        start = time.perf_counter()
        tev = compute(params, m, cfg)
        rows.append(_row(params, tev, m, elapsed=round(time.perf_counter() - start, 6)))
    if len({row["tev"] for row in rows}) > 1:
        raise Disagreement(", ".join(f"{row['method']}={row['tev']}" for row in rows))
    return rows


def cmd_verify(cfg: RunConfig) -> dict:
    params = cfg.params()
    rep = verify_bijection(params, cfg.work_bound)
    return {
        "r": params.r, "d": params.d, "g": params.g, "n": params.n,
        "ok": rep.ok, "matched": rep.matched, "tev_words": rep.tev_words,
        "failure": rep.failure, "counterexample": repr(rep.counterexample) if rep.failure else None,
    }


def cmd_table(cfg: RunConfig) -> list[dict]:
    """Rows over every valid (d, g) with d <= --d and g <= --g, for fixed r."""
    if cfg.r is None or cfg.d is None or cfg.g is None:
        raise UsageError("table needs --r, --d (max degree) and --g (max genus)")
    if cfg.r < 1:
        raise InvalidParams("r must be >= 1")
    rows = []
    for d in range(cfg.r, cfg.d + 1):
        for g in range(cfg.g + 1):
            if not is_valid(g, cfg.r, d):
                continue
            params = Params(g, cfg.r, d)
            sub = RunConfig(**{**cfg.__dict__, "r": cfg.r, "d": d, "g": g})
            counted = cmd_count(sub)
            rows.append(_row(params, counted[0]["tev"], cfg.method))
    return rows


def format_word(word) -> str:
    return ",".join(map(str, word))


def parse_word(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    try:
        word = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise UsageError(f"cannot parse word {text!r}; use comma-separated letters")
    if any(x < 1 for x in word):
        raise UsageError("letters are 1-based")
    return word


def cmd_rsk(word: tuple[int, ...], cfg: RunConfig) -> dict:
    r = cfg.r if cfg.r is not None else max(max(word, default=1) - 1, 1)
    if any(x > r + 1 for x in word):
        raise UsageError(f"letters exceed r+1={r + 1}")
    pair = rsk(word)
    lam = pair.shape
    conj = conjugate(lam)
    info = {
        "word": format_word(word),
        "P": [list(row) for row in pair.P.rows],
        "Q": [list(row) for row in pair.Q.rows],
        "shape": list(lam.parts),
        "I": [sum(lam.parts[:k]) for k in range(1, lam.height + 1)],
        "D": [sum(conj.parts[:k]) for k in range(1, conj.height + 1)],
        "ii1": {str(i): max_ii1_subseq(word, i) for i in range(1, r + 1)},
    }
    if cfg.d is not None:
        rep = check_word(word, Params(len(word), r, cfg.d))
        info["conditions"] = {"i": rep.satisfies_i, "ii": rep.satisfies_ii, "iii": rep.satisfies_iii}
    return info


def _csv(rows: list[dict], fields) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=list(fields), extrasaction="ignore", lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)
    return buf.getvalue()


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
        return
    with open(out, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--r", type=int)
    common.add_argument("--d", type=int)
    common.add_argument("--g", type=int)
    common.add_argument("--method", choices=METHODS + ("all",), default="all")
    common.add_argument("--format", dest="fmt", choices=("text", "json", "csv"), default="text")
    common.add_argument("--limit", type=int)
    common.add_argument("--work-bound", type=int, default=DEFAULT_WORK_BOUND)
    common.add_argument("--threads", type=int)
    common.add_argument("--out")

    parser = _Parser(prog="tevrsk", description="Tevelev degrees of projective space by three methods.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    sub.add_parser("count", parents=[common], help="compute Tev by one or all methods")
    sub.add_parser("verify", parents=[common], help="check the L-tableau/word bijection")
    sub.add_parser("words", parents=[common], help="list passing words")
    rsk_p = sub.add_parser("rsk", parents=[common], help="RSK diagnostics for one word")
    rsk_p.add_argument("--word", required=True)
    sub.add_parser("table", parents=[common], help="export a table over d <= --d, g <= --g")
    return parser


def run(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = RunConfig(
            r=args.r, d=args.d, g=args.g, method=args.method, fmt=args.fmt,
            work_bound=args.work_bound, threads=resolve_threads(args.threads),
            limit=args.limit, out=args.out,
        )
        return _dispatch(args, cfg)
    except UsageError as exc:
        print(f"tevrsk: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except InvalidParams as exc:
        print(f"tevrsk: invalid parameters: {exc}", file=sys.stderr)
        return EXIT_PARAMS
    except Disagreement as exc:
        print(f"tevrsk: methods disagree: {exc}", file=sys.stderr)
        return EXIT_DISAGREE
    except WorkBoundExceeded as exc:
        print(f"tevrsk: {exc}", file=sys.stderr)
        return EXIT_WORK
    except OSError as exc:
        print(f"tevrsk: {exc}", file=sys.stderr)
        return EXIT_USAGE


def _dispatch(args, cfg: RunConfig) -> int:
    if args.command == "count":
        rows = cmd_count(cfg)
        if cfg.fmt == "json":
            text = json.dumps(rows, indent=2) + "\n"
        elif cfg.fmt == "csv":
            text = _csv(rows, FIELDS + ("method", "elapsed"))
        else:
            text = "".join(
                f"{row['method']:>10}: Tev(g={row['g']}, n={row['n']}, d={row['d']}, r={row['r']}) = "
                f"{row['tev']}  [{row['elapsed']:.3f}s]\n" for row in rows
            )
            if len(rows) > 1:
                text += "all methods agree\n"
        _emit(text, cfg.out)
        return 0

    if args.command == "verify":
        rep = cmd_verify(cfg)
        if cfg.fmt == "json":
            text = json.dumps(rep, indent=2) + "\n"
        elif rep["ok"]:
            text = f"pass: {rep['matched']} L-tableaux matched {rep['tev_words']} words\n"
        else:
            text = f"FAIL: {rep['failure']}\n  counterexample: {rep['counterexample']}\n"
        _emit(text, cfg.out)
        return 0 if rep["ok"] else EXIT_DISAGREE

    if args.command == "words":
        params = cfg.params()
        params.check_work(cfg.work_bound)
        words = list(list_words(params, cfg.limit))
        if cfg.fmt == "json":
            text = json.dumps([format_word(w) for w in words]) + "\n"
        else:
            text = "".join(format_word(w) + "\n" for w in words)
        _emit(text, cfg.out)
        return 0

    if args.command == "rsk":
        info = cmd_rsk(parse_word(args.word), cfg)
        if cfg.fmt == "json":
            text = json.dumps(info, indent=2) + "\n"
        else:
            lines = [f"word:  {info['word']}", "P:"]
            lines += ["  " + " ".join(map(str, row)) for row in info["P"]]
            lines.append("Q:")
            lines += ["  " + " ".join(map(str, row)) for row in info["Q"]]
            lines.append(f"shape: {tuple(info['shape'])}")
            lines.append(f"I_k:   {info['I']}")
            lines.append(f"D_k:   {info['D']}")
            lines.append("(i,i+1) maxima: " + ", ".join(f"{i}:{v}" for i, v in info["ii1"].items()))
            if "conditions" in info:
                lines.append("conditions: " + ", ".join(f"({k})={v}" for k, v in info["conditions"].items()))
            text = "\n".join(lines) + "\n"
        _emit(text, cfg.out)
        return 0

    if args.command == "table":
        rows = cmd_table(cfg)
        if cfg.fmt == "json":
            text = json.dumps(rows, indent=2) + "\n"
        else:
            text = _csv(rows, FIELDS)
        _emit(text, cfg.out)
        return 0

    raise UsageError(f"unknown command {args.command}")


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
