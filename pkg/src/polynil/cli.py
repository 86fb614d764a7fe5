"""Command-line front end.

    polynil canonicalize "Z2 + Z4 + Z^1"
    polynil multiplier "Z2+Z2" --variety 2
    polynil capable "Z3+Z3" --variety 1,1 --oracle --json
    polynil epicenter "Z4+Z2" --variety 1
    polynil census --order-bound 16 --variety 1 --variety 1,1 census.jsonl

Exit codes: 0 ok, 1 internal or I/O error, 2 usage/parse error,
3 unsupported operation, 4 oracle and closed form disagree.
"""

import argparse
import json
import os
import re
import sys
from concurrent.futures import ProcessPoolExecutor
from math import inf

from .abelian import UnsupportedOperation, canonicalize, enumerate_abelian_groups, order
from .capability import (
    epicenter,
    is_capable_closed_form,
    is_capable_oracle,
    oracle_verdicts,
)
from .multiplier import multiplier_order, polynilpotent_multiplier
from .witt import ClassRow

EXIT_OK = 0
EXIT_INTERNAL = 1
EXIT_USAGE = 2
EXIT_UNSUPPORTED = 3
EXIT_DISAGREE = 4

DEFAULT_CENSUS_ROWS = ("1", "2", "3", "1,1", "1,2", "2,1", "1,1,1")


class GroupSpecError(ValueError):
    def __init__(self, message, position):
        super().__init__(f"{message} at position {position}")
        self.position = position


_TERM = re.compile(r"Z(?:\^(-?\d+)|(-?\d+))?$")


def parse_group_spec(text):
    """Parse ``"Z^2 + Z12 + Z6"`` into ``(rank, moduli)``; moduli keep input order.

    A structured form ``{"rank": m, "torsion": [...]}`` (dict or JSON text)
    is accepted as well.
    """
    if isinstance(text, dict):
        return _from_mapping(text)
    stripped = text.strip()
    if stripped.startswith("{"):
        try:
            return _from_mapping(json.loads(stripped))
        except json.JSONDecodeError as exc:
            raise GroupSpecError(f"bad JSON group spec: {exc.msg}", exc.pos) from None
    if stripped == "1":
        return 0, []
    rank, moduli = 0, []
    pos = 0
    for raw in text.split("+"):
        term = "".join(raw.split())
        start = pos + (len(raw) - len(raw.lstrip()))
        pos += len(raw) + 1
        match = _TERM.match(term)
        if not term or match is None:
            raise GroupSpecError(f"malformed term {term!r}", start)
        exp, mod = match.groups()
        if exp is not None:
            if int(exp) < 0:
                raise GroupSpecError(f"negative rank in {term!r}", start)
            rank += int(exp)
        elif mod is not None:
            if int(mod) <= 0:
                raise GroupSpecError(f"modulus must be positive in {term!r}", start)
            moduli.append(int(mod))
        else:
            rank += 1
    return rank, moduli


def _from_mapping(data):
    try:
        rank = int(data.get("rank", 0))
        moduli = [int(n) for n in data.get("torsion", [])]
    except (AttributeError, TypeError, ValueError):
        raise GroupSpecError("structured spec needs integer 'rank' and 'torsion'", 0) from None
    if rank < 0 or any(n <= 0 for n in moduli):
        raise GroupSpecError("rank must be >= 0 and moduli positive", 0)
    return rank, moduli


def group_from_spec(text):
    return canonicalize(*parse_group_spec(text))


# --- JSON helpers -----------------------------------------------------------

def group_json(g):
    return {"rank": g.rank, "torsion": list(g.torsion)}


def element_json(x):
    if x is None:
        return None
    return {"free": list(x.free), "torsion": list(x.torsion)}


def structure_json(s):
    return {"free_rank": s.free_rank, "layers": [[n, mult] for n, mult in s.layers]}


def order_json(fo):
    if fo == inf:
        return "infinite"
    return {str(p): e for p, e in sorted(fo.items())}


def verdict_json(v):
    return {"capable": v.capable, "rule": v.rule, "witness": element_json(v.witness)}


def _emit(args, payload, text):
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    else:
        print(text)


# --- commands ---------------------------------------------------------------

def cmd_canonicalize(args):
    g = group_from_spec(args.group)
    _emit(args, {"group": group_json(g), "order": _order_value(g)}, str(g))
    return EXIT_OK


def _order_value(g):
    o = order(g)
    return "infinite" if o == inf else o


def cmd_multiplier(args):
    g = group_from_spec(args.group)
    s = polynilpotent_multiplier(g, args.variety)
    payload = {
        "group": group_json(g),
        "variety": list(args.variety.classes),
        "multiplier": structure_json(s),
        "multiplier_order": order_json(multiplier_order(s)),
    }
    _emit(args, payload, str(s))
    return EXIT_OK


def _verdict_text(v):
    word = "capable" if v.capable else "not capable"
    text = f"{word} ({v.rule})"
    if v.witness is not None:
        text += f", witness {v.witness}"
    return text


def cmd_capable(args):
    g = group_from_spec(args.group)
    closed = is_capable_closed_form(g, args.variety)
    payload = {"group": group_json(g), "variety": list(args.variety.classes),
               **verdict_json(closed)}
    lines = [_verdict_text(closed)]
    status = EXIT_OK
    if args.oracle:
        oracle = is_capable_oracle(g, args.variety)
        agree = oracle.capable == closed.capable
        payload["oracle"] = verdict_json(oracle)
        payload["agree"] = agree
        lines.append(f"oracle: {_verdict_text(oracle)}")
        if not agree:
            lines.append("DISAGREEMENT between closed form and oracle")
            status = EXIT_DISAGREE
    _emit(args, payload, "\n".join(lines))
    return status


def cmd_epicenter(args):
    g = group_from_spec(args.group)
    e = epicenter(g, args.variety)
    payload = {
        "group": group_json(g),
        "variety": list(args.variety.classes),
        "members": [element_json(x) for x in e.members],
        "structure": group_json(e.structure),
        "quotient": group_json(e.quotient),
    }
    text = (f"epicenter: {e.structure} ({len(e.members)} elements)\n"
            f"largest capable quotient: {e.quotient}")
    _emit(args, payload, text)
    return EXIT_OK


def census_records(g, rows):
    """One record per row for the finite group ``g``."""
    oracle = oracle_verdicts(g, rows)
    out = []
    for row in rows:
        s = polynilpotent_multiplier(g, row)
        closed = is_capable_closed_form(g, row)
        orc = oracle[row]
        out.append({
            "group": group_json(g),
            "order": order(g),
            "variety": list(row.classes),
            "multiplier": structure_json(s),
            "multiplier_order": order_json(multiplier_order(s)),
            "closed_form": {"capable": closed.capable, "rule": closed.rule},
            "oracle": {"capable": orc.capable, "witness": element_json(orc.witness)},
            "agree": closed.capable == orc.capable,
        })
    return out


def _census_worker(job):
    g, rows = job
    return census_records(g, rows)


def run_census(order_bound, rows):
    """All census records in deterministic order (order, canonical form, row)."""
    rows = [ClassRow.parse(r) if isinstance(r, str) else r for r in rows]
    jobs = [(g, rows) for g in enumerate_abelian_groups(order_bound)]
    workers = _worker_count()
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            chunks = list(pool.map(_census_worker, jobs, chunksize=8))
    else:
        chunks = [_census_worker(job) for job in jobs]
    return [rec for chunk in chunks for rec in chunk]


def _worker_count():
    raw = os.environ.get("POLYNIL_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def write_census(records, path):
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        for rec in records:
            fh.write(json.dumps(rec, sort_keys=True, separators=(",", ":")) + "\n")


def cmd_census(args):
    if args.order_bound < 1:
        print("error: --order-bound must be >= 1", file=sys.stderr)
        return EXIT_USAGE
    rows = args.variety or [ClassRow.parse(r) for r in DEFAULT_CENSUS_ROWS]
    records = run_census(args.order_bound, rows)
    try:
        write_census(records, args.output)
    except OSError as exc:
        print(f"error: cannot write census to {args.output}: {exc.strerror}", file=sys.stderr)
        return EXIT_INTERNAL

    summary = {"records": len(records), "groups": len(records) // len(rows),
               "capable": {}, "disagreements": 0}
    for rec in records:
        key = ",".join(map(str, rec["variety"]))
        summary["capable"][key] = summary["capable"].get(key, 0) + rec["closed_form"]["capable"]
        if not rec["agree"]:
            summary["disagreements"] += 1
    if args.json:
        print(json.dumps(summary, sort_keys=True))
    else:
        print(f"{summary['records']} records over {summary['groups']} groups -> {args.output}")
        for key, count in summary["capable"].items():
            print(f"  variety {key}: {count} capable")
        print(f"  disagreements: {summary['disagreements']}")
    bad = [rec for rec in records if not rec["agree"]]
    if bad:
        rec = bad[0]
        spec = " + ".join(f"Z{n}" for n in rec["group"]["torsion"]) or "1"
        row = ",".join(map(str, rec["variety"]))
        print(f'reproduce: polynil capable "{spec}" --variety {row} --oracle', file=sys.stderr)
        return EXIT_DISAGREE
    return EXIT_OK


# --- argument parsing -------------------------------------------------------

def _row_arg(text):
    try:
        return ClassRow.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def build_parser():
    parser = argparse.ArgumentParser(
        prog="polynil",
        description="Polynilpotent multipliers and capability of f.g. abelian groups.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help, variety=True):
        p = sub.add_parser(name, help=help)
        p.add_argument("group", help='group spec, e.g. "Z^2 + Z12 + Z6"')
        if variety:
            p.add_argument("--variety", type=_row_arg, default=ClassRow((1,)),
                           help="class row c1,...,ct (default 1)")
        p.add_argument("--json", action="store_true", help="machine-readable output")
        p.set_defaults(func=func)
        return p

    add("canonicalize", cmd_canonicalize, "invariant-factor form", variety=False)
    add("multiplier", cmd_multiplier, "polynilpotent multiplier")
    cap = add("capable", cmd_capable, "capability verdict")
    cap.add_argument("--oracle", action="store_true",
                     help="also run the brute-force oracle (finite groups only)")
    add("epicenter", cmd_epicenter, "epicenter and largest capable quotient")

    census = sub.add_parser("census", help="verify closed form against oracle for all small groups")
    census.add_argument("output", help="JSON Lines output path")
    census.add_argument("--order-bound", type=int, required=True)
    census.add_argument("--variety", type=_row_arg, action="append",
                        help="class row; repeat for several (default: a standard set of 7)")
    census.add_argument("--json", action="store_true")
    census.set_defaults(func=cmd_census)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except GroupSpecError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except UnsupportedOperation as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_UNSUPPORTED
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except Exception as exc:  # noqa: BLE001
        print(f"internal error: {exc!r}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
