"""Command-line surface: count, table, verify, antidict, selftest.

Results go to stdout, progress and logs to stderr.  Counts in JSON
output are always decimal strings, never native numbers, so downstream
tools cannot lose precision.  Exit codes: 0 success, 1 verification or
consistency failure, 2 argument error.

SQFCOUNT_WORKERS caps the worker processes used by the overlap
verifier; the default is the available parallelism.
"""

import argparse
import itertools
import json
import os
import sys
import time

from . import antidict, counting, lemmas, words
from ._backend import BACKEND
from .automaton import build_pattern_automaton

SCHEMA_VERSION = 1

NAIVE_GUARD = 30        # naive counting above this needs --force
ANTIDICT_LIST_GUARD = 12
OVERLAP_GUARD = 300
KEY_LEMMA_GUARD = 18


def _worker_count():
    env = os.environ.get("SQFCOUNT_WORKERS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            pass
    return os.cpu_count() or 1


def _envelope(command, parameters, results, stats):
    return {
        "schema": SCHEMA_VERSION,
        "command": command,
        "parameters": parameters,
        "results": results,
        "stats": stats,
    }


def _result_json(res):
    return {
        "n": res.n,
        "method": res.method,
        "count": str(res.value),
    }


def _stats_json(stats):
    return {
        "automaton_states": stats.automaton_states,
        "antidictionary_size": stats.antidictionary_size,
        "squares_iterated": stats.squares_iterated,
        "elapsed_ms": round(stats.elapsed_s * 1000.0, 3),
    }


def _count_one(n, method):
    if method == "naive":
        t0 = time.perf_counter()
        value = words.count_square_free_naive(n)
        return counting.CountResult(
            n, "naive", value,
            counting.CountStats(elapsed_s=time.perf_counter() - t0))
    if method == "simple":
        return counting.count_simple(n)
    return counting.count_improved(n)


def cmd_count(args, parser):
    if args.n < 0:
        parser.error("--n must be >= 0")
    if args.method == "naive" and args.n > NAIVE_GUARD and not args.force:
        parser.error(f"naive counting above n={NAIVE_GUARD} needs --force")
    res = _count_one(args.n, args.method)
    if args.output == "json":
        env = _envelope(
            "count",
            {"n": args.n, "method": args.method},
            [_result_json(res)],
            _stats_json(res.stats),
        )
        print(json.dumps(env))
    else:
        print(res.value)
    return 0


def cmd_table(args, parser):
    if args.from_n < 0:
        parser.error("--from must be >= 0")
    if args.from_n > args.to_n:
        parser.error("--from must not exceed --to")
    if args.method == "naive" and args.to_n > NAIVE_GUARD and not args.force:
        parser.error(f"naive counting above n={NAIVE_GUARD} needs --force")
    results = counting.count_range(args.from_n, args.to_n, args.method)
    if args.format == "json":
        total = counting.CountStats(
            automaton_states=max(r.stats.automaton_states for r in results),
            antidictionary_size=max(r.stats.antidictionary_size for r in results),
            squares_iterated=sum(r.stats.squares_iterated for r in results),
            elapsed_s=sum(r.stats.elapsed_s for r in results)
            if args.method != "simple" else results[0].stats.elapsed_s,
        )
        env = _envelope(
            "table",
            {"from": args.from_n, "to": args.to_n, "method": args.method},
            [_result_json(r) for r in results],
            _stats_json(total),
        )
        print(json.dumps(env))
    elif args.format == "csv":
        print("n,count,elapsed_ms")
        for r in results:
            print(f"{r.n},{r.value},{round(r.stats.elapsed_s * 1000.0, 3)}")
    else:
        for r in results:
            print(f"{r.n}\t{r.value}\t{round(r.stats.elapsed_s * 1000.0, 3)}ms")
    return 0


def cmd_verify(args, parser):
    if args.max_len < 3:
        parser.error("--max-len must be >= 3")
    guard = OVERLAP_GUARD if args.kind == "overlap" else KEY_LEMMA_GUARD
    if args.max_len > guard and not args.force:
        parser.error(f"verify {args.kind} above --max-len {guard} needs --force")
    t0 = time.perf_counter()
    if args.kind == "overlap":
        verdicts = lemmas.verify_overlap_lemma(
            args.max_len, exhaustive=args.exhaustive, workers=_worker_count())
        violations = 0
        for v in verdicts:
            print(v.record_line())
            if v.status == lemmas.VIOLATION:
                violations += 1
        cases = len(verdicts)
    else:
        reports, summary = lemmas.verify_key_lemma(args.max_len)
        for rep in reports:
            squares = ";".join(f"{a},{h}" for a, h in rep.squares)
            print(f"word={words.render_word(rep.word)} status=VIOLATION "
                  f"squares={squares} observed={rep.observed_count}")
        violations = summary.violations
        cases = summary.words_checked
    summary_obj = {
        "schema": SCHEMA_VERSION,
        "command": "verify",
        "kind": args.kind,
        "max_len": args.max_len,
        "cases_checked": cases,
        "violations": violations,
        "elapsed_ms": round((time.perf_counter() - t0) * 1000.0, 3),
    }
    print(json.dumps(summary_obj))
    return 1 if violations else 0


def cmd_antidict(args, parser):
    if args.half_length < 1:
        parser.error("--half-length must be >= 1")
    if (not args.count_only and args.half_length > ANTIDICT_LIST_GUARD
            and not args.force):
        parser.error(f"listing above --half-length {ANTIDICT_LIST_GUARD} "
                     f"needs --force (use --count-only)")
    count = antidict.minimal_squares_up_to(args.half_length)
    print(count)
    if not args.count_only:
        antidict.minimal_squares_up_to(
            args.half_length,
            lambda sq: print(words.render_word(sq.doubled)))
    return 0


def _selftest_counting(max_n, report):
    ok = True
    naive_top = min(max_n, 22)
    for n in range(naive_top + 1):
        expect = words.count_square_free_naive(n)
        got = counting.count_simple(n).value
        if got != expect:
            report(f"FAIL simple vs naive at n={n}: {got} != {expect}")
            ok = False
    report(f"ok: simple == naive for n <= {naive_top}")
    for n in range(max_n + 1):
        simple = counting.count_simple(n).value
        improved = counting.count_improved(n).value
        if simple != improved:
            report(f"FAIL improved vs simple at n={n}: {improved} != {simple}")
            ok = False
    report(f"ok: improved == simple for n <= {max_n}")
    return ok


def _selftest_automaton(report):
    ok = True
    for bound in (1, 2, 3):
        patterns = []
        antidict.minimal_squares_up_to(bound, lambda sq: patterns.append(sq.doubled))
        automaton = build_pattern_automaton(patterns)
        for k in range(0, 8):
            for tup in itertools.product(range(3), repeat=k):
                w = bytes(tup)
                expect = (k >= 2
                          and words.has_square_with_half_at_most(w, bound))
                if automaton.accepts(w) != expect:
                    report(f"FAIL automaton M_{bound} on {words.render_word(w)}")
                    ok = False
    report("ok: automaton acceptance matches substring scan (bounds 1..3)")
    return ok


def _selftest_lemmas(report):
    verdicts = lemmas.verify_overlap_lemma(40)
    bad = [v for v in verdicts if v.status == lemmas.VIOLATION]
    for v in bad:
        report(f"FAIL overlap: {v.record_line()}")
    report("ok: overlap lemma verified to length 40")
    reports, summary = lemmas.verify_key_lemma(12)
    for rep in reports:
        report(f"FAIL run structure: {words.render_word(rep.word)}")
    report(f"ok: run structure verified to length 12 "
           f"({summary.words_checked} words)")
    return not bad and not reports


def cmd_selftest(args, parser):
    if args.max_n < 4:
        parser.error("--max-n must be >= 4")
    def report(line):
        print(line, file=sys.stderr, flush=True)
    ok = _selftest_counting(args.max_n, report)
    ok = _selftest_automaton(report) and ok
    ok = _selftest_lemmas(report) and ok
    print("selftest: PASS" if ok else "selftest: FAIL")
    return 0 if ok else 1


def build_parser():
    parser = argparse.ArgumentParser(
        prog="sqfcount",
        description="Count ternary square-free words exactly "
                    f"(kernel backend: {BACKEND})")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", help="count square-free words of one length")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--method", choices=counting.METHODS, default="improved")
    p.add_argument("--output", choices=("plain", "json"), default="plain")
    p.add_argument("--force", action="store_true",
                   help="lift the desk-scale guard rails")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("table", help="count a whole range of lengths")
    p.add_argument("--from", dest="from_n", type=int, required=True)
    p.add_argument("--to", dest="to_n", type=int, required=True)
    p.add_argument("--method", choices=counting.METHODS, default="simple")
    p.add_argument("--format", choices=("plain", "csv", "json"),
                   default="plain")
    p.add_argument("--force", action="store_true")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("verify", help="machine-verify the structural lemmas")
    p.add_argument("kind", choices=("overlap", "key-lemma"))
    p.add_argument("--max-len", type=int, required=True)
    p.add_argument("--exhaustive", action="store_true",
                   help="also emit vacuously satisfied overlap cases")
    p.add_argument("--force", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("antidict", help="count or dump minimal squares")
    p.add_argument("--half-length", dest="half_length", type=int, required=True)
    p.add_argument("--count-only", dest="count_only", action="store_true")
    p.add_argument("--force", action="store_true")
    p.set_defaults(func=cmd_antidict)

    p = sub.add_parser("selftest", help="cross-check all methods and lemmas")
    p.add_argument("--max-n", dest="max_n", type=int, default=30)
    p.set_defaults(func=cmd_selftest)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.func(args, parser)


def entry():
    sys.exit(main())


if __name__ == "__main__":
    entry()
