#!/usr/bin/env python3
"""Walk through terms, measures, and the two normalization strategies.

Everything revolves around one rewrite rule: (x*y)*z -> x*(y*z).  Rewriting
always terminates at the same normal form (the fully right-nested chain),
but HOW you get there varies enormously: the number of steps ranges from
size - d_rm (rotating near the root) up to sigma (rotating at the deepest
redex).  This script shows both extremes on the same small term.
"""

from assocnf import (
    find_redexes,
    format_position,
    measure,
    normalize,
    parse,
    render,
)

EXAMPLE = "(((a*b)*c)*d)"


def banner(title):
    print()
    print("=" * 60)
    print(title)
    print("=" * 60)


def show_metrics(text):
    m = measure(parse(text))
    print(f"  {text}")
    print(f"    internal nodes (n) : {m.size}")
    print(f"    sigma              : {m.sigma}   (longest possible rewrite sequence)")
    print(f"    d_rm               : {m.d_rm}   (depth of the rightmost leaf)")
    print(f"    n - d_rm           : {m.size - m.d_rm}   (shortest possible rewrite sequence)")
    print(f"    normal form?       : {m.is_nf}")


def show_trace(text, strategy):
    trace = normalize(parse(text), strategy)
    print(f"  strategy={strategy}")
    print(f"    start  {render(trace.start)}")
    for step in trace.steps:
        print(f"    {format_position(step.position):>5}  {render(step.term_after)}")
    print(f"    -> {len(trace.steps)} steps to {render(trace.final)}")


def main():
    banner("MEASURES")
    print("A left-leaning term is far from normal form; a right chain IS one.")
    show_metrics(EXAMPLE)
    show_metrics("((a*b)*(c*d))")
    show_metrics("(a*(b*(c*d)))")

    banner("REDEXES")
    t = parse(EXAMPLE)
    print(f"  {EXAMPLE}")
    print("  rewritable positions, deepest first:",
          [format_position(p) for p in find_redexes(t)])

    banner("SHORTEST STRATEGY: rotate as close to the root as possible")
    show_trace(EXAMPLE, "shortest")

    banner("LONGEST STRATEGY: rotate at the deepest redex")
    show_trace(EXAMPLE, "longest")

    banner("UNIQUE NORMAL FORM")
    short = normalize(t, "shortest")
    long = normalize(t, "longest")
    print(f"  shortest ends at {render(short.final)} in {len(short.steps)} steps")
    print(f"  longest  ends at {render(long.final)} in {len(long.steps)} steps")
    print(f"  same normal form either way: {short.final == long.final}")


if __name__ == "__main__":
    main()
