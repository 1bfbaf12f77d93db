#!/usr/bin/env python3
"""Print the 4-slot evaluation table on unit chains, probe the zigzag's
one-slot evaluations, and run the look-alike substitution experiment.

The look-alike experiment substitutes two posets with identical order
series into the same slot of the (non-series-parallel) zigzag and checks
whether the composite series agree; agreement is evidence that the operadic
action factors through series coordinates beyond the series-parallel case.
"""

from posetoperad.catalog import is_series_parallel, iso_classes
from posetoperad.poset import chain, construct_poset, lex_sum
from posetoperad.series import (basis_series, operad_eval_series, series_of,
                                zigzag_poset)


def main():
    print("== 4-element classes evaluated on (Z_1, Z_1, Z_1, Z_1) ==")
    for P in iso_classes(4):
        sp = "series-parallel" if is_series_parallel(P) else "NOT series-parallel"
        print(f"{P.relation_string():28s} {series_of(P).render():34s} [{sp}]")

    N = zigzag_poset()
    z1 = basis_series(1)
    print("\n== zigzag one-slot evaluations ==")
    for k in range(1, 5):
        for slot in range(4):
            args = [z1] * 4
            args[slot] = basis_series(k)
            got = operad_eval_series(N, args)
            print(f"slot {slot + 1}, chain {k}: {got.render()}")

    print("\n== look-alike substitution experiment ==")
    D1 = construct_poset("wxyz", [("w", "x"), ("w", "y"), ("w", "z")])
    D2 = construct_poset("xywz", [("x", "y"), ("w", "z")])
    assert series_of(D1) == series_of(D2)
    print(f"both arguments have series {series_of(D1).render()}")
    for slot in range(4):
        outs = []
        for D in (D1, D2):
            inner = [chain(1)] * 4
            inner[slot] = D
            outs.append(series_of(lex_sum(N, inner)))
        verdict = "agree" if outs[0] == outs[1] else "DIFFER"
        print(f"slot {slot + 1}: {outs[0].render()}  [{verdict}]")


if __name__ == "__main__":
    main()
