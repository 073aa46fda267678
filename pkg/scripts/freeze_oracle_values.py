"""Run the brute-force oracle on the three fixed systems and print the
values the tests freeze: generator sets, relation lists, membership checks.

Usage: python scripts/freeze_oracle_values.py
"""

from __future__ import annotations

import time

from gentle_si import oracle
from gentle_si.matching import is_member, make_system


def closing_system():
    # two loop-capped six-variable rows tied by four equations
    return make_system(
        [
            (("a1", "a2"), ("a4", "a5")),
            (("b1", "b2"), ("b4", "b5")),
            (("a2", "a3"), ("b2", "b3")),
            (("a3", "a4"), ("b3", "b4")),
        ],
        var_names=["a1", "a2", "a3", "a4", "a5", "b1", "b2", "b3", "b4", "b5"],
    )


def eleven_var_system():
    return make_system(
        [
            (("x1", "x2"), ()),
            (("x2", "x3"), ("x8", "x9")),
            (("x3", "x4"), ("x9", "x10")),
            (("x5", "x4"), ("x7", "x11")),
            (("x6", "x7"), ("x11",)),
        ],
        var_names=[f"x{i}" for i in range(1, 12)],
    )


def running_system():
    # the system the five-vertex two-color-path example extracts
    return make_system(
        [
            (("a2",), ("b1",)),
            (("a1",), ("b2",)),
            (("b3", "b2"), ("c2", "c1")),
        ],
        var_names=["a1", "a2", "b1", "b2", "b3", "c1", "c2"],
    )


def show(label, sys_, relation_cap):
    print(f"== {label} ==")
    print("vars:", sys_.var_names)
    t0 = time.time()
    gens = oracle.minimal_generators_bruteforce(sys_, cap=3)
    t1 = time.time()
    print(f"generators ({len(gens)}), {t1 - t0:.3f}s:")
    for g in gens:
        names = []
        for j, cnt in enumerate(g):
            if cnt:
                names.extend([sys_.var_names[j]] * cnt)
        print("   ", g, "=", "+".join(names))
    rels = oracle.toric_relations_bruteforce(gens, relation_cap, system=sys_)
    t2 = time.time()
    print(f"relations ({len(rels)}), {t2 - t1:.3f}s:")
    for lhs, rhs in rels:
        print("   ", lhs, "~", rhs)
    print()
    return gens, rels


def main():
    closing = closing_system()
    show("closing", closing, relation_cap=4)

    eleven = eleven_var_system()
    g11, _ = show("eleven-var", eleven, relation_cap=4)
    w1 = (0, 0, 1, 0, 0, 0, 0, 0, 1, 0, 0)
    w2 = (0, 0, 0, 0, 1, 1, 0, 0, 0, 0, 1)
    bad = (0, 0, 1, 0, 0, 1, 0, 0, 0, 0, 0)
    print("w1 member:", is_member(eleven, w1), "in gens:", w1 in g11)
    print("w2 member:", is_member(eleven, w2), "in gens:", w2 in g11)
    print("e3+e6 member:", is_member(eleven, bad))
    print()

    running = running_system()
    show("running", running, relation_cap=4)


if __name__ == "__main__":
    main()
