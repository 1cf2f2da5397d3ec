"""One-point Weierstrass semigroups of BM_n at the points P1 and Q1.

Both semigroups come with closed-form generator sets.  An additive
sieve expands them and recovers the gap structure; the number of gaps
must equal the curve genus.
"""

from __future__ import annotations

from bmbound import derive_params, h_p1, h_q1, p1_generators, q1_generators


def describe(name: str, sg, genus: int) -> None:
    gaps = sg.gaps()
    print(f"{name}:")
    print(f"  generators:   {list(sg.generators)}")
    print(f"  multiplicity: {sg.multiplicity}")
    print(f"  conductor:    {sg.conductor()}")
    print(f"  gaps ({sg.gap_count}):   {gaps if len(gaps) <= 20 else gaps[:20] + ['...']}")
    assert sg.gap_count == genus, "gap count must equal the curve genus"


def main() -> None:
    for q, n in ((2, 3), (2, 5), (3, 3)):
        params = derive_params(q, n)
        bound = 2 * params.genus + params.period
        print(f"== BM_{n}, q = {q} (genus {params.genus}) ==")
        print(f"closed-form generators at P1: {p1_generators(params)}")
        print(f"closed-form generators at Q1: {q1_generators(params)}")
        describe("H(P1)", h_p1(params, bound), params.genus)
        describe("H(Q1)", h_q1(params, bound), params.genus)
        print()

    # For q = 2, n = 3 the two semigroups coincide: both are <6, 8, 9>.
    params = derive_params(2, 3)
    sp = h_p1(params, 60)
    sq = h_q1(params, 60)
    print(f"q=2, n=3 membership tables agree: {sp.gaps() == sq.gaps()}")


if __name__ == "__main__":
    main()
