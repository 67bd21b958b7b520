"""Smoke test for the tcore_py extension module."""

from fractions import Fraction
import math

import tcore_py as tc


def main():
    lam = tc.Partition([5, 4, 4, 2, 1])
    assert lam.size() == 16 and len(lam) == 5
    assert str(lam.conjugate()) == "(5,4,3,3,1)"
    assert tc.Partition.parse("(10,3)") == tc.Partition([10, 3])

    core, quotient = tc.decompose(tc.Partition([10, 3]), 3)
    assert core == tc.Partition([1])
    assert tc.compose(core, quotient, 3) == tc.Partition([10, 3])
    assert tc.Partition([7, 3, 2]).is_divisible(3)

    counts = tc.counts(3, 100)
    assert counts["p"][100] == 190569292
    assert all(tc.lattice_core_count(3, n) == counts["c_t"][n] for n in range(40))

    pmf = tc.core_size_pmf(3, 4)
    assert sum(Fraction(w, total) for _, w, total in pmf) == 1
    assert [(k, Fraction(w, total)) for k, w, total in pmf] == [(1, Fraction(3, 5)), (4, Fraction(2, 5))]

    exact, asymptote = tc.expected_core_size(3, 100)
    assert abs(asymptote - math.sqrt(600) / math.pi) < 1e-12
    assert abs(exact / asymptote - 1) < 0.15
    assert abs(tc.gamma_cdf(3, 1.0) - (1 - math.exp(-math.pi / math.sqrt(6)))) < 1e-12

    x = [Fraction(int(a), int(b)) for a, b in tc.residue_distribution(3, 10)]
    assert sum(x) == 1 and x[0] == Fraction(17, 70)

    rows = tc.orbit(tc.Partition([7, 3, 2]), 3, 2)
    assert [(w, str(m)) for w, m, _ in rows] == [
        ("123", "(7,3,2)"),
        ("132", "(7,4,1)"),
        ("213", "(8,2,2)"),
        ("231", "(8,4)"),
        ("312", "(9,2,1)"),
        ("321", "(9,3)"),
    ]
    assert all([str(c) for c in cs] == ["(7,2)", "(4)", "(2)"] for _, _, cs in rows)

    sampler = tc.Sampler(30)
    assert sampler.total() == 5604
    batch = sampler.batch(7, 20)
    assert batch[5] == sampler.sample(7, 5) and all(p.size() == 30 for p in batch)

    passed, cases = tc.verify("all", 12, 0)
    assert passed, [c for c in cases if not c[2]]

    try:
        tc.Partition([1, 3])
    except ValueError:
        pass
    else:
        raise AssertionError("nonincreasing parts accepted")
    print("smoke test passed")


if __name__ == "__main__":
    main()
