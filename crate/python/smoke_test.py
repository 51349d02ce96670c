"""Smoke test for the siegel extension module.

Build and install first, e.g.
    pip install maturin && maturin develop -m crates/py/Cargo.toml
then run
    python python/smoke_test.py
"""

from fractions import Fraction

import siegel


def main():
    assert siegel.bernoulli(12) == Fraction(-691, 2730)
    assert siegel.zeta_neg(1) == Fraction(-1, 12)

    for route in ("product", "recursive", "gaussbonnet"):
        assert siegel.chi(2, route) == Fraction(-1, 1440), route
    assert siegel.chi(3) == Fraction(1, 362880)
    assert siegel.tau(2) == Fraction(1, 120)

    p = siegel.PolarizationType([1, 2])
    assert p.degree_ratio() == 5
    assert p.chi() == Fraction(-1, 288)
    try:
        siegel.PolarizationType([2, 3])
    except ValueError as e:
        assert "2 does not divide 3" in str(e)
    else:
        raise AssertionError("bad chain accepted")

    ring = siegel.QuotientRing(3)
    assert ring.graded_dimensions() == [1, 1, 1, 2, 1, 1, 1]
    assert all(ring.square_vanishes(k) for k in range(3))
    assert ring.ctop_identity_holds()

    det = siegel.giambelli_det(3)
    assert det.terms() == {(1, 1, 1): Fraction(8), (0, 0, 2): Fraction(-8)}
    v1 = siegel.LambdaPoly.generator(2, 1)
    v2 = siegel.LambdaPoly.generator(2, 2)
    four = siegel.LambdaPoly(2, {(0, 0): 4})
    assert siegel.ctop_sym2(2) == four * v1 * v2

    lg2 = siegel.LGIntegrator(2)
    assert lg2.integrate([1, 1]) == -1
    assert lg2.integrate([3, 0]) == -2
    assert siegel.integrate_abar(2, [1, 1]) == Fraction(1, 5760)

    left = siegel.StableGraph([0, 0, 0, 1, 3, 1, 4, 1],
                              [(0, 1), (2, 7), (7, 3), (5, 1), (0, 4), (0, 6), (1, 2), (2, 0)])
    assert left.in_z() and left.total_genus() == 11
    assert left.extract_partition() == [1, 2, 3, 4]
    assert not siegel.StableGraph([1], [(0, 0)]).in_z()
    assert siegel.xi_domain_dimension(11, [1, 2, 3, 4]) == 25

    report = siegel.verify_closure_lemma(5)
    assert report["violations"] == []
    assert report["refining_root_type"] == "ROOT_ZERO"

    ok, text = siegel.verify("recursion", 8)
    assert ok, text
    assert siegel.table(3, "csv").splitlines()[-1].startswith("3,1/362880,")
    print("smoke test passed")


if __name__ == "__main__":
    main()
