"""Determinants, the rank-8 certificate, and rank-one criteria."""

import pytest

from weylirr.qarith import LaurentPoly, ONE, qint, vanishes_at, SpecOrder
from weylirr.rootsystem import build
from weylirr.weylmods import (
    adjoint_short_reducible_at,
    closed_form_detD,
    det_short_matrix,
    e8_certificate,
    g2_omega2_reducible_at,
    short_root_matrix,
    sl2_irreducible,
    sl2_maximal_vector_oracle,
)


class TestShortRootMatrix:
    def test_nodes_are_the_short_simples(self):
        assert short_root_matrix(build("A", 2)).nodes == (1, 2)
        assert short_root_matrix(build("B", 5)).nodes == (5,)
        assert short_root_matrix(build("C", 5)).nodes == (1, 2, 3, 4)
        assert short_root_matrix(build("F", 4)).nodes == (3, 4)
        assert short_root_matrix(build("G", 2)).nodes == (1,)
        assert short_root_matrix(build("E", 8)).size == 8

    def test_entries(self):
        m = short_root_matrix(build("A", 2))
        assert m.entries[0][0] == qint(2)
        assert m.entries[0][1] == ONE
        m = short_root_matrix(build("C", 4))
        assert m.entries[0][2] == LaurentPoly({})
        assert m.entries[1][2] == ONE


class TestDeterminants:
    def test_chain_types(self):
        for n in range(1, 9):
            assert det_short_matrix(build("A", n)) == qint(n + 1)
        for n in range(3, 9):
            assert det_short_matrix(build("C", n)) == qint(n)
        for n in range(2, 9):
            assert det_short_matrix(build("B", n)) == qint(2)
        assert det_short_matrix(build("G", 2)) == qint(2)
        assert det_short_matrix(build("F", 4)) == qint(3)

    def test_exceptional_forms(self):
        two, three = qint(2), qint(3)
        assert det_short_matrix(build("E", 6)) == two * qint(6) - three ** 2
        assert det_short_matrix(build("E", 7)) \
            == two * qint(7) - three * qint(4)
        assert det_short_matrix(build("E", 8)) \
            == two * qint(8) - three * qint(5)

    def test_e8_frozen_terms(self):
        det = det_short_matrix(build("E", 8))
        assert det == LaurentPoly(
            {8: 1, 6: 1, 2: -1, 0: -1, -2: -1, -6: 1, -8: 1})

    def test_matches_closed_form_everywhere(self):
        for kind, lo in (("A", 1), ("B", 2), ("C", 3), ("D", 4)):
            for n in range(lo, 11):
                rs = build(kind, n)
                assert det_short_matrix(rs) == closed_form_detD(rs), rs.name

    def test_vanishing_orders(self):
        a4 = build("A", 4)
        assert adjoint_short_reducible_at(a4, 5)
        assert adjoint_short_reducible_at(a4, 10)
        assert not adjoint_short_reducible_at(a4, 3)
        b5 = build("B", 5)
        assert adjoint_short_reducible_at(b5, 4)
        assert not adjoint_short_reducible_at(b5, 3)
        c6 = build("C", 6)
        assert adjoint_short_reducible_at(c6, 3)
        assert adjoint_short_reducible_at(c6, 4)
        assert adjoint_short_reducible_at(c6, 6)
        assert not adjoint_short_reducible_at(c6, 5)
        assert adjoint_short_reducible_at(build("E", 6), 3)
        assert adjoint_short_reducible_at(build("E", 7), 4)
        assert adjoint_short_reducible_at(build("F", 4), 3)
        assert adjoint_short_reducible_at(build("G", 2), 4)


class TestE8Certificate:
    def test_frozen_polynomials(self):
        cert = e8_certificate()
        assert cert.f == LaurentPoly(
            {20: 1, 18: -1, 16: -1, 12: 1, 8: 1, 4: -1, 2: -1, 0: 1})
        assert cert.detD.shift(8) == LaurentPoly(
            {16: 1, 14: 1, 10: -1, 8: -1, 6: -1, 2: 1, 0: 1})
        assert cert.factors[0] * cert.factors[1] * cert.factors[2] == cert.f
        assert cert.value_at_one == 1
        assert cert.value_at_minus_one == 1

    def test_the_never_vanishing_claim_fails_at_sixty(self):
        # q^8 det(D) is exactly the 60th cyclotomic polynomial (totient 16),
        # so the determinant vanishes at a primitive 60th root of unity
        cert = e8_certificate()
        assert cert.failing_orders == (60,)
        assert not cert.certified
        from weylirr.qarith import cyclotomic
        assert cert.detD.shift(8) == cyclotomic(60)
        assert adjoint_short_reducible_at(build("E", 8), 60)

    def test_sixty_is_the_only_low_order(self):
        rs = build("E", 8)
        hits = [l for l in range(1, 121) if adjoint_short_reducible_at(rs, l)]
        assert hits == [60]


class TestSl2:
    def test_examples(self):
        assert not sl2_irreducible(2, 4)
        assert sl2_irreducible(1, 4)
        assert sl2_irreducible(5, 3)
        assert not sl2_irreducible(3, 3)
        assert sl2_irreducible(0, 7)
        assert sl2_irreducible(123, 1)
        assert sl2_irreducible(123, 2)

    def test_twisted_orders(self):
        # effective order of zeta^d drives the vanishing modulus
        assert sl2_irreducible(2, 6, d=2)
        assert not sl2_irreducible(3, 6, d=2)
        assert sl2_irreducible(9, 6, d=3)

    def test_input_validation(self):
        with pytest.raises(ValueError):
            sl2_irreducible(-1, 3)
        with pytest.raises(ValueError):
            sl2_irreducible(2, 0)
        with pytest.raises(ValueError):
            sl2_maximal_vector_oracle(-2, 3)

    def test_oracle_agrees_on_a_block(self):
        for ell in range(1, 13):
            for lam in range(0, 40):
                assert (sl2_irreducible(lam, ell)
                        == sl2_maximal_vector_oracle(lam, ell)), (lam, ell)

    def test_oracle_agrees_under_twist(self):
        for d in (2, 3):
            for ell in range(1, 13):
                for lam in range(0, 25):
                    assert (sl2_irreducible(lam, ell, d)
                            == sl2_maximal_vector_oracle(lam, ell, d))

    def test_unbounded_order_instance(self):
        # s-values 1,1,3,2 for orders 1..4; their product minus one is 5
        for ell in (1, 2, 3, 4):
            assert sl2_irreducible(5, ell)
        assert not sl2_irreducible(5, 5)


class TestG2Scalar:
    def test_reducibility_orders(self):
        assert g2_omega2_reducible_at(3)
        assert g2_omega2_reducible_at(6)
        for ell in (1, 2, 4, 5, 7, 12):
            assert not g2_omega2_reducible_at(ell), ell

    def test_matches_the_symbolic_scalar(self):
        scalar = qint(6) ** 2 - qint(3)
        for ell in range(1, 30):
            assert (g2_omega2_reducible_at(ell)
                    == vanishes_at(scalar, SpecOrder(ell)))
