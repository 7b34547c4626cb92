"""The two dimension-4 families over five branch points."""

import pytest

from equisym.families import OrderViolation, family_Q, family_W, _check_orders
from equisym.actions import GeneratingVector, element_order
from equisym.signatures import Signature, primes_up_to, rh_kernel_genus


def small_primes(lo, hi):
    return [p for p in primes_up_to(hi) if p > lo]


class TestFamilyQ:
    def test_q7(self):
        rep = family_Q(7)
        assert rep.family_dim == 4
        assert rep.theta.torsion_images == (1, 1, 1, 2, 2)
        assert rep.kernel_genus == 9
        assert str(rep.signature) == "7;".replace("7;", "0;7,7,7,7,7")

    def test_q11(self):
        rep = family_Q(11)
        assert rep.theta.torsion_images == (1, 1, 1, 4, 4)

    def test_metadata(self):
        rep = family_Q(7)
        locus, point = rep.branch_metadata
        assert locus.isotropy_order == 2
        assert locus.extension_signature == "0;2,7,7,14"
        assert locus.boundary.startswith("S^3")
        assert point.isotropy == "D_3"
        assert point.extension_signature == "0;2,14,21"
        assert "trefoil" in point.boundary
        assert locus.area_ratio_verified and point.area_ratio_verified

    def test_scan(self):
        # every prime 5 < q < 100: dimension four, valid images, and the
        # order-2 extension is an exact intermediate of the same cover
        for q in small_primes(5, 99):
            rep = family_Q(q)
            assert rep.family_dim == 4
            assert rep.kernel_genus == (3 * q - 3) // 2
            assert rh_kernel_genus(Signature(0, (2, q, q, 2 * q)), 2 * q) == rep.kernel_genus

    def test_rejects_non_prime(self):
        with pytest.raises(ValueError):
            family_Q(9)
        with pytest.raises(ValueError):
            family_Q(5)


class TestFamilyW:
    def test_w_7_11(self):
        rep = family_W(7, 11)
        assert rep.family_dim == 4
        assert rep.kernel_genus == 96
        # periods sorted ascending: (7,7,7,11,77); images aligned
        assert rep.signature.periods == (7, 7, 7, 11, 77)
        assert rep.theta.torsion_images == (11, 11, 11, 70, 51)
        assert element_order(51, 77) == 77
        assert sum(rep.theta.torsion_images) % 77 == 0

    def test_metadata(self):
        rep = family_W(7, 11)
        (point,) = rep.branch_metadata
        assert point.isotropy == "C_3"
        assert point.boundary == "L(3,1)"
        assert point.extension_signature == "0;7,33,231"
        assert point.area_ratio_verified

    def test_scan(self):
        # all ordered pairs of distinct primes in (5, 50]
        ps = small_primes(5, 50)
        for q in ps:
            for w in ps:
                if q == w:
                    continue
                rep = family_W(q, w)
                assert rep.family_dim == 4
                # independent closed form for the kernel genus
                assert rep.kernel_genus == (3 * q * w - 3 * w - q + 1) // 2
                orders = sorted(element_order(x, q * w) for x in rep.theta.torsion_images)
                assert orders == sorted([q, q, q, w, q * w])

    def test_rejects_bad_parameters(self):
        with pytest.raises(ValueError):
            family_W(7, 7)
        with pytest.raises(ValueError):
            family_W(5, 7)
        with pytest.raises(ValueError):
            family_W(9, 7)


class TestOrderViolation:
    def test_wrong_order_is_reported(self):
        sig = Signature(0, (7, 7, 7, 7, 7))
        with pytest.raises(OrderViolation):
            _check_orders(GeneratingVector(14, (), (2, 2, 2, 4, 4)), Signature(0, (7,) * 5))
        # sum violation: 1+1+1+1+2 = 6 is nonzero mod 7
        with pytest.raises(OrderViolation):
            _check_orders(GeneratingVector(7, (), (1, 1, 1, 1, 2)), sig)
