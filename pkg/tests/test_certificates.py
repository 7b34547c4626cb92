"""The finite-group extension witnesses must verify from scratch, and any
tampering must be caught."""

import dataclasses

import pytest

from equisym import permgroups as pg
from equisym.certificates import (
    CertificateError,
    WITNESSES,
    euler_phi,
    is_cyclic_only_order,
    verified_witnesses,
    verify_witness,
)


def test_all_witnesses_verify():
    for w in WITNESSES:
        ver = verify_witness(w)
        assert ver.witness is w


def test_witness_restriction_classes():
    by_name = {v.witness.name: v for v in verified_witnesses(3) + verified_witnesses(2)}
    assert by_name["genus3_order3_torus_into_order2_torus"].lower_class == (1, 2)
    assert by_name["genus3_order7_klein_into_order3_torus"].lower_class == (1, 2, 4)
    assert by_name["genus3_free_involution_into_hyperelliptic"].target_class == (1,) * 8
    assert by_name["genus2_order3_into_order2_extension"].lower_class == (1, 1, 2, 2)


def test_tampered_vector_fails():
    w = WITNESSES[0]
    bad = dataclasses.replace(w, vector=w.vector[:-1] + (w.vector[0],))
    with pytest.raises(CertificateError):
        verify_witness(bad)


def test_tampered_target_fails():
    w = WITNESSES[0]
    bad = dataclasses.replace(w, target_sig="0;2,2,2,2,2,2,2,2")
    with pytest.raises(CertificateError):
        verify_witness(bad)


def test_tampered_index_fails():
    w = WITNESSES[0]
    bad = dataclasses.replace(w, index=3)
    with pytest.raises(CertificateError):
        verify_witness(bad)


class TestPermMachinery:
    def test_basic_ops(self):
        s = (1, 0, 2)
        r = (1, 2, 0)
        assert pg.order(s) == 2
        assert pg.order(r) == 3
        assert pg.compose(s, s) == pg.identity(3)
        assert len(pg.closure([s, r])) == 6
        assert pg.inverse(r) == (2, 0, 1)
        assert pg.power(r, 2) == (2, 0, 1)
        assert pg.power(r, -1) == pg.inverse(r)

    def test_discrete_log(self):
        r = (1, 2, 0)
        assert pg.discrete_log(pg.identity(3), r) == 0
        assert pg.discrete_log((2, 0, 1), r) == 2
        with pytest.raises(ValueError):
            pg.discrete_log((1, 0, 2), r)

    def test_frobenius_group(self):
        s = tuple((x + 1) % 7 for x in range(7))
        t = tuple((2 * x) % 7 for x in range(7))
        g21 = pg.closure([s, t])
        assert len(g21) == 21
        assert pg.conjugate(t, s) == pg.power(s, 2)


class TestNumberFacts:
    def test_euler_phi(self):
        assert [euler_phi(n) for n in (1, 2, 6, 15, 30, 77)] == [1, 1, 2, 8, 8, 60]

    def test_cyclic_only_orders(self):
        assert is_cyclic_only_order(15)
        assert is_cyclic_only_order(35)
        assert not is_cyclic_only_order(6)
        assert not is_cyclic_only_order(21)  # the Frobenius group exists
        assert not is_cyclic_only_order(30)
