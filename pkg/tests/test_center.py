import pytest

from hennings.algebra import get_algebra
from hennings.braiding import RibbonPair, ribbon_pair
from hennings.center import (
    casimir_eigenvalue,
    compute_center,
    in_polynomial_span_of_casimir,
    k2l_from_casimir,
    verify_center,
    verify_k2l,
    verify_lemma_lr,
    verify_lemma_ri,
    verify_qt_on_center,
    verify_ribbon_closed_forms,
)


@pytest.mark.parametrize("ell", [2, 3, 4, 5])
def test_center_dimension_and_relations(ell):
    rep = verify_center(ell)
    assert rep.ok, rep.failures()
    cb = compute_center(ell)
    assert cb.dim == 3 * ell - 1
    assert cb.multiplicities == [1] + [2] * (ell - 1) + [1]


@pytest.mark.parametrize("ell", [2, 3, 4])
def test_generalized_eigenspaces(ell):
    U = get_algebra(ell)
    cb = compute_center(ell)
    C = U.casimir()
    for m, e in enumerate(cb.idempotents):
        c = casimir_eigenvalue(U.field, m)
        w = e * C - e * c
        assert w * w == U.zero()
        if m in (0, ell):
            assert w == U.zero()
        else:
            assert w == cb.nilpotents[m]


def test_polynomial_span_membership():
    U = get_algebra(3)
    assert in_polynomial_span_of_casimir(U.one())
    assert not in_polynomial_span_of_casimir(U.K_power(2))
    assert in_polynomial_span_of_casimir(U.K_power(6))
    assert not in_polynomial_span_of_casimir(U.E)


@pytest.mark.parametrize("ell", [2, 3, 4, 5])
def test_integral_vanishes_on_casimir_polynomials(ell):
    rep = verify_lemma_ri(ell)
    assert rep.ok, rep.failures()


@pytest.mark.parametrize("ell", [2, 3, 4, 5])
def test_k2l_expansion(ell):
    assert verify_k2l(ell).ok
    assert k2l_from_casimir(ell) == get_algebra(ell).K_power(2 * ell)


@pytest.mark.parametrize("ell", [2, 3, 4])
def test_integral_vs_trace(ell):
    rep = verify_lemma_lr(ell)
    assert rep.ok, rep.failures()
    assert len(rep.items) == 2 * 3 * (3 + ell + 1)


def test_integral_vs_trace_other_ribbon_element():
    # the identity does not depend on which of the two ribbon elements is used
    U = get_algebra(3)
    p = ribbon_pair(3)
    g = U.K_power(6)
    other = RibbonPair(p.rho * g, p.rho_inv * g)
    assert verify_lemma_lr(3, pair=other).ok


@pytest.mark.parametrize("ell", [2, 3, 4, 5])
def test_closed_forms_hold_for_twisted_rho(ell):
    rep = verify_ribbon_closed_forms(ell, twist=1)
    assert rep.ok, rep.failures()


@pytest.mark.parametrize("ell", [3, 4])
def test_closed_forms_sign_against_curl_rho(ell):
    # the curl gives the other ribbon element: off by (-1)^{m+1} on e_m
    rep = verify_ribbon_closed_forms(ell, twist=0)
    failed = rep.failures()
    assert any(f.startswith("semisimple") and f.endswith("e_2") for f in failed)
    assert "semisimple part of rho^+1 on e_1" not in failed


@pytest.mark.parametrize("ell", [2, 3, 4])
def test_qt_on_center(ell):
    assert verify_qt_on_center(ell).ok
