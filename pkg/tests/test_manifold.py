from math import gcd

import pytest

from hennings.algebra import get_algebra
from hennings.checks import corpus_suite
from hennings.manifold import (
    NormalizerVanishes,
    _normalize,
    hennings,
    homology_order,
    is_integral,
    normalizer_table,
    signature_counts,
    verify_diagonal_telescoping,
    verify_theorem,
    wrt,
)
from hennings.tangle import connected_sum, juxtapose, trefoil_framed, unknot_framed


def charpoly_signs(L):
    """Oracle for 2x2: eigenvalue signs from trace and determinant."""
    (a, b), (c, d) = L
    tr, det = a + d, a * d - b * c
    if det < 0:
        return (1, 1)
    if det == 0:
        return (int(tr > 0), int(tr < 0))
    return (2, 0) if tr > 0 else (0, 2)


def test_homology_order():
    assert homology_order([[5]]) == 5
    assert homology_order([[-4]]) == 4
    assert homology_order([[0]]) == 0
    assert homology_order([[2, 0], [0, -3]]) == 6
    assert homology_order([[0, 1], [1, 0]]) == 1
    assert homology_order([[2, 1], [1, 2]]) == 3
    assert homology_order([[1, 2], [2, 4]]) == 0


def test_signature_counts():
    assert signature_counts([[1]]) == (1, 0)
    assert signature_counts([[2, 0], [0, -3]]) == (1, 1)
    assert signature_counts([[0, 1], [1, 0]]) == (1, 1)
    assert signature_counts([[0]]) == (0, 0)
    assert signature_counts([[0, 1, 0], [1, 0, 0], [0, 0, -2]]) == (1, 2)
    for L in ([[2, 1], [1, 2]], [[1, 3], [3, 1]], [[-1, 1], [1, -1]], [[0, 2], [2, 5]], [[-3, 1], [1, -1]]):
        assert signature_counts(L) == charpoly_signs(L)


def test_s3_normalisation():
    for ell in (2, 3, 4):
        assert hennings(unknot_framed(1), ell) == 1
        assert wrt(unknot_framed(1), ell) == 1
        assert hennings(unknot_framed(-1), ell) == 1


def test_s1_x_s2():
    r = verify_theorem(unknot_framed(0), 3)
    assert r.h == 0 and r.psi == 0 and r.tau == 2 and r.theorem_ok


@pytest.mark.parametrize("ell", [2, 3, 4, 5])
def test_lens_spaces(ell):
    for k in range(-6, 7):
        r = verify_theorem(unknot_framed(k), ell)
        assert r.theorem_ok, (k, r.psi, r.tau)
        assert r.h == abs(k)


def test_vanishing_wrt_of_lens_spaces():
    # the Kirby-colour sum over n of [n]^2 x^{k(n^2-1)} cancels for these (l, k)
    for ell in (3, 4, 5):
        zero = [k for k in range(-6, 7) if k and not wrt(unknot_framed(k), ell)]
        assert zero == ([] if ell == 4 else [-6, -2, 2, 6])


def test_poincare_sphere_l2():
    r = verify_theorem(trefoil_framed(1), 2)
    assert r.h == 1 and r.theorem_ok and r.psi == r.tau


def test_poincare_sphere_l3():
    r = verify_theorem(trefoil_framed(1), 3)
    assert r.h == 1 and r.theorem_ok and r.psi == r.tau == 1


def test_undefined_normalizer_reported():
    F = get_algebra(3).field
    with pytest.raises(NormalizerVanishes):
        _normalize(F.one, F.zero, F.one, 1, 0, "lambda")
    assert _normalize(F.one, F.zero, F.one, 0, 1, "lambda") == 1


def test_normalizers_nonzero_up_to_8():
    for N in normalizer_table(range(2, 9)):
        assert N.lam_minus and N.lam_plus and N.qt_minus and N.qt_plus


@pytest.mark.parametrize("ell", [2, 3, 4, 5])
def test_telescoping_one_component(ell):
    for f in (2, -3, 1):
        rep = verify_diagonal_telescoping(unknot_framed(0), [f], ell)
        assert rep.ok, rep.failures()


def test_telescoping_rejects_bad_input():
    with pytest.raises(ValueError):
        verify_diagonal_telescoping(unknot_framed(1), [1], 2)
    with pytest.raises(ValueError):
        verify_diagonal_telescoping(unknot_framed(0), [0], 2)


@pytest.mark.parametrize("ell", [2, 3])
def test_corpus_stabilization_multiplicativity(ell):
    reports, checks = corpus_suite(ell)
    for c in checks:
        assert c.ok, (c.name, c.failures())


def test_stabilization_multi_component():
    d = trefoil_framed(1)
    base = verify_theorem(d, 2)
    for s in (1, -1):
        r = verify_theorem(juxtapose(d, unknot_framed(s)), 2)
        assert (r.psi, r.tau, r.h) == (base.psi, base.tau, base.h)


def test_connected_sum_with_trefoil():
    a, b = trefoil_framed(1), unknot_framed(3)
    ra, rb, rs = (verify_theorem(x, 2) for x in (a, b, connected_sum(a, b)))
    assert rs.psi == ra.psi * rb.psi and rs.tau == ra.tau * rb.tau and rs.h == 3


def test_integrality_spot_check():
    # integer power-basis coefficients whenever gcd(l, h) = 1 on this corpus
    for ell in (2, 3, 4, 5):
        for k in range(-6, 7):
            if k and gcd(ell, abs(k)) == 1:
                assert is_integral(wrt(unknot_framed(k), ell)), (ell, k)
    assert is_integral(wrt(trefoil_framed(1), 2))


def test_report_json_is_stable():
    r = verify_theorem(unknot_framed(3), 3)
    j = r.to_json()
    assert "runtime_ms" not in j and j["h"] == 3 and j["theorem_ok"] is True
    assert r.to_json(timing=True)["runtime_ms"] >= 0
