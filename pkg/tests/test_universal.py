import pytest

from hennings.algebra import AlgElem, TensorElem, get_algebra, is_ad_invariant
from hennings.braiding import build_r_matrix, ribbon_pair
from hennings.checks import check_borromean, check_framing
from hennings.manifold import integral_functional
from hennings.tangle import borromean, curl, from_morse, juxtapose, trefoil_framed, trivial, unknot_framed
from hennings.universal import BudgetExceeded, evaluate, evaluate_contracted, partial_evaluate


def one_slot(t: TensorElem) -> AlgElem:
    return AlgElem(t.alg, {k[0]: v for k, v in t.terms.items()})


def test_trivial_is_one():
    U = get_algebra(3)
    assert one_slot(evaluate(trivial(1), 3)) == U.one()
    assert evaluate(trivial(2), 3) == TensorElem.tensor(U.one(), U.one())


def test_positive_curl_is_rho_inverse():
    for ell in (2, 3):
        assert one_slot(evaluate(curl(1), ell)) == ribbon_pair(ell).rho_inv
        assert one_slot(evaluate(curl(-1), ell)) == ribbon_pair(ell).rho


@pytest.mark.parametrize("ell", [2, 3, 4, 5])
def test_framing_additivity(ell):
    rep = check_framing(ell)
    assert rep.ok, rep.failures()


def test_clasp_is_monodromy():
    # clasp with both crossings negative: Gamma = (id (x) S)(R21 R)
    U = get_algebra(2)
    R = build_r_matrix(2).value
    clasp = from_morse([("cap", 0), ("cap", 1), ("x", 2, "L"), ("x", 1, "R")])
    assert evaluate(clasp, 2) == (R.swap() * R).map_slot(1, U.antipode_mono)


def test_clasps_are_invariant():
    for ev in (
        [("cap", 0), ("cap", 1), ("x", 2, "R"), ("x", 1, "L")],
        [("cap", 0), ("cap", 1), ("x", 2, "L"), ("x", 1, "R")],
    ):
        g = evaluate(from_morse(ev), 2)
        assert g.is_even()
        assert is_ad_invariant(g)
        assert not is_ad_invariant(g, side="left")


def test_borromean_l2():
    rep = check_borromean(2)
    assert rep.ok, rep.failures()


def test_disjoint_union_multiplicative():
    a, b = unknot_framed(2), trefoil_framed(1)
    ga, gb = evaluate(a, 2), evaluate(b, 2)
    g = evaluate(juxtapose(a, b), 2)
    assert g == TensorElem.tensor(one_slot(ga), one_slot(gb))


def test_partial_evaluate():
    U = get_algebra(2)
    x, y = U.E + U.K, U.F * U.K + U.one() * 3
    eps = lambda k: U.field(U.counit_mono(k))
    assert partial_evaluate(TensorElem.tensor(x, y), [None, eps]) == x * y.counit()
    t = TensorElem.tensor(x)
    assert partial_evaluate(t, [None]) == x


def test_contracted_matches_full():
    d = juxtapose(borromean(), unknot_framed(1))
    lam = integral_functional(2)
    full = evaluate(d, 2)
    for fs in ([lam, lam, lam, lam], [None, lam, lam, lam], [lam, None, lam, lam]):
        assert evaluate_contracted(d, 2, fs) == partial_evaluate(full, fs)


def test_budget():
    with pytest.raises(BudgetExceeded):
        evaluate(borromean(), 2, budget=50)
