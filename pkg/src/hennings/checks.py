"""Verification suites: Hopf and ribbon axioms, the center lemmas,
tangle-level properties of the universal invariant, and the corpus."""
from __future__ import annotations

from .algebra import AlgElem, TensorElem, get_algebra, is_ad_invariant
from .braiding import build_r_matrix, quantum_trace, ribbon_pair
from .calibrate import calibrate
from .center import (
    in_polynomial_span_of_casimir,
    verify_center,
    verify_k2l,
    verify_lemma_lr,
    verify_lemma_ri,
    verify_qt_on_center,
    verify_ribbon_closed_forms,
)
from .manifold import (
    integral_functional,
    omega_functional,
    twisted,
    verify_diagonal_telescoping,
    verify_theorem,
)
from .report import CheckReport
from .tangle import borromean, connected_sum, juxtapose, trefoil_framed, unknot_framed
from .universal import STANDARD_CONVENTION, evaluate


def _basis(U):
    return [AlgElem(U, {k: U.field.one}) for k in U.basis()]


# -- Hopf algebra ----------------------------------------------------------


def check_relations(ell: int) -> CheckReport:
    rep = CheckReport(f"defining relations, l={ell}")
    U = get_algebra(ell)
    F = U.field
    E, Fg, K, Ki = U.E, U.F, U.K, U.Kinv
    t = F.t_power(1)
    rep.add("KE = tEK", K * E == E * K * t)
    rep.add("KF = t^-1 FK", K * Fg == Fg * K * F.t_power(-1))
    rep.add("[E,F]", E * Fg - Fg * E == (U.K_power(2) - U.K_power(-2)) * (t - F.t_power(-1)).inverse())
    rep.add("E^l = 0", E**ell == U.zero())
    rep.add("F^l = 0", Fg**ell == U.zero())
    rep.add("K^4l = 1", K ** (4 * ell) == U.one())
    rep.add("K K^-1 = 1", K * Ki == U.one())
    return rep


def check_hopf_axioms(ell: int) -> CheckReport:
    """Coassociativity, counit, antipode and multiplicativity of Delta on the PBW basis."""
    rep = CheckReport(f"Hopf axioms on the PBW basis, l={ell}")
    U = get_algebra(ell)
    one = U.one()
    counit = lambda k: U.field(U.counit_mono(k))
    gens = (U.E, U.F, U.K)
    bad = {"coassociativity": 0, "counit": 0, "antipode": 0, "Delta multiplicative": 0, "S anti-multiplicative": 0}
    for a in _basis(U):
        d = a.coproduct()
        if d.coproduct_slot(0) != d.coproduct_slot(1):
            bad["coassociativity"] += 1
        if d.contract([counit, None]) != a or d.contract([None, counit]) != a:
            bad["counit"] += 1
        left = right = U.zero()
        for (p, q), c in d.terms.items():
            P, Q = AlgElem(U, {p: c}), AlgElem(U, {q: U.field.one})
            left = left + P.antipode() * Q
            right = right + P * Q.antipode()
        if left != one * a.counit() or right != one * a.counit():
            bad["antipode"] += 1
        for g in gens:
            if (g * a).coproduct() != g.coproduct() * d:
                bad["Delta multiplicative"] += 1
            if (g * a).antipode() != a.antipode() * g.antipode():
                bad["S anti-multiplicative"] += 1
    for name, n in bad.items():
        rep.add(f"{name} ({n} failures)" if n else name, n == 0)
    return rep


def check_integrals(ell: int) -> CheckReport:
    rep = CheckReport(f"integral and cointegral, l={ell}")
    U = get_algebra(ell)
    lam = integral_functional(ell)
    bad = 0
    for a in _basis(U):
        if a.coproduct().contract([None, lam]) != U.one() * U.integral(a):
            bad += 1
    rep.add("left integral law on the basis", bad == 0)
    rep.add("cointegral two-sided on generators", check_cointegral(ell))
    return rep


def check_cointegral(ell: int) -> bool:
    U = get_algebra(ell)
    L = U.cointegral()
    return bool(L) and all(L * y == L * y.counit() == y * L for y in (U.E, U.F, U.K, U.Kinv))


# -- braiding ----------------------------------------------------------------


def check_quasitriangular(ell: int) -> CheckReport:
    rep = CheckReport(f"quasi-triangular structure, l={ell}")
    U = get_algebra(ell)
    rm = build_r_matrix(ell)
    R = rm.value
    one2 = TensorElem.tensor(U.one(), U.one())
    rep.add("R R^-1 = 1", R * rm.inverse == one2 and rm.inverse * R == one2)
    R13, R23, R12 = R.embed((0, 2), 3), R.embed((1, 2), 3), R.embed((0, 1), 3)
    rep.add("(Delta x id)R = R13 R23", R.coproduct_slot(0) == R13 * R23)
    rep.add("(id x Delta)R = R13 R12", R.coproduct_slot(1) == R13 * R12)
    for name, g in (("E", U.E), ("F", U.F), ("K", U.K)):
        d = g.coproduct()
        rep.add(f"R Delta({name}) = Delta^op({name}) R", R * d == d.swap() * R)
    counit = lambda k: U.field(U.counit_mono(k))
    rep.add("(eps x id)R = 1", R.contract([counit, None]) == U.one())
    rep.add("(id x eps)R = 1", R.contract([None, counit]) == U.one())
    return rep


def check_ribbon(ell: int) -> CheckReport:
    rep = CheckReport(f"ribbon element, l={ell}")
    U = get_algebra(ell)
    pair = ribbon_pair(ell)
    R = build_r_matrix(ell).value
    for name, r in (("rho", pair.rho), ("rho^-1", pair.rho_inv)):
        rep.add(f"{name} central", all(r * g == g * r for g in (U.E, U.F, U.K)))
        rep.add(f"{name} even", r.is_even())
        rep.add(f"S({name}) = {name}", r.antipode() == r)
    rep.add("rho rho^-1 = 1", pair.rho * pair.rho_inv == U.one())
    # Delta(rho^-1) = (rho^-1 x rho^-1) R21 R
    rinv = pair.rho_inv
    rep.add("Delta(rho^-1) = rho^-1 rho^-1 R21 R", rinv.coproduct() == TensorElem.tensor(rinv, rinv) * R.swap() * R)
    return rep


def axiom_suite(ell: int) -> list[CheckReport]:
    return [
        check_relations(ell),
        check_hopf_axioms(ell),
        check_integrals(ell),
        check_quasitriangular(ell),
        check_ribbon(ell),
    ]


# -- tangles -----------------------------------------------------------------


def check_framing(ell: int, kmax: int = 3) -> CheckReport:
    rep = CheckReport(f"framing: Gamma(unknot_k) = rho^-k, l={ell}")
    U = get_algebra(ell)
    pair = ribbon_pair(ell)
    for k in range(-kmax, kmax + 1):
        g = evaluate(unknot_framed(k), ell)
        elem = AlgElem(U, {key[0]: v for key, v in g.terms.items()})
        rep.add(f"k={k:+d}", elem == pair.power(-k))
    return rep


def check_borromean(ell: int) -> CheckReport:
    """Evenness, ad-invariance and the C[C]-valued partial evaluations."""
    rep = CheckReport(f"Borromean bottom tangle, l={ell}")
    U = get_algebra(ell)
    g = evaluate(borromean(), ell)
    rep.add("even", g.is_even())
    rep.add("ad-invariant", is_ad_invariant(g))
    pair = ribbon_pair(ell)
    lam, qt = integral_functional(ell), omega_functional(ell)
    chis = {"lambda": lam, "lambda^rho": twisted(lam, pair.rho), "qt_omega": qt}
    for name, chi in chis.items():
        for slot in range(3):
            fs = [chi] * 3
            fs[slot] = None
            rep.add(f"{name}, slot {slot + 1} open: in C[C]", in_polynomial_span_of_casimir(g.contract(fs)))
    return rep


def lemma_suite(ell: int, borromean_check: bool | None = None) -> list[CheckReport]:
    """Center, integral and ribbon lemmas; tangle-level checks at small l."""
    reps = [
        verify_center(ell),
        verify_lemma_ri(ell),
        verify_k2l(ell),
        verify_qt_on_center(ell),
        verify_lemma_lr(ell),
        verify_ribbon_closed_forms(ell, twist=1),
        check_framing(ell),
    ]
    for f in (2, -3):
        reps.append(verify_diagonal_telescoping(unknot_framed(0), [f], ell))
    if borromean_check is None:
        borromean_check = ell == 2
    if borromean_check:
        reps.append(check_borromean(ell))
    return reps


def calibration_suite(ell: int) -> list[CheckReport]:
    res = calibrate(ell)
    rep = CheckReport(f"label convention calibration, l={ell}")
    rep.add(f"exactly one convention passes ({len(res.passing)})", len(res.passing) == 1)
    rep.add("it is the standard convention", res.passing == [STANDARD_CONVENTION])
    return [rep]


# -- corpus ------------------------------------------------------------------


def corpus(ell: int):
    """Built-in surgery presentations; multi-component ones only at l <= 3."""
    items = [unknot_framed(k) for k in range(-6, 7)]
    items.append(connected_sum(unknot_framed(2), unknot_framed(-3)))
    if ell == 2:
        items.append(trefoil_framed(1))
    return items


def corpus_suite(ell: int) -> tuple[list, list[CheckReport]]:
    """psi = h tau on the corpus, plus stabilization and connected-sum multiplicativity."""
    reports = [verify_theorem(d, ell) for d in corpus(ell)]
    thm = CheckReport(f"psi = h tau on the corpus, l={ell}")
    for r in reports:
        thm.add(r.name, bool(r.theorem_ok))
    stab = CheckReport(f"stabilization, l={ell}")
    for d in (unknot_framed(2), unknot_framed(-3), unknot_framed(0)):
        base = verify_theorem(d, ell)
        for s in (1, -1):
            r = verify_theorem(juxtapose(d, unknot_framed(s)), ell)
            stab.add(f"{d.name} + unknot{s:+d}", r.psi == base.psi and r.tau == base.tau and r.h == base.h)
    mult = CheckReport(f"connected sum, l={ell}")
    pairs = [(unknot_framed(2), unknot_framed(-3)), (unknot_framed(1), unknot_framed(4)), (unknot_framed(0), unknot_framed(2))]
    for a, b in pairs:
        ra, rb, rs = verify_theorem(a, ell), verify_theorem(b, ell), verify_theorem(connected_sum(a, b), ell)
        mult.add(f"{rs.name}: psi", rs.psi == ra.psi * rb.psi)
        mult.add(f"{rs.name}: tau", rs.tau == ra.tau * rb.tau)
        mult.add(f"{rs.name}: h", rs.h == ra.h * rb.h)
    return reports, [thm, stab, mult]


SUITES = {
    "axioms": axiom_suite,
    "lemmas": lemma_suite,
    "calibrate": calibration_suite,
}
