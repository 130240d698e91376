"""The center of the even subalgebra, the Casimir and its spectral pieces.

Polynomials are coefficient lists over the cyclotomic field, lowest degree
first.  The center is computed as the kernel of z -> ([z,E], [z,F]) on the
degree-zero part of U^ev (commuting with K^2 already forces degree zero).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from math import comb

from .algebra import AlgElem, Mono, QuantumGroup, get_algebra
from .braiding import RibbonPair, quantum_trace, ribbon_pair
from .cyclotomic import CycField, CycScalar
from .linalg import nullspace, solve
from .report import CheckReport


class CenterError(ArithmeticError):
    pass


# -- polynomials -------------------------------------------------------------


def poly_mul(a: list[CycScalar], b: list[CycScalar], F: CycField) -> list[CycScalar]:
    out = [F.zero] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] = out[i + j] + x * y
    return out


def poly_eval(p: list[CycScalar], v: CycScalar, F: CycField) -> CycScalar:
    acc = F.zero
    for c in reversed(p):
        acc = acc * v + c
    return acc


def poly_deriv(p: list[CycScalar]) -> list[CycScalar]:
    return [c * k for k, c in enumerate(p)][1:]


def poly_of_element(p: list[CycScalar], x: AlgElem) -> AlgElem:
    U = x.alg
    acc = U.zero()
    for c in reversed(p):
        acc = acc * x + U.scalar(c)
    return acc


# -- center ------------------------------------------------------------------


def _central_keys(U: QuantumGroup) -> list[Mono]:
    return [(i, j, i) for i in range(U.ell) for j in range(0, U.korder, 2)]


def _vector(a: AlgElem, keys: list[Mono]) -> list[CycScalar]:
    z = a.alg.field.zero
    return [a.terms.get(k, z) for k in keys]


def casimir_eigenvalue(F: CycField, m: int) -> CycScalar:
    """c_m = (t^m + t^-m)/(t - t^-1)^2, the Casimir scalar on V_m."""
    d = F.t_power(1) - F.t_power(-1)
    return (F.t_power(m) + F.t_power(-m)) / (d * d)


@dataclass(frozen=True)
class CenterBasis:
    ell: int
    dim: int
    basis: list[AlgElem]
    casimir: AlgElem
    minpoly: list[CycScalar]
    eigenvalues: list[CycScalar]
    idempotents: list[AlgElem]
    nilpotents: dict[int, AlgElem] = field(default_factory=dict)

    @property
    def multiplicities(self) -> list[int]:
        return [1 if m in (0, self.ell) else 2 for m in range(self.ell + 1)]


@lru_cache(maxsize=None)
def compute_center(ell: int) -> CenterBasis:
    U = get_algebra(ell)
    F = U.field
    keys = _central_keys(U)
    # columns: commutators of each candidate basis monomial with E and F
    cols = []
    for k in keys:
        b = AlgElem(U, {k: F.one})
        cols.append(((b * U.E - U.E * b).terms, (b * U.F - U.F * b).terms))
    rowkeys = sorted({("E", r) for c in cols for r in c[0]} | {("F", r) for c in cols for r in c[1]})
    rows = [[c[0 if tag == "E" else 1].get(r, F.zero) for c in cols] for tag, r in rowkeys]
    kernel = nullspace(rows, len(keys), F)
    basis = [AlgElem(U, dict(zip(keys, v))) for v in kernel]
    if len(basis) != 3 * ell - 1:
        raise CenterError(f"center has dimension {len(basis)}, expected {3 * ell - 1}")

    C = U.casimir()
    minpoly = _minimal_polynomial(C, keys)
    eig = [casimir_eigenvalue(F, m) for m in range(ell + 1)]
    mult = [1 if m in (0, ell) else 2 for m in range(ell + 1)]
    expected = [F.one]
    for c, k in zip(eig, mult):
        for _ in range(k):
            expected = poly_mul(expected, [-c, F.one], F)
    if minpoly != expected:
        raise CenterError(f"Casimir minimal polynomial has degree {len(minpoly) - 1}, expected {2 * ell}")

    idem = []
    for m in range(ell + 1):
        # Q = product over the other eigenvalues, then invert Q mod (X - c_m)^k
        Q = [F.one]
        for n, (c, k) in enumerate(zip(eig, mult)):
            if n != m:
                for _ in range(k):
                    Q = poly_mul(Q, [-c, F.one], F)
        q0 = poly_eval(Q, eig[m], F)
        s = [q0.inverse()]
        if mult[m] == 2:
            q1 = poly_eval(poly_deriv(Q), eig[m], F)
            b = -q1 / (q0 * q0)
            s = [s[0] - b * eig[m], b]
        idem.append(poly_of_element(poly_mul(Q, s, F), C))
    nil = {m: (C - U.scalar(eig[m])) * idem[m] for m in range(1, ell)}
    return CenterBasis(ell, len(basis), basis, C, minpoly, eig, idem, nil)


def _minimal_polynomial(C: AlgElem, keys: list[Mono]) -> list[CycScalar]:
    U = C.alg
    F = U.field
    powers = [U.one()]
    while True:
        nxt = powers[-1] * C
        sol = solve([_vector(p, keys) for p in powers], _vector(nxt, keys), F)
        if sol is not None:
            return [-c for c in sol] + [F.one]
        powers.append(nxt)


def casimir_powers(ell: int, n: int) -> list[AlgElem]:
    U = get_algebra(ell)
    C = U.casimir()
    out = [U.one()]
    for _ in range(n):
        out.append(out[-1] * C)
    return out


def in_polynomial_span_of_casimir(a: AlgElem) -> bool:
    """True iff a is a linear combination of 1, C, ..., C^{2l-1}."""
    U = a.alg
    keys = sorted(set(_central_keys(U)) | set(a.terms))
    cols = [_vector(p, keys) for p in casimir_powers(U.ell, 2 * U.ell - 1)]
    return solve(cols, _vector(a, keys), U.field) is not None


def k2l_from_casimir(ell: int, p: int | None = None) -> AlgElem:
    """Right-hand side of the expansion of K^{2l} as a polynomial in C.

    The upper summation limit is floor(p/2); p defaults to l.
    """
    U = get_algebra(ell)
    F = U.field
    p = ell if p is None else p
    d = F.t_power(1) - F.t_power(-1)
    C = U.casimir()
    acc = U.zero()
    for i in range(p // 2 + 1):
        coef = F.rational((-1) ** (i - 1) * ell * comb(ell - i, i)) / (ell - i)
        acc = acc + (C ** (ell - 2 * i)) * (coef * d ** (2 * (ell - 2 * i)))
    return acc * (F.one / 2)


# -- closed forms of the ribbon coefficients ----------------------------------


def a_coefficient(F: CycField, sign: int, m: int) -> CycScalar:
    """(-1)^{m+1} t^{sign (1 - m^2)/2}."""
    return F.root_power(sign * (1 - m * m)) * (-1) ** (m + 1)


def b_coefficient(F: CycField, ell: int, sign: int, m: int) -> CycScalar:
    d = F.t_power(1) - F.t_power(-1)
    return d * F.root_power(sign * (1 - m * m)) * F.rational(m) / F.qint(m) * (sign * (-1) ** (ell - 1))


def c_coefficient(F: CycField, ell: int, sign: int, m: int) -> CycScalar:
    return -b_coefficient(F, ell, sign, m) * ell / m


def integral_of_w_plus(F: CycField, ell: int, m: int) -> CycScalar:
    """(-1)^{m-1} t^-2 [m]^3 / (2 l ([l-1]!)^2)."""
    f = F.qfact(ell - 1)
    return F.t_power(-2) * F.qint(m) ** 3 / (f * f * (2 * ell)) * (-1) ** (m - 1)


def semisimple_coefficient(center: CenterBasis, z: AlgElem, m: int) -> tuple[CycScalar, CycScalar]:
    """(alpha, beta) with e_m z = alpha e_m + beta w_m, for z in C[C]."""
    U = z.alg
    F = U.field
    e = center.idempotents[m]
    target = e * z
    cols = [e]
    if m in center.nilpotents:
        cols.append(center.nilpotents[m])
    keys = sorted(set(_central_keys(U)) | set(target.terms))
    sol = solve([_vector(c, keys) for c in cols], _vector(target, keys), F)
    if sol is None:
        raise CenterError(f"e_{m} z is not in span(e_{m}, w_{m})")
    return sol[0], (sol[1] if len(sol) > 1 else F.zero)


# -- lemma checks ----------------------------------------------------------------


def verify_center(ell: int) -> CheckReport:
    rep = CheckReport(f"center l={ell}")
    try:
        cb = compute_center(ell)
    except CenterError as exc:
        rep.add(str(exc), False)
        return rep
    U = get_algebra(ell)
    rep.add("dim = 3l-1", cb.dim == 3 * ell - 1)
    rep.add("minimal polynomial degree 2l", len(cb.minpoly) - 1 == 2 * ell)
    total = U.zero()
    for i, e in enumerate(cb.idempotents):
        total = total + e
        for j, f in enumerate(cb.idempotents):
            rep.add(f"e_{i} e_{j}", e * f == (e if i == j else U.zero()))
    rep.add("sum e_m = 1", total == U.one())
    for m, w in cb.nilpotents.items():
        rep.add(f"w_{m} nonzero", bool(w))
        rep.add(f"e_{m} w_{m} = w_{m}", cb.idempotents[m] * w == w)
        for n, v in cb.nilpotents.items():
            rep.add(f"w_{m} w_{n} = 0", w * v == U.zero())
    for x in cb.basis:
        rep.add("basis central", all(x * g == g * x for g in (U.E, U.F, U.K)))
    return rep


def verify_lemma_ri(ell: int) -> CheckReport:
    rep = CheckReport(f"integral vanishes on C[C], l={ell}")
    U = get_algebra(ell)
    for i, p in enumerate(casimir_powers(ell, 3 * ell)):
        rep.add(f"lambda(C^{i}) = 0", U.integral(p) == 0)
    cb = compute_center(ell)
    for m, e in enumerate(cb.idempotents):
        rep.add(f"lambda(e_{m}) = 0", U.integral(e) == 0)
    for m, w in cb.nilpotents.items():
        rep.add(f"lambda(w_{m}) = 0", U.integral(w) == 0)
    return rep


def verify_k2l(ell: int) -> CheckReport:
    rep = CheckReport(f"K^2l as a polynomial in C, l={ell}")
    U = get_algebra(ell)
    lhs = U.K_power(2 * ell)
    rep.add("K^2l expansion with p = l", k2l_from_casimir(ell) == lhs)
    rep.add("K^2l in C[C]", in_polynomial_span_of_casimir(lhs))
    return rep


def verify_lemma_lr(
    ell: int, xs: dict[str, AlgElem] | None = None, nmax: int = 3, pair: RibbonPair | None = None
) -> CheckReport:
    """lambda(x rho^{+-n})/lambda(rho^{+-1}) = n qt(x rho^{+-n})/qt(rho^{+-1})."""
    rep = CheckReport(f"integral vs quantum trace on C[C] rho^n, l={ell}")
    U = get_algebra(ell)
    qt = quantum_trace(ell)
    pair = pair or ribbon_pair(ell)
    if xs is None:
        cb = compute_center(ell)
        C = U.casimir()
        xs = {"1": U.one(), "C": C, "C^2": C * C}
        xs.update({f"e_{m}": e for m, e in enumerate(cb.idempotents)})
    for sign in (1, -1):
        base = pair.power(sign)
        lam1, qt1 = U.integral(base), qt.omega(base)
        if not lam1 or not qt1:
            raise ZeroDivisionError(f"vanishing normalizer for sign {sign:+d} at l={ell}")
        for n in range(1, nmax + 1):
            r = pair.power(sign * n)
            for label, x in xs.items():
                y = x * r
                rep.add(
                    f"x={label} n={n} sign={sign:+d}",
                    U.integral(y) / lam1 == qt.omega(y) * n / qt1,
                )
    return rep


def verify_ribbon_closed_forms(ell: int, pair: RibbonPair | None = None, twist: int = 0) -> CheckReport:
    """Compare rho^{+-1} with the closed-form ribbon coefficients.

    ``twist = 1`` multiplies rho by the central grouplike K^{2l} first, which
    converts between the two ribbon elements of U (pivots K^2 and K^{2l+2}).
    """
    rep = CheckReport(f"ribbon closed forms, l={ell}" + (" (rho K^2l)" if twist else ""))
    U = get_algebra(ell)
    F = U.field
    qt = quantum_trace(ell)
    pair = pair or ribbon_pair(ell)
    g = U.K_power(2 * ell * twist)
    cb = compute_center(ell)
    for sign in (1, -1):
        r = pair.power(sign) * g
        s = "+" if sign > 0 else "-"
        for m in range(ell + 1):
            e = cb.idempotents[m]
            d = e * r - e * a_coefficient(F, sign, m)
            rep.add(f"semisimple part of rho^{s}1 on e_{m}", d * d == U.zero())
        want_qt = sum((a_coefficient(F, sign, m) * F.qint(m) ** 2 for m in range(ell + 1)), F.zero)
        rep.add(f"qt_omega(rho^{s}1)", qt.omega(r) == want_qt)
        want_lam = sum(
            (c_coefficient(F, ell, sign, m) * integral_of_w_plus(F, ell, m) for m in range(1, ell)),
            F.zero,
        )
        rep.add(f"lambda(rho^{s}1)", U.integral(r) == want_lam)
    return rep


def verify_qt_on_center(ell: int) -> CheckReport:
    rep = CheckReport(f"quantum trace on the center, l={ell}")
    qt = quantum_trace(ell)
    F = get_algebra(ell).field
    cb = compute_center(ell)
    for m, e in enumerate(cb.idempotents):
        rep.add(f"qt_omega(e_{m}) = [{m}]^2", qt.omega(e) == F.qint(m) ** 2)
    for m, w in cb.nilpotents.items():
        rep.add(f"qt_omega(w_{m}) = 0", qt.omega(w) == 0)
    return rep
