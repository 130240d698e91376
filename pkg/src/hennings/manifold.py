"""Hennings and WRT invariants of surgery presentations.

For a bottom tangle T with m components and linking matrix L,

    psi(M) = lambda^{(x)m}(Gamma(T)) / (lambda(rho^-1)^{s+} lambda(rho)^{s-})
    tau(M) = qt_w^{(x)m}(Gamma(T)) / (qt_w(rho^-1)^{s+} qt_w(rho)^{s-})

where s+/s- count the positive/negative eigenvalues of L and M is surgery
on the closure of T.
"""
from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .algebra import AlgElem, Mono, TensorElem, get_algebra
from .braiding import quantum_trace, ribbon_pair
from .center import in_polynomial_span_of_casimir
from .report import CheckReport
from .cyclotomic import CycScalar
from .tangle import TangleDiagram, linking_matrix, with_framings
from .universal import DEFAULT_BUDGET, evaluate


class NormalizerVanishes(ArithmeticError):
    """A normalizer lambda(rho^{+-1}) or qt_w(rho^{+-1}) is zero."""


# -- linking matrix data -------------------------------------------------------


def homology_order(L: list[list[int]]) -> int:
    """|det L|; 0 means the first homology is infinite."""
    n = len(L)
    if n == 0:
        return 1
    A = [[Fraction(v) for v in row] for row in L]
    det = Fraction(1)
    for c in range(n):
        p = next((r for r in range(c, n) if A[r][c]), None)
        if p is None:
            return 0
        if p != c:
            A[c], A[p] = A[p], A[c]
            det = -det
        det *= A[c][c]
        for r in range(c + 1, n):
            f = A[r][c] / A[c][c]
            if f:
                A[r] = [a - f * b for a, b in zip(A[r], A[c])]
    assert det.denominator == 1
    return abs(int(det))


def signature_counts(L: list[list[int]]) -> tuple[int, int]:
    """(sigma_+, sigma_-) by symmetric Gaussian elimination over Q.

    A zero pivot with a nonzero entry further along its row is fixed by adding
    that row/column to the pivot one (this keeps the form congruent).
    """
    A = [[Fraction(v) for v in row] for row in L]
    n = len(A)
    pos = neg = 0
    for k in range(n):
        if A[k][k] == 0:
            j = next((j for j in range(k + 1, n) if A[j][j] != 0), None)
            if j is not None:
                A[k], A[j] = A[j], A[k]
                for row in A:
                    row[k], row[j] = row[j], row[k]
            else:
                j = next((j for j in range(k + 1, n) if A[k][j] != 0), None)
                if j is None:
                    continue
                # e_k -> e_k + e_j makes the diagonal 2 A[k][j] != 0
                A[k] = [a + b for a, b in zip(A[k], A[j])]
                for row in A:
                    row[k] += row[j]
        d = A[k][k]
        pos += d > 0
        neg += d < 0
        for r in range(k + 1, n):
            f = A[r][k] / d
            if f:
                A[r] = [a - f * b for a, b in zip(A[r], A[k])]
        for r in range(k + 1, n):
            A[k][r] = Fraction(0)
            A[r][k] = Fraction(0)
    return pos, neg


# -- functionals ---------------------------------------------------------------


def integral_functional(ell: int):
    U = get_algebra(ell)
    top = (ell - 1, 2 * (ell - 1), ell - 1)
    one, zero = U.field.one, U.field.zero
    return lambda k: one if k == top else zero


def omega_functional(ell: int):
    return quantum_trace(ell).omega_mono


def twisted(fn, z: AlgElem):
    """chi^z(x) = chi(x z) on PBW monomials."""
    U = z.alg
    cache: dict = {}

    def f(k: Mono) -> CycScalar:
        v = cache.get(k)
        if v is None:
            v = U.field.zero
            for kk, c in (AlgElem(U, {k: U.field.one}) * z).terms.items():
                w = fn(kk)
                if w:
                    v = v + c * w
            cache[k] = v
        return v

    return f


@dataclass(frozen=True)
class Normalizers:
    ell: int
    lam_minus: CycScalar  # lambda(rho^-1)
    lam_plus: CycScalar  # lambda(rho)
    qt_minus: CycScalar  # qt_w(rho^-1)
    qt_plus: CycScalar  # qt_w(rho)

    def to_json(self) -> dict:
        return {
            "ell": self.ell,
            "lambda(rho^-1)": self.lam_minus.to_json(),
            "lambda(rho)": self.lam_plus.to_json(),
            "qt_omega(rho^-1)": self.qt_minus.to_json(),
            "qt_omega(rho)": self.qt_plus.to_json(),
            "lambda_nonzero": [bool(self.lam_minus), bool(self.lam_plus)],
            "qt_omega_nonzero": [bool(self.qt_minus), bool(self.qt_plus)],
        }


@lru_cache(maxsize=None)
def normalizers(ell: int) -> Normalizers:
    U = get_algebra(ell)
    pair = ribbon_pair(ell)
    qt = quantum_trace(ell)
    return Normalizers(
        ell,
        U.integral(pair.rho_inv),
        U.integral(pair.rho),
        qt.omega(pair.rho_inv),
        qt.omega(pair.rho),
    )


def normalizer_table(ells=range(2, 9)) -> list[Normalizers]:
    return [normalizers(ell) for ell in ells]


def _normalize(num: CycScalar, minus: CycScalar, plus: CycScalar, sp: int, sm: int, what: str):
    if (sp and not minus) or (sm and not plus):
        raise NormalizerVanishes(f"{what} normalizer vanishes")
    den = minus**sp * plus**sm
    return num / den


# -- invariants ----------------------------------------------------------------


def _numerators(d: TangleDiagram, ell: int, budget: int) -> tuple[CycScalar, CycScalar]:
    g = evaluate(d, ell, budget=budget)
    m = d.ncomponents
    lam = g.contract([integral_functional(ell)] * m)
    qt = g.contract([omega_functional(ell)] * m)
    return lam, qt


def hennings(d: TangleDiagram, ell: int, budget: int = DEFAULT_BUDGET) -> CycScalar:
    sp, sm = signature_counts(linking_matrix(d))
    N = normalizers(ell)
    g = evaluate(d, ell, budget=budget)
    num = g.contract([integral_functional(ell)] * d.ncomponents)
    return _normalize(num, N.lam_minus, N.lam_plus, sp, sm, "lambda")


def wrt(d: TangleDiagram, ell: int, budget: int = DEFAULT_BUDGET) -> CycScalar:
    sp, sm = signature_counts(linking_matrix(d))
    N = normalizers(ell)
    g = evaluate(d, ell, budget=budget)
    num = g.contract([omega_functional(ell)] * d.ncomponents)
    return _normalize(num, N.qt_minus, N.qt_plus, sp, sm, "qt_omega")


@dataclass
class InvariantReport:
    ell: int
    name: str
    linking_matrix: list[list[int]]
    h: int
    sigma_plus: int
    sigma_minus: int
    psi: CycScalar | None
    tau: CycScalar | None
    tau_undefined: bool
    psi_undefined: bool
    theorem_ok: bool | None
    runtime_ms: int
    notes: list[str] = field(default_factory=list)

    def to_json(self, timing: bool = False) -> dict:
        out = {
            "ell": self.ell,
            "name": self.name,
            "linking_matrix": self.linking_matrix,
            "h": self.h,
            "sigma_plus": self.sigma_plus,
            "sigma_minus": self.sigma_minus,
            "psi": None if self.psi is None else self.psi.to_json(),
            "tau": None if self.tau is None else self.tau.to_json(),
            "psi_undefined": self.psi_undefined,
            "tau_undefined": self.tau_undefined,
            "theorem_ok": self.theorem_ok,
            "notes": list(self.notes),
        }
        if timing:
            out["runtime_ms"] = self.runtime_ms
        return out


def verify_theorem(d: TangleDiagram, ell: int, budget: int = DEFAULT_BUDGET) -> InvariantReport:
    """Compute h, sigma, psi and tau and test psi = h tau exactly."""
    start = time.perf_counter()
    L = linking_matrix(d)
    h = homology_order(L)
    sp, sm = signature_counts(L)
    N = normalizers(ell)
    lam_num, qt_num = _numerators(d, ell, budget)
    notes = []
    if any(L[i][j] for i in range(len(L)) for j in range(len(L)) if i != j):
        notes.append("non-diagonal linking matrix: h taken as |det L|")
    try:
        psi = _normalize(lam_num, N.lam_minus, N.lam_plus, sp, sm, "lambda")
    except NormalizerVanishes:
        psi = None
    try:
        tau = _normalize(qt_num, N.qt_minus, N.qt_plus, sp, sm, "qt_omega")
    except NormalizerVanishes:
        tau = None
    ok = None if psi is None or tau is None else psi == tau * h
    return InvariantReport(
        ell, d.name, L, h, sp, sm, psi, tau, tau is None, psi is None, ok,
        int((time.perf_counter() - start) * 1000), notes,
    )


def is_integral(z: CycScalar) -> bool:
    """Integer coefficients in the power basis of x (sufficient for integrality)."""
    return z.has_integral_coeffs()


# -- the diagonal telescoping argument -------------------------------------------


def verify_diagonal_telescoping(
    core: TangleDiagram, framings: list[int], ell: int, budget: int = DEFAULT_BUDGET
) -> CheckReport:
    """Swap lambda for qt_omega one slot at a time on a zero-framed core.

    With f_i the framings, slot i of the psi numerator reads
    lambda^{rho^{-f_i}} / lambda(rho^{-sgn f_i}); the step replaces it with
    |f_i| qt_w^{rho^{-f_i}} / qt_w(rho^{-sgn f_i}).  Each step must leave the
    value unchanged; the partial evaluation with slot i open must lie in C[C].
    """
    rep = CheckReport(f"telescoping {core.name} {tuple(framings)} l={ell}")
    L0 = linking_matrix(core)
    m = core.ncomponents
    if any(L0[i][j] for i in range(m) for j in range(m)):
        raise ValueError("core must have zero linking matrix")
    if 0 in framings:
        raise ValueError("framings must be nonzero")
    U = get_algebra(ell)
    pair = ribbon_pair(ell)
    N = normalizers(ell)
    lam, qt = integral_functional(ell), omega_functional(ell)
    g = evaluate(core, ell, budget=budget)

    def slot_fns(f):
        z = pair.power(-f)
        if f > 0:
            return twisted(lam, z), N.lam_minus, twisted(qt, z), N.qt_minus
        return twisted(lam, z), N.lam_plus, twisted(qt, z), N.qt_plus

    data = [slot_fns(f) for f in framings]
    # chi_i: current functional and normaliser of slot i
    current = [(lf, ln) for lf, ln, _, _ in data]

    def value(fns):
        num = g.contract([f for f, _ in fns])
        den = U.field.one
        for _, n in fns:
            den = den * n
        return num / den

    start = value(current)
    for i, f in enumerate(framings):
        open_slot = [c[0] for c in current]
        open_slot[i] = None
        partial = g.contract(open_slot)
        if not isinstance(partial, AlgElem):
            partial = AlgElem(U, {(0, 0, 0): partial}) if partial else U.zero()
        rep.add(f"slot {i + 1}: partial evaluation in C[C]", in_polynomial_span_of_casimir(partial))
        before = value(current)
        _, _, qf, qn = data[i]
        scale = U.field(abs(f))
        current[i] = (lambda k, qf=qf, s=scale: s * qf(k), qn)
        after = value(current)
        rep.add(f"slot {i + 1}: lambda -> |f| qt_omega leaves value unchanged", before == after)
    # the end of the chain is h * tau, its start psi
    d = with_framings(core, framings)
    h = 1
    for f in framings:
        h *= abs(f)
    final = value(current)
    sp, sm = signature_counts(linking_matrix(d))
    lam_num, qt_num = _numerators(d, ell, budget)
    psi = _normalize(lam_num, N.lam_minus, N.lam_plus, sp, sm, "lambda")
    tau = _normalize(qt_num, N.qt_minus, N.qt_plus, sp, sm, "qt_omega")
    rep.add("start = psi", start == psi)
    rep.add("end = h * tau", final == tau * h)
    return rep
