"""R-matrix, irreducible representations and quantum traces."""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .algebra import AlgElem, Mono, QuantumGroup, TensorElem, get_algebra
from .cyclotomic import CycScalar


def r_coefficient(U: QuantumGroup, n: int) -> CycScalar:
    """(t - t^-1)^n / [n]! * t^{n(n-1)/2}."""
    F = U.field
    return (F.t_power(1) - F.t_power(-1)) ** n / F.qfact(n) * F.t_power(n * (n - 1) // 2)


@lru_cache(maxsize=None)
def r_matrix_factors(ell: int) -> tuple[tuple[AlgElem, AlgElem], ...]:
    """R as a short list of pairs (R1, R2) with R = sum R1 (x) R2.

    The diagonal part D = (1/4l) sum_{a,b} x^{-ab} K^a (x) K^b is grouped by
    the second factor, D = sum_b P_b (x) K^b, so that

        R = sum_{b, n} c_n P_b E^n (x) K^b F^n,

    which has 4l * l pairs instead of 16 l^3 monomial terms.
    """
    U = get_algebra(ell)
    pairs = []
    for n in range(ell):
        c = r_coefficient(U, n)
        En = U.monomial(m=n)
        Fn = U.monomial(i=n)
        for b in range(U.korder):
            pairs.append(((U.idempotent_K(b) * En) * c, U.K_power(b) * Fn))
    return tuple(pairs)


def diagonal_part(U: QuantumGroup) -> TensorElem:
    F = U.field
    w = F.rational(1) / U.korder
    terms = {}
    for a in range(U.korder):
        for b in range(U.korder):
            terms[((0, a, 0), (0, b, 0))] = F.root_power(-a * b) * w
    return TensorElem(U, 2, terms)


@dataclass(frozen=True)
class RMatrix:
    value: TensorElem
    inverse: TensorElem


@lru_cache(maxsize=None)
def build_r_matrix(ell: int) -> RMatrix:
    U = get_algebra(ell)
    value = TensorElem(U, 2, {})
    for r1, r2 in r_matrix_factors(ell):
        value = value + TensorElem.tensor(r1, r2)
    inverse = value.map_slot(0, U.antipode_mono)
    one = TensorElem.tensor(U.one(), U.one())
    if value * inverse != one:
        raise ArithmeticError("(S (x) id)(R) is not inverse to R")
    return RMatrix(value, inverse)


# -- representations -------------------------------------------------------


@dataclass(frozen=True)
class Rep:
    """Irreducible n-dimensional module with basis v_0..v_{n-1}.

    K v_j = x^{n-1-2j} v_j,  F v_j = v_{j+1},  E v_j = [j][n-j] v_{j-1}.
    """

    alg: QuantumGroup
    dim: int
    matE: tuple
    matF: tuple
    matK: tuple

    def k_weight(self, j: int) -> int:
        """Exponent of x in the K-eigenvalue of v_j."""
        return self.dim - 1 - 2 * j

    def e_coeff(self, j: int) -> CycScalar:
        F = self.alg.field
        return F.qint(j) * F.qint(self.dim - j)

    def act(self, a: AlgElem) -> list[list[CycScalar]]:
        """Matrix of a (columns are images of basis vectors)."""
        n = self.dim
        F = self.alg.field
        M = [[F.zero] * n for _ in range(n)]
        for (i, j, m), c in a.terms.items():
            for k in range(n):
                src = k - m
                dst = src + i
                if src < 0 or dst >= n:
                    continue
                v = c
                for s in range(m):
                    v = v * self.e_coeff(k - s)
                v = v * F.root_power(j * self.k_weight(src))
                M[dst][k] = M[dst][k] + v
        return M


@lru_cache(maxsize=None)
def irrep(ell: int, n: int) -> Rep:
    if not 1 <= n <= ell - 1:
        raise ValueError(f"irreducible dimension must lie in [1, {ell - 1}], got {n}")
    U = get_algebra(ell)
    F = U.field
    z = F.zero
    matE = [[z] * n for _ in range(n)]
    matF = [[z] * n for _ in range(n)]
    matK = [[z] * n for _ in range(n)]
    for j in range(n):
        matK[j][j] = F.root_power(n - 1 - 2 * j)
        if j + 1 < n:
            matF[j + 1][j] = F.one
        if j >= 1:
            matE[j - 1][j] = F.qint(j) * F.qint(n - j)
    freeze = lambda M: tuple(tuple(r) for r in M)
    return Rep(U, n, freeze(matE), freeze(matF), freeze(matK))


class QuantumTrace:
    """qt_{V_n}(a) = tr(K^2 a) and the Kirby-colour sum qt_omega."""

    def __init__(self, ell: int):
        self.alg = get_algebra(ell)
        self.ell = ell
        self._mono: dict[tuple[int, Mono], CycScalar] = {}
        self._omega: dict[Mono, CycScalar] = {}

    def mono(self, n: int, key: Mono) -> CycScalar:
        hit = self._mono.get((n, key))
        if hit is not None:
            return hit
        U = self.alg
        F = U.field
        i, j, m = key
        acc = F.zero
        if i == m and m < n:
            rep = irrep(self.ell, n)
            for k in range(m, n):
                v = F.root_power(2 * rep.k_weight(k) + j * rep.k_weight(k - m))
                for s in range(m):
                    v = v * rep.e_coeff(k - s)
                acc = acc + v
        self._mono[(n, key)] = acc
        return acc

    def omega_mono(self, key: Mono) -> CycScalar:
        hit = self._omega.get(key)
        if hit is not None:
            return hit
        F = self.alg.field
        acc = F.zero
        if key[0] == key[2]:
            for n in range(1, self.ell):
                acc = acc + F.qint(n) * self.mono(n, key)
        self._omega[key] = acc
        return acc

    def qtrace(self, n: int, a: AlgElem) -> CycScalar:
        if not 1 <= n <= self.ell - 1:
            raise ValueError("representation dimension out of range")
        acc = self.alg.field.zero
        for k, c in a.terms.items():
            v = self.mono(n, k)
            if v:
                acc = acc + c * v
        return acc

    def omega(self, a: AlgElem) -> CycScalar:
        acc = self.alg.field.zero
        for k, c in a.terms.items():
            v = self.omega_mono(k)
            if v:
                acc = acc + c * v
        return acc


@lru_cache(maxsize=None)
def quantum_trace(ell: int) -> QuantumTrace:
    return QuantumTrace(ell)


def qtrace(ell: int, n: int, a: AlgElem) -> CycScalar:
    return quantum_trace(ell).qtrace(n, a)


def qtrace_omega(a: AlgElem) -> CycScalar:
    return quantum_trace(a.alg.ell).omega(a)


# -- ribbon structure ------------------------------------------------------


@lru_cache(maxsize=None)
def drinfeld_element(ell: int) -> AlgElem:
    """u = sum S(R2) R1."""
    U = get_algebra(ell)
    u = U.zero()
    for r1, r2 in r_matrix_factors(ell):
        u = u + r2.antipode() * r1
    return u


@lru_cache(maxsize=None)
def ribbon_element(ell: int) -> tuple[AlgElem, AlgElem]:
    """(rho, rho^-1) with rho = K^-2 u, the ribbon element for the pivot K^2.

    u^-1 = sum R2 S^2(R1) gives the inverse without solving a linear system.
    """
    U = get_algebra(ell)
    uinv = U.zero()
    for r1, r2 in r_matrix_factors(ell):
        uinv = uinv + r2 * r1.antipode().antipode()
    rho = U.K_power(-2) * drinfeld_element(ell)
    rho_inv = uinv * U.K_power(2)
    if rho * rho_inv != U.one():
        raise ArithmeticError("ribbon element and its inverse do not multiply to 1")
    return rho, rho_inv


class RibbonError(ArithmeticError):
    pass


@dataclass(frozen=True)
class RibbonPair:
    rho: AlgElem
    rho_inv: AlgElem

    def power(self, n: int) -> AlgElem:
        """rho^n for any integer n."""
        return self.rho**n if n >= 0 else self.rho_inv ** (-n)


@lru_cache(maxsize=None)
def ribbon_pair(ell: int) -> RibbonPair:
    """rho^-1 and rho read off from the positive and negative curl."""
    from .tangle import curl
    from .universal import evaluate

    U = get_algebra(ell)

    def slot(d):
        return AlgElem(U, {k[0]: v for k, v in evaluate(d, ell).terms.items()})

    pair = RibbonPair(rho=slot(curl(-1)), rho_inv=slot(curl(1)))
    if pair.rho * pair.rho_inv != U.one():
        raise RibbonError("curl(+) and curl(-) are not mutually inverse")
    for name, r in (("rho", pair.rho), ("rho^-1", pair.rho_inv)):
        if not r.is_even():
            raise RibbonError(f"{name} is not in the even subalgebra")
        if r.antipode() != r:
            raise RibbonError(f"{name} is not fixed by the antipode")
        if any(r * g != g * r for g in (U.E, U.F, U.K)):
            raise RibbonError(f"{name} is not central")
    return pair
