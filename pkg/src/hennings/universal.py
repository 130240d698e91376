"""Universal U_zeta-invariant of bottom tangles.

Every crossing carries a sum over R-matrix pairs (R1, R2), or (S(R1), R2) for
a negative crossing, one factor on each strand; local extrema carry powers of
K^2.  The labels on a component are multiplied in the order met when walking
against the orientation.

The evaluation keeps a sparse accumulator over (per-slot PBW monomial,
R-term chosen at each open crossing).  Contiguous runs of a component whose
crossings are all internal (kinks, for instance) are first collapsed into a
single algebra element.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Optional, Sequence

from .algebra import AlgElem, Mono, QuantumGroup, TensorElem, get_algebra, _acc
from .braiding import r_matrix_factors
from .cyclotomic import CycScalar
from .tangle import EXTREMA, TangleDiagram, Token

DEFAULT_BUDGET = 10**7
_DONE = None

Functional = Optional[Callable[[Mono], CycScalar]]


class BudgetExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class LabelConvention:
    """Where the first R-factor goes and which K^2-power sits at each extremum.

    ``extrema`` lists exponents e for maxLR, maxRL, minLR, minRL; the label
    is K^{2e}.
    """

    over_first: bool
    extrema: tuple[int, int, int, int]

    def extremum_power(self, kind: str) -> int:
        return self.extrema[EXTREMA.index(kind)]

    def describe(self) -> dict:
        return {
            "first_factor_on": "over" if self.over_first else "under",
            "extrema": {k: f"K^{2 * e}" for k, e in zip(EXTREMA, self.extrema)},
        }

    def key(self) -> str:
        return ("O" if self.over_first else "U") + "".join(f"{e:+d}" for e in self.extrema)


# Fixed by calibration (see calibrate.py); re-derived in the test suite.
STANDARD_CONVENTION = LabelConvention(over_first=True, extrema=(1, 0, -1, 0))


@lru_cache(maxsize=None)
def _crossing_labels(ell: int) -> tuple:
    """Per R-pair: (R1, S(R1), R2)."""
    return tuple((r1, r1.antipode(), r2) for r1, r2 in r_matrix_factors(ell))


def crossing_label(ell: int, conv: LabelConvention, tok: Token, r: int) -> AlgElem:
    r1, sr1, r2 = _crossing_labels(ell)[r]
    first = r1 if tok.sign > 0 else sr1
    on_over = conv.over_first
    if (tok.kind == "O") == on_over:
        return first
    return r2


# -- diagram preprocessing ---------------------------------------------------


@dataclass(frozen=True)
class _Item:
    kind: str  # "x" crossing site, "e" extremum, "b" block
    token: Optional[Token] = None
    block: tuple[Token, ...] = ()


def _compress(comp: Sequence[Token], cross: dict) -> list[_Item]:
    """Collapse minimal closed runs of self-crossings into blocks."""
    items: list[_Item] = []
    n = len(comp)
    i = 0
    pos_of: dict[str, list[int]] = {}
    for p, t in enumerate(comp):
        if t.is_crossing:
            pos_of.setdefault(t.cid, []).append(p)
    while i < n:
        t = comp[i]
        if t.is_crossing and len(pos_of[t.cid]) == 2 and pos_of[t.cid][0] == i:
            j = pos_of[t.cid][1]
            lo, hi = i, j
            ok = True
            k = lo
            while k <= hi:
                tk = comp[k]
                if tk.is_crossing:
                    ps = pos_of[tk.cid]
                    if len(ps) != 2:
                        ok = False
                        break
                    if ps[0] < lo:
                        ok = False
                        break
                    hi = max(hi, ps[1])
                k += 1
            if ok:
                items.append(_Item("b", block=tuple(comp[lo : hi + 1])))
                i = hi + 1
                continue
        items.append(_Item("x" if t.is_crossing else "e", token=t))
        i += 1
    return items


def _schedule(items: list[list[_Item]], max_cut_combos: int = 4096):
    """Pick start cuts and a greedy site order keeping few crossings open."""
    lens = [len(c) for c in items]
    where: dict[str, list[tuple[int, int]]] = {}
    for c, comp in enumerate(items):
        for p, it in enumerate(comp):
            if it.kind == "x":
                where.setdefault(it.token.cid, []).append((c, p))

    def simulate(cuts):
        lo = list(cuts)
        hi = [s - 1 for s in cuts]
        opened: set[str] = set()
        steps = []
        maxopen = 0
        cost = 0
        while True:
            cands = []
            for c in range(len(items)):
                if hi[c] + 1 < lens[c]:
                    cands.append((c, hi[c] + 1, "L"))
                if lo[c] - 1 >= 0 and (lo[c] - 1 != hi[c] + 1):
                    cands.append((c, lo[c] - 1, "R"))
            if not cands:
                break
            frontier = {(c, p): side for c, p, side in cands}
            best = None
            for c, p, side in cands:
                it = items[c][p]
                if it.kind != "x":
                    pri = (0, 0)
                    partner = None
                else:
                    cid = it.token.cid
                    (a, b) = where[cid]
                    partner = b if (c, p) == a else a
                    if cid in opened:
                        pri = (1, 0)
                    elif partner in frontier and partner != (c, p):
                        pri = (2, 0)
                    else:
                        pc, pp = partner
                        dist = min(abs(pp - (hi[pc] + 1)), abs((lo[pc] - 1) - pp))
                        pri = (3, dist)
                if best is None or pri < best[0]:
                    best = (pri, c, p, side, partner)
            pri, c, p, side, partner = best
            it = items[c][p]
            if side == "L":
                hi[c] = p
            else:
                lo[c] = p
            if it.kind == "x" and pri[0] == 2:
                pc, pp = partner
                pside = frontier[partner]
                if pside == "L":
                    hi[pc] = pp
                else:
                    lo[pc] = pp
                steps.append(("pair", (c, p, side), (pc, pp, pside)))
            elif it.kind == "x" and pri[0] == 1:
                opened.discard(it.token.cid)
                steps.append(("close", (c, p, side)))
            elif it.kind == "x":
                opened.add(it.token.cid)
                steps.append(("open", (c, p, side)))
            else:
                steps.append(("fixed", (c, p, side)))
            maxopen = max(maxopen, len(opened))
            cost += 1 << (6 * len(opened))
        return (maxopen, cost), steps

    ranges = [range(n + 1) if n else range(1) for n in lens]
    total = 1
    for r in ranges:
        total *= len(r)
    if total <= max_cut_combos:
        combos = itertools.product(*ranges)
    else:
        combos = [tuple(0 for _ in lens)] + [
            tuple((k * (n + 1)) // 7 for n in lens) for k in range(1, 7)
        ]
    best = None
    for cuts in combos:
        score, steps = simulate(cuts)
        if best is None or score < best[0]:
            best = (score, steps)
    return best[1]


# -- evaluation --------------------------------------------------------------


class _Evaluator:
    def __init__(self, ell: int, conv: LabelConvention, budget: int):
        self.U: QuantumGroup = get_algebra(ell)
        self.ell = ell
        self.conv = conv
        self.budget = budget
        self.nr = len(r_matrix_factors(ell))
        self._prod: dict = {}

    def fixed_element(self, it: _Item) -> AlgElem:
        if it.kind == "e":
            return self.U.K_power(2 * self.conv.extremum_power(it.token.kind))
        return block_element(self.ell, self.conv, it.block)

    def times(self, key, elem: AlgElem, mono: Mono, side: str):
        """elem * mono (side L) or mono * elem (side R), cached."""
        ck = (key, mono, side)
        hit = self._prod.get(ck)
        if hit is not None:
            return hit
        out: dict = {}
        mm = self.U.mono_mul
        for k, c in elem.terms.items():
            prod = mm(k, mono) if side == "L" else mm(mono, k)
            for kk, s in prod:
                _acc(out, kk, c * s)
        res = tuple(out.items())
        self._prod[ck] = res
        return res

    def run(self, d: TangleDiagram, functionals: Sequence[Functional] | None = None, compress=True):
        cross = d.crossings()
        if compress:
            items = [_compress(comp, cross) for comp in d.components]
        else:
            items = [[_Item("x" if t.is_crossing else "e", token=t) for t in comp] for comp in d.components]
        return self.run_items(items, functionals)

    def run_items(self, items: list[list[_Item]], functionals: Sequence[Functional] | None):
        steps = _schedule(items)
        m = len(items)
        remaining = [len(c) for c in items]
        one = self.U.field.one
        state: dict = {(tuple((0, 0, 0) for _ in range(m)), ()): one}

        def finish(state, c):
            f = functionals[c] if functionals else None
            if f is None:
                return state
            out: dict = {}
            cache: dict = {}
            for (slots, pend), coef in state.items():
                mono = slots[c]
                v = cache.get(mono)
                if v is None:
                    v = cache[mono] = f(mono)
                if not v:
                    continue
                _acc(out, (slots[:c] + (_DONE,) + slots[c + 1 :], pend), coef * v)
            return out

        for c in range(m):
            if remaining[c] == 0:
                state = finish(state, c)

        label = lambda tok, r: crossing_label(self.ell, self.conv, tok, r)
        for step in steps:
            kind = step[0]
            new: dict = {}
            if kind == "pair":
                (c1, p1, s1), (c2, p2, s2) = step[1], step[2]
                t1 = items[c1][p1].token
                t2 = items[c2][p2].token
                for (slots, pend), coef in state.items():
                    for r in range(self.nr):
                        e1, e2 = label(t1, r), label(t2, r)
                        for k1, a in self.times(("x", t1.kind, t1.sign, r), e1, slots[c1], s1):
                            sl = slots[:c1] + (k1,) + slots[c1 + 1 :]
                            ca = coef * a
                            for k2, b in self.times(("x", t2.kind, t2.sign, r), e2, sl[c2], s2):
                                _acc(new, (sl[:c2] + (k2,) + sl[c2 + 1 :], pend), ca * b)
                done = [c1, c2]
            else:
                c, p, side = step[1]
                it = items[c][p]
                if kind == "fixed":
                    elem = self.fixed_element(it)
                    key = ("f", it)
                    for (slots, pend), coef in state.items():
                        for k, s in self.times(key, elem, slots[c], side):
                            _acc(new, (slots[:c] + (k,) + slots[c + 1 :], pend), coef * s)
                else:
                    tok = it.token
                    for (slots, pend), coef in state.items():
                        if kind == "open":
                            branches = [(r, pend + ((tok.cid, r),)) for r in range(self.nr)]
                        else:
                            idx = next(i for i, (cid, _) in enumerate(pend) if cid == tok.cid)
                            branches = [(pend[idx][1], pend[:idx] + pend[idx + 1 :])]
                        for r, np in branches:
                            key = ("x", tok.kind, tok.sign, r)
                            for k, s in self.times(key, label(tok, r), slots[c], side):
                                _acc(new, (slots[:c] + (k,) + slots[c + 1 :], np), coef * s)
                done = [c]
            state = new
            if len(state) > self.budget:
                raise BudgetExceeded(f"accumulator exceeded {self.budget} terms")
            for c in done:
                remaining[c] -= 1
                if remaining[c] == 0:
                    state = finish(state, c)
        return _collect(self.U, m, state, functionals)


def _collect(U: QuantumGroup, m: int, state: dict, functionals):
    """Turn the final accumulator into a TensorElem, AlgElem or scalar."""
    ids = [c for c in range(m) if not functionals or functionals[c] is None]
    out: dict = {}
    for (slots, pend), coef in state.items():
        assert not pend
        _acc(out, tuple(slots[c] for c in ids), coef)
    if not functionals:
        return TensorElem(U, m, out)
    if not ids:
        return out.get((), U.field.zero)
    if len(ids) == 1:
        return AlgElem(U, {k[0]: v for k, v in out.items()})
    return TensorElem(U, len(ids), out)


@lru_cache(maxsize=4096)
def block_element(ell: int, conv: LabelConvention, block: tuple[Token, ...]) -> AlgElem:
    """Product of the labels of a closed run of tokens on one component."""
    ev = _Evaluator(ell, conv, DEFAULT_BUDGET)
    items = [[_Item("x" if t.is_crossing else "e", token=t) for t in block]]
    t = ev.run_items(items, None)
    return AlgElem(ev.U, {k[0]: v for k, v in t.terms.items()})


def evaluate(
    d: TangleDiagram,
    ell: int,
    conv: LabelConvention = STANDARD_CONVENTION,
    budget: int = DEFAULT_BUDGET,
    compress: bool = True,
) -> TensorElem:
    """Gamma(d) as an element of U^{(x)m}."""
    d.validate()
    return _Evaluator(ell, conv, budget).run(d, None, compress)


def evaluate_contracted(
    d: TangleDiagram,
    ell: int,
    functionals: Sequence[Functional],
    conv: LabelConvention = STANDARD_CONVENTION,
    budget: int = DEFAULT_BUDGET,
):
    """Same as partial_evaluate(evaluate(d), functionals), contracting slots as they finish."""
    d.validate()
    if len(functionals) != d.ncomponents:
        raise ValueError("one functional (or None) per component expected")
    if sum(f is None for f in functionals) > 1:
        raise ValueError("at most one identity slot")
    return _Evaluator(ell, conv, budget).run(d, functionals)


def partial_evaluate(t: TensorElem, functionals: Sequence[Functional]):
    """Contract every slot but (at most) one with the given functionals."""
    return t.contract(list(functionals))
