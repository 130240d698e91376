"""Framed bottom-tangle diagrams as per-component traversal token lists.

Each component is read along its orientation, from its start point on the
bottom line (right end) to its end point (left end).  The standard cap that
every bottom-tangle component has is implicit; tokens record the crossings
met and any additional local extrema.  Hence every component has as many
extra maxima as minima.

Crossings are assumed drawn with both strands pointing the same vertical
way (both up or both down).  With both strands pointing down, a positive
crossing has its over-strand heading down-left.

DSL::

    tangle name {
      component: [U+a, minLR, maxRL, O+a]
      component: []
    }
"""
from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field
from fractions import Fraction

EXTREMA = ("maxLR", "maxRL", "minLR", "minRL")


class TangleError(ValueError):
    pass


class TangleSyntaxError(TangleError):
    def __init__(self, msg: str, line: int, col: int):
        super().__init__(f"line {line}, column {col}: {msg}")
        self.line = line
        self.col = col


class TangleSemanticError(TangleError):
    pass


@dataclass(frozen=True)
class Token:
    kind: str  # "O", "U" or one of EXTREMA
    sign: int = 0  # +1/-1 for crossings
    cid: str = ""

    @property
    def is_crossing(self) -> bool:
        return self.kind in ("O", "U")

    def __str__(self) -> str:
        if self.is_crossing:
            return f"{self.kind}{'+' if self.sign > 0 else '-'}{self.cid}"
        return self.kind


def over(cid: str, sign: int = 1) -> Token:
    return Token("O", sign, cid)


def under(cid: str, sign: int = 1) -> Token:
    return Token("U", sign, cid)


MAX_LR, MAX_RL, MIN_LR, MIN_RL = (Token(k) for k in EXTREMA)


@dataclass(frozen=True)
class TangleDiagram:
    components: tuple[tuple[Token, ...], ...]
    name: str = "T"

    def __post_init__(self):
        object.__setattr__(self, "components", tuple(tuple(c) for c in self.components))

    @property
    def ncomponents(self) -> int:
        return len(self.components)

    def crossings(self) -> dict[str, dict]:
        """Map crossing id -> {'sign', 'over': (comp, pos), 'under': (comp, pos)}."""
        out: dict[str, dict] = {}
        for c, comp in enumerate(self.components):
            for p, tok in enumerate(comp):
                if not tok.is_crossing:
                    continue
                rec = out.setdefault(tok.cid, {"sign": tok.sign})
                role = "over" if tok.kind == "O" else "under"
                if role in rec:
                    raise TangleSemanticError(f"crossing {tok.cid!r} has two {role} sites")
                if rec["sign"] != tok.sign:
                    raise TangleSemanticError(f"crossing {tok.cid!r} has mismatched signs")
                rec[role] = (c, p)
        for cid, rec in out.items():
            if "over" not in rec or "under" not in rec:
                raise TangleSemanticError(f"crossing {cid!r} appears only once")
        return out

    def validate(self) -> TangleDiagram:
        if not self.components:
            raise TangleSemanticError("a bottom tangle needs at least one component")
        self.crossings()
        for c, comp in enumerate(self.components):
            nmax = sum(1 for t in comp if t.kind.startswith("max"))
            nmin = sum(1 for t in comp if t.kind.startswith("min"))
            if nmax != nmin:
                raise TangleSemanticError(
                    f"component {c + 1} has {nmax} extra maxima but {nmin} minima"
                )
        return self

    def relabel(self, mapping: dict[str, str]) -> TangleDiagram:
        comps = [
            [Token(t.kind, t.sign, mapping.get(t.cid, t.cid)) if t.is_crossing else t for t in comp]
            for comp in self.components
        ]
        return TangleDiagram(tuple(map(tuple, comps)), self.name)

    def canonical_ids(self, prefix: str = "c") -> TangleDiagram:
        """Rename crossings c1, c2, ... in order of first appearance."""
        mapping: dict[str, str] = {}
        for comp in self.components:
            for t in comp:
                if t.is_crossing and t.cid not in mapping:
                    mapping[t.cid] = f"{prefix}{len(mapping) + 1}"
        return self.relabel(mapping)

    def __str__(self) -> str:
        return print_tangle(self)


# -- parsing ---------------------------------------------------------------

_TOKEN_RE = re.compile(r"([OU])([+-])([A-Za-z0-9_]+)$|(maxLR|maxRL|minLR|minRL)$")
_NAME = r"[A-Za-z0-9_.+\-]+"
_HEADER_RE = re.compile(rf"tangle\s+({_NAME})\s*\{{\s*$")
_COMP_RE = re.compile(r"component\s*:\s*\[(.*)\]\s*$")


def parse(text: str) -> TangleDiagram:
    """Parse the tangle DSL; raises TangleSyntaxError / TangleSemanticError."""
    name = None
    comps: list[tuple[Token, ...]] = []
    closed = False
    lineno = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        stripped = line.strip()
        if not stripped:
            continue
        col = len(line) - len(line.lstrip()) + 1
        if closed:
            raise TangleSyntaxError("unexpected text after closing brace", lineno, col)
        if name is None:
            m = _HEADER_RE.match(stripped)
            if m is None:
                # allow the single-line form "tangle n { component: [...] }"
                one = re.match(rf"tangle\s+({_NAME})\s*\{{(.*)\}}\s*$", stripped)
                if one is None:
                    raise TangleSyntaxError("expected 'tangle <name> {'", lineno, col)
                name = one.group(1)
                body = one.group(2).strip()
                for part in re.findall(r"component\s*:\s*\[[^\]]*\]", body):
                    comps.append(_parse_component(part, lineno, col))
                if not re.fullmatch(r"(\s*component\s*:\s*\[[^\]]*\]\s*)*", body):
                    raise TangleSyntaxError("malformed component list", lineno, col)
                closed = True
                continue
            name = m.group(1)
            continue
        if stripped == "}":
            closed = True
            continue
        comps.append(_parse_component(stripped, lineno, col))
    if name is None:
        raise TangleSyntaxError("empty input", max(lineno, 1), 1)
    if not closed:
        raise TangleSyntaxError("missing closing brace", lineno, 1)
    return TangleDiagram(tuple(comps), name).validate()


def _parse_component(text: str, lineno: int, col: int) -> tuple[Token, ...]:
    m = _COMP_RE.match(text)
    if m is None:
        raise TangleSyntaxError("expected 'component: [ ... ]'", lineno, col)
    inner = m.group(1)
    offset = col + text.index("[") + 1
    toks: list[Token] = []
    if not inner.strip():
        return ()
    pos = 0
    for piece in inner.split(","):
        word = piece.strip()
        wcol = offset + pos + (len(piece) - len(piece.lstrip()))
        pos += len(piece) + 1
        tm = _TOKEN_RE.match(word)
        if tm is None:
            raise TangleSyntaxError(f"bad token {word!r}", lineno, wcol)
        if tm.group(4):
            toks.append(Token(tm.group(4)))
        else:
            toks.append(Token(tm.group(1), 1 if tm.group(2) == "+" else -1, tm.group(3)))
    return tuple(toks)


def print_tangle(d: TangleDiagram) -> str:
    lines = [f"tangle {d.name} {{"]
    for comp in d.components:
        lines.append(f"  component: [{', '.join(str(t) for t in comp)}]")
    lines.append("}")
    return "\n".join(lines) + "\n"


# -- linking matrix --------------------------------------------------------


def linking_matrix(d: TangleDiagram) -> list[list[int]]:
    """Linking matrix of the closure: framings (self-writhe) on the diagonal."""
    m = d.ncomponents
    twice = [[0] * m for _ in range(m)]
    for rec in d.crossings().values():
        i = rec["over"][0]
        j = rec["under"][0]
        if i == j:
            twice[i][i] += 2 * rec["sign"]
        else:
            twice[i][j] += rec["sign"]
            twice[j][i] += rec["sign"]
    out = [[0] * m for _ in range(m)]
    for i in range(m):
        for j in range(m):
            q = Fraction(twice[i][j], 2)
            if q.denominator != 1:
                raise TangleSemanticError("odd number of crossings between two components")
            out[i][j] = int(q)
    return out


# -- corpus ----------------------------------------------------------------


def trivial(m: int = 1) -> TangleDiagram:
    return TangleDiagram(tuple(() for _ in range(m)), f"trivial{m}")


def kink(cid: str, sign: int, side: str = "right") -> tuple[Token, ...]:
    """A one-crossing kink inserted into a downward strand.

    ``side='right'`` makes a counterclockwise loop to the right of the strand,
    ``side='left'`` a clockwise loop to the left.  Its framing contribution is
    ``sign``.
    """
    if side == "right":
        # first passage heads down-right, second down-left
        first, second = ("U", "O") if sign > 0 else ("O", "U")
        return (Token(first, sign, cid), MIN_LR, MAX_RL, Token(second, sign, cid))
    if side == "left":
        # first passage heads down-left, second down-right
        first, second = ("O", "U") if sign > 0 else ("U", "O")
        return (Token(first, sign, cid), MIN_RL, MAX_LR, Token(second, sign, cid))
    raise ValueError(side)


def rising_kink(cid: str, sign: int) -> tuple[Token, ...]:
    """Counterclockwise kink on an upward strand (before the cap).

    This is the falling right-hand kink rotated by a half turn: crossing
    roles are kept and each extremum swaps max/min and direction.
    """
    first, second = ("U", "O") if sign > 0 else ("O", "U")
    return (Token(first, sign, cid), MAX_RL, MIN_LR, Token(second, sign, cid))


def curl(sign: int, side: str = "right") -> TangleDiagram:
    return TangleDiagram((kink("a", sign, side),), f"curl{sign:+d}{'' if side == 'right' else '.left'}")


def unknot_framed(k: int) -> TangleDiagram:
    """Trivial 1-component bottom tangle with |k| kinks of sign(k); closure surgery gives L(k,1)."""
    s = 1 if k >= 0 else -1
    toks: list[Token] = []
    for n in range(abs(k)):
        toks.extend(kink(f"k{n + 1}", s))
    return TangleDiagram((tuple(toks),), f"unknot{k:+d}" if k else "unknot0")


def juxtapose(*diagrams: TangleDiagram, name: str | None = None) -> TangleDiagram:
    """Side-by-side placement; the closure is the disjoint union of the closures."""
    comps: list[tuple[Token, ...]] = []
    for n, d in enumerate(diagrams):
        ids = {}
        for comp in d.components:
            for t in comp:
                if t.is_crossing:
                    ids[t.cid] = f"{t.cid}_{n}"
        comps.extend(d.relabel(ids).components)
    return TangleDiagram(tuple(comps), name or "+".join(d.name for d in diagrams))


def connected_sum(d1: TangleDiagram, d2: TangleDiagram) -> TangleDiagram:
    """Surgery presentation of M1 # M2: disjoint union of the two surgery links."""
    return juxtapose(d1, d2, name=f"{d1.name}+{d2.name}")


def with_framings(d: TangleDiagram, framings: list[int]) -> TangleDiagram:
    """Append kinks to each component to change its framing by the given amounts."""
    used = set(d.crossings())
    fresh = (f"f{n}" for n in itertools.count(1) if f"f{n}" not in used)
    comps = []
    for comp, f in zip(d.components, framings):
        extra: list[Token] = []
        s = 1 if f >= 0 else -1
        for _ in range(abs(f)):
            extra.extend(kink(next(fresh), s))
        comps.append(tuple(comp) + tuple(extra))
    return TangleDiagram(tuple(comps), d.name + "_f" + "".join(f"{f:+d}" for f in framings))


def zero_framed(d: TangleDiagram) -> tuple[TangleDiagram, list[int]]:
    """Add kinks cancelling the framings; returns (T_0, original framings)."""
    L = linking_matrix(d)
    f = [L[i][i] for i in range(d.ncomponents)]
    return with_framings(d, [-x for x in f]), f


# -- Morse slices ------------------------------------------------------------


def from_morse(events: list[tuple], name: str = "T") -> TangleDiagram:
    """Build a bottom tangle from a top-to-bottom list of slice events.

    Events act on the current row of strands (0-indexed positions):

    * ``("cap", i)``: a local maximum creating strands at positions i, i+1;
    * ``("cup", i)``: a local minimum joining the strands at i, i+1;
    * ``("x", i, "L")`` / ``("x", i, "R")``: the strands at i, i+1 cross,
      the one coming from the left (resp. right) passing over.

    The row left at the bottom must have 2m strands, component i owning
    positions 2i, 2i+1.  Orientations follow from that: every component
    starts at its right end going up.  Crossing signs are derived from
    the orientations; a crossing between an upward and a downward strand
    is rotated a quarter turn, which puts a max before and a min after it
    on the upward strand.  One right-to-left maximum per component is the
    standard cap and is left implicit.
    """
    row: list[int] = []
    # pieces: runs of a strand between extrema/bottom, read downward
    pieces: list[list[tuple]] = []
    top: dict[int, tuple] = {}  # piece -> ("cap", partner, side)
    bottom: dict[int, tuple] = {}  # piece -> ("cup", partner, side) | ("end", position)
    for k, ev in enumerate(events):
        kind, i = ev[0], ev[1]
        if kind == "cap":
            if not 0 <= i <= len(row):
                raise TangleError(f"event {k}: cap position {i} out of range")
            a, b = len(pieces), len(pieces) + 1
            pieces += [[], []]
            top[a] = ("cap", b, "L")
            top[b] = ("cap", a, "R")
            row[i:i] = [a, b]
        elif kind == "cup":
            if not 0 <= i < len(row) - 1:
                raise TangleError(f"event {k}: cup position {i} out of range")
            a, b = row[i], row[i + 1]
            bottom[a] = ("cup", b, "L")
            bottom[b] = ("cup", a, "R")
            del row[i : i + 2]
        elif kind == "x":
            if not 0 <= i < len(row) - 1:
                raise TangleError(f"event {k}: crossing position {i} out of range")
            a, b = row[i], row[i + 1]
            over_left = ev[2] == "L"
            cid = f"x{k}"
            pieces[a].append((cid, "R", over_left))  # a moves right going down
            pieces[b].append((cid, "L", not over_left))
            row[i], row[i + 1] = b, a
        else:
            raise TangleError(f"event {k}: unknown kind {kind!r}")
    if len(row) % 2:
        raise TangleError("odd number of strands at the bottom")
    for pos, p in enumerate(row):
        bottom[p] = ("end", pos)

    # traverse each component from its start (right end, going up)
    walks: list[list[tuple[int, bool]]] = []  # (piece, downward?)
    direction: dict[int, bool] = {}
    for c in range(len(row) // 2):
        walk = []
        p, down = row[2 * c + 1], False
        while True:
            walk.append((p, down))
            direction[p] = down
            if down:
                nb = bottom[p]
                if nb[0] == "end":
                    if nb[1] != 2 * c:
                        raise TangleError(f"component {c + 1} does not end at its left endpoint")
                    break
                p, down = nb[1], False
            else:
                nt = top[p]
                p, down = nt[1], True
        walks.append(walk)
    if len(direction) != len(pieces):
        raise TangleError("diagram has a closed component")

    # crossing signs from direction vectors (x right, y up)
    vec: dict[tuple[str, int], tuple[int, int]] = {}
    over_piece: dict[str, int] = {}
    for p, pc in enumerate(pieces):
        for cid, move, is_over in pc:
            dx = 1 if move == "R" else -1
            v = (dx, -1) if direction[p] else (-dx, 1)
            vec[(cid, p)] = v
            if is_over:
                over_piece[cid] = p
    sign: dict[str, int] = {}
    ends: dict[str, list[int]] = {}
    for (cid, p) in vec:
        ends.setdefault(cid, []).append(p)
    for cid, ps in ends.items():
        o = over_piece[cid]
        u = ps[0] if ps[1] == o else ps[1]
        (ox, oy), (ux, uy) = vec[(cid, o)], vec[(cid, u)]
        sign[cid] = 1 if ox * uy - oy * ux > 0 else -1
    mixed = {cid for cid, ps in ends.items() if direction[ps[0]] != direction[ps[1]]}

    comps = []
    for walk in walks:
        toks: list[Token] = []
        for n, (p, down) in enumerate(walk):
            seq = pieces[p] if down else list(reversed(pieces[p]))
            for cid, move, is_over in seq:
                t = Token("O" if is_over else "U", sign[cid], cid)
                if cid in mixed and not down:
                    # moving right when read upward iff it moves left read downward
                    lr = "LR" if move == "L" else "RL"
                    toks += [Token("max" + lr), t, Token("min" + lr)]
                else:
                    toks.append(t)
            if n + 1 < len(walk):
                if down:  # bottom of a downward piece: a cup
                    side = bottom[p][2]
                    toks.append(MIN_LR if side == "L" else MIN_RL)
                else:
                    side = top[p][2]
                    toks.append(MAX_LR if side == "L" else MAX_RL)
        # one right-to-left maximum is the standard cap; its label is trivial,
        # so which one we drop does not matter
        idx = next(j for j, t in enumerate(toks) if t.kind == "maxRL")
        comps.append(tuple(toks[:idx] + toks[idx + 1 :]))
    return TangleDiagram(tuple(comps), name).canonical_ids().validate()


def _closed_braid_events(word: list[int], n: int) -> list[tuple]:
    """Nested caps feeding an n-strand braid (generator +i: the strand on the
    right passes over, a positive crossing for downward strands)."""
    ev: list[tuple] = [("cap", k) for k in range(n)]
    for g in word:
        ev.append(("x", abs(g) - 1, "R" if g > 0 else "L"))
    return ev


def borromean() -> TangleDiagram:
    """Bottom tangle whose closure is the Borromean rings (closed braid
    (s1 s2^-1)^3), with the return strands shepherded into bottom position."""
    ev = _closed_braid_events([1, -2] * 3, 3)
    # row: [a, b, c, c', b', a']; slide b' then a' leftwards over the others
    ev += [("x", 3, "R"), ("x", 2, "R")]
    ev += [("x", 4, "R"), ("x", 3, "R"), ("x", 2, "R"), ("x", 1, "R")]
    return from_morse(ev, "borromean")


def trefoil_framed(framing: int = 1) -> TangleDiagram:
    """Right-handed trefoil (closed braid s1^3) with the given framing.

    +1 surgery gives the Poincare homology sphere."""
    ev = _closed_braid_events([1, 1, 1], 2) + [("cup", 1)]
    d = from_morse(ev, "trefoil")
    writhe = linking_matrix(d)[0][0]
    out = with_framings(d, [framing - writhe])
    return TangleDiagram(out.components, f"trefoil{framing:+d}")
