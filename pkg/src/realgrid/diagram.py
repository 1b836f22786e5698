"""Real grid diagrams: data model, ``.rgd`` parsing, symmetry checks, link tracing
and the real grid moves.

Coordinates: columns run left to right, rows bottom to top.  Cell ``(c, r)`` is
the unit square ``[c, c+1] x [r, r+1]``; column ``c`` carries its O marker in
cell ``(c, sigma_o[c])``.  The involution reflects the torus across the
anti-diagonal, acting on cells by ``rho(c, r) = (n-1-r, n-1-c)`` and on lattice
points by ``R(i, j) = (-j, -i) mod n``.  Its fixed cells are ``(c, n-1-c)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

STRONGLY_INVERTIBLE = "strongly-invertible"
DOUBLY_PERIODIC = "doubly-periodic"
MIXED = "mixed"


class DiagramError(ValueError):
    """Invalid diagram data (bad file, asymmetric markers, wrong classification)."""


class ParseError(DiagramError):
    pass


@dataclass(frozen=True)
class Diagram:
    n: int
    sigma_o: tuple[int, ...]
    sigma_x: tuple[int, ...]
    name: str | None = field(default=None, compare=False)
    meta: Mapping[str, str] = field(default_factory=dict, compare=False, hash=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "sigma_o", tuple(int(v) for v in self.sigma_o))
        object.__setattr__(self, "sigma_x", tuple(int(v) for v in self.sigma_x))
        object.__setattr__(self, "meta", dict(self.meta))

    def o_cells(self) -> list[tuple[int, int]]:
        return [(c, r) for c, r in enumerate(self.sigma_o)]

    def x_cells(self) -> list[tuple[int, int]]:
        return [(c, r) for c, r in enumerate(self.sigma_x)]

    def with_markers(self, sigma_o: Sequence[int], sigma_x: Sequence[int],
                     suffix: str = "") -> Diagram:
        name = self.name + suffix if (self.name and suffix) else self.name
        return Diagram(len(sigma_o), tuple(sigma_o), tuple(sigma_x), name, dict(self.meta))

    def to_rgd(self) -> str:
        lines = [f"n={self.n}",
                 "O=" + " ".join(map(str, self.sigma_o)),
                 "X=" + " ".join(map(str, self.sigma_x))]
        if self.name:
            lines.append(f"name={self.name}")
        for key in sorted(self.meta):
            lines.append(f"meta.{key}={self.meta[key]}")
        return "\n".join(lines) + "\n"

    def __str__(self) -> str:
        return self.to_rgd().strip().replace("\n", " / ")


@dataclass(frozen=True)
class LinkTrace:
    components: tuple[tuple[int, ...], ...]
    l_f: int
    l_p: int
    classification: str

    @property
    def n_components(self) -> int:
        return len(self.components)

    @property
    def is_knot(self) -> bool:
        return self.classification == STRONGLY_INVERTIBLE and self.n_components == 1


def rho_cell(n: int, c: int, r: int) -> tuple[int, int]:
    return n - 1 - r, n - 1 - c


def _check_perm(values: Sequence[int], n: int, letter: str) -> None:
    seen: dict[int, int] = {}
    for c, r in enumerate(values):
        if not 0 <= r < n:
            raise ParseError(f"{letter}: column {c}: row {r} out of range 0..{n - 1}")
        if r in seen:
            raise ParseError(f"{letter}: column {c}: duplicate row {r}")
        seen[r] = c


def parse_diagram(text: str) -> Diagram:
    """Parse ``.rgd`` text.  Symmetry is not checked here; see :func:`validate`."""
    n = None
    rows: dict[str, list[int]] = {}
    name = None
    meta: dict[str, str] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ParseError(f"line {lineno}: expected key=value, got {raw!r}")
        key, value = (s.strip() for s in line.split("=", 1))
        if key == "n":
            try:
                n = int(value)
            except ValueError:
                raise ParseError(f"line {lineno}: n must be an integer") from None
            if n < 1:
                raise ParseError(f"line {lineno}: n must be positive")
        elif key in ("O", "X"):
            try:
                rows[key] = [int(tok) for tok in value.split()]
            except ValueError:
                raise ParseError(f"line {lineno}: {key} must list integers") from None
        elif key == "name":
            name = value
        elif key.startswith("meta."):
            meta[key[5:]] = value
        else:
            raise ParseError(f"line {lineno}: unknown key {key!r}")
    if n is None:
        raise ParseError("missing n= line")
    for letter in ("O", "X"):
        if letter not in rows:
            raise ParseError(f"missing {letter}= line")
        if len(rows[letter]) != n:
            raise ParseError(f"{letter}: expected {n} entries, got {len(rows[letter])}")
        _check_perm(rows[letter], n, letter)
    for c in range(n):
        if rows["O"][c] == rows["X"][c]:
            raise ParseError(f"column {c}: O and X share cell ({c}, {rows['O'][c]})")
    return Diagram(n, tuple(rows["O"]), tuple(rows["X"]), name, meta)


def load_diagram(path: str) -> Diagram:
    with open(path, encoding="utf-8") as fh:
        return parse_diagram(fh.read())


def _marker_symmetric(n: int, sigma: Sequence[int]) -> int | None:
    """Return the first column whose marker has no mirror partner, else None."""
    for c in range(n):
        mc, mr = rho_cell(n, c, sigma[c])
        if sigma[mc] != mr:
            return c
    return None


def trace_link(d: Diagram) -> LinkTrace:
    """Trace link components and classify the symmetry.

    A component is the cycle of columns visited by going O -> X vertically and
    then X -> O horizontally.
    """
    n = d.n
    o_col_of_row = {r: c for c, r in enumerate(d.sigma_o)}
    step = [o_col_of_row[d.sigma_x[c]] for c in range(n)]
    comp_of = [-1] * n
    components = []
    for start in range(n):
        if comp_of[start] >= 0:
            continue
        cyc = []
        c = start
        while comp_of[c] < 0:
            comp_of[c] = len(components)
            cyc.append(c)
            c = step[c]
        components.append(tuple(cyc))

    o_sym = _marker_symmetric(n, d.sigma_o) is None
    x_sym = _marker_symmetric(n, d.sigma_x) is None
    if o_sym and x_sym:
        l_f = l_p = 0
        fixed_o = [c for c in range(n) if d.sigma_o[c] == n - 1 - c]
        fixed_x = [c for c in range(n) if d.sigma_x[c] == n - 1 - c]
        ok = True
        for k, comp in enumerate(components):
            # image of column c under the involution is the column of the
            # mirrored O marker
            image = comp_of[n - 1 - d.sigma_o[comp[0]]]
            if image == k:
                l_f += 1
                fo = sum(1 for c in comp if c in fixed_o)
                fx = sum(1 for c in comp if c in fixed_x)
                ok = ok and fo == 1 and fx == 1
            elif image > k:
                l_p += 1
        cls = STRONGLY_INVERTIBLE if ok else MIXED
        return LinkTrace(tuple(components), l_f, l_p, cls)
    # doubly periodic: the involution exchanges the O and X marker sets
    swapped = all(d.sigma_x[rho_cell(n, c, d.sigma_o[c])[0]] == rho_cell(n, c, d.sigma_o[c])[1]
                  for c in range(n))
    if swapped:
        l_p = 0
        for k, comp in enumerate(components):
            mc, _ = rho_cell(n, comp[0], d.sigma_o[comp[0]])
            if comp_of[mc] > k:
                l_p += 1
        return LinkTrace(tuple(components), 0, l_p, DOUBLY_PERIODIC)
    return LinkTrace(tuple(components), 0, 0, MIXED)


def validate(d: Diagram, expect: str | None = None) -> LinkTrace:
    """Check permutations and R-symmetry, then trace and classify the link."""
    n = d.n
    _check_perm(d.sigma_o, n, "O")
    _check_perm(d.sigma_x, n, "X")
    for c in range(n):
        if d.sigma_o[c] == d.sigma_x[c]:
            raise DiagramError(f"column {c}: O and X share a cell")
    trace = trace_link(d)
    if trace.classification != DOUBLY_PERIODIC:
        bad = _marker_symmetric(n, d.sigma_o)
        if bad is not None:
            raise DiagramError(f"O markers not R-symmetric at column {bad}")
        bad = _marker_symmetric(n, d.sigma_x)
        if bad is not None:
            raise DiagramError(f"X markers not R-symmetric at column {bad}")
    if expect is not None and trace.classification != expect:
        raise DiagramError(f"expected a {expect} diagram, found {trace.classification}")
    return trace


def require_strongly_invertible(d: Diagram) -> LinkTrace:
    return validate(d, expect=STRONGLY_INVERTIBLE)


# ---------------------------------------------------------------------------
# symmetry transforms and real grid moves


def cyclic_shift(d: Diagram, a: int) -> Diagram:
    """Translate by ``a`` columns right and ``a`` rows down; commutes with rho."""
    n = d.n
    so = [0] * n
    sx = [0] * n
    for c in range(n):
        so[(c + a) % n] = (d.sigma_o[c] - a) % n
        sx[(c + a) % n] = (d.sigma_x[c] - a) % n
    return d.with_markers(so, sx)


def _inverse(sigma: Sequence[int]) -> list[int]:
    inv = [0] * len(sigma)
    for c, r in enumerate(sigma):
        inv[r] = c
    return inv


def transpose(d: Diagram) -> Diagram:
    """Exchange the roles of rows and columns (reverses the orientation)."""
    return d.with_markers(_inverse(d.sigma_o), _inverse(d.sigma_x))


def swap_markers(d: Diagram) -> Diagram:
    return d.with_markers(d.sigma_x, d.sigma_o)


def _interleaved(n: int, a: Iterable[int], b: Iterable[int]) -> bool:
    a1, a2 = sorted(a)
    return sum(1 for v in b if a1 < v < a2) == 1


def _permute_axes(d: Diagram, col_perm: Sequence[int], row_perm: Sequence[int]) -> Diagram:
    n = d.n
    so = [0] * n
    sx = [0] * n
    for c in range(n):
        so[col_perm[c]] = row_perm[d.sigma_o[c]]
        sx[col_perm[c]] = row_perm[d.sigma_x[c]]
    return d.with_markers(so, sx)


def commutable_columns(d: Diagram) -> list[int]:
    out = []
    for c in range(d.n - 1):
        try:
            real_commutation(d, c)
        except DiagramError:
            continue
        out.append(c)
    return out


def real_commutation(d: Diagram, c: int) -> Diagram:
    """Swap columns ``c, c+1`` together with the mirrored rows ``n-2-c, n-1-c``."""
    n = d.n
    if not 0 <= c < n - 1:
        raise DiagramError(f"column {c} has no right neighbour")
    if _interleaved(n, (d.sigma_o[c], d.sigma_x[c]), (d.sigma_o[c + 1], d.sigma_x[c + 1])):
        raise DiagramError(f"columns {c}, {c + 1} are not commutable")
    cols = list(range(n))
    cols[c], cols[c + 1] = c + 1, c
    step = _permute_axes(d, cols, list(range(n)))
    r0, r1 = n - 2 - c, n - 1 - c
    o_row = _inverse(step.sigma_o)
    x_row = _inverse(step.sigma_x)
    if _interleaved(n, (o_row[r0], x_row[r0]), (o_row[r1], x_row[r1])):
        raise DiagramError(f"rows {r0}, {r1} are not commutable")
    rows = list(range(n))
    rows[r0], rows[r1] = r1, r0
    out = _permute_axes(step, list(range(n)), rows)
    validate(out)
    return out


def off_axis_x_cells(d: Diagram) -> list[tuple[int, int]]:
    return [(c, r) for c, r in enumerate(d.sigma_x) if r != d.n - 1 - c]


def real_stabilization(d: Diagram, marker: tuple[int, int]) -> Diagram:
    """Stabilize at an off-axis X cell and, simultaneously, at its mirror.

    Column ``c`` and row ``r`` of the X are each split in two and the X becomes
    a 2x2 block with X's in its NW and SE cells and a new O in its NE cell.
    The mirrored column and row are split the same way and receive the rho
    image of the block, so the size grows by two.
    """
    n = d.n
    c, r = marker
    if not (0 <= c < n and d.sigma_x[c] == r):
        raise DiagramError(f"no X marker in cell ({c}, {r})")
    if r == n - 1 - c:
        raise DiagramError("stabilization at an X on the fixed axis is not a real grid move")
    mc, mr = rho_cell(n, c, r)
    m = n + 2

    def col(k: int, part: int = 0) -> int:
        return k + (c < k) + (mc < k) + part

    def row(k: int, part: int = 0) -> int:
        return k + (r < k) + (mr < k) + part

    so = [-1] * m
    sx = [-1] * m
    for k in range(n):
        # old O's in split lines: near half for the block, far half for its mirror
        ro = d.sigma_o[k]
        so[col(k, int(k == mc))] = row(ro, int(ro == mr))
        if k not in (c, mc):
            sx[col(k)] = row(d.sigma_x[k])
    block = [((col(c), row(r, 1)), "X"), ((col(c, 1), row(r)), "X"), ((col(c, 1), row(r, 1)), "O")]
    for (cc, rr), kind in block:
        for cell in ((cc, rr), rho_cell(m, cc, rr)):
            (sx if kind == "X" else so)[cell[0]] = cell[1]
    out = d.with_markers(so, sx)
    try:
        tr = validate(out)
    except DiagramError as exc:
        raise DiagramError(f"could not stabilize at ({c}, {r}): {exc}") from None
    if tr.classification != trace_link(d).classification:
        raise DiagramError(f"could not stabilize at ({c}, {r}): link type changed")
    return out


def legal_moves(d: Diagram, max_size: int | None = None) -> list[tuple[str, int | tuple[int, int]]]:
    """All real grid moves applicable to ``d``, as ``(kind, argument)`` pairs.

    Stabilizations are left out when they would exceed ``max_size``.
    """
    moves: list = [("shift", a) for a in range(1, d.n)]
    moves += [("commute", c) for c in commutable_columns(d)]
    if max_size is None or d.n + 2 <= max_size:
        moves += [("stabilize", cell) for cell in off_axis_x_cells(d)]
    return moves


def apply_move(d: Diagram, move: tuple[str, int | tuple[int, int]]) -> Diagram:
    kind, arg = move
    if kind == "shift":
        return cyclic_shift(d, arg)
    if kind == "commute":
        return real_commutation(d, arg)
    if kind == "stabilize":
        return real_stabilization(d, arg)
    raise ValueError(f"unknown move {kind!r}")


def random_moves(d: Diagram, rng, length: int, max_size: int | None = None):
    """Apply ``length`` random legal moves; returns the final diagram and the moves."""
    done = []
    for _ in range(length):
        move = rng.choice(legal_moves(d, max_size))
        d = apply_move(d, move)
        done.append(move)
    return d, done
