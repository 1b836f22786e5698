"""Embedded real grid diagrams with the published values each one reproduces.

Every entry records the knot, the symmetry variant and a certificate: the hat
groups, minus module, real Alexander polynomial, tau^R and torsion order it was
accepted against.  Bigradings are ``(m, a2)`` with ``a2`` the doubled Alexander
grading.  Twist knots carry a family index (1 or 2) for the two involution
families; ``mirror=yes`` marks diagrams of the mirror knot.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .diagram import Diagram, DiagramError, validate


@dataclass(frozen=True)
class Certificate:
    hat: dict | None = None              # {(m, a2): dim}
    towers: tuple | None = None          # ((m, a2), ...)
    torsion: tuple | None = None         # ((m, a2, order, mult), ...)
    alexander: str | None = None
    tau: int | None = None
    order: int | None = None
    a2_ranks: dict | None = None         # {a2: total hat dim}
    extra: dict = field(default_factory=dict)


@dataclass(frozen=True)
class Entry:
    name: str
    sigma_o: tuple
    sigma_x: tuple
    knot: str
    note: str
    cert: Certificate

    def diagram(self) -> Diagram:
        meta = {"knot": self.knot, "note": self.note}
        return Diagram(len(self.sigma_o), self.sigma_o, self.sigma_x, self.name, meta)


def _h(*cells) -> dict:
    out: dict = {}
    for m, a, *dim in cells:
        out[(m, a)] = dim[0] if dim else 1
    return out


_UNKNOT = Certificate(hat=_h((0, 0)), towers=((0, 0),), torsion=(), alexander="1", tau=0, order=0)
_TREFOIL_BAR = Certificate(hat=_h((0, -1), (0, 0), (1, 1)), towers=((1, 1),), torsion=((0, 0, 1, 1),),
                           alexander="t^-1 + 1 - t", tau=-1, order=1,
                           extra={"generators": 26, "domains": 61})
_TREFOIL = Certificate(hat=_h((-1, -1), (0, 0), (0, 1)), towers=((-1, -1),), torsion=((0, 1, 1, 1),),
                       alexander="-t^-1 + 1 + t", tau=1, order=1)
_FIG8 = Certificate(hat=_h((-1, -1), (0, 0), (0, 1)), towers=((-1, -1),), torsion=((0, 1, 1, 1),),
                    alexander="-t^-1 + 1 + t", tau=1, order=1)
_6_1 = Certificate(hat=_h((-1, -1, 2), (0, 0), (0, 1, 2)), towers=((-1, -1),),
                   torsion=((0, 1, 1, 1), (0, 1, 2, 1)), alexander="-2*t^-1 + 1 + 2*t", tau=1, order=2)
_DIR_A = _h((-1, -2), (-1, -1), (0, -1), (0, 0, 3), (1, 2))
_DIR_B = _h((-1, -2), (0, 0, 3), (0, 1), (1, 1), (1, 2))
_SUM_3_1_5_1 = _h((0, -3), (0, -2, 2), (1, -1), (1, 0, 3), (2, 1), (2, 2, 2), (3, 3))


def _twist(k_or_case: str, tau: int | None = None) -> Certificate:
    return Certificate(alexander=k_or_case, tau=tau)


_ENTRIES = [
    Entry("unknot3", (0, 1, 2), (2, 0, 1), "0_1", "standard unknot", _UNKNOT),
    Entry("trefoil5", (0, 1, 2, 3, 4), (2, 3, 4, 0, 1), "3_1", "mirror trefoil", _TREFOIL_BAR),
    Entry("trefoil7", (2, 1, 0, 3, 6, 5, 4), (6, 3, 2, 5, 4, 0, 1), "3_1", "trefoil", _TREFOIL),
    Entry("fig8", (0, 5, 2, 1, 4, 3, 6), (4, 3, 6, 5, 2, 0, 1), "4_1", "first involution family", _FIG8),
    Entry("5_2", (0, 3, 4, 5, 1, 2, 6), (5, 6, 2, 3, 4, 0, 1), "5_2", "involution with trivial groups",
          _UNKNOT),
    Entry("6_1", (1, 4, 3, 2, 7, 6, 5, 8, 0), (7, 8, 5, 6, 4, 1, 0, 3, 2), "6_1", "first involution family",
          _6_1),
    Entry("6_2", (0, 7, 3, 1, 2, 6, 4, 5, 8), (6, 5, 8, 7, 0, 3, 1, 2, 4), "6_2",
          "involution with rank 3 at a2 = 0",
          Certificate(hat=_h((-1, -2), (0, -1), (0, 0, 3), (1, 1), (1, 2)), towers=((0, 0),),
                      torsion=((0, 0, 1, 1), (0, 0, 2, 1), (1, 2, 1, 1)),
                      alexander="-t^-2 + t^-1 + 3 - t - t^2", tau=0, order=2,
                      a2_ranks={-2: 1, -1: 1, 0: 3, 1: 1, 2: 1})),
    Entry("8_19", (0, 1, 2, 3, 4, 5, 6), (3, 4, 5, 6, 0, 1, 2), "8_19", "torus knot T(3,4)",
          Certificate(hat=_h((0, -3), (0, -2), (1, 0), (2, 2), (3, 3)),
                      alexander="t^-3 + t^-2 - 1 + t^2 - t^3")),
    Entry("8_20a", (2, 3, 1, 5, 0, 7, 8, 6, 4), (7, 8, 6, 2, 3, 4, 5, 0, 1), "8_20", "direction a1",
          Certificate(hat=_DIR_A, alexander="-t^-2 + 3 - t^2")),
    Entry("8_20b", (7, 8, 6, 2, 3, 4, 5, 0, 1), (2, 3, 1, 5, 0, 7, 8, 6, 4), "8_20",
          "direction a1^{i,r}: 8_20a with O and X exchanged",
          Certificate(hat=_DIR_B, alexander="-t^-2 + 3 - t^2")),
    Entry("9_42a", (1, 4, 6, 2, 7, 0, 5, 8, 3), (7, 8, 0, 5, 3, 4, 1, 2, 6), "9_42", "direction a_a",
          Certificate(hat=_DIR_A, alexander="-t^-2 + 3 - t^2")),
    Entry("9_42b", (7, 8, 0, 5, 3, 4, 1, 2, 6), (1, 4, 6, 2, 7, 0, 5, 8, 3), "9_42",
          "direction a_a^{i,r}: 9_42a with O and X exchanged",
          Certificate(hat=_DIR_B, alexander="-t^-2 + 3 - t^2")),
    Entry("9_42c", (7, 8, 3, 4, 5, 6, 2, 0, 1), (2, 5, 0, 7, 1, 3, 8, 4, 6), "9_42",
          "direction a_c: 9_42b shifted by 3",
          Certificate(hat=_DIR_B, alexander="-t^-2 + 3 - t^2")),
    Entry("sum_3_1_4_1", (5, 8, 9, 7, 4, 10, 6, 0, 1, 2, 3), (9, 10, 6, 5, 8, 7, 1, 2, 3, 4, 0),
          "3_1#4_1", "equivariant connected sum",
          Certificate(hat=_DIR_B, towers=((0, 0),), torsion=((0, 0, 2, 1), (0, 1, 1, 1), (1, 2, 1, 1)),
                      alexander="-t^-2 + 3 - t^2")),
    Entry("sum_3_1_5_1", (10, 6, 7, 8, 9, 1, 0, 2, 3, 5, 4), (7, 8, 9, 10, 3, 4, 5, 6, 0, 1, 2),
          "3_1#5_1", "equivariant connected sum",
          Certificate(hat=_SUM_3_1_5_1, towers=((3, 3),),
                      torsion=((0, -2, 1, 1), (1, 0, 1, 1), (1, 0, 2, 1), (2, 2, 1, 1), (2, 2, 2, 1)),
                      alexander="t^-3 + 2*t^-2 - t^-1 - 3 + t + 2*t^2 - t^3")),
    Entry("sum_3_1_5_2", (10, 6, 7, 8, 9, 0, 3, 4, 1, 2, 5), (7, 8, 9, 10, 4, 5, 6, 2, 3, 0, 1),
          "3_1#5_2", "equivariant connected sum",
          Certificate(hat=_TREFOIL_BAR.hat, towers=((1, 1),), torsion=((0, 0, 1, 1),),
                      alexander="t^-1 + 1 - t")),
    Entry("sum_3_1_5_1_s13", (12, 8, 6, 7, 11, 9, 10, 1, 0, 2, 3, 5, 4), (8, 7, 9, 10, 12, 11, 3, 4, 5, 6, 0, 1, 2),
          "3_1#5_1", "sum_3_1_5_1 stabilized at X (0, 7); size-13 capacity case",
          Certificate(hat=_SUM_3_1_5_1, alexander="t^-3 + 2*t^-2 - t^-1 - 3 + t + 2*t^2 - t^3")),
    # twist knots T_n, family f; polynomials follow the family formulas
    Entry("twist_T1_1", (2, 1, 0, 3, 6, 5, 4), (6, 3, 2, 5, 4, 0, 1), "3_1", "twist T1", _twist("-t^-1 + 1 + t")),
    Entry("twist_T2_1", (0, 5, 2, 1, 4, 3, 6), (4, 3, 6, 5, 2, 0, 1), "4_1", "twist T2", _twist("-t^-1 + 1 + t")),
    Entry("twist_T3_1", (3, 2, 1, 0, 4, 8, 7, 6, 5), (0, 6, 7, 5, 1, 2, 3, 4, 8), "5_2", "twist T3",
          _twist("-2*t^-1 + 1 + 2*t")),
    Entry("twist_T3_2", (0, 3, 4, 5, 1, 2, 6), (5, 6, 2, 3, 4, 0, 1), "5_2", "twist T3", _twist("1")),
    Entry("twist_T4_1", (1, 4, 3, 2, 7, 6, 5, 8, 0), (7, 8, 5, 6, 4, 1, 0, 3, 2), "6_1", "twist T4",
          _twist("-2*t^-1 + 1 + 2*t")),
    Entry("twist_T4_2", (0, 6, 7, 5, 2, 1, 4, 3, 8), (7, 8, 4, 3, 6, 5, 2, 0, 1), "6_1", "twist T4", _twist("1")),
    Entry("twist_T5m_1", (1, 3, 2, 5, 0, 7, 6, 8, 4), (7, 8, 0, 1, 4, 2, 3, 5, 6), "7_2", "twist T5, mirror=yes",
          _twist("3*t^-1 + 1 - 3*t")),
    Entry("twist_T5m_2", (0, 5, 6, 7, 3, 4, 1, 2, 8), (7, 8, 4, 5, 6, 2, 3, 0, 1), "7_2", "twist T5, mirror=yes",
          _twist("t^-1 + 1 - t")),
    Entry("twist_T6_1", (2, 5, 0, 4, 1, 9, 7, 3, 10, 6, 8), (4, 3, 7, 8, 5, 6, 10, 9, 2, 0, 1), "8_1", "twist T6",
          _twist("-3*t^-1 + 1 + 3*t")),
    Entry("twist_T6_2", (0, 8, 9, 6, 7, 5, 2, 1, 4, 3, 10), (9, 10, 7, 8, 4, 3, 6, 5, 2, 0, 1), "8_1", "twist T6",
          _twist("-t^-1 + 1 + t")),
    Entry("twist_T7m_1", (2, 4, 3, 7, 0, 1, 9, 8, 10, 5, 6), (5, 8, 9, 1, 6, 10, 0, 2, 3, 7, 4), "9_2",
          "twist T7, mirror=yes", _twist("4*t^-1 + 1 - 4*t")),
    Entry("twist_T7_2", (2, 5, 0, 3, 6, 9, 1, 7, 10, 4, 8), (7, 1, 4, 10, 2, 5, 8, 0, 6, 9, 3), "9_2", "twist T7",
          _twist("1")),
    # skein triple: the three diagrams differ only in columns 2, 3 and rows 3, 4
    Entry("skein_plus", (0, 5, 2, 1, 4, 3, 6), (4, 3, 6, 5, 2, 0, 1), "4_1", "skein triple L+, window 2",
          Certificate(alexander="-t^-1 + 1 + t")),
    Entry("skein_minus", (0, 5, 1, 2, 3, 4, 6), (3, 4, 5, 6, 2, 0, 1), "3_1", "skein triple L-, window 2, mirror=yes",
          Certificate(alexander="t^-1 + 1 - t")),
    Entry("skein_zero", (0, 5, 2, 1, 4, 3, 6), (3, 4, 5, 6, 2, 0, 1), "L0", "skein triple L0, window 2",
          Certificate(alexander="2")),
]

_BY_NAME = {e.name: e for e in _ENTRIES}


def corpus_names() -> list[str]:
    return [e.name for e in _ENTRIES]


def corpus_entry(name: str) -> Entry:
    try:
        return _BY_NAME[name]
    except KeyError:
        raise DiagramError(f"unknown corpus entry {name!r}") from None


def corpus_get(name: str) -> Diagram:
    d = corpus_entry(name).diagram()
    validate(d)
    return d
