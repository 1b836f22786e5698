"""Corpus-build constructions: equivariant connected sums of real diagrams.

The first summand is shifted so its fixed X sits in the bottom-right cell and
the second so its fixed O sits in the top-left cell.  The two blocks are laid
along the fixed diagonal sharing that corner cell, whose X and O are dropped.
"""

from __future__ import annotations

import sys

sys.path.insert(0, "/root/pkg/src")

from realgrid.diagram import Diagram, cyclic_shift, validate


def _fixed_col(sigma, n):
    cols = [c for c in range(n) if sigma[c] == n - 1 - c]
    if len(cols) != 1:
        raise ValueError("expected exactly one fixed marker")
    return cols[0]


def connected_sum(d1: Diagram, d2: Diagram) -> Diagram:
    n1, n2 = d1.n, d2.n
    g1 = cyclic_shift(d1, n1 - 1 - _fixed_col(d1.sigma_x, n1))
    g2 = cyclic_shift(d2, -_fixed_col(d2.sigma_o, n2))
    n = n1 + n2 - 1
    so = [None] * n
    sx = [None] * n
    for c in range(n1):
        so[c] = g1.sigma_o[c] + n2 - 1
        if c < n1 - 1:
            sx[c] = g1.sigma_x[c] + n2 - 1
    for c in range(n2):
        sx[c + n1 - 1] = g2.sigma_x[c]
        if c > 0:
            so[c + n1 - 1] = g2.sigma_o[c]
    # the X of g1 in its bottom row and the O of g2 in its top row are gone;
    # column n1-1 keeps g1's O and g2's X, which lands them in the shared row
    d = Diagram(n, tuple(so), tuple(sx))
    validate(d)
    return d
