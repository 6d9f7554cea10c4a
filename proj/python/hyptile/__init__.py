"""Exact two-size hypercube lattice tilings.

Thin wrapper over the native ``_hyptile`` module: rationals go in as
anything ``Fraction`` accepts and come back as ``Fraction``.
"""

import json
from fractions import Fraction

from . import _hyptile
from ._hyptile import HyptileError

__all__ = [
    "HyptileError",
    "error_code",
    "basis",
    "reduction_basis",
    "canonicalize",
    "locate",
    "is_lattice_member",
    "check_unilateral",
    "tiles_in_box",
    "stabilizer_closed_form",
    "stabilizer_brute_force",
    "lattice_equivalent",
    "det",
    "solve_exact",
    "minimal_axis_period",
    "adjugate_entry_check",
    "torus_report",
    "verify",
    "render_2d",
    "render_torus_map",
]


def _s(x):
    f = Fraction(x)
    return f"{f.numerator}/{f.denominator}"


def _v(xs):
    return [_s(x) for x in xs]


def _m(rows):
    return [_v(r) for r in rows]


def _fv(xs):
    return [Fraction(x) for x in xs]


def _fm(rows):
    return [_fv(r) for r in rows]


def error_code(exc):
    """Code name carried by a HyptileError, e.g. 'InvalidParams'."""
    return str(exc).split(":", 1)[0]


def det(matrix):
    return Fraction(_hyptile.det(_m(matrix)))


def solve_exact(matrix, v):
    return _fv(_hyptile.solve_exact(_m(matrix), _v(v)))


def basis(n, p, q):
    """Columns are the lattice generators a_1..a_n."""
    return _fm(_hyptile.basis(n, _s(p), _s(q)))


def reduction_basis(n, p, q):
    return _fm(_hyptile.reduction_basis(n, _s(p), _s(q)))


def canonicalize(n, p, q, x):
    c, k = _hyptile.canonicalize(n, _s(p), _s(q), _v(x))
    return _fv(c), [int(t) for t in k]


def locate(n, p, q, x):
    kind, anchor = _hyptile.locate(n, _s(p), _s(q), _v(x))
    return kind, [int(t) for t in anchor]


def is_lattice_member(n, p, q, v):
    return _hyptile.is_lattice_member(n, _s(p), _s(q), _v(v))


def check_unilateral(n, p, q):
    return _hyptile.check_unilateral(n, _s(p), _s(q))


def tiles_in_box(n, p, q, lo, hi):
    return [(kind, [int(t) for t in anchor])
            for kind, anchor in _hyptile.tiles_in_box(n, _s(p), _s(q), _v(lo), _v(hi))]


def stabilizer_closed_form(n):
    return _hyptile.stabilizer_closed_form(n)


def stabilizer_brute_force(n, p, q):
    return _hyptile.stabilizer_brute_force(n, _s(p), _s(q))


def lattice_equivalent(columns, n, p, q):
    return _hyptile.lattice_equivalent(_m(columns), n, _s(p), _s(q))


def minimal_axis_period(n, p, q, axis=1):
    return _hyptile.minimal_axis_period(n, int(p), int(q), axis)


def adjugate_entry_check(n, p, q):
    return _hyptile.adjugate_entry_check(n, int(p), int(q))


def torus_report(n, p, q, scan=False, **kw):
    return json.loads(_hyptile.torus_report(n, int(p), int(q), scan=scan, **kw))


def verify(n, p, q, **kw):
    return json.loads(_hyptile.verify(n, _s(p), _s(q), **kw))


def render_2d(p, q, lo, hi, scale=40):
    """Returns (svg, cover_exact, same_size_adjacency_ok)."""
    return _hyptile.render_2d(_s(p), _s(q), _v(lo), _v(hi), _s(scale))


def render_torus_map(p, q):
    return _hyptile.render_torus_map(int(p), int(q))
