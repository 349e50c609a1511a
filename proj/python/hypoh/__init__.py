"""Finite-field factorization censuses and wreath-product predictions."""

import json
from fractions import Fraction

from . import _hypoh
from ._hypoh import DomainError, ParseError

__all__ = [
    "DomainError",
    "ParseError",
    "census",
    "correlation",
    "count_transitive",
    "discriminant",
    "factor_type",
    "field_info",
    "is_irreducible",
    "predict_density",
    "run_cli",
    "swan",
    "symbolic_discriminant",
]


def run_cli(*args):
    """Run the command-line tool in-process; returns (exit_code, stdout, stderr)."""
    return _hypoh.run_cli([str(a) for a in args])


def field_info(p, k=1):
    return json.loads(_hypoh.field_info(p, k))


def census(p, n, fs, k=1, *, sample=False, samples=0, seed=0, raw=False, threads=1):
    if isinstance(fs, str):
        fs = [fs]
    return json.loads(_hypoh.census(p, k, n, list(fs), sample, samples, seed, raw, threads))


def predict_density(n, orbit_sizes, targets=None):
    num, den = _hypoh.predict_density(n, list(orbit_sizes), targets)
    return Fraction(num, den)


def count_transitive(n, orbit_sizes, threads=1):
    return _hypoh.count_transitive(n, list(orbit_sizes), threads)


def factor_type(poly, p, k=1):
    return _hypoh.factor_type(p, k, poly)


def is_irreducible(poly, p, k=1):
    return _hypoh.is_irreducible(p, k, poly)


def discriminant(poly, p, k=1):
    return _hypoh.discriminant(p, k, poly)


def symbolic_discriminant(poly, p, k=1):
    return _hypoh.symbolic_discriminant(p, k, poly)


def swan(max_degree, threads=1):
    return json.loads(_hypoh.swan(max_degree, threads))


def correlation(k, omega):
    return json.loads(_hypoh.correlation(k, [str(w) for w in omega]))
