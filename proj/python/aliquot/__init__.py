"""Aliquot preimages of integers with restricted digits.

Counting and sieving run in the compiled ``_core`` extension. Functions that
produce experiment reports return plain dicts with ``parameters`` and
``results`` blocks, the same shape the command line tool prints.
"""

import json as _json
from fractions import Fraction as _Fraction

from ._core import (
    DigitSet,
    OverflowError,
    ParameterError,
    ResourceError,
    ab_decompose,
    bound_suite,
    choose_k,
    class_counts,
    count_in_class,
    count_up_to,
    enumerate,
    is_ellipsephic,
    is_prime,
    key_lemma_count,
    run_cli,
    s,
    sigma,
    sigma_range,
    version,
)
from . import _core

__version__ = version


def _digits(digit_set):
    return DigitSet.parse(digit_set) if isinstance(digit_set, str) else digit_set


def preimage_count(x, digit_set, gamma=0.5, threads=0):
    return _json.loads(_core._preimage_count(x, _digits(digit_set), gamma, threads))


def s1_s2_split(x, digit_set, k, threads=0):
    return _json.loads(_core._split(x, _digits(digit_set), k, threads))


def key_lemma_params(x, base, k):
    return _json.loads(_core._key_lemma_params(x, base, k))


def omega_s_stats(x, epsilon, threads=0):
    return _json.loads(_core._omega_stats(x, epsilon, threads))


def residue_counts(x, p, threads=0):
    return _json.loads(_core._residue_counts(x, p, threads))


def goldbach_count(x, digit_set, threads=0):
    return _json.loads(_core._goldbach_count(x, _digits(digit_set), threads))


def c_of_D(digit_set):
    return _Fraction(*_core.c_of_D(_digits(digit_set)))


__all__ = [
    "DigitSet",
    "OverflowError",
    "ParameterError",
    "ResourceError",
    "ab_decompose",
    "bound_suite",
    "c_of_D",
    "choose_k",
    "class_counts",
    "count_in_class",
    "count_up_to",
    "goldbach_count",
    "is_ellipsephic",
    "is_prime",
    "key_lemma_count",
    "key_lemma_params",
    "omega_s_stats",
    "preimage_count",
    "residue_counts",
    "run_cli",
    "s",
    "s1_s2_split",
    "sigma",
    "sigma_range",
]
