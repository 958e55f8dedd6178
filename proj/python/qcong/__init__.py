"""Truncated q-series, partition counts and congruence checks for R*_ell."""

import json

from . import _qcong
from ._qcong import (
    QcongError,
    count,
    enumerate_small,
    eligible_primes,
    eta_quotient,
    euler_product,
    families,
    is_prime,
    legendre,
    phi,
    psi,
    rstar_series,
)

__all__ = [
    "QcongError", "count", "enumerate_small", "eligible_primes", "eta_quotient",
    "euler_product", "families", "is_prime", "legendre", "phi", "psi", "rstar_series",
    "verify_identity", "verify_theorem", "verify_intermediates", "run_acceptance", "search",
]


def verify_identity(tag, p=0, n=0, order=500):
    return json.loads(_qcong.verify_identity_json(tag, p, n, order))


def verify_theorem(family, p=0, alpha=0, k=1, ell=0, modulus=0, over_two=False,
                   dissection_sign=False, terms=500, max_order=200000):
    # p=0 picks the smallest eligible prime for prime families
    return json.loads(_qcong.verify_theorem_json(
        family, p, alpha, k, ell, modulus, over_two, dissection_sign, terms, max_order))


def verify_intermediates(name="all", terms=500):
    return json.loads(_qcong.verify_intermediate_json(name, terms))


def run_acceptance(criteria=()):
    return json.loads(_qcong.run_acceptance_json(list(criteria)))


def search(ell, max_step=4, max_modulus=4, order=500, min_support=50):
    return json.loads(_qcong.search_json(ell, max_step, max_modulus, order, min_support))
