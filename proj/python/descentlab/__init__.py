"""Python access to the descentlab core."""

import json

from . import _descentlab
from ._descentlab import family_names, mfs_orbit, polynomial, psi, registry_ids, suite_names, theta_tilde

__all__ = [
    "family_names",
    "mfs_orbit",
    "polynomial",
    "psi",
    "registry_ids",
    "run_suite",
    "signed_stats",
    "stats",
    "suite_names",
    "theta_tilde",
    "verify",
]


def stats(perm: str) -> dict:
    return json.loads(_descentlab.stats_json(perm))


def signed_stats(perm: str) -> dict:
    return json.loads(_descentlab.signed_stats_json(perm))


def verify(identity: str, perturb: bool = False, **params) -> dict:
    return json.loads(_descentlab.verify_json(identity, json.dumps(params), perturb))


def run_suite(name: str, max_n: int | None = None, degree: int | None = None, seed: int = 24301, jobs: int = 1) -> list:
    return json.loads(_descentlab.suite_json(name, max_n, degree, seed, jobs))
