# Copyright 2026 The framelab Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Exact full-spark certification for dihedral group frames.

Reports come back as plain dicts with the same fields as the CLI's JSON output.
"""
import json as _json

from . import _framelab
from ._framelab import orbit_matrix, random_vector

__all__ = [
    "audit_erasures",
    "certify_even",
    "chebotarev",
    "check_haar",
    "orbit_matrix",
    "prime_audit",
    "random_vector",
    "tau_audit",
]


def check_haar(n, rep="kappa", vector=None, seed=None, mode="exact", threads=0, screen=True):
    return _json.loads(_framelab.check_haar(n, rep, vector, seed, mode, threads, screen))


def certify_even(n):
    return _json.loads(_framelab.certify_even(n))


def chebotarev(n, mode="exact"):
    return _json.loads(_framelab.chebotarev(n, mode))


def audit_erasures(n, rep="kappa", vector=None, seed=None, threads=0):
    return _json.loads(_framelab.audit_erasures(n, rep, vector, seed, threads))


def prime_audit(n, subset):
    return _json.loads(_framelab.prime_audit(n, list(subset)))


def tau_audit(n, j, vector=None, seed=None):
    return _json.loads(_framelab.tau_audit(n, j, vector, seed))
