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

import numpy as np
import pytest

import framelab

EXAMPLE = "i,-i,1,1+i,2-i"


def test_example_frame_is_full_spark():
    report = framelab.check_haar(5, vector=EXAMPLE)
    assert report["status"] == "PASS"
    assert report["subsets_checked"] == 252
    assert report["certificate"] is True


def test_even_dimension_fails_with_witness():
    report = framelab.check_haar(4, seed=7)
    assert report["status"] == "FAIL"
    assert report["failing_subset"] == ["e", "r", "s", "r^3s"]
    assert len(report["kernel_witness"]) == 4


def test_float_mode_agrees():
    assert framelab.check_haar(5, vector=EXAMPLE, mode="float")["status"] == "PASS"
    assert framelab.check_haar(6, seed=1, mode="float")["status"] == "FAIL"


def test_vector_and_seed_are_exclusive():
    with pytest.raises(ValueError):
        framelab.check_haar(5)
    with pytest.raises(ValueError):
        framelab.check_haar(5, vector=EXAMPLE, seed=1)
    with pytest.raises(ValueError):
        framelab.check_haar(5, vector="1,2")


def test_certificates_and_audits():
    assert framelab.certify_even(6)["verified"] is True
    four = framelab.chebotarev(4)
    assert four["zero_minor"] == {"rows": [0, 2], "cols": [0, 2]}
    assert framelab.chebotarev(5)["all_nonzero"] is True
    erasures = framelab.audit_erasures(5, vector=EXAMPLE)
    assert erasures["patterns"] == 252 and erasures["singular_patterns"] == 0
    tau = framelab.tau_audit(9, 3, seed=2)
    assert ["e", "r^3"] in tau["dependent_pairs"]
    prime = framelab.prime_audit(3, ["e", "r", "s"])
    assert prime["nonzero"] is True


def test_orbit_matrix_is_an_orbit():
    m = framelab.orbit_matrix(5, vector=EXAMPLE)
    assert m.shape == (10, 5)
    assert m.dtype == np.complex128
    # Rows are permutations of the generating vector under kappa.
    for row in m:
        assert np.allclose(np.sort_complex(row), np.sort_complex(m[0]))
    assert framelab.random_vector(5, 3, 11) == framelab.random_vector(5, 3, 11)
