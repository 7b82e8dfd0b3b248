# Copyright 2026 The symlu Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Smoke tests for the Python bindings, checked against numpy."""

import math
from functools import reduce

import numpy as np
import pytest

import symlu


def kron_all(mats):
    return reduce(np.kron, mats)


def random_unitary(rng):
    z = rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2))
    q, r = np.linalg.qr(z)
    return q * (np.diag(r) / np.abs(np.diag(r)))


def test_dicke_and_ghz_coefficients():
    assert np.allclose(symlu.dicke(4, 2), [0, 0, 1, 0, 0])
    g = symlu.ghz(3)
    assert np.allclose(np.abs(g), [1 / math.sqrt(2), 0, 0, 1 / math.sqrt(2)])
    with pytest.raises(ValueError):
        symlu.dicke(3, 4)


def test_majorana_round_trip():
    psi = symlu.random_state(5, seed=3)
    pts = symlu.majorana_points(psi)
    vectors = []
    for theta, phi, mult in pts:
        v = [math.sin(theta) * math.cos(phi), math.sin(theta) * math.sin(phi), math.cos(theta)]
        vectors.extend([v] * mult)
    back = symlu.points_to_state(vectors)
    assert abs(abs(np.vdot(back, psi)) - 1) < 1e-10


def test_classify_labels():
    assert symlu.classify_state(symlu.dicke(4, 2))["class"] == "iva"
    assert symlu.classify_state(symlu.ghz(3))["class"] == "iia"
    r = symlu.classify_state(symlu.dicke(5, 1))
    assert r["class"] == "ivb"
    assert r["k"] == 1


def test_double_cover():
    rng = np.random.default_rng(5)
    g = random_unitary(rng)
    r = symlu.su2_to_so3(g)
    assert np.allclose(r @ r.T, np.eye(3))
    assert np.allclose(symlu.su2_to_so3(symlu.so3_to_su2(r)), r)


def test_symmetry_group_of_tetrahedron():
    s = 1 / math.sqrt(3)
    tet = [[s, s, s], [s, -s, -s], [-s, s, -s], [-s, -s, s]]
    assert symlu.symmetry_group(tet)["order"] == 12


def test_pure_equivalence():
    g = symlu.lu_equivalent_pure(symlu.dicke(6, 1), symlu.dicke(6, 5))
    assert g is not None
    assert symlu.lu_equivalent_pure(symlu.dicke(6, 1), symlu.dicke(6, 2)) is None


def test_mixed_equivalence_and_stabilizer_check():
    rng = np.random.default_rng(7)
    n = 3
    v = np.kron(np.kron([1, 0.3], [1, 0.3]), [1, 0.3])
    rho = 0.7 * np.outer(v, v.conj()) / np.vdot(v, v).real + 0.3 * np.eye(8) / 8
    g = random_unitary(rng)
    k = kron_all([g] * n)
    target = k @ rho @ k.conj().T
    r = symlu.lu_equivalent_mixed(rho, target)
    assert r["verdict"] == "equivalent"
    kk = kron_all([r["g"]] * n)
    assert np.linalg.norm(kk @ rho @ kk.conj().T - target) <= r["threshold"]
    x = np.array([[0, 1], [1, 0]])
    ghz_vec = np.zeros(8)
    ghz_vec[[0, 7]] = 1 / math.sqrt(2)
    residual, ok = symlu.check_stabilizes([x, x, x], np.outer(ghz_vec, ghz_vec))
    assert ok and residual < 1e-12
    with pytest.raises(NotImplementedError):
        symlu.lu_equivalent_mixed(np.eye(4) / 4, np.eye(4) / 4)


def test_canonical_ghz_form():
    tau = np.zeros((8, 8), dtype=complex)
    tau[0, 0], tau[7, 7] = 0.3, 0.7
    tau[0, 7] = 0.2j
    tau[7, 0] = -0.2j
    c = symlu.canonical_ghz_form(tau)
    assert c["I"] == "000"
    assert abs(c["a"] - 0.7) < 1e-12
    assert abs(c["b"] - 0.2) < 1e-12


def test_class_census():
    c = symlu.class_census(6)
    assert c["ivb_k"] == [1, 2]
    assert c["discrepancy"]
