// Copyright 2026 The enlg Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <vector>

#include "enlg/linalg.hpp"

namespace enlg {

// X_m^{k1} Z_m^{k2} with X e_c = e_{c+1 mod m} and Z e_c = exp(2 pi i c / m) e_c.
ComplexMat gen_pauli(int m, int k1, int k2);

// phi_{k1,k2} = (1/m) vec(W_{k1,k2}) vec(W_{k1,k2})^*, listed at index k1*m + k2.
std::vector<HermMat> bell_basis(int m);

bool is_prime(int d);

// d+1 mutually unbiased bases for prime d. Element [b] is a d x d matrix whose
// columns are the basis vectors; basis 0 is the computational basis. The first
// nonzero component of every vector is real and positive.
std::vector<ComplexMat> mub(int d);

// Haar-random unitary from the QR decomposition of a complex Gaussian matrix.
ComplexMat random_unitary(int n, std::uint64_t seed);

// Runs the generalized teleportation protocol on rho by exact operator algebra,
// averaging over the m^2 Bell outcomes, and returns the receiver's state.
HermMat teleport_simulate(int m, const HermMat& rho);

bool is_density(const HermMat& rho, double tol = 1e-9);

}  // namespace enlg
