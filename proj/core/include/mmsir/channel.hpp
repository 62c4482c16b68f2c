// SPDX-License-Identifier: Apache-2.0
//
// mmwave-sir: measurement-based mmWave channel model and stochastic-geometry
// SIR coverage analysis for large-scale cellular networks
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
// ------------------------------------------------------------------------

#pragma once

#include <complex>
#include <random>
#include <vector>

#include "mmsir/params.hpp"

namespace mmsir {

using cplx = std::complex<double>;

struct Subpath {
    double aoa = 0.0;   // radians
    double aod = 0.0;   // radians
    double power = 0.0; // normalized share, sum over all subpaths is 1
    double phase = 0.0; // radians in [0, 2pi)
};

struct Cluster {
    int subpath_count = 0;         // 1..10
    double central_aoa = 0.0;      // radians in [0, 2pi)
    double central_aod = 0.0;      // radians in [0, 2pi)
    double angular_spread = 0.0;   // radians, >= 0.0122
    std::vector<Subpath> subpaths; // size subpath_count
};

/// One random draw of the cluster/subpath channel state for a single link.
struct ClusterRealization {
    std::vector<Cluster> clusters; // size >= 1

    int cluster_count() const { return static_cast<int>(clusters.size()); }
    int total_subpaths() const;

    /// Throws validation_error if any structural invariant is broken
    /// (cluster/subpath counts, spread floor, power normalization).
    void validate() const;
};

/// Draws cluster count, per-cluster subpath counts, central angles, angular
/// spread, per-subpath powers (normalized to unit sum) and phases.
ClusterRealization sample_cluster_realization(std::mt19937_64& rng, const SystemParams& params);

/// Splits an element count into the {horizontal, vertical} dimensions of a
/// planar array: horizontal = smallest divisor >= sqrt(n). Square counts
/// (1, 4, 16, 64, 256, ...) give square arrays.
std::pair<int, int> planar_split(int n);

/// Spatial signature of an n-element uniform planar array at half-wavelength
/// spacing, vertical angle pinned broadside (pi/2). The flattened form is
/// kron(u_h(theta), ones(n_v)) with u_h(theta)[m] = exp(j*pi*m*cos(theta)),
/// so only the horizontal dimension carries angle dependence.
std::vector<cplx> spatial_signature(double theta, int n);

struct BeamVector {
    std::vector<cplx> entries;
    double steer_angle = 0.0;

    int size() const { return static_cast<int>(entries.size()); }
};

/// Matched-filter beam for the transpose pairing: w(theta) = conj(u(theta))/sqrt(n),
/// so that w(theta)^T u(theta) = sqrt(n) exactly.
BeamVector beamforming_vector(double theta, int n);

struct ChannelMatrix {
    int n_rx = 0;
    int n_tx = 0;
    std::vector<cplx> entries; // row-major, n_rx rows x n_tx columns

    cplx& at(int r, int t) { return entries[static_cast<std::size_t>(r) * n_tx + t]; }
    const cplx& at(int r, int t) const { return entries[static_cast<std::size_t>(r) * n_tx + t]; }
    double frobenius_sq() const;
};

/// H = sum_{k,l} g_kl u_rx(aoa_kl) u_tx(aod_kl)^T with g_kl = sqrt(P_kl) exp(-j phase_kl).
/// The transpose (rather than Hermitian) outer product matches the transpose
/// pairing w^T H w used throughout; with i.i.d. uniform subpath phases the two
/// conventions produce identically distributed gains.
ChannelMatrix channel_matrix(const ClusterRealization& realization, const SystemParams& params);

/// Dirichlet kernel sum_{m=0}^{n-1} exp(j*pi*m*delta_cos); |result| peaks at n.
cplx array_factor(double delta_cos, int n);

/// Un-normalized inner product u(theta)^T conj(u(theta_w)) of two n-element
/// planar signatures: array_factor over the horizontal dimension times the
/// coherent vertical count. |result| peaks at n when theta = theta_w.
cplx signature_inner(double cos_theta, double cos_steer, int n);

} // namespace mmsir
