// SPDX-License-Identifier: Apache-2.0

// Machinery shared by the quadratic and general pipelines.

#pragma once

#include "recur/general.hpp"
#include "recur/quadratic.hpp"

#include <functional>
#include <string>

namespace recur::detail {

using ChainBuilder =
    std::function<ChainResult(std::span<const TorusValue>, std::size_t m, const BigInt &X)>;

/// The combination step of a refinement on an already built chain.
RefineOutcome refine_with_chain(std::span<const TorusValue> alphas, int k, std::size_t s,
                                ChainResult chain, const BigInt &g, const WitnessProducer &producer,
                                const SolverConfig &cfg);

/// scan / recursion / fallback-scan driver for h_j(n) = alpha_j n^k, k >= 2.
Certificate run_monomial(std::span<const TorusValue> alphas, int k, const BigInt &N,
                         const SolverConfig &cfg, const ChainBuilder &chain_builder);

/// Exact scan of [1, limit] as a certificate.
Certificate scan_certificate(const PolySystem &polys, const BigInt &N, const BigInt &limit,
                             std::string method);

std::string join(const std::vector<BigInt> &xs);
std::string join(const std::vector<std::size_t> &xs);

} // namespace recur::detail
