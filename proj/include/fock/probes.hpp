#pragma once

#include <functional>
#include <string>
#include <vector>

#include "fock/random.hpp"

namespace fock {

/// One registered inequality: a sampler producing (log lhs, log rhs-shape)
/// pairs, where the rhs shape is the bound with its constant stripped.
/// The first few sample indices are deterministic extremes (aligned pairs,
/// boundary radii); the rest are seeded draws.
struct InequalitySpec {
    std::string id;
    std::string description;
    std::function<std::pair<double, double>(RandomSource&, int index)> sample;
};

struct ProbeResult {
    double c_hat = 0.0;  // max over samples of lhs / rhs-shape
    double drift = 0.0;  // relative change of c_hat when samples quadruple
    int samples = 0;
};

const std::vector<InequalitySpec>& probe_registry();
std::vector<std::string> registry_list();
const InequalitySpec& find_spec(const std::string& id);

/// Evaluates the fitted constant over `samples` draws and its drift over 4x
/// the draws (the extra draws extend the same stream). samples >= 16.
ProbeResult probe(const InequalitySpec& spec, int samples, uint64_t seed);

}  // namespace fock
