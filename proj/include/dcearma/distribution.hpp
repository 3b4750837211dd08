#ifndef DCEARMA_DISTRIBUTION_HPP
#define DCEARMA_DISTRIBUTION_HPP

#include <memory>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "dcearma/rng.hpp"

namespace dcearma {

struct Atom {
    double value;
    double weight;
};

struct GaussianSpec {
    double mean = 0.0;
    double variance = 1.0;
};

struct UniformSpec {
    double lo = 0.0;
    double hi = 1.0;
};

class DceDistribution;

/// Continuous part of an independent sum of two mixed laws. Sampling-only:
/// draws (x1, x2) conditioned on at least one component being continuous.
struct SumSpec {
    std::shared_ptr<const DceDistribution> lhs;
    std::shared_ptr<const DceDistribution> rhs;
};

using ContinuousSpec = std::variant<GaussianSpec, UniformSpec, SumSpec>;

/// Scalar law with an alpha-weighted absolutely continuous part and a
/// finite atom list carrying the remaining 1-alpha mass. alpha is the
/// continuity chance of the Lebesgue decomposition.
class DceDistribution {
public:
    /// General mixture. Atom weights must be nonnegative and sum to 1
    /// (within 1e-12); atom values must be pairwise distinct.
    DceDistribution(double alpha, std::vector<Atom> atoms, ContinuousSpec continuous);

    /// Purely discrete law (alpha = 0).
    static DceDistribution discrete(std::vector<Atom> atoms);

    /// Purely continuous law (alpha = 1).
    static DceDistribution continuous_only(ContinuousSpec spec);

    /// Convenience constructors for the laws used throughout the tests.
    static DceDistribution rademacher();
    static DceDistribution bernoulli_gaussian(double alpha, double mean = 0.0,
                                              double variance = 1.0);

    double alpha() const { return alpha_; }
    const std::vector<Atom>& atoms() const { return atoms_; }
    bool has_continuous() const { return has_continuous_; }
    const ContinuousSpec& continuous() const { return continuous_; }

    /// One draw; nu = true when the continuous component fired.
    std::pair<double, bool> draw(RngStream& rng) const;

    /// Draw from the continuous component only.
    double draw_continuous(RngStream& rng) const;

    /// Draw from the atom law only.
    double draw_atom(RngStream& rng) const;

    std::string describe() const;

private:
    double alpha_;
    std::vector<Atom> atoms_;
    ContinuousSpec continuous_;
    bool has_continuous_;
    std::vector<double> atom_cdf_;
};

/// ExcitationSample: xi values plus the Bernoulli flags nu (1 = continuous).
struct ExcitationSample {
    std::vector<double> xi;
    std::vector<unsigned char> nu;
};

/// Draw `count` i.i.d. excitation values with their continuity flags.
ExcitationSample sample_excitation(const DceDistribution& dist, int count, RngStream& rng);

/// Law of the independent sum of two finite-atom mixed laws. The returned
/// atom list is the exact convolution of the inputs (colliding values
/// merged); alpha = 1 - (1-a1)(1-a2). The continuous part is recorded as a
/// sampling-only SumSpec.
DceDistribution compose_sum_distribution(const DceDistribution& d1,
                                         const DceDistribution& d2);

} // namespace dcearma

#endif
