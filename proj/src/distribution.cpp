#include "dcearma/distribution.hpp"

#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>

#include "dcearma/errors.hpp"

namespace dcearma {

namespace {

bool values_collide(double a, double b) {
    double scale = std::max({1.0, std::fabs(a), std::fabs(b)});
    return std::fabs(a - b) <= 1e-12 * scale;
}

} // namespace

DceDistribution::DceDistribution(double alpha, std::vector<Atom> atoms,
                                 ContinuousSpec continuous)
    : alpha_(alpha), atoms_(std::move(atoms)), continuous_(std::move(continuous)),
      has_continuous_(true) {
    if (!(alpha >= 0.0 && alpha <= 1.0)) {
        throw std::invalid_argument("DceDistribution: alpha must be in [0,1]");
    }
    if (alpha_ < 1.0) {
        if (atoms_.empty()) {
            throw std::invalid_argument("DceDistribution: alpha < 1 needs atoms");
        }
        double total = 0.0;
        for (const auto& a : atoms_) {
            if (!(a.weight >= 0.0)) {
                throw std::invalid_argument("DceDistribution: negative atom weight");
            }
            if (!std::isfinite(a.value)) {
                throw std::invalid_argument("DceDistribution: non-finite atom value");
            }
            total += a.weight;
        }
        if (std::fabs(total - 1.0) > 1e-12) {
            throw std::invalid_argument("DceDistribution: atom weights must sum to 1");
        }
        for (std::size_t i = 0; i < atoms_.size(); ++i) {
            for (std::size_t j = i + 1; j < atoms_.size(); ++j) {
                if (values_collide(atoms_[i].value, atoms_[j].value)) {
                    throw std::invalid_argument(
                        "DceDistribution: atom values must be pairwise distinct");
                }
            }
        }
        atom_cdf_.reserve(atoms_.size());
        double acc = 0.0;
        for (const auto& a : atoms_) {
            acc += a.weight;
            atom_cdf_.push_back(acc);
        }
        atom_cdf_.back() = 1.0;
    }
    if (const auto* g = std::get_if<GaussianSpec>(&continuous_)) {
        if (!(g->variance > 0.0)) {
            throw std::invalid_argument("DceDistribution: Gaussian variance must be > 0");
        }
    } else if (const auto* u = std::get_if<UniformSpec>(&continuous_)) {
        if (!(u->lo < u->hi)) {
            throw std::invalid_argument("DceDistribution: Uniform needs lo < hi");
        }
    }
}

DceDistribution DceDistribution::discrete(std::vector<Atom> atoms) {
    DceDistribution d(0.0, std::move(atoms), GaussianSpec{});
    d.has_continuous_ = false; // alpha = 0: the continuous spec is never used
    return d;
}

DceDistribution DceDistribution::continuous_only(ContinuousSpec spec) {
    DceDistribution d(1.0, {}, std::move(spec));
    return d;
}

DceDistribution DceDistribution::rademacher() {
    return discrete({{-1.0, 0.5}, {+1.0, 0.5}});
}

DceDistribution DceDistribution::bernoulli_gaussian(double alpha, double mean,
                                                    double variance) {
    return DceDistribution(alpha, {{0.0, 1.0}}, GaussianSpec{mean, variance});
}

double DceDistribution::draw_continuous(RngStream& rng) const {
    if (!has_continuous_) {
        throw std::logic_error("DceDistribution: no continuous component");
    }
    if (const auto* g = std::get_if<GaussianSpec>(&continuous_)) {
        return rng.normal(g->mean, std::sqrt(g->variance));
    }
    if (const auto* u = std::get_if<UniformSpec>(&continuous_)) {
        return rng.uniform(u->lo, u->hi);
    }
    const auto& s = std::get<SumSpec>(continuous_);
    // condition on "at least one summand continuous"
    for (;;) {
        auto [x1, c1] = s.lhs->draw(rng);
        auto [x2, c2] = s.rhs->draw(rng);
        if (c1 || c2) return x1 + x2;
    }
}

double DceDistribution::draw_atom(RngStream& rng) const {
    if (atoms_.empty()) {
        throw std::logic_error("DceDistribution: no atoms");
    }
    double u = rng.uniform01();
    for (std::size_t i = 0; i < atom_cdf_.size(); ++i) {
        if (u < atom_cdf_[i]) return atoms_[i].value;
    }
    return atoms_.back().value;
}

std::pair<double, bool> DceDistribution::draw(RngStream& rng) const {
    bool continuous = alpha_ > 0.0 && (alpha_ >= 1.0 || rng.bernoulli(alpha_));
    if (continuous) return {draw_continuous(rng), true};
    return {draw_atom(rng), false};
}

std::string DceDistribution::describe() const {
    std::ostringstream os;
    os << "alpha=" << alpha_ << " atoms={";
    for (std::size_t i = 0; i < atoms_.size(); ++i) {
        if (i) os << ",";
        os << atoms_[i].value << ":" << atoms_[i].weight;
    }
    os << "}";
    if (has_continuous_) {
        if (const auto* g = std::get_if<GaussianSpec>(&continuous_)) {
            os << " gaussian(" << g->mean << "," << g->variance << ")";
        } else if (const auto* u = std::get_if<UniformSpec>(&continuous_)) {
            os << " uniform(" << u->lo << "," << u->hi << ")";
        } else {
            os << " sum";
        }
    }
    return os.str();
}

ExcitationSample sample_excitation(const DceDistribution& dist, int count, RngStream& rng) {
    if (count < 0) throw std::invalid_argument("sample_excitation: count < 0");
    ExcitationSample out;
    out.xi.resize(static_cast<std::size_t>(count));
    out.nu.resize(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) {
        auto [x, c] = dist.draw(rng);
        out.xi[static_cast<std::size_t>(i)] = x;
        out.nu[static_cast<std::size_t>(i)] = c ? 1 : 0;
    }
    return out;
}

DceDistribution compose_sum_distribution(const DceDistribution& d1,
                                         const DceDistribution& d2) {
    double alpha = 1.0 - (1.0 - d1.alpha()) * (1.0 - d2.alpha());
    if (alpha >= 1.0) {
        SumSpec spec{std::make_shared<DceDistribution>(d1),
                     std::make_shared<DceDistribution>(d2)};
        return DceDistribution::continuous_only(spec);
    }

    // exact convolution of the atom lists; colliding values merged
    std::vector<Atom> conv;
    for (const auto& a : d1.atoms()) {
        for (const auto& b : d2.atoms()) {
            double v = a.value + b.value;
            double w = a.weight * b.weight;
            bool merged = false;
            for (auto& c : conv) {
                if (values_collide(c.value, v)) {
                    c.weight += w;
                    merged = true;
                    break;
                }
            }
            if (!merged) conv.push_back({v, w});
        }
    }
    double total = 0.0;
    for (const auto& c : conv) total += c.weight;
    for (auto& c : conv) c.weight /= total; // weights conditioned on "both discrete"

    if (alpha <= 0.0) {
        return DceDistribution::discrete(std::move(conv));
    }
    SumSpec spec{std::make_shared<DceDistribution>(d1),
                 std::make_shared<DceDistribution>(d2)};
    return DceDistribution(alpha, std::move(conv), spec);
}

} // namespace dcearma
