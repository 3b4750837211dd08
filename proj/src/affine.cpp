#include "dcearma/affine.hpp"

#include <cmath>
#include <stdexcept>

#include "dcearma/errors.hpp"
#include "dcearma/linalg.hpp"
#include "dcearma/parallel.hpp"

namespace dcearma {

int NuPattern::popcount() const {
    int c = 0;
    for (auto f : flags) c += f ? 1 : 0;
    return c;
}

NuPattern NuPattern::from_path(const SamplePath& path) {
    NuPattern p;
    p.n = path.n;
    p.p = path.p;
    p.q = path.q;
    p.flags = path.nu;
    return p;
}

NuPattern NuPattern::all_ones(int n, int p, int q) {
    NuPattern out{n, p, q, std::vector<unsigned char>(static_cast<std::size_t>(n + q - p), 1)};
    return out;
}

NuPattern NuPattern::all_zeros(int n, int p, int q) {
    NuPattern out{n, p, q, std::vector<unsigned char>(static_cast<std::size_t>(n + q - p), 0)};
    return out;
}

NuPattern NuPattern::bernoulli(int n, int p, int q, double alpha, RngStream& rng) {
    NuPattern out{n, p, q, std::vector<unsigned char>(static_cast<std::size_t>(n + q - p))};
    for (auto& f : out.flags) f = rng.bernoulli(alpha) ? 1 : 0;
    return out;
}

namespace {

void check_pattern(const ToeplitzSet& ts, const NuPattern& pattern) {
    if (pattern.n != ts.n || pattern.p != ts.p || pattern.q != ts.q ||
        static_cast<int>(pattern.flags.size()) != ts.n + ts.q - ts.p) {
        throw DimensionMismatch("NuPattern does not match the Toeplitz block");
    }
}

} // namespace

int singular_dimension(const ToeplitzSet& ts, const NuPattern& pattern) {
    check_pattern(ts, pattern);
    const int k = pattern.popcount();
    Eigen::MatrixXd sub(ts.theta_mat.rows(), k);
    int j = 0;
    for (int c = 0; c < static_cast<int>(pattern.flags.size()); ++c) {
        if (pattern.flags[static_cast<std::size_t>(c)]) sub.col(j++) = ts.theta_mat.col(c);
    }
    return ts.p + numerical_rank(sub);
}

ComponentFactory::ComponentFactory(const ToeplitzSet& ts) : ts_(ts) {
    transfer_ = ts.phi_hat.triangularView<Eigen::Lower>().solve(ts.theta_hat);
}

SingularComponent ComponentFactory::build(const NuPattern& pattern,
                                          const std::vector<double>& atom_assignment) const {
    check_pattern(ts_, pattern);
    const int n = ts_.n;
    const int p = ts_.p;
    const int window = pattern.window_length();
    const int k = pattern.popcount();
    const int zeros = window - k;
    if (static_cast<int>(atom_assignment.size()) != zeros) {
        throw AtomAssignmentMismatch("expected " + std::to_string(zeros) +
                                     " atom values, got " +
                                     std::to_string(atom_assignment.size()));
    }

    // columns of PhiHat^{-1} ThetaHat U_V: the p boundary columns plus the
    // continuous-slot columns
    Eigen::MatrixXd m(n, p + k);
    m.leftCols(p) = transfer_.leftCols(p);
    int j = p;
    for (int c = 0; c < window; ++c) {
        if (pattern.flags[static_cast<std::size_t>(c)]) m.col(j++) = transfer_.col(p + c);
    }

    SingularComponent comp;
    comp.pattern = pattern;
    comp.atom_assignment = atom_assignment;

    if (p + k == 0) {
        comp.dim = 0;
        comp.basis = Eigen::MatrixXd::Zero(n, 0);
        Eigen::VectorXd discrete0 = Eigen::VectorXd::Zero(n + ts_.q);
        int a0 = 0;
        for (int c = 0; c < window; ++c) {
            if (!pattern.flags[static_cast<std::size_t>(c)]) {
                discrete0(p + c) = atom_assignment[static_cast<std::size_t>(a0++)];
            }
        }
        comp.offset = transfer_ * discrete0;
        return comp;
    }

    Eigen::BDCSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeThinU);
    const auto& sv = svd.singularValues();
    double smax = sv.size() > 0 ? sv(0) : 0.0;
    int rank = 0;
    for (int i = 0; i < sv.size(); ++i) {
        if (smax > 0.0 && sv(i) > kRankThreshold * smax) ++rank;
    }
    comp.dim = rank;
    comp.basis = svd.matrixU().leftCols(rank);

    Eigen::VectorXd discrete = Eigen::VectorXd::Zero(n + ts_.q);
    int a = 0;
    for (int c = 0; c < window; ++c) {
        if (!pattern.flags[static_cast<std::size_t>(c)]) {
            discrete(p + c) = atom_assignment[static_cast<std::size_t>(a++)];
        }
    }
    comp.offset = transfer_ * discrete;
    return comp;
}

SingularComponent ComponentFactory::genie(const SamplePath& path) const {
    NuPattern pattern = NuPattern::from_path(path);
    std::vector<double> atoms;
    atoms.reserve(path.xi.size());
    for (std::size_t i = 0; i < path.xi.size(); ++i) {
        if (!path.nu[i]) atoms.push_back(path.xi[i]);
    }
    return build(pattern, atoms);
}

SingularComponent build_component(const ArmaModel& model, const ToeplitzSet& ts,
                                  const NuPattern& pattern,
                                  const std::vector<double>& atom_assignment) {
    (void)model; // the block matrices already carry the coefficients
    return ComponentFactory(ts).build(pattern, atom_assignment);
}

double verify_membership(const SamplePath& path, const SingularComponent& comp) {
    Eigen::Map<const Eigen::VectorXd> x(path.x.data(), path.n);
    Eigen::VectorXd centered = x - comp.offset;
    Eigen::VectorXd residual = centered - comp.basis * (comp.basis.transpose() * centered);
    return residual.norm() / (1.0 + x.norm());
}

IntHistogram empirical_dimension_histogram(const ArmaModel& model, int n, int trials,
                                           std::uint64_t seed) {
    if (trials < 1) throw std::invalid_argument("empirical_dimension_histogram: trials < 1");
    if (n < model.p + 1) throw BlockTooShort("empirical_dimension_histogram: n must be >= p+1");
    const double alpha = model.excitation.alpha();
    const int rows = n - model.p;
    const int window = n + model.q - model.p;
    std::vector<double> band(static_cast<std::size_t>(model.q) + 1);
    band[0] = 1.0;
    for (int j = 1; j <= model.q; ++j) band[static_cast<std::size_t>(j)] = model.theta[static_cast<std::size_t>(j - 1)];

    auto per_trial = [&](int t) -> int {
        RngStream rng = RngStream::substream(seed, static_cast<std::uint64_t>(t));
        std::vector<unsigned char> nu(static_cast<std::size_t>(window));
        for (auto& f : nu) f = rng.bernoulli(alpha) ? 1 : 0;
        return model.p + banded_selection_rank(band, rows, nu);
    };
    return parallel_trials<IntHistogram>(
        trials, IntHistogram{}, [&](int t) { IntHistogram h; h.add(per_trial(t)); return h; },
        [](IntHistogram& acc, const IntHistogram& h) { acc.merge(h); });
}

std::vector<ConcentrationCheckRow> check_concentration(const IntHistogram& hist, int n,
                                                       int p, int q, double alpha,
                                                       const std::vector<int>& k_grid,
                                                       ConcentrationVariant variant) {
    std::vector<ConcentrationCheckRow> rows;
    rows.reserve(k_grid.size());
    const double trials = static_cast<double>(hist.total);
    for (int k : k_grid) {
        ConcentrationCheckRow row;
        row.k = k;
        auto bounds = concentration_bounds(n, p, q, alpha, k, variant);
        row.regime = bounds.regime;
        switch (bounds.regime) {
        case ConcentrationRegime::Above:
            row.bound = bounds.p_above;
            row.empirical = hist.tail_above(k);
            break;
        case ConcentrationRegime::Below:
            row.bound = bounds.p_below;
            row.empirical = hist.tail_below(k);
            break;
        case ConcentrationRegime::Void:
            row.satisfied = true; // no claim to check
            rows.push_back(row);
            continue;
        }
        row.slack = trials > 0.0
                        ? 4.0 * std::sqrt(std::max(row.bound * (1.0 - row.bound), 0.0) / trials)
                        : 0.0;
        row.satisfied = row.empirical >= row.bound - row.slack;
        rows.push_back(row);
    }
    return rows;
}

} // namespace dcearma
