#include "dcearma/model_spec.hpp"

#include <fstream>
#include <sstream>

#include "dcearma/csv.hpp"
#include "dcearma/errors.hpp"

namespace dcearma {

namespace {

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

double parse_double(const std::string& s, int line) {
    try {
        std::size_t pos = 0;
        double v = std::stod(s, &pos);
        if (pos != s.size()) throw std::invalid_argument("trailing characters");
        return v;
    } catch (const std::exception&) {
        throw ConfigError("line " + std::to_string(line) + ": bad number '" + s + "'");
    }
}

std::vector<double> parse_list(const std::string& s, int line) {
    std::vector<double> out;
    std::string t = trim(s);
    if (t.empty()) return out;
    for (const auto& item : split(t, ',')) {
        out.push_back(parse_double(trim(item), line));
    }
    return out;
}

} // namespace

ArmaModel parse_model_string(const std::string& text) {
    int p = -1, q = -1;
    std::vector<double> phi, theta;
    double alpha = -1.0;
    std::vector<Atom> atoms;
    ContinuousSpec continuous = GaussianSpec{};
    bool saw_continuous = false;

    std::istringstream in(text);
    std::string raw;
    int line = 0;
    while (std::getline(in, raw)) {
        ++line;
        std::string s = trim(raw);
        if (s.empty() || s[0] == '#') continue;
        std::size_t eq = s.find('=');
        if (eq == std::string::npos) {
            throw ConfigError("line " + std::to_string(line) + ": expected key = value");
        }
        std::string key = trim(s.substr(0, eq));
        std::string value = trim(s.substr(eq + 1));
        if (key == "p") {
            p = static_cast<int>(parse_double(value, line));
        } else if (key == "q") {
            q = static_cast<int>(parse_double(value, line));
        } else if (key == "phi") {
            phi = parse_list(value, line);
        } else if (key == "theta") {
            theta = parse_list(value, line);
        } else if (key == "alpha") {
            alpha = parse_double(value, line);
        } else if (key == "atoms") {
            if (!value.empty()) {
                for (const auto& pair : split(value, ',')) {
                    auto kv = split(trim(pair), ':');
                    if (kv.size() != 2) {
                        throw ConfigError("line " + std::to_string(line) +
                                          ": atoms need value:weight pairs");
                    }
                    atoms.push_back({parse_double(trim(kv[0]), line),
                                     parse_double(trim(kv[1]), line)});
                }
            }
        } else if (key == "continuous") {
            auto parts = split(value, ':');
            if (parts.size() == 3 && trim(parts[0]) == "gaussian") {
                continuous = GaussianSpec{parse_double(trim(parts[1]), line),
                                          parse_double(trim(parts[2]), line)};
            } else if (parts.size() == 3 && trim(parts[0]) == "uniform") {
                continuous = UniformSpec{parse_double(trim(parts[1]), line),
                                         parse_double(trim(parts[2]), line)};
            } else {
                throw ConfigError("line " + std::to_string(line) +
                                  ": continuous must be gaussian:mean:var or uniform:lo:hi");
            }
            saw_continuous = true;
        } else {
            throw ConfigError("line " + std::to_string(line) + ": unknown key '" + key + "'");
        }
    }
    if (p < 0 || q < 0) throw ConfigError("model file must set p and q");
    if (alpha < 0.0) throw ConfigError("model file must set alpha");
    if (alpha > 0.0 && !saw_continuous) {
        throw ConfigError("alpha > 0 requires a continuous spec");
    }
    if (alpha < 1.0 && atoms.empty()) {
        throw ConfigError("alpha < 1 requires atoms");
    }
    try {
        DceDistribution dist = alpha >= 1.0
                                   ? DceDistribution::continuous_only(continuous)
                               : alpha <= 0.0 ? DceDistribution::discrete(std::move(atoms))
                                              : DceDistribution(alpha, std::move(atoms),
                                                                continuous);
        return ArmaModel(p, q, std::move(phi), std::move(theta), std::move(dist));
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }
}

ArmaModel load_model_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open model file " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_model_string(buf.str());
}

std::string model_to_string(const ArmaModel& model) {
    std::ostringstream out;
    out << "p = " << model.p << "\n";
    out << "q = " << model.q << "\n";
    out << "phi = ";
    for (std::size_t i = 0; i < model.phi.size(); ++i) {
        if (i) out << ",";
        out << csv_double(model.phi[i]);
    }
    out << "\n";
    out << "theta = ";
    for (std::size_t i = 0; i < model.theta.size(); ++i) {
        if (i) out << ",";
        out << csv_double(model.theta[i]);
    }
    out << "\n";
    out << "alpha = " << csv_double(model.excitation.alpha()) << "\n";
    out << "atoms = ";
    const auto& atoms = model.excitation.atoms();
    for (std::size_t i = 0; i < atoms.size(); ++i) {
        if (i) out << ",";
        out << csv_double(atoms[i].value) << ":" << csv_double(atoms[i].weight);
    }
    out << "\n";
    if (model.excitation.has_continuous()) {
        const auto& spec = model.excitation.continuous();
        if (const auto* g = std::get_if<GaussianSpec>(&spec)) {
            out << "continuous = gaussian:" << csv_double(g->mean) << ":"
                << csv_double(g->variance) << "\n";
        } else if (const auto* u = std::get_if<UniformSpec>(&spec)) {
            out << "continuous = uniform:" << csv_double(u->lo) << ":" << csv_double(u->hi)
                << "\n";
        }
        // SumSpec laws are programmatic only; they have no file syntax
    }
    return out.str();
}

} // namespace dcearma
