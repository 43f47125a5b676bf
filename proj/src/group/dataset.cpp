#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include "selberg/errors.hpp"
#include "selberg/group.hpp"

namespace selberg::group {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

double parse_double(const std::string& text, const std::string& path, int line) {
    const std::string t = trim(text);
    double v = 0.0;
    const auto res = std::from_chars(t.data(), t.data() + t.size(), v);
    if (res.ec != std::errc() || res.ptr != t.data() + t.size() || !std::isfinite(v))
        throw ParseError(path + ":" + std::to_string(line) + ": expected a number, got '" + t + "'");
    return v;
}

struct Header {
    std::string key, value;
    int line;
};

struct RawFile {
    std::vector<Header> headers;
    std::vector<std::pair<std::string, int>> rows;  // text, line number
};

RawFile read_raw(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open data file '" + path + "'");
    RawFile raw;
    std::string line;
    int n = 0;
    while (std::getline(in, line)) {
        ++n;
        const std::string t = trim(line);
        if (t.empty()) continue;
        if (t[0] == '#') {
            const std::string body = trim(t.substr(1));
            const auto colon = body.find(':');
            if (colon != std::string::npos)
                raw.headers.push_back({trim(body.substr(0, colon)), trim(body.substr(colon + 1)), n});
            continue;
        }
        raw.rows.emplace_back(t, n);
    }
    return raw;
}

const Header* find_header(const RawFile& raw, const std::string& key) {
    for (const auto& h : raw.headers)
        if (h.key == key) return &h;
    return nullptr;
}

// Ordinate list with optional "# multiplicity: m" after a value line.
void read_ordinates(const std::string& path, std::vector<double>& values, std::vector<int>* mult,
                    double& complete_below, std::vector<double>* exceptional) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open data file '" + path + "'");
    std::string line;
    int n = 0;
    bool have_bound = false;
    while (std::getline(in, line)) {
        ++n;
        const std::string t = trim(line);
        if (t.empty()) continue;
        if (t[0] == '#') {
            const std::string body = trim(t.substr(1));
            const auto colon = body.find(':');
            if (colon == std::string::npos) continue;
            const std::string key = trim(body.substr(0, colon));
            const std::string val = body.substr(colon + 1);
            if (key == "complete_below") {
                complete_below = parse_double(val, path, n);
                have_bound = true;
            } else if (key == "multiplicity" && mult) {
                if (values.empty())
                    throw ParseError(path + ":" + std::to_string(n) + ": multiplicity before any value");
                const double m = parse_double(val, path, n);
                if (m < 1 || m != std::floor(m))
                    throw ParseError(path + ":" + std::to_string(n) + ": multiplicity must be a positive integer");
                mult->back() = static_cast<int>(m);
            } else if (key == "exceptional" && exceptional) {
                exceptional->push_back(parse_double(val, path, n));
            }
            continue;
        }
        const double v = parse_double(t, path, n);
        if (!values.empty() && v < values.back())
            throw ParseError(path + ":" + std::to_string(n) + ": ordinates must be ascending");
        values.push_back(v);
        if (mult) mult->push_back(1);
    }
    if (!have_bound) throw ParseError(path + ": missing '# complete_below:' header");
}

}  // namespace

void SpectralDataset::validate() const {
    if (multiplicity.size() != discrete_r.size())
        throw ValidationError("multiplicity list does not match ordinates");
    for (std::size_t i = 0; i < discrete_r.size(); ++i) {
        if (!(discrete_r[i] >= 0.0)) throw ValidationError("discrete ordinates must be nonnegative");
        if (i > 0 && discrete_r[i] < discrete_r[i - 1]) throw ValidationError("discrete ordinates must ascend");
    }
    int zero_count = 0;
    for (double l : exceptional) {
        if (!(l >= 0.0 && l < 0.25)) throw ValidationError("exceptional eigenvalues must lie in [0, 1/4)");
        if (l == 0.0) ++zero_count;
    }
    if (zero_count != 1) throw ValidationError("lambda_0 = 0 must appear exactly once");
    for (std::size_t i = 0; i < resonances.size(); ++i) {
        const auto& r = resonances[i];
        if (!(r.beta < 0.5)) throw ValidationError("resonance beta must be < 1/2");
        if (!(r.beta > 1.0 - mu0)) throw ValidationError("resonance beta must exceed 1 - mu0");
        if (!(r.gamma > 0.0)) throw ValidationError("resonance gamma must be positive");
        if (i > 0 && r.gamma < resonances[i - 1].gamma) throw ValidationError("resonances must ascend in gamma");
    }
}

SpectralDataset SpectralDataset::truncated(std::size_t n_discrete, bool keep_resonances) const {
    SpectralDataset d = *this;
    if (n_discrete < d.discrete_r.size()) {
        d.discrete_r.resize(n_discrete);
        d.multiplicity.resize(n_discrete);
    }
    if (!keep_resonances) {
        d.resonances.clear();
        d.resonance_bound = 0.0;
    }
    return d;
}

SpectralDataset load_spectral_dataset(const std::string& eigen_path, const std::string& zeros_path,
                                      ResonanceMode mode, double mu0) {
    SpectralDataset d;
    d.mu0 = mu0;
    d.exceptional.clear();
    read_ordinates(eigen_path, d.discrete_r, &d.multiplicity, d.completeness_bound, &d.exceptional);
    if (std::find(d.exceptional.begin(), d.exceptional.end(), 0.0) == d.exceptional.end())
        d.exceptional.insert(d.exceptional.begin(), 0.0);
    d.eigen_source = eigen_path;
    d.resonance_source = zeros_path;

    if (mode == ResonanceMode::riemann_half) {
        std::vector<double> zeros;
        double bound = 0.0;
        read_ordinates(zeros_path, zeros, nullptr, bound, nullptr);
        for (double g : zeros) {
            if (!(g > 0.0)) throw ValidationError(zeros_path + ": zero ordinates must be positive");
            d.resonances.push_back({0.25, 0.5 * g});
        }
        d.resonance_bound = 0.5 * bound;
    } else {
        const RawFile raw = read_raw(zeros_path);
        for (const auto& [text, line] : raw.rows) {
            std::istringstream is(text);
            std::string a, b, extra;
            if (!(is >> a >> b) || (is >> extra))
                throw ParseError(zeros_path + ":" + std::to_string(line) + ": expected 'beta gamma'");
            d.resonances.push_back({parse_double(a, zeros_path, line), parse_double(b, zeros_path, line)});
        }
        if (const Header* h = find_header(raw, "complete_below"))
            d.resonance_bound = parse_double(h->value, zeros_path, h->line);
        else
            d.resonance_bound = d.resonances.empty() ? 0.0 : d.resonances.back().gamma;
    }
    d.validate();
    return d;
}

GenericGroup load_group_descriptor(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open group descriptor '" + path + "'");
    GenericGroup out;
    auto& g = out.descriptor;
    g.name = path;
    g.scattering_poles = {1.0};
    std::map<std::string, bool> seen;
    bool in_classes = false;
    std::string line;
    int n = 0;
    while (std::getline(in, line)) {
        ++n;
        std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        const auto colon = t.find(':');
        if (in_classes && colon == std::string::npos) {
            std::istringstream is(t);
            std::string a, b;
            if (!(is >> a >> b)) throw ParseError(path + ":" + std::to_string(n) + ": expected 'norm multiplicity'");
            const double norm = parse_double(a, path, n);
            const double mult = parse_double(b, path, n);
            if (mult < 1 || mult != std::floor(mult))
                throw ParseError(path + ":" + std::to_string(n) + ": multiplicity must be a positive integer");
            out.primitive_classes.emplace_back(norm, static_cast<int>(mult));
            continue;
        }
        if (colon == std::string::npos) throw ParseError(path + ":" + std::to_string(n) + ": expected 'key: value'");
        const std::string key = trim(t.substr(0, colon));
        const std::string val = trim(t.substr(colon + 1));
        seen[key] = true;
        in_classes = false;
        if (key == "area") g.area = parse_double(val, path, n);
        else if (key == "cusps") g.cusp_count = static_cast<int>(parse_double(val, path, n));
        else if (key == "tr_phi_half") g.tr_phi_half = parse_double(val, path, n);
        else if (key == "b1") g.b1 = parse_double(val, path, n);
        else if (key == "B0") g.B0 = parse_double(val, path, n);
        else if (key == "x0") g.x0 = parse_double(val, path, n);
        else if (key == "mu0") g.mu0 = parse_double(val, path, n);
        else if (key == "classes_complete_to") out.classes_complete_to = parse_double(val, path, n);
        else if (key == "scattering_poles") {
            g.scattering_poles.clear();
            std::istringstream is(val);
            std::string tok;
            while (is >> tok) g.scattering_poles.push_back(parse_double(tok, path, n));
        } else if (key == "elliptic") {
            std::istringstream is(val);
            std::string tok;
            while (is >> tok) {
                const auto comma = tok.find(',');
                if (comma == std::string::npos)
                    throw ParseError(path + ":" + std::to_string(n) + ": elliptic entries are 'order,count'");
                g.elliptic.push_back({static_cast<int>(parse_double(tok.substr(0, comma), path, n)),
                                      static_cast<int>(parse_double(tok.substr(comma + 1), path, n))});
            }
        } else if (key == "classes") {
            in_classes = true;
        } else {
            throw ParseError(path + ":" + std::to_string(n) + ": unknown key '" + key + "'");
        }
    }
    for (const char* k : {"area", "cusps", "B0"})
        if (!seen[k]) throw ParseError(path + ": missing key '" + std::string(k) + "'");
    g.validate();
    std::sort(out.primitive_classes.begin(), out.primitive_classes.end());
    if (out.classes_complete_to == 0.0 && !out.primitive_classes.empty())
        out.classes_complete_to = out.primitive_classes.back().first;
    return out;
}

}  // namespace selberg::group
