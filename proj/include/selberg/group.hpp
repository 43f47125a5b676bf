#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "selberg/special.hpp"

namespace selberg::group {

using numerics::Complex;

class ScatteringFunction {
public:
    virtual ~ScatteringFunction() = default;
    virtual Complex phi(Complex s) const = 0;
    virtual Complex logderiv(Complex s) const = 0;
};

// phi(s) = sqrt(pi) Gamma(s-1/2)/Gamma(s) zeta(2s-1)/zeta(2s)
class ModularScattering final : public ScatteringFunction {
public:
    Complex phi(Complex s) const override;
    Complex logderiv(Complex s) const override;
};

struct EllipticClass {
    int order = 2;
    int count = 1;
};

struct GroupDescriptor {
    std::string name;
    double area = 0.0;
    int cusp_count = 0;
    std::vector<EllipticClass> elliptic;
    double tr_phi_half = 0.0;
    double b1 = 1.0;
    double B0 = 0.0;
    double x0 = 2.0;
    double mu0 = 1.0;
    // Real poles s_mu of phi in (1/2, 1].
    std::vector<double> scattering_poles;
    std::shared_ptr<const ScatteringFunction> scattering;
    bool modular = false;

    double b0() const;
    // Checks B0 > 1, B0 >= x0, finite elliptic data; throws ValidationError.
    void validate() const;
};

GroupDescriptor modular_group();

struct HyperbolicClass {
    double primitive_norm = 0.0;
    int power = 1;
    double norm = 0.0;
    int multiplicity = 1;
    std::int64_t trace = 0;  // 0 when unknown (generic groups)
};

// All classes with norm <= norm_limit, sorted by norm.
struct HyperbolicSpectrum {
    std::vector<HyperbolicClass> classes;
    double norm_limit = 0.0;
};

double lambda_mangoldt(const HyperbolicClass& c);

HyperbolicSpectrum enumerate_hyperbolic(const GroupDescriptor& g, double norm_limit);

// Expands primitive (norm, multiplicity) pairs into all powers up to norm_limit.
HyperbolicSpectrum expand_powers(const std::vector<std::pair<double, int>>& primitive,
                                 double norm_limit);

// Number of proper equivalence classes of integral binary quadratic forms
// (primitive or not) of nonsquare discriminant D > 0, counted as cycles of
// Gauss-reduced forms.
int count_form_cycles(std::int64_t D);

// Norm ((tau + sqrt(tau^2-4))/2)^2 of a hyperbolic element of trace tau.
double norm_from_trace(std::int64_t tau);

// Completed zeta pi^{-s/2} Gamma(s/2) zeta(s).
Complex completed_zeta(Complex s);

struct Resonance {
    double beta = 0.25;
    double gamma = 0.0;
};

enum class ResonanceMode { riemann_half, explicit_pairs };

struct SpectralDataset {
    std::vector<double> discrete_r;
    std::vector<int> multiplicity;
    std::vector<double> exceptional{0.0};  // lambda values in [0, 1/4)
    std::vector<Resonance> resonances;      // sorted by gamma
    double completeness_bound = 0.0;        // discrete_r complete below this
    double resonance_bound = 0.0;           // resonances complete below this gamma
    double mu0 = 1.0;
    std::string eigen_source;
    std::string resonance_source;

    void validate() const;
    // Copy keeping the first n discrete ordinates and optionally no resonances.
    SpectralDataset truncated(std::size_t n_discrete, bool keep_resonances) const;
};

SpectralDataset load_spectral_dataset(const std::string& eigen_path, const std::string& zeros_path,
                                      ResonanceMode mode, double mu0 = 1.0);

// Generic descriptor file with an explicit primitive class list.
struct GenericGroup {
    GroupDescriptor descriptor;
    std::vector<std::pair<double, int>> primitive_classes;
    double classes_complete_to = 0.0;
};

GenericGroup load_group_descriptor(const std::string& path);

}  // namespace selberg::group
