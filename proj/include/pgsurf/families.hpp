#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pgsurf/factorable.hpp"

namespace pgsurf {

enum class Quantity { K, H };

struct FamilyParams {
    double K0 = 0.0;
    double H0 = 0.0;
    double lambda1 = 0.0;
    double lambda2 = 0.0;
    double lambda3 = 0.0;
    double f0 = 1.0;
    int sign = 1;
    /// Causal character of the generated surface under the (+,-) product.
    Causal causal = Causal::spacelike;
    /// Scales the exponent of g in the second-kind family. 1 reproduces the classified
    /// surface; anything else is a deliberate perturbation.
    double g_exponent_scale = 1.0;
};

/// A classified constant-curvature surface together with the constant it attains.
/// `attained` is signed and expressed in the specialized-formula convention
/// (k_specialized / h_specialized); its magnitude is |K0| or |H0|.
struct Family {
    std::string name;
    FactorableSurface surface;
    Quantity quantity = Quantity::K;
    double prescribed = 0.0;
    double attained = 0.0;
    Causal causal = Causal::spacelike;
    /// Parameter box inside the admissible, non-lightlike, radicand-positive region,
    /// keeping a 5% margin from radicand zeros.
    Grid2 domain;
};

/// z = sign * tanh(sqrt|K0| x + lambda1) (y + lambda2). Spacelike everywhere; attains K = -|K0|.
Family thm31_family(const FamilyParams& p);

/// z = (1/(2 H0)) sqrt((2 H0 y + lambda1)^2 +- 1) + lambda2, split as f = f0, g = z / f0.
/// Spacelike uses +1 under the root (attains H = H0); timelike uses -1 and is defined on
/// (2 H0 y + lambda1)^2 > 1 (attains H = -H0).
Family thm32_family(const FamilyParams& p);

/// x = lambda1 exp(lambda2 y) * exp((lambda2 / (2 H0)) sqrt((2 H0 z + lambda3)^2 -+ 1)).
/// Spacelike uses -1 under the root (domain (2 H0 z + lambda3)^2 > 1), timelike +1.
Family thm42_family(const FamilyParams& p);

struct Fixture {
    std::string name;
    FactorableSurface surface;
    /// Constant value when the quantity is constant on the surface.
    std::optional<double> K;
    std::optional<double> H;
    /// W vanishes identically; curvature undefined.
    bool lightlike = false;
    Grid2 domain;
};

/// Zero-curvature fixtures: plane, z = 2(y + 3), z = x y, x = exp(y) exp(z) and the
/// non-lightlike x = exp(y) exp(2 z).
std::vector<Fixture> fixtures_flat_minimal();

/// Looks up a family ("thm31", "thm32", "thm42") by name. Throws InvalidParams.
Family make_family(const std::string& name, const FamilyParams& p);

std::optional<Fixture> find_fixture(const std::string& name);

}  // namespace pgsurf
