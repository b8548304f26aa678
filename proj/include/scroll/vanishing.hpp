#pragma once

#include <optional>
#include <string>
#include <vector>

#include "scroll/chow.hpp"
#include "scroll/sheaf.hpp"
#include "scroll/variety.hpp"

namespace scroll {

/// "h^degree(E<-k><t>) = 0" (or with E (x) Om) for every integer t with
/// t >= at_least or t <= at_most. Bounds are exact rationals.
struct VanishingClaim {
    int degree = 0;
    bool with_omega = false;
    int k = 0;
    std::optional<Rational> at_least;
    std::optional<Rational> at_most;

    bool applies(int t) const;
    std::string statement() const;
};

/// Vanishings every Ulrich bundle on X satisfies, from the twisted Euler sequences.
std::vector<VanishingClaim> ulrich_vanishing_claims(const Variety& variety);

/// Sharper zeroth and top vanishings; the h0/h3 bounds for E<-2> switch on 2 a0 a1 <= a1^2 - a0^2 + 3c.
std::vector<VanishingClaim> sharpened_vanishing_claims(const Variety& variety);

struct VanishingFailure {
    std::string statement;
    int t = 0;
    std::int64_t value = 0;
};

/// Evaluates each claim at every t in [t_min, t_max] where it applies.
std::vector<VanishingFailure> check_vanishing(const SheafExpr& e, const Variety& variety,
                                              const std::vector<VanishingClaim>& claims, int t_min, int t_max);

/// [-3c-6, 3c+6].
std::pair<int, int> default_sweep_range(const Variety& variety);

}  // namespace scroll
