#include "euclid/budget.hpp"

#include <cstdlib>
#include <string>

namespace euclid {

namespace {

Budgets load_budgets() {
    Budgets b;
    if (const char* env = std::getenv("EUCLID_DIGITS_BUDGET"); env != nullptr && *env != '\0') {
        try {
            std::size_t used = 0;
            const auto value = std::stoull(env, &used);
            if (used == std::string(env).size() && value > 0) b.digit_cap = value;
        } catch (const std::exception&) {
            // unparsable override: keep the default cap
        }
    }
    return b;
}

}  // namespace

const Budgets& budgets() {
    static const Budgets instance = load_budgets();
    return instance;
}

}  // namespace euclid
