#include "tsallis/entropy.hpp"

#include <stdexcept>

namespace tsallis {

namespace {

struct ClassSums {
    double mass_a;
    double mass_b;
    double sum_a;
    double sum_b;
    bool valid;
};

ClassSums class_sums(const PrefixTables& tbl, ThresholdPair pair)
{
    const int a = pair.t + 1;
    const int b = pair.s + 1;
    const std::uint64_t total = tbl.total();
    const std::uint64_t n2 = tbl.cum_count(a, b);
    const auto dt = static_cast<double>(total);

    ClassSums c{};
    c.valid = n2 > 0 && n2 < total;
    c.mass_a = static_cast<double>(n2) / dt;
    c.mass_b = static_cast<double>(total - n2) / dt;
    c.sum_a = tbl.cum(TableKind::Pq, a, b);
    // Quadrant 4 is empty at a == 256 or b == 256; the tail table is zero there.
    c.sum_b = tbl.tail(TableKind::Pq, a, b);
    return c;
}

} // namespace

double class_probability_p2(const PrefixTables& tbl, ThresholdPair pair)
{
    return static_cast<double>(tbl.cum_count(pair.t + 1, pair.s + 1)) / static_cast<double>(tbl.total());
}

double tsallis_class_entropy(double sum_pq, double mass, double q)
{
    return (1.0 - sum_pq / power_term(mass, q)) / (q - 1.0);
}

double shannon_class_entropy(double sum_plnp, double mass)
{
    // -sum (p/m) ln(p/m) = (m ln m - sum p ln p) / m
    return (power_term(mass, 1.0) - sum_plnp) / mass;
}

ClassEntropies tsallis_class_entropies(const PrefixTables& tbl, ThresholdPair pair)
{
    if (tbl.shannon())
        throw std::invalid_argument("tsallis_class_entropies needs tables built with q != 1");
    const ClassSums c = class_sums(tbl, pair);
    ClassEntropies e;
    e.p2 = c.mass_a;
    e.valid = c.valid;
    if (c.valid) {
        e.sA = tsallis_class_entropy(c.sum_a, c.mass_a, tbl.q());
        e.sB = tsallis_class_entropy(c.sum_b, c.mass_b, tbl.q());
    }
    return e;
}

ClassEntropies shannon_class_entropies(const PrefixTables& tbl, ThresholdPair pair)
{
    if (!tbl.shannon())
        throw std::invalid_argument("shannon_class_entropies needs tables built with q == 1");
    const ClassSums c = class_sums(tbl, pair);
    ClassEntropies e;
    e.p2 = c.mass_a;
    e.valid = c.valid;
    if (c.valid) {
        e.sA = shannon_class_entropy(c.sum_a, c.mass_a);
        e.sB = shannon_class_entropy(c.sum_b, c.mass_b);
    }
    return e;
}

double combine_pseudo_additive(const ClassEntropies& e, double q)
{
    if (!e.valid)
        return kInvalidCriterion;
    if (q == 1.0)
        return e.sA + e.sB;
    return e.sA + e.sB + (1.0 - q) * e.sA * e.sB;
}

double criterion(const PrefixTables& tbl, ThresholdPair pair)
{
    if (tbl.shannon())
        return combine_pseudo_additive(shannon_class_entropies(tbl, pair), 1.0);

    // With rho = sum (p/m)^q per class, sA = (1 - rhoA)/(q-1) and likewise
    // for B, so the pseudo-additive sum is (1 - rhoA*rhoB)/(q-1). This form
    // is exact on the plateaus where one class term vanishes (rho = 0 for an
    // empty background, rho = 1 for a single-cell class).
    const ClassSums c = class_sums(tbl, pair);
    if (!c.valid)
        return kInvalidCriterion;
    const double q = tbl.q();
    const double rho_a = c.sum_a / power_term(c.mass_a, q);
    const double rho_b = c.sum_b / power_term(c.mass_b, q);
    return (1.0 - rho_a * rho_b) / (q - 1.0);
}

double background_normalizer_gap(const PrefixTables& tbl, ThresholdPair pair)
{
    const std::uint64_t total = tbl.total();
    const std::uint64_t n2 = tbl.cum_count(pair.t + 1, pair.s + 1);
    const std::uint64_t n4 = tbl.tail_count(pair.t + 1, pair.s + 1);
    return static_cast<double>(total - n2 - n4) / static_cast<double>(total);
}

} // namespace tsallis
