#include "uwu/filter_bank.hpp"

#include <cmath>
#include <iostream>
#include <stdexcept>

#include "uwu/biorth_lattice.hpp"
#include "uwu/lifting.hpp"
#include "uwu/orth_lattice.hpp"

namespace uwu {

const char* family_name(Family f) {
    switch (f) {
        case Family::orthogonal: return "orthogonal";
        case Family::biorthogonal_lattice: return "biorthogonal-lattice";
        case Family::lifting: return "lifting";
    }
    throw std::logic_error("unknown family");
}

Family family_from_name(const std::string& name) {
    if (name == "orthogonal") return Family::orthogonal;
    if (name == "biorthogonal-lattice") return Family::biorthogonal_lattice;
    if (name == "lifting") return Family::lifting;
    throw std::invalid_argument("unknown family name: " + name);
}

void OrthLatticeParams::validate() const {
    if (angles.empty()) throw std::invalid_argument("orth lattice: at least one angle required");
    for (double a : angles)
        if (!std::isfinite(a)) throw std::invalid_argument("orth lattice: non-finite angle");
}

void BiorthLatticeParams::validate() const {
    if (ks.empty()) throw std::invalid_argument("biorth lattice: at least one coefficient required");
    for (double k : ks) {
        if (!std::isfinite(k)) throw std::invalid_argument("biorth lattice: non-finite coefficient");
        if (std::abs(std::abs(k) - 1.0) < 1e-12) throw std::runtime_error("singular lattice stage");
    }
}

void LiftingParams::validate() const {
    if (as.empty()) throw std::invalid_argument("lifting: at least one step required");
    for (double a : as)
        if (!std::isfinite(a)) throw std::invalid_argument("lifting: non-finite coefficient");
    if (as.size() > 8)
        std::cerr << "warning: lifting with " << as.size() << " steps exceeds the tabulated 1..8 range\n";
}

FilterBank synth_bank(const LatticeParams& params) {
    return std::visit(
        [](const auto& p) -> FilterBank {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, OrthLatticeParams>) return synth_orth(p);
            else if constexpr (std::is_same_v<T, BiorthLatticeParams>) return synth_biorth(p);
            else return synth_lifting(p);
        },
        params);
}

DenseTaps synth_dense(const LatticeParams& params) {
    return std::visit(
        [](const auto& p) -> DenseTaps {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, OrthLatticeParams>) return synth_orth_dense(p);
            else if constexpr (std::is_same_v<T, BiorthLatticeParams>) return synth_biorth_dense(p);
            else return synth_lifting_dense(p);
        },
        params);
}

Family family_of(const LatticeParams& params) {
    if (std::holds_alternative<OrthLatticeParams>(params)) return Family::orthogonal;
    if (std::holds_alternative<BiorthLatticeParams>(params)) return Family::biorthogonal_lattice;
    return Family::lifting;
}

size_t param_count(const LatticeParams& params) { return param_values(params).size(); }

std::vector<double> param_values(const LatticeParams& params) {
    return std::visit(
        [](const auto& p) -> std::vector<double> {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, OrthLatticeParams>) return p.angles;
            else if constexpr (std::is_same_v<T, BiorthLatticeParams>) return p.ks;
            else return p.as;
        },
        params);
}

LatticeParams with_param_values(const LatticeParams& like, std::vector<double> values) {
    if (values.size() != param_count(like))
        throw std::invalid_argument("with_param_values: size mismatch");
    LatticeParams out = like;
    std::visit(
        [&](auto& p) {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, OrthLatticeParams>) p.angles = std::move(values);
            else if constexpr (std::is_same_v<T, BiorthLatticeParams>) p.ks = std::move(values);
            else p.as = std::move(values);
        },
        out);
    return out;
}

}  // namespace uwu
