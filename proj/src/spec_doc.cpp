#include "uwu/spec_doc.hpp"

#include <cmath>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

#include "uwu/plane_io.hpp"

namespace uwu {

namespace {

nlohmann::json filter_to_json(const FirFilter& f) {
    nlohmann::json j;
    j["delay"] = f.delay;
    j["taps"] = f.coeffs;
    return j;
}

FirFilter filter_from_json(const nlohmann::json& j) {
    FirFilter f;
    f.coeffs = j.at("taps").get<std::vector<double>>();
    f.delay = j.at("delay").get<int>();
    if (f.coeffs.empty()) throw std::runtime_error("spec: empty tap vector");
    return f;
}

double max_tap_deviation(const FirFilter& a, const FirFilter& b) {
    const int lo = std::min(a.delay, b.delay);
    const int hi = std::max(a.degree(), b.degree());
    double dev = 0.0;
    for (int p = lo; p <= hi; ++p) dev = std::max(dev, std::abs(a.at_power(p) - b.at_power(p)));
    return dev;
}

}  // namespace

void write_spec(const std::filesystem::path& path, const SpecDocument& doc) {
    nlohmann::json j;
    j["format"] = "uwu-filter-spec";
    j["family"] = family_name(doc.bank.family);
    std::visit(
        [&](const auto& p) {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, OrthLatticeParams>) {
                j["params"]["angles"] = p.angles;
            } else if constexpr (std::is_same_v<T, BiorthLatticeParams>) {
                j["params"]["ks"] = p.ks;
            } else {
                j["params"]["as"] = p.as;
                j["params"]["base"] = p.base == LiftingParams::Base::haar ? "haar" : "bior1.1";
            }
        },
        doc.bank.params);
    j["h0"] = filter_to_json(doc.bank.h0);
    j["h1"] = filter_to_json(doc.bank.h1);
    j["f0"] = filter_to_json(doc.bank.f0);
    j["f1"] = filter_to_json(doc.bank.f1);
    j["gain"] = doc.bank.gain;
    j["delay"] = doc.bank.delay;
    j["meta"]["tool"] = "uwu";
    j["meta"]["tool_version"] = doc.tool_version;
    j["meta"]["seed"] = doc.seed;
    write_file_atomic(path, j.dump(2) + "\n");
}

SpecDocument read_spec(const std::filesystem::path& path, bool validate) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open spec: " + path.string());
    nlohmann::json j = nlohmann::json::parse(in);
    if (j.at("format").get<std::string>() != "uwu-filter-spec")
        throw std::runtime_error("spec: unknown document format");

    SpecDocument doc;
    doc.bank.family = family_from_name(j.at("family").get<std::string>());
    const nlohmann::json& params = j.at("params");
    switch (doc.bank.family) {
        case Family::orthogonal:
            doc.bank.params = OrthLatticeParams{params.at("angles").get<std::vector<double>>()};
            break;
        case Family::biorthogonal_lattice:
            doc.bank.params = BiorthLatticeParams{params.at("ks").get<std::vector<double>>()};
            break;
        case Family::lifting: {
            LiftingParams p;
            p.as = params.at("as").get<std::vector<double>>();
            p.base = params.value("base", "haar") == "bior1.1" ? LiftingParams::Base::bior1_1
                                                               : LiftingParams::Base::haar;
            doc.bank.params = p;
            break;
        }
    }
    doc.bank.h0 = filter_from_json(j.at("h0"));
    doc.bank.h1 = filter_from_json(j.at("h1"));
    doc.bank.f0 = filter_from_json(j.at("f0"));
    doc.bank.f1 = filter_from_json(j.at("f1"));
    doc.bank.gain = j.at("gain").get<double>();
    doc.bank.delay = j.at("delay").get<int>();
    doc.seed = j.at("meta").at("seed").get<std::uint64_t>();
    doc.tool_version = j.at("meta").at("tool_version").get<std::string>();

    if (validate && spec_consistency_deviation(doc) > 1e-12)
        throw std::runtime_error("document-consistency check failed");
    return doc;
}

double spec_consistency_deviation(const SpecDocument& doc) {
    const FilterBank fresh = synth_bank(doc.bank.params);
    double dev = max_tap_deviation(fresh.h0, doc.bank.h0);
    dev = std::max(dev, max_tap_deviation(fresh.h1, doc.bank.h1));
    dev = std::max(dev, max_tap_deviation(fresh.f0, doc.bank.f0));
    dev = std::max(dev, max_tap_deviation(fresh.f1, doc.bank.f1));
    dev = std::max(dev, std::abs(fresh.gain - doc.bank.gain));
    dev = std::max(dev, std::abs(static_cast<double>(fresh.delay - doc.bank.delay)));
    return dev;
}

}  // namespace uwu
