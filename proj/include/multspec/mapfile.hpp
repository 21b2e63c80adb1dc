#pragma once

// JSON serialization for the domain objects the CLI exchanges: map files
// ({dim, degree, coords}), spectrum files (eigenvalue pairs with
// multiplicities), sigma tables, and Sigma polynomials.

#include <fstream>
#include <sstream>

#include "../../vendor/json.hpp"
#include "recovery.hpp"
#include "sigma.hpp"

namespace multspec {

using Json = nlohmann::ordered_json;

inline std::string format_unipoly(const UniPoly& p, const std::string& var = "t") {
    if (uni_is_zero(p)) return "0";
    std::ostringstream out;
    bool first = true;
    for (size_t i = p.size(); i-- > 0;) {
        Rat c = p[i];
        if (c == 0) continue;
        if (first) {
            if (c < 0) {
                out << "-";
                c = -c;
            }
        } else {
            out << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        }
        first = false;
        if (c != 1 || i == 0) out << to_string(c);
        if (i > 0) {
            if (c != 1) out << "*";
            out << var;
            if (i > 1) out << "^" << i;
        }
    }
    return out.str();
}

// --- map files ---------------------------------------------------------

inline Json map_to_json(const DynamicalSystem& f) {
    Json j;
    j["dim"] = f.N;
    j["degree"] = f.d;
    Ring r = f.ring();
    Json coords = Json::array();
    for (auto& p : f.coords) coords.push_back(format_poly(r, p));
    j["coords"] = std::move(coords);
    return j;
}

inline DynamicalSystem map_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("dim") || !j.contains("degree") || !j.contains("coords"))
        throw InvalidMapError("map file needs fields dim, degree, coords");
    size_t N = j.at("dim").get<size_t>();
    unsigned d = j.at("degree").get<unsigned>();
    const Json& cj = j.at("coords");
    if (!cj.is_array() || cj.size() != N + 1)
        throw InvalidMapError("map file needs exactly dim+1 coordinates");
    Ring r = coord_ring(N + 1);
    std::vector<Poly> coords;
    for (auto& s : cj) {
        if (!s.is_string()) throw InvalidMapError("map coordinates must be polynomial strings");
        try {
            coords.push_back(parse_poly(r, s.get<std::string>()));
        } catch (const std::exception& e) {
            throw InvalidMapError(std::string("bad coordinate polynomial: ") + e.what());
        }
    }
    DynamicalSystem f = new_dynamical_system(std::move(coords));
    if (f.d != d)
        throw InvalidMapError("declared degree " + std::to_string(d) +
                              " does not match the coordinates (degree " +
                              std::to_string(f.d) + ")");
    return f;
}

inline DynamicalSystem load_map(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidMapError("cannot open map file: " + path);
    Json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw InvalidMapError(std::string("map file is not valid JSON: ") + e.what());
    }
    return map_from_json(j);
}

// --- spectrum files ----------------------------------------------------

inline Json spectrum_to_json(const EigenPairMultiset& pairs) {
    Json j = Json::array();
    for (auto& p : pairs) {
        Json rec;
        Json eig = Json::array();
        for (auto& v : p.eigenvalues) eig.push_back(to_string(v));
        rec["eigenvalues"] = std::move(eig);
        rec["multiplicity"] = p.multiplicity;
        j.push_back(std::move(rec));
    }
    return j;
}

inline EigenPairMultiset spectrum_from_json(const Json& j) {
    if (!j.is_array()) throw DomainError("spectrum file must be a list of records");
    EigenPairMultiset out;
    for (auto& rec : j) {
        if (!rec.is_object() || !rec.contains("eigenvalues"))
            throw DomainError("spectrum record needs an eigenvalues list");
        EigenPair p;
        for (auto& s : rec.at("eigenvalues")) {
            auto r = parse_rat(s.get<std::string>());
            if (!r) throw DomainError("bad rational eigenvalue: " + s.get<std::string>());
            p.eigenvalues.push_back(*r);
        }
        std::sort(p.eigenvalues.begin(), p.eigenvalues.end());
        p.multiplicity = rec.value("multiplicity", 1u);
        if (p.multiplicity == 0) throw DomainError("spectrum multiplicity must be positive");
        out.push_back(std::move(p));
    }
    return out;
}

inline EigenPairMultiset load_spectrum(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open spectrum file: " + path);
    Json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw DomainError(std::string("spectrum file is not valid JSON: ") + e.what());
    }
    return spectrum_from_json(j);
}

// --- sigma output ------------------------------------------------------

inline Json sigma_to_json(const SigmaPolynomial& S) {
    Json j;
    j["n"] = S.n;
    j["dim"] = S.N;
    j["degree"] = S.d;
    j["Dn"] = S.Dn.get_str();
    j["mode"] = to_string(S.mode);
    j["sigma"] = format_poly(sigma_ring(), S.poly);
    return j;
}

inline Json table_to_json(const SigmaTable& T) {
    Json j;
    j["n"] = T.n;
    j["dim"] = T.N;
    j["degree"] = T.d;
    j["Dn"] = T.Dn.get_str();
    j["mode"] = to_string(T.mode);
    j["deg_w"] = T.deg_w;
    Json e = Json::object();
    for (auto& [ij, v] : T.entries)
        e[std::to_string(ij.first) + "," + std::to_string(ij.second)] = to_string(v);
    j["entries"] = std::move(e);
    return j;
}

inline SigmaTable table_from_json(const Json& j) {
    SigmaTable T;
    T.n = j.at("n").get<unsigned>();
    T.N = j.at("dim").get<size_t>();
    T.d = j.at("degree").get<unsigned>();
    T.Dn = Int(j.at("Dn").get<std::string>());
    T.mode = j.at("mode").get<std::string>() == "plain" ? SigmaMode::plain : SigmaMode::chow;
    T.deg_w = j.at("deg_w").get<unsigned long>();
    for (auto& [key, val] : j.at("entries").items()) {
        auto comma = key.find(',');
        if (comma == std::string::npos) throw DomainError("bad sigma table key: " + key);
        unsigned long i = std::stoul(key.substr(0, comma));
        unsigned long jj = std::stoul(key.substr(comma + 1));
        auto r = parse_rat(val.get<std::string>());
        if (!r) throw DomainError("bad sigma table value: " + val.get<std::string>());
        T.entries[{i, jj}] = *r;
    }
    return T;
}

}  // namespace multspec
