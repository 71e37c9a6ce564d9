#ifndef MOMENTCARA_MOMENTS_IO_HPP
#define MOMENTCARA_MOMENTS_IO_HPP

#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <string>

#include <json.hpp>

#include "momentcara/error.hpp"
#include "momentcara/moments.hpp"

namespace momentcara {

// Moment-sequence JSON:
//   {"n": 1, "degree": 2, "moments": [{"alpha": [0], "value": "4"}, ...]}
// Atomic-measure JSON:
//   {"n": 2, "atoms": [{"point": ["1/2", "3"], "weight": "2"}, ...]}
// Rationals travel as strings "p/q" (q > 0, lowest terms) or bare integers.

namespace detail {

inline Rat json_rational(const nlohmann::json& v, const std::string& where) {
    if (v.is_number_integer())
        return Rat(Int(std::to_string(v.get<long long>()), 10));
    if (v.is_string()) {
        try {
            return rat_from_string(v.get<std::string>());
        } catch (const Error&) {
            throw Error(errc::parse_error, "invalid rational at " + where);
        }
    }
    throw Error(errc::parse_error, "invalid rational at " + where);
}

inline nlohmann::json rational_json(const Rat& q) { return rat_to_string(q); }

inline nlohmann::json parse_stream(std::istream& in) {
    try {
        return nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw Error(errc::parse_error, std::string("malformed JSON: ") + e.what());
    }
}

} // namespace detail

inline MomentSequence read_moments(std::istream& in) {
    const nlohmann::json j = detail::parse_stream(in);
    if (!j.is_object() || !j.contains("n") || !j.contains("degree") || !j.contains("moments"))
        throw Error(errc::parse_error, "moment file needs fields n, degree, moments");
    const int n = j.at("n").get<int>();
    const int degree = j.at("degree").get<int>();
    if (n < 1 || degree < 0)
        throw Error(errc::parse_error, "need n >= 1 and degree >= 0");

    MomentSequence s(n, degree);
    std::set<std::vector<int>> seen;
    for (const auto& entry : j.at("moments")) {
        if (!entry.contains("alpha") || !entry.contains("value"))
            throw Error(errc::parse_error, "moment entry needs alpha and value");
        MultiIndex alpha(entry.at("alpha").get<std::vector<int>>());
        if (alpha.dimension() != n)
            throw Error(errc::parse_error, "alpha " + alpha.to_string() + " has wrong length");
        for (int e : alpha.entries)
            if (e < 0)
                throw Error(errc::parse_error,
                            "alpha " + alpha.to_string() + " has negative entry");
        if (alpha.degree() > degree)
            throw Error(errc::parse_error,
                        "alpha " + alpha.to_string() + " exceeds degree " +
                            std::to_string(degree));
        if (!seen.insert(alpha.entries).second)
            throw Error(errc::parse_error, "duplicate moment " + alpha.to_string());
        s[alpha] = detail::json_rational(entry.at("value"), "moment " + alpha.to_string());
    }
    for (const MultiIndex& alpha : s.basis())
        if (!seen.count(alpha.entries))
            throw Error(errc::parse_error, "missing moment " + alpha.to_string());
    return s;
}

inline void write_moments(std::ostream& out, const MomentSequence& s) {
    nlohmann::json j;
    j["n"] = s.dimension();
    j["degree"] = s.degree();
    nlohmann::json entries = nlohmann::json::array();
    for (const MultiIndex& alpha : s.basis()) {
        nlohmann::json e;
        e["alpha"] = alpha.entries;
        e["value"] = detail::rational_json(s[alpha]);
        entries.push_back(std::move(e));
    }
    j["moments"] = std::move(entries);
    out << j.dump(2) << '\n';
}

inline AtomicMeasure read_measure(std::istream& in) {
    const nlohmann::json j = detail::parse_stream(in);
    if (!j.is_object() || !j.contains("n") || !j.contains("atoms"))
        throw Error(errc::parse_error, "measure file needs fields n, atoms");
    AtomicMeasure m;
    m.n = j.at("n").get<int>();
    if (m.n < 1) throw Error(errc::parse_error, "need n >= 1");
    for (const auto& entry : j.at("atoms")) {
        if (!entry.contains("point") || !entry.contains("weight"))
            throw Error(errc::parse_error, "atom entry needs point and weight");
        AtomicMeasure::Atom atom;
        for (const auto& c : entry.at("point"))
            atom.point.push_back(detail::json_rational(c, "atom point"));
        atom.weight = detail::json_rational(entry.at("weight"), "atom weight");
        m.atoms.push_back(std::move(atom));
    }
    m.validate();
    return m;
}

inline void write_measure(std::ostream& out, const AtomicMeasure& m) {
    nlohmann::json j;
    j["n"] = m.n;
    nlohmann::json atoms = nlohmann::json::array();
    for (const AtomicMeasure::Atom& atom : m.atoms) {
        nlohmann::json e;
        nlohmann::json point = nlohmann::json::array();
        for (const Rat& c : atom.point) point.push_back(detail::rational_json(c));
        e["point"] = std::move(point);
        e["weight"] = detail::rational_json(atom.weight);
        atoms.push_back(std::move(e));
    }
    j["atoms"] = std::move(atoms);
    out << j.dump(2) << '\n';
}

inline MomentSequence read_moments_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(errc::io_error, "cannot open " + path);
    return read_moments(in);
}

inline void write_moments_file(const std::string& path, const MomentSequence& s) {
    std::ofstream out(path);
    if (!out) throw Error(errc::io_error, "cannot open " + path);
    write_moments(out, s);
}

inline AtomicMeasure read_measure_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(errc::io_error, "cannot open " + path);
    return read_measure(in);
}

inline void write_measure_file(const std::string& path, const AtomicMeasure& m) {
    std::ofstream out(path);
    if (!out) throw Error(errc::io_error, "cannot open " + path);
    write_measure(out, m);
}

} // namespace momentcara

#endif // MOMENTCARA_MOMENTS_IO_HPP
