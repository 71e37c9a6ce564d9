#ifndef MOMENTCARA_CLI_HPP
#define MOMENTCARA_CLI_HPP

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "momentcara/descartes.hpp"
#include "momentcara/flat.hpp"
#include "momentcara/hilbert.hpp"
#include "momentcara/moments_io.hpp"
#include "momentcara/recover.hpp"
#include "momentcara/semigroup.hpp"
#include "momentcara/witness.hpp"

namespace momentcara::cli {

inline constexpr const char* version = "0.1.0";

namespace detail {

using nlohmann::json;

// Big integers ride as JSON numbers while they fit a signed long, as decimal
// strings beyond that; rationals always as canonical "p/q" strings.
inline json int_json(const Int& v) {
    if (v.fits_slong_p()) return static_cast<long long>(v.get_si());
    return v.get_str();
}

inline json rat_json(const Rat& q) { return rat_to_string(q); }

inline std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> values;
    std::stringstream stream(text);
    std::string item;
    while (std::getline(stream, item, ',')) {
        try {
            values.push_back(std::stoi(item));
        } catch (const std::exception&) {
            throw Error(errc::invalid_argument, "invalid integer list entry '" + item + "'");
        }
    }
    if (values.empty()) throw Error(errc::invalid_argument, "empty integer list");
    return values;
}

inline std::vector<Rat> parse_rat_list(const std::string& text) {
    std::vector<Rat> values;
    std::stringstream stream(text);
    std::string item;
    while (std::getline(stream, item, ',')) values.push_back(rat_from_string(item));
    if (values.empty()) throw Error(errc::invalid_argument, "empty coefficient list");
    return values;
}

inline Parity parse_parity(const std::string& text) {
    if (text == "even") return Parity::Even;
    if (text == "odd") return Parity::Odd;
    throw Error(errc::invalid_argument, "parity must be even or odd");
}

inline Domain parse_domain(const std::string& text) {
    if (text == "rn") return Domain::Rn;
    if (text == "cube") return Domain::Cube;
    throw Error(errc::invalid_argument, "domain must be rn or cube");
}

inline json envelope(const std::string& command, json inputs) {
    json j;
    j["command"] = command;
    j["inputs"] = std::move(inputs);
    j["version"] = version;
    return j;
}

inline json measure_json(const AtomicMeasure& m) {
    json j;
    j["n"] = m.n;
    json atoms = json::array();
    for (const auto& atom : m.atoms) {
        json point = json::array();
        for (const Rat& c : atom.point) point.push_back(rat_json(c));
        atoms.push_back(json{{"point", std::move(point)}, {"weight", rat_json(atom.weight)}});
    }
    j["atoms"] = std::move(atoms);
    return j;
}

inline json bound_report_json(const BoundReport& report) {
    json j;
    j["lower"] = int_json(report.lower);
    j["upper"] = int_json(report.upper);
    j["regime_violation"] = report.regime_violation;
    j["regime_note"] = report.regime_note;
    return j;
}

inline std::size_t grid_cap_default() {
    if (const char* env = std::getenv("MOMENT_CARA_MAX_GRID")) {
        try {
            const long long v = std::stoll(env);
            if (v > 0) return static_cast<std::size_t>(v);
        } catch (const std::exception&) {
        }
        throw Error(errc::invalid_argument, "MOMENT_CARA_MAX_GRID must be a positive integer");
    }
    return WitnessOptions{}.max_grid_points;
}

} // namespace detail

// Parses argv-style arguments (program name excluded), writes the payload to
// `out` and machine-readable errors to `err`.  Exit codes: 0 success, 1
// domain error (or failed --verify), 2 usage error.
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    using detail::json;

    CLI::App app{"certified Caratheodory-number bounds for truncated moment problems"};
    app.require_subcommand(1);

    struct {
        int n = 1, d = 1, k = 1, e = 1, degree = 0;
        std::string parity = "even", domain = "rn", format = "json";
        std::string gens, coeffs, profile = "sphere";
        std::string atoms_file, moments_file, out_file, measure_out, moments_out;
        int n_min = 1, n_max = 1;
        std::string d_value = "1", d_min = "1", d_max = "1";
        bool verify = false;
        long long max_grid = -1;
        double tol = 1e-10;
        double condition_limit = 1e12;
    } opt;

    std::optional<json> payload;
    int exit_code = 0;

    const auto witness_options = [&]() {
        WitnessOptions options;
        options.max_grid_points = detail::grid_cap_default();
        if (opt.max_grid > 0) options.max_grid_points = static_cast<std::size_t>(opt.max_grid);
        return options;
    };

    // ---- closed-form bound commands ----------------------------------------
    auto* bounds_rn = app.add_subcommand("bounds-rn", "grid lower bound on R^n");
    bounds_rn->add_option("--n", opt.n, "dimension")->required();
    bounds_rn->add_option("--d", opt.d, "grid parameter")->required();
    bounds_rn->add_option("--parity", opt.parity, "even|odd");
    bounds_rn->callback([&] {
        const Parity parity = detail::parse_parity(opt.parity);
        const Int lower = grid_cara_closed_form(opt.n, opt.d, parity, Domain::Rn);
        const Int dim = binom(opt.n + 2 * opt.d + (parity == Parity::Odd ? 1 : 0), opt.n);
        json j = detail::envelope("bounds-rn", {{"n", opt.n},
                                                {"d", opt.d},
                                                {"parity", opt.parity}});
        j["lower"] = detail::int_json(lower);
        j["dimension"] = detail::int_json(dim);
        j["upper"] = detail::int_json(dim - 1);
        payload = std::move(j);
    });

    auto* bounds_cube = app.add_subcommand("bounds-cube", "grid lower bound on [0,1]^n");
    bounds_cube->add_option("--n", opt.n, "dimension")->required();
    bounds_cube->add_option("--d", opt.d, "grid parameter")->required();
    bounds_cube->add_option("--parity", opt.parity, "even|odd");
    bounds_cube->callback([&] {
        const Parity parity = detail::parse_parity(opt.parity);
        const Int lower = grid_cara_closed_form(opt.n, opt.d, parity, Domain::Cube);
        const Int dim = binom(opt.n + 2 * opt.d + (parity == Parity::Odd ? 1 : 0), opt.n);
        json j = detail::envelope("bounds-cube", {{"n", opt.n},
                                                  {"d", opt.d},
                                                  {"parity", opt.parity}});
        j["lower"] = detail::int_json(lower);
        j["dimension"] = detail::int_json(dim);
        j["upper"] = detail::int_json(dim - 1);
        payload = std::move(j);
    });

    auto* bounds_variety =
        app.add_subcommand("bounds-variety", "Hilbert-polynomial bounds on a variety");
    bounds_variety->add_option("--profile", opt.profile, "sphere|projective|polynomial");
    bounds_variety->add_option("--n", opt.n, "ambient dimension (sphere/projective)");
    bounds_variety->add_option("--coeffs", opt.coeffs,
                               "ascending coefficients for profile=polynomial");
    bounds_variety->add_option("--k", opt.k, "variety dimension")->required();
    bounds_variety->add_option("--d", opt.d, "half-degree")->required();
    bounds_variety->callback([&] {
        std::optional<HilbertProfile> profile;
        if (opt.profile == "sphere") profile = HilbertProfile::sphere(opt.n);
        else if (opt.profile == "projective") profile = HilbertProfile::projective_space(opt.n);
        else if (opt.profile == "polynomial")
            profile = HilbertProfile::polynomial(detail::parse_rat_list(opt.coeffs));
        else
            throw Error(errc::invalid_argument,
                        "profile must be sphere, projective or polynomial");
        const BoundReport report = variety_bounds(*profile, opt.k, opt.d);
        json j = detail::envelope("bounds-variety", {{"profile", opt.profile},
                                                     {"n", opt.n},
                                                     {"coeffs", opt.coeffs},
                                                     {"k", opt.k},
                                                     {"d", opt.d}});
        j.update(detail::bound_report_json(report));
        payload = std::move(j);
    });

    auto* bounds_curve = app.add_subcommand("bounds-curve", "bounds on a smooth curve");
    bounds_curve->add_option("--e", opt.e, "curve degree")->required();
    bounds_curve->add_option("--d", opt.d, "half-degree")->required();
    bounds_curve->callback([&] {
        const BoundReport report = curve_bounds(opt.e, opt.d);
        json j = detail::envelope("bounds-curve", {{"e", opt.e}, {"d", opt.d}});
        j.update(detail::bound_report_json(report));
        payload = std::move(j);
    });

    // ---- sparse ring commands ----------------------------------------------
    auto* semigroup = app.add_subcommand("semigroup", "conductor and gaps of a sparse ring");
    semigroup->add_option("--gens", opt.gens, "comma-separated generators")->required();
    semigroup->callback([&] {
        const auto ring = semigroup_invariants(detail::parse_int_list(opt.gens));
        json j = detail::envelope("semigroup", {{"gens", opt.gens}});
        j["generators"] = ring.generators;
        j["conductor"] = ring.conductor;
        j["gaps"] = ring.gaps;
        j["exponents_upto_conductor"] = ring.exponents_upto(ring.conductor);
        payload = std::move(j);
    });

    auto* descartes = app.add_subcommand("descartes", "Descartes number of a sparse ring");
    descartes->add_option("--gens", opt.gens, "comma-separated generators")->required();
    descartes->add_option("--k", opt.k, "degree bound")->required();
    descartes->callback([&] {
        const auto ring = semigroup_invariants(detail::parse_int_list(opt.gens));
        const auto result = descartes_number(ring, opt.k);
        json j = detail::envelope("descartes", {{"gens", opt.gens}, {"k", opt.k}});
        j["D"] = result.value;
        json signs = json::array();
        for (const auto& [exponent, sign] : result.witness_signs)
            signs.push_back(json::array({exponent, sign}));
        j["witness_signs"] = std::move(signs);
        payload = std::move(j);
    });

    auto* bounds_sparse = app.add_subcommand("bounds-sparse", "sparse Caratheodory bounds");
    bounds_sparse->add_option("--gens", opt.gens, "comma-separated generators")->required();
    bounds_sparse->add_option("--k", opt.k, "half-degree, k >= conductor")->required();
    bounds_sparse->callback([&] {
        const auto ring = semigroup_invariants(detail::parse_int_list(opt.gens));
        const auto [lower, upper] = sparse_cara_bounds(ring, opt.k);
        json j = detail::envelope("bounds-sparse", {{"gens", opt.gens}, {"k", opt.k}});
        j["lower"] = lower;
        j["upper"] = upper;
        j["conductor"] = ring.conductor;
        j["gaps"] = ring.gaps;
        j["descartes_at_conductor"] = descartes_number(ring, ring.conductor).value;
        payload = std::move(j);
    });

    // ---- witness commands ---------------------------------------------------
    auto* witness = app.add_subcommand("witness", "build and certify a grid witness");
    witness->add_option("--n", opt.n, "dimension")->required();
    witness->add_option("--d", opt.d, "grid parameter")->required();
    witness->add_option("--parity", opt.parity, "even|odd");
    witness->add_option("--domain", opt.domain, "rn|cube");
    witness->add_flag("--verify", opt.verify, "exit 1 unless rank matches the closed form");
    witness->add_option("--max-grid", opt.max_grid, "grid point cap override");
    witness->add_option("--measure-out", opt.measure_out, "write the witness measure JSON");
    witness->add_option("--moments-out", opt.moments_out, "write the witness moments JSON");
    witness->callback([&] {
        const auto w = build_grid_witness(opt.n, opt.d, detail::parse_parity(opt.parity),
                                          detail::parse_domain(opt.domain), witness_options());
        json j = detail::envelope("witness", {{"n", opt.n},
                                              {"d", opt.d},
                                              {"parity", opt.parity},
                                              {"domain", opt.domain}});
        j["degree"] = w.degree;
        j["grid_size"] = static_cast<long long>(w.grid.size());
        j["closed_form"] = detail::int_json(w.closed_form);
        j["certified_cara"] = detail::int_json(w.certified_cara);
        j["certified"] = w.certified;
        if (!opt.measure_out.empty()) write_measure_file(opt.measure_out, w.measure);
        if (!opt.moments_out.empty()) write_moments_file(opt.moments_out, w.sequence);
        if (opt.verify && !w.certified) exit_code = 1;
        payload = std::move(j);
    });

    auto* cert = app.add_subcommand("certificate", "grid vanishing certificate");
    cert->add_option("--n", opt.n, "dimension")->required();
    cert->add_option("--d", opt.d, "grid parameter")->required();
    cert->add_option("--domain", opt.domain, "rn|cube");
    cert->callback([&] {
        const auto c = certificate(opt.n, opt.d, detail::parse_domain(opt.domain));
        json j = detail::envelope("certificate", {{"n", opt.n},
                                                  {"d", opt.d},
                                                  {"domain", opt.domain}});
        json factors = json::array();
        for (const auto& factor : c.factors) {
            json coeffs = json::array();
            for (const Rat& v : factor) coeffs.push_back(detail::rat_json(v));
            factors.push_back(std::move(coeffs));
        }
        j["factors"] = std::move(factors);
        j["factor_degree"] = c.factor_degree();
        j["composite_degree"] = c.composite_degree();
        payload = std::move(j);
    });

    auto* prune_cmd = app.add_subcommand("prune", "Caratheodory reduction of a measure");
    prune_cmd->add_option("--atoms", opt.atoms_file, "atomic-measure JSON file")->required();
    prune_cmd->add_option("--degree", opt.degree, "moment degree to preserve")->required();
    prune_cmd->add_option("--out", opt.out_file, "write the pruned measure JSON here");
    prune_cmd->callback([&] {
        const AtomicMeasure measure = read_measure_file(opt.atoms_file);
        const AtomicMeasure pruned = prune(measure, measure.n, opt.degree);
        json j = detail::envelope("prune", {{"atoms", opt.atoms_file},
                                            {"degree", opt.degree}});
        j["atoms_before"] = static_cast<long long>(measure.atoms.size());
        j["atoms_after"] = static_cast<long long>(pruned.atoms.size());
        j["measure"] = detail::measure_json(pruned);
        if (!opt.out_file.empty()) write_measure_file(opt.out_file, pruned);
        payload = std::move(j);
    });

    auto* interp = app.add_subcommand("interp-points", "signed-measure interpolation points");
    interp->add_option("--n", opt.n, "dimension")->required();
    interp->add_option("--degree", opt.degree, "basis degree")->required();
    interp->callback([&] {
        const auto points =
            interpolation_points(opt.n, opt.degree, integer_point_stream(opt.n));
        json j = detail::envelope("interp-points", {{"n", opt.n}, {"degree", opt.degree}});
        json list = json::array();
        for (const auto& p : points) {
            json coords = json::array();
            for (const Rat& c : p) coords.push_back(detail::rat_json(c));
            list.push_back(std::move(coords));
        }
        j["points"] = std::move(list);
        j["count"] = static_cast<long long>(points.size());
        payload = std::move(j);
    });

    // ---- moment-sequence commands -------------------------------------------
    auto* hankel_cmd = app.add_subcommand("hankel", "Hankel matrix and exact rank");
    hankel_cmd->add_option("--moments", opt.moments_file, "moment-sequence JSON file")
        ->required();
    hankel_cmd->add_option("--d", opt.d, "Hankel sub-degree d'")->required();
    hankel_cmd->callback([&] {
        const MomentSequence s = read_moments_file(opt.moments_file);
        const HankelMatrix h = hankel(s, opt.d);
        json j = detail::envelope("hankel", {{"moments", opt.moments_file}, {"d", opt.d}});
        j["size"] = h.matrix.rows();
        j["rank"] = h.matrix.rank();
        json rows = json::array();
        for (int i = 0; i < h.matrix.rows(); ++i) {
            json row = json::array();
            for (int jj = 0; jj < h.matrix.cols(); ++jj)
                row.push_back(detail::rat_json(h.matrix(i, jj)));
            rows.push_back(std::move(row));
        }
        j["matrix"] = std::move(rows);
        payload = std::move(j);
    });

    auto* flat_check_cmd = app.add_subcommand("flat-check", "rank-based flatness check");
    flat_check_cmd->add_option("--moments", opt.moments_file, "moment-sequence JSON file")
        ->required();
    flat_check_cmd->add_option("--d", opt.d, "extension degree D (needs moments to 2D+2)")
        ->required();
    flat_check_cmd->callback([&] {
        const MomentSequence s = read_moments_file(opt.moments_file);
        const FlatCheckReport report = flat_check(s, opt.d);
        json j = detail::envelope("flat-check",
                                  {{"moments", opt.moments_file}, {"d", opt.d}});
        j["rank_lower"] = report.rank_lower;
        j["rank_upper"] = report.rank_upper;
        j["flat"] = report.flat;
        payload = std::move(j);
    });

    auto* flat_table = app.add_subcommand("flat-table", "worst-case extension-degree table");
    flat_table->add_option("--d", opt.d_value, "single grid parameter d");
    flat_table->add_option("--d-min", opt.d_min, "range start (with --d-max)");
    flat_table->add_option("--d-max", opt.d_max, "range end");
    flat_table->add_option("--n-min", opt.n_min, "smallest dimension");
    flat_table->add_option("--n-max", opt.n_max, "largest dimension")->required();
    flat_table->add_option("--format", opt.format, "json|csv");
    flat_table->callback([&] {
        Int d_lo, d_hi;
        try {
            if (flat_table->count("--d-min") || flat_table->count("--d-max")) {
                d_lo = Int(opt.d_min, 10);
                d_hi = Int(opt.d_max, 10);
            } else {
                d_lo = d_hi = Int(opt.d_value, 10);
            }
        } catch (const std::invalid_argument&) {
            throw Error(errc::invalid_argument, "d values must be decimal integers");
        }
        const auto rows = worst_case_table(opt.n_min, opt.n_max, d_lo, d_hi);
        if (opt.format == "csv") {
            std::ostringstream csv;
            csv << "n,d,C,required_D,worst_case\n";
            for (const auto& row : rows)
                csv << row.report.n << ',' << row.report.d.get_str() << ','
                    << row.report.cara_lower.get_str() << ','
                    << row.report.required_D.get_str() << ','
                    << (row.report.worst_case ? "true" : "false") << '\n';
            out << csv.str();
            payload.reset();
            return;
        }
        if (opt.format != "json")
            throw Error(errc::invalid_argument, "format must be json or csv");
        json j = detail::envelope("flat-table", {{"n_min", opt.n_min},
                                                 {"n_max", opt.n_max},
                                                 {"d_min", d_lo.get_str()},
                                                 {"d_max", d_hi.get_str()}});
        json list = json::array();
        for (const auto& row : rows) {
            json r;
            r["n"] = row.report.n;
            r["d"] = detail::int_json(row.report.d);
            r["C"] = detail::int_json(row.report.cara_lower);
            r["required_D"] = detail::int_json(row.report.required_D);
            r["worst_case"] = row.report.worst_case;
            r["minimal_worst_for_d"] = row.minimal_worst_for_d;
            list.push_back(std::move(r));
        }
        j["rows"] = std::move(list);
        payload = std::move(j);
    });

    auto* recover = app.add_subcommand("recover", "1-D atom recovery (numeric)");
    recover->add_option("--moments", opt.moments_file, "1-D moment-sequence JSON file")
        ->required();
    recover->add_option("--k", opt.k, "atom count")->required();
    recover->add_option("--tol", opt.tol, "root-finder relative tolerance");
    recover->add_option("--condition-limit", opt.condition_limit,
                        "Hankel condition threshold");
    recover->callback([&] {
        const MomentSequence s = read_moments_file(opt.moments_file);
        if (s.dimension() != 1)
            throw Error(errc::invalid_argument, "recover needs a 1-D moment sequence");
        std::vector<double> values;
        for (int i = 0; i <= s.degree(); ++i) values.push_back(s[MultiIndex{i}].get_d());
        RecoveryOptions options;
        options.root_tol = opt.tol;
        options.condition_limit = opt.condition_limit;
        const RecoveryResult result = recover_atoms_1d(values, opt.k, options);
        json j = detail::envelope("recover", {{"moments", opt.moments_file},
                                              {"k", opt.k},
                                              {"tol", opt.tol}});
        json atoms = json::array(), weights = json::array();
        for (const auto& z : result.atoms)
            atoms.push_back(json{{"re", z.real()}, {"im", z.imag()}});
        for (const auto& c : result.weights)
            weights.push_back(json{{"re", c.real()}, {"im", c.imag()}});
        j["atoms"] = std::move(atoms);
        j["weights"] = std::move(weights);
        j["residual"] = result.residual;
        j["condition_estimate"] = result.condition_estimate;
        payload = std::move(j);
    });

    auto* ratio = app.add_subcommand("ratio", "grid bound over full basis dimension, exact");
    ratio->add_option("--n", opt.n, "dimension")->required();
    ratio->add_option("--d", opt.d, "grid parameter")->required();
    ratio->add_option("--parity", opt.parity, "even|odd");
    ratio->add_option("--domain", opt.domain, "rn|cube");
    ratio->callback([&] {
        const Rat value = asymptotic_ratio(opt.n, opt.d, detail::parse_parity(opt.parity),
                                           detail::parse_domain(opt.domain));
        const Rat limit = Rat(1) - Rat(opt.n) / Rat(Int(1) << opt.n);
        json j = detail::envelope("ratio", {{"n", opt.n},
                                            {"d", opt.d},
                                            {"parity", opt.parity},
                                            {"domain", opt.domain}});
        j["ratio"] = detail::rat_json(value);
        j["decimal"] = value.get_d();
        j["limit_large_d"] = detail::rat_json(limit);
        payload = std::move(j);
    });

    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    } catch (const Error& e) {
        detail::json j{{"error", e.code()}, {"message", e.what()}};
        err << j.dump() << '\n';
        return 1;
    } catch (const std::exception& e) {
        detail::json j{{"error", "internal"}, {"message", e.what()}};
        err << j.dump() << '\n';
        return 1;
    }

    if (payload) out << payload->dump(2) << '\n';
    return exit_code;
}

} // namespace momentcara::cli

#endif // MOMENTCARA_CLI_HPP
