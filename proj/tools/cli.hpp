/*
   Copyright 2026 The casinv Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

/*
 * Command-line front end. cli_main parses argv, runs one subcommand and
 * returns the process exit code:
 *   0  success (or all checks skipped as degenerate)
 *   1  a verification failed
 *   2  usage or input error
 *   3  internal inconsistency
 */

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "casinv/christoffel.hpp"
#include "casinv/identities.hpp"
#include "casinv/limits.hpp"
#include "casinv/theorems.hpp"

namespace casinv::cli {

enum ExitCode : int { kOk = 0, kVerificationFailed = 1, kUsage = 2, kInternal = 3 };

struct ParamOptions {
    std::string a, c, alpha, beta, N;

    void attach(CLI::App* app) {
        app->add_option("--a", a, "parameter a");
        app->add_option("--c", c, "parameter c");
        app->add_option("--alpha", alpha, "parameter alpha");
        app->add_option("--beta", beta, "parameter beta");
        app->add_option("--N", N, "parameter N");
    }

    ParamSet build() const {
        ParamSet p;
        auto put = [&](const char* name, const std::string& text) {
            if (!text.empty()) p.set(name, parse_gaussian(text));
        };
        put("a", a);
        put("c", c);
        put("alpha", alpha);
        put("beta", beta);
        put("N", N);
        return p;
    }
};

struct SetOptions {
    std::string F, F2, F3;

    void attach(CLI::App* app, bool tuple) {
        app->add_option("--F", F, "set literal such as {1,2}")->required();
        if (tuple) {
            app->add_option("--F2", F2, "second set literal");
            app->add_option("--F3", F3, "third set literal");
        }
    }

    static FiniteSet read(const std::string& flag, const std::string& text, std::ostream& err) {
        auto parsed = parse_set(text);
        if (parsed.normalized) err << "note: " << flag << " normalized to " << to_text(parsed.set) << "\n";
        return parsed.set;
    }

    /// The first `count` components; missing ones are empty.
    SetTuple build(std::size_t count, std::ostream& err) const {
        SetTuple out;
        const std::string* texts[3] = {&F, &F2, &F3};
        const char* flags[3] = {"--F", "--F2", "--F3"};
        for (std::size_t i = 0; i < count; ++i)
            out.push_back(texts[i]->empty() ? FiniteSet{} : read(flags[i], *texts[i], err));
        for (std::size_t i = count; i < 3; ++i)
            if (!texts[i]->empty()) throw InvalidParams(std::string(flags[i]) + " is not used here");
        return out;
    }
};

inline int status_code(const VerificationReport& r) {
    return r.status == Status::Fail ? kVerificationFailed : kOk;
}

inline void emit(const VerificationReport& r, bool json, std::ostream& out) {
    if (json)
        out << print_report(r) << "\n";
    else
        out << report_text(r);
}

inline std::vector<ParamSet> read_grid(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open grid file '" + path + "'");
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError("grid file is not valid JSON: " + std::string(e.what()));
    }
    if (!j.is_array()) throw ParseError("grid file must hold a JSON list of parameter maps");
    std::vector<ParamSet> out;
    for (const auto& point : j) {
        if (!point.is_object()) throw ParseError("grid entries must be objects");
        ParamSet p;
        for (const auto& [name, value] : point.items()) {
            if (value.is_string())
                p.set(name, parse_gaussian(value.get<std::string>()));
            else if (value.is_number_integer())
                p.set(name, Gaussian(value.get<long>()));
            else
                throw ParseError("parameter '" + name + "' must be a string or an integer");
        }
        out.push_back(std::move(p));
    }
    return out;
}

inline std::vector<Rational> read_scales(const std::string& text) {
    std::vector<Rational> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_rational(item));
    if (out.empty()) throw ParseError("--scales needs at least one value");
    return out;
}

inline int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact verification of invariance identities for Casorati and Wronskian determinants"};
    app.require_subcommand(1);
    bool json = false;
    app.add_flag("--json", json, "print JSON instead of text")->configurable(false);

    // poly
    auto* poly_cmd = app.add_subcommand("poly", "print a family polynomial");
    std::string family;
    std::size_t n = 0;
    ParamOptions poly_params;
    poly_cmd->add_option("family", family, "charlier|meixner|hahn|dualhahn|hermite|laguerre|jacobi")->required();
    poly_cmd->add_option("--n", n, "degree")->required();
    poly_params.attach(poly_cmd);
    poly_cmd->add_flag("--json", json);

    // caso
    auto* caso_cmd = app.add_subcommand("caso", "build a Casorati or Wronskian determinant");
    std::string builder;
    SetOptions caso_sets;
    ParamOptions caso_params;
    caso_cmd->add_option("builder", builder, "charlier|hermite|meixner|laguerre|hahn|jacobi")->required();
    caso_sets.attach(caso_cmd, true);
    caso_params.attach(caso_cmd);
    caso_cmd->add_flag("--json", json);

    // sets
    auto* sets_cmd = app.add_subcommand("sets", "set invariants I(F), w_F, s_F, F-down, V_F");
    SetOptions sets_opts;
    sets_opts.attach(sets_cmd, false);
    sets_cmd->add_flag("--json", json);

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "check one invariance identity");
    std::string theorem;
    SetOptions verify_sets;
    ParamOptions verify_params;
    verify_cmd->add_option("theorem", theorem, "charlier|hermite|meixner|laguerre|hahn|jacobi")->required();
    verify_sets.attach(verify_cmd, true);
    verify_params.attach(verify_cmd);
    verify_cmd->add_flag("--json", json);

    // sweep
    auto* sweep_cmd = app.add_subcommand("sweep", "check an identity over all set tuples and a parameter grid");
    std::string sweep_theorem, grid_path;
    SweepBounds bounds;
    bool verbose = false;
    sweep_cmd->add_option("theorem", sweep_theorem)->required();
    sweep_cmd->add_option("--max-elem", bounds.max_elem, "largest set element")->required();
    sweep_cmd->add_option("--max-size", bounds.max_size, "largest component size")->required();
    sweep_cmd->add_option("--min-elem", bounds.min_elem, "smallest set element (default 0)");
    sweep_cmd->add_flag("--allow-empty", bounds.allow_empty, "include empty components");
    sweep_cmd->add_option("--grid", grid_path, "JSON list of parameter maps")->required();
    sweep_cmd->add_flag("--verbose", verbose, "print every case");
    sweep_cmd->add_flag("--json", json);

    // christoffel
    auto* chr_cmd = app.add_subcommand("christoffel", "Christoffel-transform checks");
    std::string kind;
    SetOptions chr_sets;
    ParamOptions chr_params;
    std::size_t n_max = 5;
    std::size_t truncation = 200;
    chr_cmd->add_option("kind", kind, "charlier|meixner|claim|dualhahn")->required();
    chr_sets.attach(chr_cmd, true);
    chr_params.attach(chr_cmd);
    chr_cmd->add_option("--n-max", n_max, "largest index")->required();
    chr_cmd->add_option("--X", truncation, "truncation point for infinite sums (claim)");
    chr_cmd->add_flag("--json", json);

    // limits
    auto* lim_cmd = app.add_subcommand("limits", "limit transitions between families");
    std::string which, scales, probe, lim_c, lim_alpha, lim_beta, lim_y, lim_F, lim_F2;
    LimitOptions lim;
    lim_cmd->add_option("which", which,
                        "charlier-hermite|meixner-laguerre|hahn-jacobi|hahn-degenerate|"
                        "casoratian-wronskian-hermite|casoratian-wronskian-laguerre")
        ->required();
    lim_cmd->add_option("--scales", scales, "comma separated scale points, e.g. 10,100,1000")->required();
    lim_cmd->add_option("--n", lim.n, "degree (default 3)");
    lim_cmd->add_option("--F", lim_F, "set for the determinant limits (default {1,2})");
    lim_cmd->add_option("--F2", lim_F2, "second set (Laguerre determinant limit)");
    lim_cmd->add_option("--probe", probe, "rational probe point (default 1/3)");
    lim_cmd->add_option("--c", lim_c, "Meixner c (default 5/3)");
    lim_cmd->add_option("--alpha", lim_alpha, "Hahn alpha (default 1/3)");
    lim_cmd->add_option("--beta", lim_beta, "Hahn beta (default 1/5)");
    lim_cmd->add_option("--y", lim_y, "shift for hahn-degenerate (default 1/2)");
    lim_cmd->add_flag("--json", json);

    // identities
    auto* id_cmd = app.add_subcommand("identities", "structural identities of a family");
    std::string id_family;
    ParamOptions id_params;
    std::size_t id_n_max = 8;
    id_cmd->add_option("family", id_family)->required();
    id_params.attach(id_cmd);
    id_cmd->add_option("--n-max", id_n_max, "largest index")->required();
    id_cmd->add_flag("--json", json);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }

    try {
        if (*poly_cmd) {
            auto id = family_from_string(family);
            if (!id) throw InvalidParams("unknown family '" + family + "'");
            const ParamSet p = poly_params.build();
            const Poly result = family_poly(*id, n, p);
            if (json) {
                nlohmann::json j{{"family", family},
                                 {"n", n},
                                 {"params", to_text(p)},
                                 {"poly", to_text(result)},
                                 {"degree", result.degree() ? static_cast<long>(*result.degree()) : -1},
                                 {"leading", to_text(result.leading())}};
                out << j.dump(2) << "\n";
            } else {
                out << to_text(result) << "\n";
            }
            return kOk;
        }
        if (*caso_cmd) {
            const ParamSet p = caso_params.build();
            Poly raw, normalized;
            Gaussian lead;
            bool degenerate = false, has_normalized = false;
            if (builder == "charlier") {
                raw = casorati_charlier(caso_sets.build(1, err)[0], p.get("a"));
            } else if (builder == "hermite") {
                raw = wronskian_hermite(caso_sets.build(1, err)[0]);
            } else if (builder == "meixner") {
                auto s = caso_sets.build(2, err);
                raw = quasi_casorati_meixner(s[0], s[1], p.get("a"), p.get("c"));
            } else if (builder == "laguerre") {
                auto s = caso_sets.build(2, err);
                raw = quasi_wronskian_laguerre(s[0], s[1], p.get("alpha"));
            } else if (builder == "hahn" || builder == "jacobi") {
                BuilderResult r;
                if (builder == "hahn") {
                    auto s = caso_sets.build(3, err);
                    r = quasi_casorati_hahn(s[0], s[1], s[2], p.get("alpha"), p.get("beta"), p.get("N"));
                } else {
                    auto s = caso_sets.build(2, err);
                    r = quasi_wronskian_jacobi(s[0], s[1], p.get("alpha"), p.get("beta"));
                }
                raw = r.raw;
                normalized = r.normalized;
                lead = r.prescribed_leading;
                degenerate = r.degenerate;
                has_normalized = true;
            } else {
                throw InvalidParams("unknown builder '" + builder + "'");
            }
            const long deg = raw.degree() ? static_cast<long>(*raw.degree()) : -1;
            if (json) {
                nlohmann::json j{{"builder", builder},
                                 {"determinant", to_text(raw)},
                                 {"degree", deg},
                                 {"leading", to_text(raw.leading())},
                                 {"degenerate", degenerate}};
                if (has_normalized) {
                    j["normalized"] = to_text(normalized);
                    j["prescribed_leading"] = to_text(lead);
                }
                out << j.dump(2) << "\n";
            } else {
                out << "determinant: " << to_text(raw) << "\n";
                out << "degree: " << deg << "\n";
                out << "leading: " << to_text(raw.leading()) << "\n";
                if (has_normalized) {
                    out << "prescribed leading: " << to_text(lead) << "\n";
                    out << "normalized: " << to_text(normalized) << "\n";
                }
                out << "degenerate: " << (degenerate ? "true" : "false") << "\n";
            }
            return kOk;
        }
        if (*sets_cmd) {
            const FiniteSet F = SetOptions::read("--F", sets_opts.F, err);
            const std::string inv = to_text(involute(F));
            const std::string s = F.is_positive() ? std::to_string(s_of(F)) : "undefined";
            const std::string down = to_text(downarrow(F));
            const std::string v = vandermonde(F).get_str();
            if (json) {
                nlohmann::json j{{"F", to_text(F)}, {"I", inv}, {"w", weight(F)}, {"s", s}, {"down", down}, {"V", v}};
                out << j.dump(2) << "\n";
            } else {
                out << "F = " << to_text(F) << "\nI = " << inv << "\nw = " << weight(F) << "\ns = " << s
                    << "\nF_down = " << down << "\nV = " << v << "\n";
            }
            return kOk;
        }
        if (*verify_cmd) {
            auto t = theorem_from_string(theorem);
            if (!t) throw InvalidParams("unknown theorem '" + theorem + "'");
            const auto r = verify_invariance(*t, verify_sets.build(component_count(*t), err), verify_params.build());
            emit(r, json, out);
            return status_code(r);
        }
        if (*sweep_cmd) {
            auto t = theorem_from_string(sweep_theorem);
            if (!t) throw InvalidParams("unknown theorem '" + sweep_theorem + "'");
            const auto grid = read_grid(grid_path);
            const auto s = sweep(*t, bounds, grid);
            if (json) {
                nlohmann::json j{{"theorem", sweep_theorem},
                                 {"pass", s.pass},
                                 {"fail", s.fail},
                                 {"skipped", s.skipped},
                                 {"version", kVersion}};
                auto& cases = j["cases"] = nlohmann::json::array();
                for (const auto& r : s.reports)
                    if (verbose || r.status == Status::Fail) cases.push_back(to_json(r));
                out << j.dump(2) << "\n";
            } else {
                for (const auto& r : s.reports)
                    if (verbose || r.status == Status::Fail) out << report_text(r);
                out << sweep_theorem << ": " << s.pass << " pass, " << s.fail << " fail, " << s.skipped
                    << " skipped\n";
            }
            return s.ok() ? kOk : kVerificationFailed;
        }
        if (*chr_cmd) {
            const ParamSet p = chr_params.build();
            std::vector<VerificationReport> reports;
            if (kind == "charlier") {
                const auto s = chr_sets.build(1, err);
                reports.push_back(proportionality_check(ChristoffelKind::Charlier, s, p, n_max));
                reports.push_back(ratio_identity_check(s[0], p.get("a"), n_max));
            } else if (kind == "meixner") {
                reports.push_back(proportionality_check(ChristoffelKind::Meixner, chr_sets.build(2, err), p, n_max));
            } else if (kind == "claim") {
                const Gaussian a = p.get("a");
                if (!a.is_real()) throw InvalidParams("claim check needs real a");
                reports.push_back(claim_d_check(chr_sets.build(1, err)[0], a.re(), n_max, truncation));
            } else if (kind == "dualhahn") {
                reports.push_back(sze_check(p, chr_sets.build(3, err), n_max));
            } else {
                throw InvalidParams("unknown kind '" + kind + "'");
            }
            int code = kOk;
            if (json && reports.size() > 1) {
                auto arr = nlohmann::json::array();
                for (const auto& r : reports) arr.push_back(to_json(r));
                out << arr.dump(2) << "\n";
            } else {
                for (const auto& r : reports) emit(r, json, out);
            }
            for (const auto& r : reports)
                if (status_code(r) != kOk) code = kVerificationFailed;
            return code;
        }
        if (*lim_cmd) {
            auto k = limit_from_string(which);
            if (!k) throw InvalidParams("unknown limit '" + which + "'");
            if (!probe.empty()) lim.probe = parse_rational(probe);
            if (!lim_c.empty()) lim.c = parse_rational(lim_c);
            if (!lim_alpha.empty()) lim.alpha = parse_rational(lim_alpha);
            if (!lim_beta.empty()) lim.beta = parse_rational(lim_beta);
            if (!lim_y.empty()) lim.y = parse_rational(lim_y);
            if (!lim_F.empty()) {
                lim.sets = {SetOptions::read("--F", lim_F, err)};
                if (!lim_F2.empty()) lim.sets.push_back(SetOptions::read("--F2", lim_F2, err));
            }
            const auto r = verify_limit(*k, read_scales(scales), lim);
            emit(r, json, out);
            return status_code(r);
        }
        if (*id_cmd) {
            auto id = family_from_string(id_family);
            if (!id) throw InvalidParams("unknown family '" + id_family + "'");
            const auto r = family_identity_check(*id, id_params.build(), id_n_max);
            emit(r, json, out);
            return status_code(r);
        }
    } catch (const InternalInconsistency& e) {
        err << "internal inconsistency: " << e.what() << "\n";
        return kInternal;
    } catch (const NonzeroRemainder& e) {
        err << "verification failed: " << e.what() << "\n";
        return kVerificationFailed;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}

}  // namespace casinv::cli
