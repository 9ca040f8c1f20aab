#include "clover/cli.hpp"

#include <algorithm>
#include <functional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "clover/classify.hpp"
#include "clover/hset.hpp"
#include "clover/io.hpp"
#include "clover/milnor.hpp"
#include "clover/sampling.hpp"
#include "clover/slmove.hpp"
#include "clover/zlattice.hpp"

namespace clover::cli {

namespace {

using io::json;

constexpr const char* kSchema = "clover/1";

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitInequivalent = 3;
constexpr int kExitPropertyFailure = 4;

void emit(std::ostream& out, const json& doc) {
    out << doc.dump(2) << "\n";
}

json make_doc(const char* command) {
    json doc;
    doc["schema"] = kSchema;
    doc["command"] = command;
    return doc;
}

struct MuTablePair {
    MuTable before;
    MuTable after;
};

// mu values of the moved tangle, read from the transformed series.
MuTable mu_after_table(const std::vector<MagnusSeries>& moved, int n, int max_len) {
    MuTable table;
    for (int m = 1; m <= max_len; ++m) {
        for (const SequenceKey& I : all_sequences(n, m, false)) {
            if (m == 1) {
                table.emplace(I, 0);
                continue;
            }
            Monomial mono(I.begin(), I.end() - 1);
            table.emplace(I, moved[static_cast<std::size_t>(I.back() - 1)].coeff(mono));
        }
    }
    return table;
}

// ---- seeded property suites ------------------------------------------------

struct PropResult {
    int cases = 0;
    int failures = 0;
    std::vector<std::string> notes;
};

PropResult prop_magnus_hom(std::uint64_t seed, int cases) {
    Rng rng(seed);
    PropResult res;
    for (int t = 0; t < cases; ++t) {
        const int n = rng.range(2, 5);
        const int q = rng.range(1, 5);
        const GroupWord v = random_word(rng, n, 12);
        const GroupWord w = random_word(rng, n, 12);
        ++res.cases;
        const bool hom = expand(concat(v, w), q) == mul(expand(v, q), expand(w, q));
        const bool inv = inverse(expand(w, q)) == expand(invert(w), q);
        if (!hom || !inv) {
            ++res.failures;
            res.notes.push_back("case " + std::to_string(t) + ": " +
                                (hom ? "inverse" : "homomorphism") + " identity failed");
        }
    }
    return res;
}

PropResult prop_sl_congruence(std::uint64_t seed, int cases) {
    Rng rng(seed);
    PropResult res;
    for (int t = 0; t < cases; ++t) {
        const int k = rng.coin() ? 1 : 2;
        const int n = rng.range(3, k == 2 ? 4 : 5);
        const TanglePresentation gamma =
            k == 1 ? random_tangle(rng, n, 8) : random_vanishing_tangle(rng, n, k, 2);
        const TanglePresentation u = random_string_link(rng, n, 2, true);
        const int q = 2 * k + 2;
        const std::vector<MagnusSeries> moved = transform({gamma, u, q});

        // congruence for three random sequences of length <= 2k+2
        for (int s = 0; s < 3; ++s) {
            const int len = rng.range(1, q);
            SequenceKey I;
            for (int p = 0; p < len; ++p)
                I.push_back(rng.range(1, n));
            ++res.cases;
            Int before = milnor_number(gamma, I);
            Int after = 0;
            if (I.size() > 1) {
                Monomial mono(I.begin(), I.end() - 1);
                after = moved[static_cast<std::size_t>(I.back() - 1)].coeff(mono);
            }
            const Int modulus = delta_k(gamma, I, k);
            const bool ok =
                modulus == 0 ? before == after : (after - before) % modulus == 0;
            if (!ok) {
                ++res.failures;
                res.notes.push_back("case " + std::to_string(t) + ": congruence failed at " +
                                    io::format_sequence(I, n));
            }
        }

        // invariance of every mu of length <= 2k+1
        ++res.cases;
        bool stable = true;
        for (int j = 1; j <= n && stable; ++j) {
            const MagnusSeries plain = expand(gamma.longitude(j), q);
            const MagnusSeries& after = moved[static_cast<std::size_t>(j - 1)];
            for (int d = 0; d <= 2 * k && stable; ++d)
                for (const Monomial& m : all_sequences(n, d, false))
                    if (plain.coeff(m) != after.coeff(m)) {
                        stable = false;
                        break;
                    }
        }
        if (!stable) {
            ++res.failures;
            res.notes.push_back("case " + std::to_string(t) +
                                ": low-degree coefficient changed");
        }
    }
    return res;
}

PropResult prop_delta_formula_suite(std::uint64_t seed, int cases) {
    Rng rng(seed);
    PropResult res;
    for (int t = 0; t < cases; ++t) {
        const int k = rng.coin() ? 1 : 2;
        // non-repeated j-free monomials of degree 2k+1 need n >= 2k+2
        const int n = k == 2 ? 6 : rng.range(4, 5);
        const TanglePresentation gamma =
            k == 1 ? random_tangle(rng, n, 8) : random_vanishing_tangle(rng, n, k, 2);
        const TanglePresentation u = random_string_link(rng, n, 2, true);
        const int q = 2 * k + 1;
        const std::vector<MagnusSeries> moved = transform({gamma, u, q});
        const LinkingMatrix m = linking_of(u);
        const MuTable mu = mu_table(gamma, k + 1, false);
        for (int j = 1; j <= n; ++j) {
            ++res.cases;
            DeltaPolynomial predicted = prop_delta_formula(mu, m, k, j, n);
            DeltaPolynomial observed;
            const MagnusSeries plain = expand(gamma.longitude(j), q);
            for (const SequenceKey& S : seq_basis(n, j, 2 * k + 1)) {
                Int d = moved[static_cast<std::size_t>(j - 1)].coeff(S) - plain.coeff(S);
                if (d != 0)
                    observed.emplace(S, std::move(d));
            }
            if (predicted != observed) {
                ++res.failures;
                res.notes.push_back("case " + std::to_string(t) + ": closed form mismatch at j=" +
                                    std::to_string(j));
            }
        }
    }
    return res;
}

PropResult prop_lattice_oracle(std::uint64_t seed, int cases) {
    Rng rng(seed);
    PropResult res;
    for (int t = 0; t < cases; ++t) {
        ++res.cases;
        IntMatrix a(4, 3);
        for (int r = 0; r < 4; ++r)
            for (int c = 0; c < 3; ++c)
                a.at(r, c) = rng.range(-4, 4);
        std::vector<Int> b(4);
        if (rng.coin()) {
            std::vector<Int> x0(3);
            for (auto& v : x0)
                v = rng.range(-5, 5);
            b = mat_vec(a, x0);
        } else {
            for (auto& v : b)
                v = rng.range(-6, 6);
        }
        const auto solved = member(a, b);
        bool brute_found = false;
        for (int x1 = -5; x1 <= 5 && !brute_found; ++x1)
            for (int x2 = -5; x2 <= 5 && !brute_found; ++x2)
                for (int x3 = -5; x3 <= 5 && !brute_found; ++x3)
                    brute_found = mat_vec(a, {Int(x1), Int(x2), Int(x3)}) == b;
        const bool ok = solved.has_value() ? true : !brute_found;
        if (!ok) {
            ++res.failures;
            res.notes.push_back("case " + std::to_string(t) +
                                ": solver missed a bounded solution");
        }
    }
    return res;
}

// ---- option storage ----------------------------------------------------------

struct CommandState {
    std::vector<std::string> inputs;
    std::string seq_text;
    std::string format = "text";
    std::string prop = "all";
    bool allow_framing = false;
    bool explain = false;
    bool mu_tables = false;
    int k = -1;
    int j = -1;
    int degree = -1;
    int cases = -1;
    std::uint64_t seed = 0;
};

void add_format_option(CLI::App* sub, CommandState& st) {
    sub->add_option("--format", st.format, "Output format")
        ->check(CLI::IsMember({"text", "machine"}))
        ->capture_default_str();
}

TanglePresentation load_input(const CommandState& st, std::size_t which) {
    return io::load_tangle(st.inputs.at(which), st.allow_framing);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact Milnor number computations for clover links and bottom tangles",
                 "clover"};
    app.require_subcommand(1);

    CommandState mu_s, mubar_s, delta_s, slmove_s, hset_s, classify_s, verify_s;

    CLI::App* mu_cmd = app.add_subcommand("mu", "Milnor number mu(I) of a tangle file");
    mu_cmd->add_option("-i,--input", mu_s.inputs, "Tangle file")->required()->expected(1);
    mu_cmd->add_option("--seq", mu_s.seq_text, "Sequence I")->required();
    mu_cmd->add_flag("--allow-framing", mu_s.allow_framing,
                     "Accept longitudes with nonzero self-framing");
    add_format_option(mu_cmd, mu_s);

    CLI::App* mubar_cmd =
        app.add_subcommand("mubar", "Residue invariant: mu(I) modulo the link modulus");
    mubar_cmd->add_option("-i,--input", mubar_s.inputs, "Tangle file")->required()->expected(1);
    mubar_cmd->add_option("--seq", mubar_s.seq_text, "Sequence I")->required();
    mubar_cmd->add_flag("--allow-framing", mubar_s.allow_framing,
                        "Accept longitudes with nonzero self-framing");
    add_format_option(mubar_cmd, mubar_s);

    CLI::App* delta_cmd = app.add_subcommand(
        "delta", "Indeterminacy gcd: delta^k(I) with --k, link modulus Delta(I) without");
    delta_cmd->add_option("-i,--input", delta_s.inputs, "Tangle file")->required()->expected(1);
    delta_cmd->add_option("--seq", delta_s.seq_text, "Sequence I")->required();
    delta_cmd->add_option("--k", delta_s.k, "Vanishing level k (omit for the link modulus)");
    delta_cmd->add_flag("--allow-framing", delta_s.allow_framing,
                        "Accept longitudes with nonzero self-framing");
    add_format_option(delta_cmd, delta_s);

    CLI::App* slmove_cmd = app.add_subcommand(
        "slmove", "Transform longitudes by the SL-move of a string link");
    slmove_cmd->add_option("-i,--input", slmove_s.inputs, "Tangle file, then string link file")
        ->required()
        ->expected(2);
    slmove_cmd->add_option("--degree", slmove_s.degree, "Truncation degree")->required();
    slmove_cmd->add_option("--seq", slmove_s.seq_text, "Sequence for the congruence report");
    slmove_cmd->add_option("--k", slmove_s.k, "Vanishing level for the congruence report");
    slmove_cmd->add_flag("--mu-tables", slmove_s.mu_tables,
                         "Also print the before/after mu tables");
    slmove_cmd->add_flag("--allow-framing", slmove_s.allow_framing,
                         "Accept longitudes with nonzero self-framing");
    add_format_option(slmove_cmd, slmove_s);

    CLI::App* hset_cmd =
        app.add_subcommand("hset", "Affine lattice of reachable degree-(2k+1) mu vectors");
    hset_cmd->add_option("-i,--input", hset_s.inputs, "Tangle file")->required()->expected(1);
    hset_cmd->add_option("--k", hset_s.k, "Level k")->required();
    hset_cmd->add_option("--j", hset_s.j, "Component j")->required();
    hset_cmd->add_flag("--allow-framing", hset_s.allow_framing,
                       "Accept longitudes with nonzero self-framing");
    add_format_option(hset_cmd, hset_s);

    CLI::App* classify_cmd =
        app.add_subcommand("classify", "Edge-homotopy classification of two 4-component tangles");
    classify_cmd->add_option("-i,--input", classify_s.inputs, "Two tangle files")
        ->required()
        ->expected(2);
    classify_cmd->add_flag("--explain", classify_s.explain, "Print the separating witness");
    classify_cmd->add_flag("--allow-framing", classify_s.allow_framing,
                           "Accept longitudes with nonzero self-framing");
    add_format_option(classify_cmd, classify_s);

    CLI::App* verify_cmd =
        app.add_subcommand("verify", "Seeded randomized property suites");
    verify_cmd
        ->add_option("--prop", verify_s.prop, "Property suite")
        ->check(CLI::IsMember(
            {"all", "magnus-hom", "sl-congruence", "delta-formula", "lattice-oracle"}))
        ->capture_default_str();
    verify_cmd->add_option("--seed", verify_s.seed, "Random seed")->capture_default_str();
    verify_cmd->add_option("--cases", verify_s.cases, "Cases per suite");
    add_format_option(verify_cmd, verify_s);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(std::move(reversed));
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (app.got_subcommand(mu_cmd)) {
            const TanglePresentation t = load_input(mu_s, 0);
            const SequenceKey I = io::parse_sequence(mu_s.seq_text, t.component_count());
            const Int value = milnor_number(t, I);
            if (mu_s.format == "machine") {
                json doc = make_doc("mu");
                doc["n"] = t.component_count();
                doc["seq"] = io::format_sequence(I, t.component_count());
                doc["value"] = io::format_int(value);
                emit(out, doc);
            } else {
                out << value.str() << "\n";
            }
            return kExitOk;
        }

        if (app.got_subcommand(mubar_cmd)) {
            const TanglePresentation t = load_input(mubar_s, 0);
            const SequenceKey I = io::parse_sequence(mubar_s.seq_text, t.component_count());
            const auto [residue, modulus] = mu_bar(t, I);
            if (mubar_s.format == "machine") {
                json doc = make_doc("mubar");
                doc["n"] = t.component_count();
                doc["seq"] = io::format_sequence(I, t.component_count());
                doc["residue"] = io::format_int(residue);
                doc["modulus"] = io::format_int(modulus);
                emit(out, doc);
            } else if (modulus == 0) {
                out << residue.str() << " (exact)\n";
            } else {
                out << residue.str() << " (mod " << modulus.str() << ")\n";
            }
            return kExitOk;
        }

        if (app.got_subcommand(delta_cmd)) {
            const TanglePresentation t = load_input(delta_s, 0);
            const SequenceKey I = io::parse_sequence(delta_s.seq_text, t.component_count());
            const bool use_k = delta_cmd->count("--k") > 0;
            const Int value = use_k ? delta_k(t, I, delta_s.k) : delta_link(t, I);
            if (delta_s.format == "machine") {
                json doc = make_doc("delta");
                doc["n"] = t.component_count();
                doc["seq"] = io::format_sequence(I, t.component_count());
                doc["kind"] = use_k ? "delta_k" : "delta_link";
                if (use_k)
                    doc["k"] = delta_s.k;
                doc["value"] = io::format_int(value);
                emit(out, doc);
            } else {
                out << value.str() << "\n";
            }
            return kExitOk;
        }

        if (app.got_subcommand(slmove_cmd)) {
            const TanglePresentation gamma = load_input(slmove_s, 0);
            const TanglePresentation u = load_input(slmove_s, 1);
            const int n = gamma.component_count();
            const int q = slmove_s.degree;
            if (!linking_symmetric(gamma))
                err << "warning: length-2 Milnor numbers of the tangle are asymmetric\n";
            const std::vector<MagnusSeries> moved = transform({gamma, u, q});

            const bool want_congruence = slmove_cmd->count("--seq") > 0;
            SequenceKey I;
            Int before = 0, after = 0, modulus = 0;
            bool holds = false;
            if (want_congruence) {
                if (slmove_cmd->count("--k") == 0)
                    throw std::invalid_argument("--seq requires --k for the congruence report");
                I = io::parse_sequence(slmove_s.seq_text, n);
                if (static_cast<int>(I.size()) - 1 > q)
                    throw std::invalid_argument(
                        "sequence needs coefficients beyond the truncation degree");
                before = milnor_number(gamma, I);
                if (I.size() > 1) {
                    Monomial mono(I.begin(), I.end() - 1);
                    after = moved[static_cast<std::size_t>(I.back() - 1)].coeff(mono);
                }
                modulus = delta_k(gamma, I, slmove_s.k);
                holds = modulus == 0 ? before == after : (after - before) % modulus == 0;
            }

            MuTablePair tables;
            if (slmove_s.mu_tables) {
                tables.before = mu_table(gamma, q, false);
                tables.after = mu_after_table(moved, n, q);
            }

            if (slmove_s.format == "machine") {
                json doc = make_doc("slmove");
                doc["n"] = n;
                doc["degree"] = q;
                json series = json::array();
                for (const MagnusSeries& s : moved)
                    series.push_back(io::series_to_json(s));
                doc["series"] = std::move(series);
                if (slmove_s.mu_tables) {
                    doc["mu_before"] = io::mu_table_to_json(tables.before);
                    doc["mu_after"] = io::mu_table_to_json(tables.after);
                }
                if (want_congruence) {
                    json c;
                    c["seq"] = io::format_sequence(I, n);
                    c["k"] = slmove_s.k;
                    c["before"] = io::format_int(before);
                    c["after"] = io::format_int(after);
                    c["modulus"] = io::format_int(modulus);
                    c["holds"] = holds;
                    doc["congruence"] = std::move(c);
                }
                emit(out, doc);
            } else {
                for (int j = 1; j <= n; ++j)
                    out << "lambda'_" << j << " = "
                        << io::series_to_text(moved[static_cast<std::size_t>(j - 1)]) << "\n";
                if (slmove_s.mu_tables) {
                    out << "mu (before -> after):\n";
                    for (const auto& [key, value] : tables.before) {
                        const Int& moved_value = tables.after.at(key);
                        out << "  mu(" << io::format_sequence(key, n) << "): " << value.str()
                            << " -> " << moved_value.str() << "\n";
                    }
                }
                if (want_congruence) {
                    out << "congruence mu'(" << io::format_sequence(I, n) << ") = mu("
                        << io::format_sequence(I, n) << ") mod " << modulus.str() << ": "
                        << (holds ? "holds" : "VIOLATED") << " (" << after.str() << " vs "
                        << before.str() << ")\n";
                }
            }
            return kExitOk;
        }

        if (app.got_subcommand(hset_cmd)) {
            const TanglePresentation t = load_input(hset_s, 0);
            const AffineLattice lattice = hset_generators(t, hset_s.k, hset_s.j);
            if (hset_s.format == "machine") {
                json doc = make_doc("hset");
                doc["n"] = t.component_count();
                doc["k"] = hset_s.k;
                doc["j"] = hset_s.j;
                doc["lattice"] = io::lattice_to_json(lattice);
                emit(out, doc);
            } else {
                const int n = t.component_count();
                out << "H(" << 2 * hset_s.k + 2 << ", " << hset_s.j << ") for n=" << n
                    << ", one generator per pair m_pq:\n";
                for (std::size_t r = 0; r < lattice.basis.size(); ++r) {
                    out << "  X_" << io::format_sequence(lattice.basis[r], n) << ": "
                        << lattice.base[r].str();
                    for (std::size_t c = 0; c < lattice.pairs.size(); ++c) {
                        const Int& v = lattice.gens.at(static_cast<int>(r), static_cast<int>(c));
                        if (v == 0)
                            continue;
                        const auto& [p, qq] = lattice.pairs[c];
                        out << (v > 0 ? " + " : " - ");
                        Int mag = v > 0 ? v : Int(-v);
                        if (mag != 1)
                            out << mag.str() << " ";
                        out << "m" << p << qq;
                    }
                    out << "\n";
                }
            }
            return kExitOk;
        }

        if (app.got_subcommand(classify_cmd)) {
            const TanglePresentation t1 = load_input(classify_s, 0);
            const TanglePresentation t2 = load_input(classify_s, 1);
            const ClassifyReport report = classify_4clover_report(t1, t2);
            const bool equivalent = report.verdict == Verdict::equivalent;
            if (classify_s.format == "machine") {
                json doc = make_doc("classify");
                doc["verdict"] = equivalent ? "equivalent" : "inequivalent";
                if (report.differing_sequence) {
                    doc["differing_seq"] = io::format_sequence(*report.differing_sequence, 4);
                    doc["values"] = json::array({io::format_int(report.differing_values->first),
                                                 io::format_int(report.differing_values->second)});
                }
                if (report.infeasible_row) {
                    doc["infeasible_row"] = io::format_sequence(*report.infeasible_row, 4);
                    doc["infeasible_residual"] = io::format_int(*report.infeasible_residual);
                }
                emit(out, doc);
            } else {
                out << (equivalent ? "equivalent" : "inequivalent") << "\n";
                if (classify_s.explain && report.differing_sequence) {
                    out << "mu(" << io::format_sequence(*report.differing_sequence, 4)
                        << ") differs: " << report.differing_values->first.str() << " vs "
                        << report.differing_values->second.str() << "\n";
                }
                if (classify_s.explain && report.infeasible_row) {
                    out << "lattices are disjoint: residual "
                        << report.infeasible_residual->str() << " at basis row X_"
                        << io::format_sequence(*report.infeasible_row, 4) << "\n";
                }
                if (classify_s.explain && equivalent) {
                    out << "fingerprints match and the H(4, 4) lattices intersect\n";
                }
            }
            return equivalent ? kExitOk : kExitInequivalent;
        }

        if (app.got_subcommand(verify_cmd)) {
            struct Suite {
                const char* name;
                int default_cases;
                std::function<PropResult(std::uint64_t, int)> fn;
            };
            const std::vector<Suite> suites = {
                {"magnus-hom", 200, prop_magnus_hom},
                {"sl-congruence", 10, prop_sl_congruence},
                {"delta-formula", 10, prop_delta_formula_suite},
                {"lattice-oracle", 100, prop_lattice_oracle},
            };
            json results = json::array();
            bool all_pass = true;
            for (const Suite& suite : suites) {
                if (verify_s.prop != "all" && verify_s.prop != suite.name)
                    continue;
                const int cases = verify_s.cases > 0 ? verify_s.cases : suite.default_cases;
                const PropResult res = suite.fn(verify_s.seed, cases);
                const bool pass = res.failures == 0;
                all_pass = all_pass && pass;
                if (verify_s.format == "machine") {
                    json r;
                    r["prop"] = suite.name;
                    r["seed"] = verify_s.seed;
                    r["cases"] = res.cases;
                    r["failures"] = res.failures;
                    r["pass"] = pass;
                    r["notes"] = json(res.notes);
                    results.push_back(std::move(r));
                } else {
                    out << "prop " << suite.name << ": " << (res.cases - res.failures) << "/"
                        << res.cases << " checks passed (seed " << verify_s.seed << ")\n";
                    for (const std::string& note : res.notes)
                        out << "  " << note << "\n";
                }
            }
            if (verify_s.format == "machine") {
                json doc = make_doc("verify");
                doc["seed"] = verify_s.seed;
                doc["results"] = std::move(results);
                doc["pass"] = all_pass;
                emit(out, doc);
            } else {
                out << (all_pass ? "PASS" : "FAIL") << "\n";
            }
            return all_pass ? kExitOk : kExitPropertyFailure;
        }
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    err << "error: no command selected\n";
    return kExitUsage;
}

}  // namespace clover::cli
