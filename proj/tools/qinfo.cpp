// Copyright 2026 The qinfo Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// qinfo: command-line driver for the experiments and figure data.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "qinfo.hpp"

namespace fs = std::filesystem;
using namespace qinfo;

namespace {

constexpr std::uint64_t kDefaultSeed = 20260101;

struct Common {
    std::uint64_t seed = kDefaultSeed;
    std::optional<std::size_t> shots;
    std::string out;
    std::string format;
};

void add_common(CLI::App *sub, Common &c, bool sampled) {
    if (sampled) {
        sub->add_option("--seed", c.seed, "RNG seed")->capture_default_str();
        sub->add_option("--shots", c.shots, "number of shots");
    }
    sub->add_option("--out", c.out, "output directory (files are written there instead of stdout)");
    sub->add_option("--format", c.format, "stdout format")->check(CLI::IsMember({"csv", "json"}));
}

/// Writes `content` to out/name, or to stdout when no directory was given and `to_stdout` is set.
void emit(const Common &c, const std::string &name, const std::string &content, bool to_stdout) {
    if (!c.out.empty()) {
        fs::create_directories(c.out);
        const fs::path path = fs::path(c.out) / name;
        std::ofstream file(path, std::ios::binary);
        require(static_cast<bool>(file), ErrorKind::invalid_argument, "cannot write " + path.string());
        file << content;
        std::cout << "wrote " << path.string() << "\n";
    } else if (to_stdout) {
        std::cout << content;
    }
}

std::string dump(const nlohmann::json &j) { return j.dump(2) + "\n"; }

nlohmann::json matrix_json(const CMatrix &m) {
    nlohmann::json rows = nlohmann::json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            row.push_back({m(i, j).real(), m(i, j).imag()});
        }
        rows.push_back(row);
    }
    return rows;
}

void run_experiment(const Common &c, const std::string &name, const ExperimentRecord &record,
                    const std::string &transcript) {
    if (!c.out.empty()) {
        emit(c, name + ".json", dump(to_json(record)), false);
        emit(c, name + ".txt", transcript, false);
        return;
    }
    std::cout << (c.format == "json" ? dump(to_json(record)) : transcript);
}

void run_teleport(const Common &c, const std::string &name, double a, double b, bool deferred) {
    const TeleportResult r = teleport(a, b, deferred, c.seed);
    const std::string text = teleport_transcript(a, b, deferred, r);
    auto bloch = [](const BlochVector &v) { return nlohmann::json{v.x, v.y, v.z}; };
    const nlohmann::json doc{{"a", a},
                             {"b", b},
                             {"seed", c.seed},
                             {"deferred", deferred},
                             {"message_initial", bloch(r.message_initial)},
                             {"bob", bloch(r.bob)},
                             {"message_final", bloch(r.message_final)}};
    if (!c.out.empty()) {
        emit(c, name + ".json", dump(doc), false);
        emit(c, name + ".txt", text, false);
        return;
    }
    std::cout << (c.format == "json" ? dump(doc) : text);
}

void print_error(const std::string &kind, const std::string &message) {
    std::cerr << nlohmann::json{{"error", {{"kind", kind}, {"message", message}}}}.dump() << "\n";
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Quantum information experiments and figure data.\n"
                 "Sampling subcommands default to --seed " + std::to_string(kDefaultSeed) +
                 "; identical arguments give byte-identical output."};
    app.require_subcommand(1);

    Common c;

    auto *e1 = app.add_subcommand("experiment1", "X gate then measurement (default 10 shots)");
    add_common(e1, c, true);
    auto *e2 = app.add_subcommand("experiment2", "Bell pair preparation and measurement (default 10 shots)");
    add_common(e2, c, true);

    std::vector<double> e3_t{0.0, 1.0, 0.5};
    auto *e3 = app.add_subcommand("experiment3", "SWAP circuit with X^t preparation (default 50 shots)");
    add_common(e3, c, true);
    e3->add_option("--t", e3_t, "XPow exponents to run")->capture_default_str();

    // With exp(+i pi t P / 2) these give the message Bloch vector (0.939, -0.318, 0.131).
    double tel_a = -0.103;
    double tel_b = -0.456;
    auto *e4 = app.add_subcommand("experiment4", "teleportation with measurement");
    add_common(e4, c, true);
    auto *e5 = app.add_subcommand("experiment5", "teleportation without measurement");
    add_common(e5, c, true);
    for (auto *sub : {e4, e5}) {
        sub->add_option("--a", tel_a, "XPow exponent of the message preparation")->capture_default_str();
        sub->add_option("--b", tel_b, "YPow exponent of the message preparation")->capture_default_str();
    }

    std::size_t coin_points = 101;
    auto *coin = app.add_subcommand("coinflip", "Shannon entropy of a biased coin");
    add_common(coin, c, false);
    coin->add_option("--points", coin_points, "grid points")->capture_default_str()->check(CLI::Range(2, 100000));

    double t_max = 10.0;
    std::size_t t_points = 401;
    auto *rabi = app.add_subcommand("rabi", "two-qubit Jaynes-Cummings system entropy and purity");
    add_common(rabi, c, false);
    auto *deco = app.add_subcommand("decohere", "three-qubit decoherence of a |+> system");
    add_common(deco, c, false);
    for (auto *sub : {rabi, deco}) {
        sub->add_option("--t-max", t_max, "final time")->capture_default_str()->check(CLI::PositiveNumber);
        sub->add_option("--points", t_points, "time grid points")->capture_default_str()->check(CLI::Range(2, 1000000));
    }

    double kraus_t = 1.0;
    auto *kraus = app.add_subcommand("kraus", "Kraus operators of the two-qubit coupling at time t");
    add_common(kraus, c, false);
    kraus->add_option("--t", kraus_t, "time")->capture_default_str();

    std::optional<double> chsh_alpha;
    std::size_t chsh_points = 91;
    auto *chsh = app.add_subcommand("chsh", "CHSH violation and entanglement versus alpha");
    add_common(chsh, c, true);
    chsh->add_option("--alpha", chsh_alpha, "single alpha (radians); sampled when --shots is given");
    chsh->add_option("--points", chsh_points, "alpha grid points")->capture_default_str()->check(CLI::Range(2, 100000));

    std::optional<double> tfd_theta;
    std::size_t tfd_points = 200;
    auto *tfd = app.add_subcommand("tfd", "two-oscillator entanglement entropy versus theta");
    add_common(tfd, c, false);
    tfd->add_option("--theta", tfd_theta, "single theta in (0, pi/2)");
    tfd->add_option("--points", tfd_points, "theta grid points")->capture_default_str()->check(CLI::Range(2, 100000));

    int area_n = 60;
    std::optional<int> area_lmax;
    std::string area_cutoff;
    auto *area = app.add_subcommand(
        "arealaw", "spherical-shell entropy scan and lambda fit (default N=60, adaptive cutoff up to l=1000;"
                   " --lmax selects a fixed cutoff)");
    add_common(area, c, false);
    area->add_option("--n", area_n, "radial sites")->capture_default_str();
    area->add_option("--lmax", area_lmax, "angular momentum cutoff");
    area->add_option("--cutoff", area_cutoff, "fixed or adaptive")->check(CLI::IsMember({"fixed", "adaptive"}));

    std::size_t hermite_nq = 5;
    std::size_t hermite_levels = 16;
    auto *hermite = app.add_subcommand("hermite", "oscillator eigenfunctions and sampling fidelity");
    add_common(hermite, c, false);
    hermite->add_option("--nq", hermite_nq, "qubits per site")->capture_default_str();
    hermite->add_option("--levels", hermite_levels, "number of levels")->capture_default_str();

    SchwingerParams sp{0.5, 0.1};
    auto *sch = app.add_subcommand("schwinger", "two-site Schwinger model evolution from the naive vacuum");
    add_common(sch, c, false);
    sch->add_option("--x", sp.x, "hopping 1/(ag)^2")->capture_default_str();
    sch->add_option("--mu", sp.mu, "mass 2m/(ag^2)")->capture_default_str();
    sch->add_option("--t-max", t_max, "final time")->capture_default_str()->check(CLI::PositiveNumber);
    sch->add_option("--points", t_points, "time grid points")->capture_default_str()->check(CLI::Range(2, 1000000));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        print_error("usage", e.what());
        return 2;
    }

    try {
        auto *sub = app.get_subcommands().front();
        const std::string name = sub->get_name();
        const bool json = c.format == "json";

        if (name == "experiment1") {
            const auto rec = run_circuit(experiment1_circuit(), c.shots.value_or(10), c.seed);
            run_experiment(c, name, rec, experiment1_transcript(rec));
        } else if (name == "experiment2") {
            const auto rec = run_circuit(experiment2_circuit(), c.shots.value_or(10), c.seed);
            run_experiment(c, name, rec, experiment2_transcript(rec));
        } else if (name == "experiment3") {
            nlohmann::json runs = nlohmann::json::array();
            std::string text;
            for (std::size_t i = 0; i < e3_t.size(); ++i) {
                const auto demo = swap_measurement_demo(e3_t[i], c.shots.value_or(50), c.seed + i);
                text += experiment3_transcript(e3_t[i], demo.record) + "\n";
                nlohmann::json run = to_json(demo.record);
                run["t"] = e3_t[i];
                run["correlation"] = demo.correlation ? nlohmann::json(*demo.correlation) : nlohmann::json();
                runs.push_back(run);
            }
            if (!c.out.empty()) {
                emit(c, name + ".json", dump(runs), false);
                emit(c, name + ".txt", text, false);
            } else {
                std::cout << (json ? dump(runs) : text);
            }
        } else if (name == "experiment4" || name == "experiment5") {
            run_teleport(c, name, tel_a, tel_b, name == "experiment5");
        } else if (name == "coinflip") {
            std::ostringstream csv;
            write_coinflip_csv(csv, coin_points);
            emit(c, "coinflip.csv", csv.str(), true);
        } else if (name == "rabi" || name == "decohere") {
            const bool two = name == "rabi";
            const auto series =
                two ? reduced_evolution(jaynes_cummings_2q(1.0, 0.0, 1.0), uniform_grid(0.0, t_max, t_points),
                                        rabi_initial_state(), {0})
                    : reduced_evolution(jaynes_cummings_3q(0.9, 0.3, 0.4, 0.5, 0.4),
                                        uniform_grid(0.0, t_max, t_points), decoherence_initial_state(), {0});
            std::ostringstream csv;
            write_reduced_csv(csv, series);
            emit(c, name + ".csv", csv.str(), true);
        } else if (name == "kraus") {
            const KrausSet k = kraus_extract(jaynes_cummings_2q(1.0, 1.0, 1.0), kraus_t);
            const KrausProducts p = kraus_products(k);
            const DensityMatrix plus = from_statevector(apply_gate(StateVector(1), standard_gate("H"), {0}));
            const double s0 = von_neumann_entropy(kraus_apply(k, plus, 0)).entropy_bits;
            const double s1 = von_neumann_entropy(kraus_apply(k, plus, 1)).entropy_bits;
            const nlohmann::json doc{{"t", kraus_t},
                                     {"couplings", {1.0, 1.0, 1.0}},
                                     {"E", {{"11", matrix_json(k.e11)}, {"12", matrix_json(k.e12)},
                                            {"21", matrix_json(k.e21)}, {"22", matrix_json(k.e22)}}},
                                     {"P", {{"11", matrix_json(p.p11)}, {"12", matrix_json(p.p12)},
                                            {"21", matrix_json(p.p21)}, {"22", matrix_json(p.p22)}}},
                                     {"system_initial", "|+>"},
                                     {"entropy_env0_bits", s0},
                                     {"entropy_env1_bits", s1}};
            std::ostringstream csv;
            csv << "matrix,row,col,re,im\n";
            for (const auto &[label, m] : std::vector<std::pair<std::string, CMatrix>>{
                     {"P11", p.p11}, {"P12", p.p12}, {"P21", p.p21}, {"P22", p.p22}}) {
                for (Eigen::Index i = 0; i < 2; ++i) {
                    for (Eigen::Index j = 0; j < 2; ++j) {
                        csv << label << ',' << i << ',' << j << ',' << format_double(m(i, j).real()) << ','
                            << format_double(m(i, j).imag()) << "\n";
                    }
                }
            }
            if (!c.out.empty()) {
                emit(c, "kraus.json", dump(doc), false);
                emit(c, "kraus.csv", csv.str(), false);
            } else {
                std::cout << (c.format == "csv" ? csv.str() : dump(doc));
            }
        } else if (name == "chsh") {
            if (chsh_alpha) {
                const auto [settings, best] = optimal_settings(*chsh_alpha);
                const ChshResult r = c.shots ? sampled_chsh(settings, *c.shots, c.seed) : chsh_expectations(settings);
                nlohmann::json doc{{"alpha", *chsh_alpha},
                                   {"beta", settings.beta},
                                   {"beta_prime", settings.beta_prime},
                                   {"entropy", entangled_entropy(*chsh_alpha)},
                                   {"e_qs", r.e_qs},
                                   {"e_qt", r.e_qt},
                                   {"e_rs", r.e_rs},
                                   {"e_rt", r.e_rt},
                                   {"e_bell", r.e_bell},
                                   {"e_bell_max", best},
                                   {"violation", r.violation}};
                if (c.shots) {
                    doc["shots"] = *c.shots;
                    doc["seed"] = c.seed;
                    doc["stderr_bell"] = r.stderr_bell;
                }
                std::ostringstream csv;
                csv << "alpha,entropy,violation\n"
                    << format_double(*chsh_alpha) << ',' << format_double(entangled_entropy(*chsh_alpha)) << ','
                    << format_double(r.violation) << "\n";
                if (!c.out.empty()) {
                    emit(c, "chsh.json", dump(doc), false);
                    emit(c, "chsh.csv", csv.str(), false);
                } else {
                    std::cout << (c.format == "csv" ? csv.str() : dump(doc));
                }
            } else {
                std::ostringstream csv;
                write_chsh_csv(csv, uniform_grid(0.0, kPi / 2, chsh_points));
                emit(c, "chsh.csv", csv.str(), true);
            }
        } else if (name == "tfd") {
            auto row = [](const TfdReport &r) {
                return format_double(r.theta) + ',' + format_double(r.S_exact) + ',' + format_double(r.S_approx) +
                       ',' + format_double(r.T_effective) + ',' + format_double(r.omega_plus) + ',' +
                       format_double(r.omega_minus) + ',' + format_double(r.A) + "\n";
            };
            std::string csv = "theta,S_exact,S_approx,T_effective,omega_plus,omega_minus,A\n";
            if (tfd_theta) {
                csv += row(tfd_pair(*tfd_theta));
            } else {
                // Open interval: drop the two endpoints of the closed grid.
                const auto grid = uniform_grid(0.0, kPi / 2, tfd_points + 2);
                for (std::size_t i = 1; i + 1 < grid.size(); ++i) {
                    csv += row(tfd_pair(grid[i]));
                }
            }
            emit(c, "tfd.csv", csv, true);
        } else if (name == "arealaw") {
            AreaLawOptions opts;
            opts.mode = area_lmax ? CutoffMode::fixed : CutoffMode::adaptive;
            if (!area_cutoff.empty()) {
                opts.mode = area_cutoff == "fixed" ? CutoffMode::fixed : CutoffMode::adaptive;
            }
            opts.l_max = area_lmax.value_or(1000);
            const EntropyCurve curve = area_law_scan(area_n, opts);
            std::ostringstream csv;
            write_area_csv(csv, curve);
            const std::string fit = dump(area_fit_json(curve));
            if (!c.out.empty()) {
                emit(c, "arealaw.csv", csv.str(), false);
                emit(c, "arealaw_fit.json", fit, false);
            } else {
                std::cout << (json ? fit : csv.str());
            }
        } else if (name == "hermite") {
            const std::size_t n_phi = std::size_t{1} << hermite_nq;
            const auto errors = sampling_fidelity(hermite_nq, hermite_levels);
            const auto infidelity =
                digitized_oscillator_infidelity(hermite_nq, std::min(hermite_levels, n_phi));
            std::ostringstream csv;
            csv << "x";
            for (std::size_t n = 0; n < hermite_levels; ++n) {
                csv << ",psi" << n;
            }
            csv << "\n";
            const double L = nyquist_L(n_phi);
            for (double x : uniform_grid(-L, L, 401)) {
                csv << format_double(x);
                for (std::size_t n = 0; n < hermite_levels; ++n) {
                    csv << ',' << format_double(hermite_function(static_cast<int>(n), x));
                }
                csv << "\n";
            }
            const nlohmann::json doc{{"n_q", hermite_nq},
                                     {"n_phi", n_phi},
                                     {"L", L},
                                     {"sample_points", sample_points(n_phi)},
                                     {"max_error", errors},
                                     {"eigenvector_infidelity", infidelity},
                                     {"levels_below_1e-5", std::count_if(errors.begin(), errors.end(),
                                                                         [](double e) { return e < 1e-5; })},
                                     {"digitization", to_json(digitize(hermite_nq))}};
            if (!c.out.empty()) {
                emit(c, "hermite.csv", csv.str(), false);
                emit(c, "hermite_fidelity.json", dump(doc), false);
            } else {
                std::cout << (json ? dump(doc) : csv.str());
            }
        } else if (name == "schwinger") {
            const auto series = schwinger_evolve(sp, uniform_grid(0.0, t_max, t_points));
            std::ostringstream csv;
            write_schwinger_csv(csv, series);
            const auto g = schwinger_ground_state(sp);
            const auto proj = schwinger_project(sp);
            nlohmann::json h4 = nlohmann::json::array();
            const RMatrix h = schwinger_h4(sp);
            for (Eigen::Index i = 0; i < 4; ++i) {
                h4.push_back({h(i, 0), h(i, 1), h(i, 2), h(i, 3)});
            }
            const nlohmann::json doc{{"x", sp.x},
                                     {"mu", sp.mu},
                                     {"h4", h4},
                                     {"ground_energy", g.energy},
                                     {"ground_amplitudes", g.amplitudes},
                                     {"projection_max_deviation", max_abs(RMatrix(proj.h4 - h))},
                                     {"gauss_law", proj.gauss_law}};
            if (!c.out.empty()) {
                emit(c, "schwinger.csv", csv.str(), false);
                emit(c, "schwinger_ground.json", dump(doc), false);
            } else {
                std::cout << (json ? dump(doc) : csv.str());
            }
        }
    } catch (const Error &e) {
        print_error(std::string(to_string(e.kind())), e.what());
        return 1;
    } catch (const std::exception &e) {
        print_error("internal_fault", e.what());
        return 1;
    }
    return 0;
}
