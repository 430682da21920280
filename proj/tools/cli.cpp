#include "cli.hpp"

#include <cmath>
#include <filesystem>
#include <functional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "phg/designer.hpp"
#include "phg/hypergraph_io.hpp"
#include "phg/instances.hpp"
#include "phg/matching.hpp"
#include "phg/optics.hpp"
#include "phg/quantum_state.hpp"
#include "phg/text_format.hpp"

namespace phg::cli {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, sep)) parts.push_back(item);
    return parts;
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    for (const auto& part : split(text, ',')) {
        try {
            out.push_back(std::stoi(part));
        } catch (const std::logic_error&) {
            throw std::invalid_argument("bad integer list entry: " + part);
        }
    }
    return out;
}

// Shared "where does the hypergraph come from" options.
struct InputOpts {
    std::string file;
    std::string gen;
    double p1 = 0.0, p2 = 0.0, phi = 0.0;
    CLI::Option* p1_opt = nullptr;
    CLI::Option* p2_opt = nullptr;
    CLI::Option* phi_opt = nullptr;

    void attach(CLI::App* cmd) {
        cmd->add_option("input", file, "hypergraph file");
        cmd->add_option("--gen", gen, "instance id, e.g. w_state:m=5,p1=1e-4,p2=1e-2");
        p1_opt = cmd->add_option("--p1", p1, "1-photon source probability");
        p2_opt = cmd->add_option("--p2", p2, "2-photon source probability");
        phi_opt = cmd->add_option("--phi", phi, "phase in radians");
    }

    Hypergraph resolve() const {
        if (!gen.empty()) {
            std::string name;
            InstanceParams params = parse_instance_params(gen, name);
            if (p1_opt->count() > 0) params.p1 = p1;
            if (p2_opt->count() > 0) params.p2 = p2;
            if (phi_opt->count() > 0) params.phi = phi;
            return gen_instance(name, params);
        }
        if (file.empty()) throw std::invalid_argument("give a hypergraph file or --gen");
        return load_hypergraph(file);
    }
};

QuantumState resolve_target(const std::string& spec) {
    if (spec.rfind("ghz:", 0) == 0) {
        int m = 0, d = 0;
        for (const auto& item : split(spec.substr(4), ',')) {
            const auto eq = item.find('=');
            if (eq == std::string::npos)
                throw std::invalid_argument("ghz target wants m=...,d=...");
            const std::string key = item.substr(0, eq);
            const int value = std::stoi(item.substr(eq + 1));
            if (key == "m") m = value;
            else if (key == "d") d = value;
            else throw std::invalid_argument("unknown ghz target parameter: " + key);
        }
        return ghz_state(m, d);
    }
    if (spec.rfind("w:", 0) == 0) {
        int m = 0;
        for (const auto& item : split(spec.substr(2), ',')) {
            const auto eq = item.find('=');
            if (eq == std::string::npos || item.substr(0, eq) != "m")
                throw std::invalid_argument("w target wants m=...");
            m = std::stoi(item.substr(eq + 1));
        }
        return w_state(m);
    }
    if (std::filesystem::exists(spec)) return post_selected_state(load_hypergraph(spec));
    return post_selected_state(gen_instance(spec));
}

void print_state(std::ostream& out, const QuantumState& state, int vertex_count) {
    for (const auto& line : state_table(state, vertex_count)) out << line << "\n";
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"hypergraph model of multi-photon quantum experiments"};
    app.require_subcommand(1);

    std::function<void()> action;

    // decide
    auto* decide = app.add_subcommand("decide", "does a perfect matching exist");
    auto decide_in = std::make_shared<InputOpts>();
    decide_in->attach(decide);
    decide->callback([&action, decide_in, &out] {
        action = [decide_in, &out] {
            out << (has_perfect_matching(decide_in->resolve()) ? "true" : "false") << "\n";
        };
    });

    // enumerate
    auto* enumerate = app.add_subcommand("enumerate", "list perfect matchings");
    auto enum_in = std::make_shared<InputOpts>();
    enum_in->attach(enumerate);
    auto enum_limit = std::make_shared<std::size_t>(0);
    auto* enum_limit_opt = enumerate->add_option("--limit", *enum_limit, "stop after this many");
    enumerate->callback([&action, enum_in, enum_limit, enum_limit_opt, &out] {
        action = [enum_in, enum_limit, enum_limit_opt, &out] {
            std::optional<std::size_t> limit;
            if (enum_limit_opt->count() > 0) limit = *enum_limit;
            const MatchingReport report = enumerate_perfect_matchings(enum_in->resolve(), limit);
            for (const auto& pm : report.matchings) {
                for (std::size_t i = 0; i < pm.edge_indices.size(); ++i) {
                    if (i > 0) out << ' ';
                    out << pm.edge_indices[i];
                }
                out << "\n";
            }
            if (report.truncated) out << "truncated: true\n";
            out << "count: " << report.count << "\n";
        };
    });

    // state
    auto* state_cmd = app.add_subcommand("state", "post-selected or fixed-order state table");
    auto state_in = std::make_shared<InputOpts>();
    state_in->attach(state_cmd);
    auto state_order = std::make_shared<int>(0);
    auto* state_order_opt =
        state_cmd->add_option("--order", *state_order, "emission order instead of post-selection");
    state_cmd->callback([&action, state_in, state_order, state_order_opt, &out] {
        action = [state_in, state_order, state_order_opt, &out] {
            const Hypergraph h = state_in->resolve();
            const QuantumState psi = state_order_opt->count() > 0
                                         ? emission_state(h, *state_order)
                                         : post_selected_state(h);
            print_state(out, psi, h.vertex_count());
        };
    });

    // srv
    auto* srv_cmd = app.add_subcommand("srv", "Schmidt-rank vector of the post-selected state");
    auto srv_in = std::make_shared<InputOpts>();
    srv_in->attach(srv_cmd);
    auto parties_text = std::make_shared<std::string>();
    srv_cmd->add_option("--parties", *parties_text, "three blocks, e.g. a|b|c")->required();
    srv_cmd->callback([&action, srv_in, parties_text, &out] {
        action = [srv_in, parties_text, &out] {
            const Hypergraph h = srv_in->resolve();
            const auto blocks = split(*parties_text, '|');
            if (blocks.size() != 3)
                throw std::invalid_argument("--parties needs exactly three |-separated blocks");
            std::array<std::vector<int>, 3> parties;
            for (int p = 0; p < 3; ++p) {
                for (const auto& id : split(blocks[p], ','))
                    parties[p].push_back(h.require_vertex(id));
            }
            const SrvTriple triple = srv(post_selected_state(h), parties);
            out << triple.a << ',' << triple.b << ',' << triple.c << "\n";
        };
    });

    // fidelity
    auto* fid_cmd = app.add_subcommand("fidelity", "overlap with a target state");
    auto fid_in = std::make_shared<InputOpts>();
    fid_in->attach(fid_cmd);
    auto fid_target = std::make_shared<std::string>();
    fid_cmd->add_option("--target", *fid_target, "ghz:m=...,d=... | w:m=... | instance | file")
        ->required();
    auto fid_order = std::make_shared<int>(0);
    auto* fid_order_opt = fid_cmd->add_option("--order", *fid_order, "use emission state");
    fid_cmd->callback([&action, fid_in, fid_target, fid_order, fid_order_opt, &out] {
        action = [fid_in, fid_target, fid_order, fid_order_opt, &out] {
            const Hypergraph h = fid_in->resolve();
            const QuantumState psi = fid_order_opt->count() > 0 ? emission_state(h, *fid_order)
                                                                : post_selected_state(h);
            out << format_number(fidelity(psi, resolve_target(*fid_target))) << "\n";
        };
    });

    // sweep
    auto* sweep_cmd = app.add_subcommand("sweep", "phase sweep of detector probabilities (CSV)");
    auto sweep_setup = std::make_shared<std::string>();
    sweep_cmd->add_option("--setup", *sweep_setup, "zwm | two_source_3photon")->required();
    auto sweep_points = std::make_shared<int>(16);
    sweep_cmd->add_option("--points", *sweep_points, "phase grid size over [0, 2pi)");
    auto sweep_phis = std::make_shared<std::string>();
    auto* sweep_phis_opt =
        sweep_cmd->add_option("--phis", *sweep_phis, "explicit comma-separated phases");
    auto sweep_detectors = std::make_shared<std::string>();
    auto* sweep_detectors_opt = sweep_cmd->add_option(
        "--detectors", *sweep_detectors, "detector sets, e.g. d1+d2;d1'+d2'");
    sweep_cmd->callback([&action, sweep_setup, sweep_points, sweep_phis, sweep_phis_opt,
                         sweep_detectors, sweep_detectors_opt, &out] {
        action = [sweep_setup, sweep_points, sweep_phis, sweep_phis_opt, sweep_detectors,
                  sweep_detectors_opt, &out] {
            std::function<Hypergraph(double)> builder;
            std::vector<std::vector<std::string>> detector_sets;
            if (*sweep_setup == "zwm") {
                builder = [](double phi) {
                    return apply_beam_splitter(gen_zwm(phi), "d1", "d1'");
                };
                detector_sets = {{"d1"}, {"d1'"}};
            } else if (*sweep_setup == "two_source_3photon") {
                builder = [](double phi) {
                    Hypergraph h = gen_two_source_3photon(phi);
                    h = apply_beam_splitter(h, "d1", "d1'");
                    return apply_beam_splitter(h, "d2", "d2'");
                };
                detector_sets = {{"d1", "d2"}, {"d1'", "d2'"}, {"d1", "d2'"}, {"d1'", "d2"}};
            } else {
                throw std::invalid_argument("unknown sweep setup: " + *sweep_setup);
            }
            if (sweep_detectors_opt->count() > 0) {
                detector_sets.clear();
                for (const auto& group : split(*sweep_detectors, ';'))
                    detector_sets.push_back(split(group, '+'));
            }
            std::vector<double> phases;
            if (sweep_phis_opt->count() > 0) {
                for (const auto& item : split(*sweep_phis, ','))
                    phases.push_back(std::stod(item));
            } else {
                if (*sweep_points < 1) throw std::invalid_argument("--points must be >= 1");
                for (int k = 0; k < *sweep_points; ++k)
                    phases.push_back(kTwoPi * k / *sweep_points);
            }
            out << sweep_csv(interference_sweep(builder, 1, phases, detector_sets));
        };
    });

    // gen
    auto* gen_cmd = app.add_subcommand("gen", "write an instance hypergraph");
    auto gen_id = std::make_shared<std::string>();
    gen_cmd->add_option("instance", *gen_id, "instance id")->required();
    auto gen_in = std::make_shared<InputOpts>();
    gen_in->p1_opt = gen_cmd->add_option("--p1", gen_in->p1, "1-photon source probability");
    gen_in->p2_opt = gen_cmd->add_option("--p2", gen_in->p2, "2-photon source probability");
    gen_in->phi_opt = gen_cmd->add_option("--phi", gen_in->phi, "phase in radians");
    auto gen_out_path = std::make_shared<std::string>();
    gen_cmd->add_option("--out", *gen_out_path, "output file (default stdout)");
    gen_cmd->callback([&action, gen_id, gen_in, gen_out_path, &out] {
        action = [gen_id, gen_in, gen_out_path, &out] {
            gen_in->gen = *gen_id;
            gen_in->file.clear();
            const std::string text = write_hypergraph_text(gen_in->resolve());
            if (gen_out_path->empty()) out << text;
            else write_file(*gen_out_path, text);
        };
    });

    // design
    auto* design_cmd = app.add_subcommand("design", "search for a hypergraph producing a state");
    auto design_target = std::make_shared<std::string>();
    design_cmd->add_option("--target", *design_target, "target state spec")->required();
    auto design_max_edges = std::make_shared<int>(0);
    design_cmd->add_option("--max-edges", *design_max_edges, "subset size bound")->required();
    auto design_degrees = std::make_shared<std::string>();
    design_cmd->add_option("--degrees", *design_degrees, "allowed degrees, e.g. 1,2")->required();
    auto design_modes = std::make_shared<std::string>();
    design_cmd->add_option("--modes", *design_modes, "mode alphabet, e.g. 0,1")->required();
    auto design_out_path = std::make_shared<std::string>();
    design_cmd->add_option("--out", *design_out_path, "where to write a found design");
    design_cmd->callback([&action, design_target, design_max_edges, design_degrees, design_modes,
                          design_out_path, &out] {
        action = [design_target, design_max_edges, design_degrees, design_modes, design_out_path,
                  &out] {
            DesignConstraints constraints;
            constraints.max_edges = *design_max_edges;
            constraints.degrees = parse_int_list(*design_degrees);
            constraints.modes = parse_int_list(*design_modes);
            const auto found = designer_search(resolve_target(*design_target), constraints);
            if (!found) {
                out << "none\n";
                return;
            }
            out << "found\n";
            const std::string text = write_hypergraph_text(*found);
            if (design_out_path->empty()) out << text;
            else write_file(*design_out_path, text);
        };
    });

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "does the input produce the target state");
    auto verify_in = std::make_shared<InputOpts>();
    verify_in->attach(verify_cmd);
    auto verify_target = std::make_shared<std::string>();
    verify_cmd->add_option("--target", *verify_target, "target state spec")->required();
    verify_cmd->callback([&action, verify_in, verify_target, &out] {
        action = [verify_in, verify_target, &out] {
            const bool ok = verify_design(verify_in->resolve(), resolve_target(*verify_target));
            out << (ok ? "true" : "false") << "\n";
        };
    });

    try {
        std::vector<const char*> argv;
        argv.push_back("phg");
        for (const auto& a : args) argv.push_back(a.c_str());
        app.parse(static_cast<int>(argv.size()), argv.data());
        if (action) action();
        return 0;
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    } catch (const FormatError& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    }
}

}  // namespace phg::cli
