/*
 * Copyright 2026 The affectnav Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <csignal>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "affectnav/config.hpp"
#include "affectnav/errors.hpp"
#include "affectnav/http_server.hpp"
#include "affectnav/service.hpp"
#include "commands.hpp"

namespace {

affectnav::HttpServer* g_server = nullptr;

void handle_signal(int) {
    if (g_server) g_server->stop();
}

std::ifstream open_input(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw affectnav::FormatError("cannot open " + path.string(), 0);
    return in;
}

} // namespace

int main(int argc, char** argv) {
    using namespace affectnav;

    CLI::App app{"affectnav: emotion-aware tourist concierge engine"};
    app.require_subcommand(1);

    std::optional<std::string> config_file;
    std::optional<std::string> data_dir;
    std::optional<std::string> fv_file;
    std::optional<std::string> persona;
    std::optional<std::uint64_t> seed;
    std::optional<std::string> idle_mode;
    std::optional<double> beta;
    std::optional<double> alpha;

    app.add_option("--config", config_file, "JSON configuration file");
    app.add_option("--data-dir", data_dir, "Directory with transition_table.tsv, spots.tsv and fv.tsv");
    app.add_option("--fv-file", fv_file, "Favorite-value lexicon (default <data-dir>/fv.tsv)");
    app.add_option("--persona", persona, "Persona id for personal favorite values");
    app.add_option("--seed", seed, "Seed for stochastic idle drift");
    app.add_option("--idle-mode", idle_mode, "deterministic or stochastic")
        ->check(CLI::IsMember({"deterministic", "stochastic"}));
    app.add_option("--beta", beta, "Dummy favorite value for a missing second axis");
    app.add_option("--alpha", alpha, "Affect-profile smoothing weight in (0, 1]");

    auto* repl = app.add_subcommand("repl", "Interactive session over case-frame notation");
    bool repl_json = false;
    repl->add_flag("--json", repl_json, "Print turn reports as JSON");

    auto* eval = app.add_subcommand("eval", "Run a trace file and print per-turn CSV");
    std::string trace_path;
    eval->add_option("trace", trace_path, "Trace file")->required();

    auto* inspect = app.add_subcommand("inspect", "Print a fixture with sanity checks");
    std::string inspect_what;
    std::optional<std::string> inspect_file;
    inspect->add_option("table", inspect_what, "transition | groups | spots | fv")
        ->required()
        ->check(CLI::IsMember({"transition", "groups", "spots", "fv"}));
    inspect->add_option("--file", inspect_file, "Inspect this file instead of the data-dir copy");

    auto* fv = app.add_subcommand("fv", "Read or edit the favorite-value lexicon");
    fv->require_subcommand(1);
    auto* fv_get = fv->add_subcommand("get", "Look up a term");
    auto* fv_set = fv->add_subcommand("set", "Write a term");
    auto* fv_import = fv->add_subcommand("import", "Merge records from a file");
    auto* fv_export = fv->add_subcommand("export", "Write the lexicon to a file or stdout");
    std::string fv_term;
    double fv_value = 0.0;
    std::string fv_layer{kDefaultLayer};
    std::string fv_path;
    fv_get->add_option("term", fv_term)->required();
    fv_set->add_option("term", fv_term)->required();
    fv_set->add_option("value", fv_value)->required();
    fv_set->add_option("--layer", fv_layer, "default or a persona id");
    fv_import->add_option("file", fv_path)->required();
    fv_export->add_option("file", fv_path);

    auto* serve = app.add_subcommand("serve", "Run the HTTP service");
    std::optional<std::string> host;
    std::optional<int> port;
    std::optional<std::string> sessions_dir;
    serve->add_option("--host", host);
    serve->add_option("--port", port);
    serve->add_option("--sessions-dir", sessions_dir, "Persist sessions as event logs here");

    CLI11_PARSE(app, argc, argv);

    try {
        ServiceConfig config;
        if (config_file) apply_config_file(config, *config_file);
        apply_env_overrides(config);
        if (data_dir) config.data_dir = *data_dir;
        if (fv_file) config.fv_file = *fv_file;
        if (seed) config.engine.machine.seed = *seed;
        if (idle_mode) config.engine.machine.idle_mode = *idle_mode_from_name(*idle_mode);
        if (beta) config.engine.egc.beta = *beta;
        if (alpha) config.engine.alpha = *alpha;
        if (host) config.host = *host;
        if (port) config.port = *port;
        if (sessions_dir) config.sessions_dir = *sessions_dir;

        if (*inspect) {
            if (inspect_what == "groups") return cli::inspect_groups(config.engine.machine.targets, std::cout);
            std::filesystem::path path;
            if (inspect_file) {
                path = *inspect_file;
            } else if (inspect_what == "transition") {
                path = config.transition_table_path();
            } else if (inspect_what == "spots") {
                path = config.spots_path();
            } else {
                path = config.fv_path();
            }
            auto in = open_input(path);
            if (inspect_what == "transition") return cli::inspect_transition(in, std::cout);
            if (inspect_what == "spots") return cli::inspect_spots(in, std::cout);
            return cli::inspect_fv(in, std::cout);
        }

        if (*fv) {
            auto store = FvStore::open(config.fv_path());
            if (*fv_get) {
                std::optional<std::string_view> pv;
                if (persona) pv = *persona;
                const auto hit = store->lookup(fv_term, pv);
                std::cout << fv_term << '\t' << hit.value << '\t' << provenance_name(hit.provenance) << '\n';
            } else if (*fv_set) {
                store->upsert(fv_term, fv_value, fv_layer);
            } else if (*fv_import) {
                store->merge(load_fv_file(fv_path));
            } else if (fv_path.empty()) {
                write_fv(*store->snapshot(), std::cout);
            } else {
                save_fv_file(*store->snapshot(), fv_path);
            }
            return 0;
        }

        const auto engine = std::make_shared<const Engine>(build_engine(config));

        if (*repl) {
            cli::ReplOptions options{persona, repl_json};
            cli::run_repl(*engine, std::cin, std::cout, options);
            return 0;
        }
        if (*eval) {
            auto in = open_input(trace_path);
            return cli::run_eval(*engine, in, std::cout, std::cerr, persona);
        }
        if (*serve) {
            ConciergeService service(engine, config.sessions_dir);
            const auto restored = service.restore();
            HttpServer server(service, config.admin_token);
            const int bound = server.bind(config.host, config.port);
            if (bound < 0) {
                std::cerr << "cannot bind " << config.host << ':' << config.port << '\n';
                return 1;
            }
            g_server = &server;
            std::signal(SIGINT, handle_signal);
            std::signal(SIGTERM, handle_signal);
            std::cerr << "listening on http://" << config.host << ':' << bound << " (" << restored
                      << " session(s) restored)\n";
            server.listen_after_bind();
            g_server = nullptr;
            return 0;
        }
    } catch (const Error& e) {
        std::cerr << "error[" << e.code() << "]: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
