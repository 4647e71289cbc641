// paritylab: exact parity-sum experiments, invariant verification, and
// ad-hoc inspection of the library's arithmetic.
//
// Exit codes: 0 success; 1 a verified property failed; 2 invalid
// configuration or domain error; 3 resource exhaustion (table budgets,
// unfactorable inputs, I/O failures).

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <new>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "parity/config.hpp"
#include "parity/experiments.hpp"
#include "parity/factor.hpp"
#include "parity/ideals.hpp"
#include "parity/sieve.hpp"
#include "parity/symbols.hpp"
#include "parity/verify.hpp"

namespace {

using parity::i64;

std::string sign_str(int v) {
    if (v > 0) return "+1";
    if (v < 0) return "-1";
    return "0";
}

std::string read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw std::domain_error("config: cannot read file '" + path + "'");
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

// All report files are written to a temporary sibling and renamed into
// place, so a failed run never leaves a partial file behind.
void write_file_atomic(const std::filesystem::path& path, const std::string& content) {
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f) throw parity::resource_error("cannot open '" + tmp.string() + "' for writing");
        f << content;
        f.flush();
        if (!f) throw parity::resource_error("write to '" + tmp.string() + "' failed");
    }
    std::filesystem::rename(tmp, path);
}

std::filesystem::path default_out_dir() {
    if (const char* env = std::getenv("PARITYLAB_OUT_DIR"); env != nullptr && *env != '\0')
        return std::filesystem::path(env);
    return std::filesystem::path(".");
}

int resolve_threads(int requested, bool serial) {
    if (serial) return 1;
    if (requested > 0) return requested;
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

int cmd_experiment(const std::string& config_path, const std::string& out_path,
                   const std::string& format, int threads_flag, long long table_limit_flag,
                   bool serial) {
    parity::ExperimentConfig cfg;
    if (!config_path.empty()) cfg = parity::config_from_json(read_file(config_path));
    if (table_limit_flag >= 0) cfg.table_limit = static_cast<i64>(table_limit_flag);
    if (serial)
        cfg.threads = 1;
    else if (threads_flag > 0)
        cfg.threads = threads_flag;
    cfg.validate();

    parity::EngineOptions opt;
    opt.threads = resolve_threads(cfg.threads, serial);
    i64 needed = cfg.required_table_limit();
    parity::LiouvilleTable table;
    if (needed > 0) {
        // 1 GiB construction budget; larger demands fail fast as a resource
        // error instead of attempting the allocation.
        table = parity::liouville_table(needed, std::size_t(1) << 30);
        opt.table = &table;
    }

    parity::ExperimentReport rep = parity::run_experiment(cfg, opt);

    std::filesystem::path out;
    if (!out_path.empty()) {
        out = out_path;
    } else {
        const char* ext = format == "csv" ? ".csv" : ".json";
        out = default_out_dir() / (rep.form.name() + ext);
    }
    std::string body =
        format == "csv" ? parity::report_to_csv(rep) : parity::report_to_json(rep, false);
    write_file_atomic(out, body);

    // Wall times and the environment fingerprint go to a sidecar so the
    // scientific output stays byte-reproducible across runs.
    nlohmann::ordered_json timing;
    timing["fingerprint"] = rep.fingerprint;
    timing["rows"] = nlohmann::ordered_json::array();
    for (const parity::ReportRow& r : rep.rows)
        timing["rows"].push_back({{"form", r.form}, {"N", r.N}, {"millis", r.millis}});
    std::filesystem::path side = out;
    side += ".timing.json";
    write_file_atomic(side, timing.dump(2) + "\n");

    std::printf("wrote %s (%zu rows)\n", out.string().c_str(), rep.rows.size());
    return 0;
}

int cmd_verify(i64 limit, int threads_flag, bool serial) {
    parity::VerifyOptions opt;
    opt.limit = limit;  // run_verify rejects nonpositive values
    opt.threads = serial ? 1 : (threads_flag > 0 ? threads_flag : 2);
    std::vector<parity::PropertyResult> rs = parity::run_verify(opt);
    std::printf("%s", parity::format_results(rs).c_str());
    if (!parity::all_pass(rs)) return 1;
    return 0;
}

i64 parse_i64(const std::string& s) {
    std::size_t pos = 0;
    i64 v = 0;
    try {
        v = std::stoll(s, &pos);
    } catch (const std::exception&) {
        throw std::domain_error("inspect: '" + s + "' is not an integer");
    }
    if (pos != s.size()) throw std::domain_error("inspect: '" + s + "' is not an integer");
    return v;
}

void require_args(const std::vector<std::string>& args, std::size_t n, const char* usage) {
    if (args.size() != n)
        throw std::domain_error(std::string("inspect: expected ") + usage);
}

int cmd_inspect(const std::string& entity, const std::vector<std::string>& args) {
    if (entity == "liouville") {
        require_args(args, 1, "liouville <n>");
        std::printf("%s\n", sign_str(parity::liouville(parse_i64(args[0]))).c_str());
    } else if (entity == "symbol") {
        require_args(args, 2, "symbol <a> <b>");
        std::printf("%s\n",
                    sign_str(parity::symbol_ab(parse_i64(args[0]), parse_i64(args[1]))).c_str());
    } else if (entity == "root-number") {
        require_args(args, 2, "root-number <a> <b>");
        std::printf("%s\n",
                    sign_str(parity::root_number(parse_i64(args[0]), parse_i64(args[1]))).c_str());
    } else if (entity == "form") {
        require_args(args, 3, "form <a> <b> <c>");
        parity::FormDecomposition F =
            parity::form_to_norm(parse_i64(args[0]), parse_i64(args[1]), parse_i64(args[2]));
        std::printf("field=%s alpha2=%s index=%lld\n", F.field.str().c_str(),
                    F.alpha2.str().c_str(), static_cast<long long>(F.index));
    } else if (entity == "sieve") {
        require_args(args, 3, "sieve <lo> <hi> <y>");
        i64 lo = parse_i64(args[0]), hi = parse_i64(args[1]), y = parse_i64(args[2]);
        parity::SieveWeights W = parity::rosser_upper(parity::primes_in(lo, hi), y);
        for (const auto& [d, wt] : W.weights)
            std::printf("%lld %s\n", static_cast<long long>(d),
                        sign_str(wt.num > 0 ? 1 : (wt.num < 0 ? -1 : 0)).c_str());
    } else {
        throw std::domain_error("inspect: unknown entity '" + entity +
                                "' (expected liouville, symbol, root-number, form, or sieve)");
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computations and desk-scale experiments for multiplicative parity sums"};
    app.require_subcommand(1);

    std::string config_path, out_path, format = "structured";
    int threads = 0;
    long long table_limit = -1;
    bool serial = false;

    CLI::App* exp = app.add_subcommand("experiment", "Run a configured experiment grid");
    exp->add_option("--config", config_path, "Experiment configuration file");
    exp->add_option("--out", out_path,
                    "Report path (default: <form>.<ext> under $PARITYLAB_OUT_DIR or .)");
    exp->add_option("--format", format, "Report format")
        ->check(CLI::IsMember({"csv", "structured"}));
    exp->add_option("--threads", threads, "Worker threads (0 = hardware concurrency)");
    exp->add_option("--table-limit", table_limit, "Override the lambda table limit");
    exp->add_flag("--serial", serial, "Force single-threaded evaluation");

    i64 limit = 10'000;
    int vthreads = 0;
    bool vserial = false;
    CLI::App* ver = app.add_subcommand("verify", "Run the module invariant suites");
    ver->add_option("--limit", limit, "Scale cap for exhaustive ranges and sample counts");
    ver->add_option("--threads", vthreads, "Worker count exercised by the determinism checks");
    ver->add_flag("--serial", vserial, "Run the determinism checks with one worker");

    std::string entity;
    std::vector<std::string> iargs;
    CLI::App* ins = app.add_subcommand("inspect", "Evaluate one quantity and print it");
    ins->add_option("entity", entity, "liouville | symbol | root-number | form | sieve")
        ->required();
    ins->add_option("args", iargs, "Integer arguments for the entity");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (exp->parsed())
            return cmd_experiment(config_path, out_path, format, threads, table_limit, serial);
        if (ver->parsed()) return cmd_verify(limit, vthreads, vserial);
        return cmd_inspect(entity, iargs);
    } catch (const parity::resource_error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 3;
    } catch (const std::bad_alloc&) {
        std::fprintf(stderr, "error: out of memory\n");
        return 3;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
}
