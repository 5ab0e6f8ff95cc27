#include "supercb/cli.hpp"

#include "supercb/golden.hpp"
#include "supercb/io.hpp"
#include "supercb/schur.hpp"
#include "supercb/stable.hpp"
#include "supercb/tableaux.hpp"
#include "supercb/verify.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <thread>

namespace supercb {

namespace fs = std::filesystem;

namespace {

std::string fnv1a(const std::string& data) {
    unsigned long long h = 1469598103934665603ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", h);
    return buf;
}

std::string default_cache_dir() {
    if (const char* env = std::getenv("SUPERCB_CACHE_DIR")) return env;
    return "";
}

void write_atomic(const fs::path& target, const std::string& content) {
    fs::create_directories(target.parent_path());
    fs::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream f(tmp, std::ios::trunc);
        f << content;
    }
    fs::rename(tmp, target);
}

} // namespace

std::string cache_file_name(Shape sh, Side side, const Mat& A) {
    std::string key = std::to_string(sh.m) + "|" + std::to_string(sh.n) + "|" +
                      (side == Side::plus ? "p" : "m");
    for (int x : A.entries()) key += ":" + std::to_string(x);
    return "m" + std::to_string(sh.m) + "n" + std::to_string(sh.n) +
           (side == Side::plus ? "_plus_" : "_minus_") + fnv1a(key) + ".json";
}

void cache_store(const std::string& dir, const CanonicalRecord& rec) {
    const fs::path p = fs::path(dir) / cache_file_name(rec.target.shape(), rec.side, rec.target);
    write_atomic(p, record_to_json(rec).dump(1));
}

std::optional<CanonicalRecord> cache_load(const std::string& dir, Shape sh, Side side,
                                          const Mat& A) {
    const fs::path p = fs::path(dir) / cache_file_name(sh, side, A);
    if (!fs::exists(p)) return std::nullopt;
    std::ifstream f(p);
    std::string content((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
    try {
        CanonicalRecord rec = record_from_json(Json::parse(content));
        if (rec.target != A) throw std::runtime_error("target mismatch");
        return rec;
    } catch (const std::exception& e) {
        throw std::runtime_error("corrupt cache file " + p.string() + ": " + e.what());
    }
}

namespace {

std::string record_text(const CanonicalRecord& rec) {
    std::ostringstream out;
    out << "C(" << rec.target.str() << ") =";
    bool first = true;
    for (const auto& [B, c] : rec.expansion) {
        out << (first ? " " : " + ") << "(" << c.str() << ")*(" << B.str() << ")(0)";
        first = false;
    }
    return out.str();
}

int cmd_canonical(int m, int n, const std::string& matrix_text, long upto,
                  const std::string& format, const std::string& cache_dir, int jobs,
                  std::ostream& out, std::ostream& err) {
    const Shape sh{m, n};
    std::vector<Mat> targets;
    Side side = Side::plus;
    if (upto >= 0) {
        targets = enumerate_upper(sh, (int)upto, upto);
    } else {
        Mat A = parse_matrix(matrix_text, sh);
        if (!A.is_valid()) {
            err << "matrix violates the mixed 0/1 constraint\n";
            return 2;
        }
        if (A.is_strictly_upper())
            side = Side::plus;
        else if (A.is_strictly_lower())
            side = Side::minus;
        else {
            err << "matrix must be strictly triangular\n";
            return 2;
        }
        targets.push_back(A);
    }

    std::vector<CanonicalRecord> records(targets.size(), CanonicalRecord{Mat(sh)});
    std::mutex log_mu;
    std::atomic<size_t> next{0};
    auto worker = [&]() {
        UplusContext ctx(sh);
        for (;;) {
            const size_t i = next.fetch_add(1);
            if (i >= targets.size()) return;
            const Mat& A = targets[i];
            if (!cache_dir.empty()) {
                auto t0 = std::chrono::steady_clock::now();
                std::optional<CanonicalRecord> hit = cache_load(cache_dir, sh, side, A);
                if (hit) {
                    records[i] = std::move(*hit);
                    std::lock_guard lk(log_mu);
                    err << "[cache] hit " << cache_file_name(sh, side, A) << " ("
                        << std::chrono::duration<double, std::milli>(
                               std::chrono::steady_clock::now() - t0)
                               .count()
                        << " ms)\n";
                    continue;
                }
            }
            CanonicalRecord rec = side == Side::plus ? ctx.layered_subtraction(A) : [&] {
                CanonicalRecord r = canonical_minus(ctx, A);
                return r;
            }();
            if (!cache_dir.empty()) {
                cache_store(cache_dir, rec);
                std::lock_guard lk(log_mu);
                err << "[cache] store " << cache_file_name(sh, side, A) << "\n";
            }
            records[i] = std::move(rec);
        }
    };
    const int nthreads = std::max(1, jobs);
    if (nthreads == 1 || targets.size() <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    if (format == "json") {
        if (records.size() == 1) {
            out << record_to_json(records[0]).dump(1) << "\n";
        } else {
            Json arr = Json::array();
            for (const auto& rec : records) arr.push_back(record_to_json(rec));
            out << arr.dump(1) << "\n";
        }
    } else if (format == "latex") {
        for (const auto& rec : records) out << record_to_latex(rec) << "\n";
    } else {
        for (const auto& rec : records) out << record_text(rec) << "\n";
    }
    return 0;
}

int report_all(const std::vector<CheckResult>& results, std::ostream& out) {
    bool ok = true;
    for (const CheckResult& r : results) {
        out << format_result(r) << "\n";
        ok = ok && r.pass;
    }
    return ok ? 0 : 1;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"canonical bases of quantum general linear supergroups"};
    app.require_subcommand(1);

    int m = 2, n = 1, r = 1, jobs = 1, p = 1, h = 1;
    long upto = -1;
    int a_max = 6, f_max = 3, entry_max = 2, r_max = 3;
    long norm_bound = 6;
    std::string matrix_text, format = "json", cache_dir = default_cache_dir();
    std::string gen = "E", shape_text;

    auto* cmd_can = app.add_subcommand("canonical", "canonical basis elements");
    cmd_can->add_option("--m", m);
    cmd_can->add_option("--n", n);
    cmd_can->add_option("--matrix", matrix_text);
    cmd_can->add_option("--all-upto-norm", upto);
    cmd_can->add_option("--format", format)->check(CLI::IsMember({"json", "latex", "text"}));
    cmd_can->add_option("--cache-dir", cache_dir);
    cmd_can->add_option("--jobs", jobs);

    auto* cmd_verify = app.add_subcommand("verify", "verification suites");
    cmd_verify->require_subcommand(1);
    auto* v_g21 = cmd_verify->add_subcommand("golden-gl21");
    v_g21->add_option("--a-max", a_max);
    int g22_a = 3;
    auto* v_g22 = cmd_verify->add_subcommand("golden-gl22");
    v_g22->add_option("--a-max", g22_a);
    v_g22->add_option("--f-max", f_max);
    auto* v_pbw = cmd_verify->add_subcommand("pbw");
    v_pbw->add_option("--m", m);
    v_pbw->add_option("--n", n);
    v_pbw->add_option("--entry-max", entry_max);
    auto* v_serre = cmd_verify->add_subcommand("serre");
    v_serre->add_option("--m", m);
    v_serre->add_option("--n", n);
    v_serre->add_option("--norm-bound", norm_bound);
    v_serre->add_option("--r-max", r_max);
    auto* v_54 = cmd_verify->add_subcommand("thm54");
    v_54->add_option("--m", m);
    v_54->add_option("--n", n);
    v_54->add_option("--r", r);
    auto* v_stab = cmd_verify->add_subcommand("stab");

    auto* cmd_schur = app.add_subcommand("schur", "level-r algebra operations");
    cmd_schur->require_subcommand(1);
    auto* s_mult = cmd_schur->add_subcommand("mult");
    s_mult->add_option("--m", m);
    s_mult->add_option("--n", n);
    s_mult->add_option("--r", r);
    s_mult->add_option("--gen", gen)->check(CLI::IsMember({"E", "F"}));
    s_mult->add_option("--row", h);
    s_mult->add_option("--power", p);
    s_mult->add_option("--matrix", matrix_text)->required();
    auto* s_xi = cmd_schur->add_subcommand("xi");
    s_xi->add_option("--m", m);
    s_xi->add_option("--n", n);
    s_xi->add_option("--r", r);
    s_xi->add_option("--matrix", matrix_text)->required();
    auto* s_54 = cmd_schur->add_subcommand("verify-thm54");
    s_54->add_option("--m", m);
    s_54->add_option("--n", n);
    s_54->add_option("--r", r);
    auto* s_stab = cmd_schur->add_subcommand("verify-stab");

    auto* cmd_tab = app.add_subcommand("tableaux", "supertableau combinatorics");
    cmd_tab->require_subcommand(1);
    auto* t_count = cmd_tab->add_subcommand("count");
    t_count->add_option("--shape", shape_text)->required();
    t_count->add_option("--m", m);
    t_count->add_option("--n", n);

    auto* cmd_cache = app.add_subcommand("cache", "canonical-record cache maintenance");
    cmd_cache->require_subcommand(1);
    auto* c_clear = cmd_cache->add_subcommand("clear");
    c_clear->add_option("--cache-dir", cache_dir);
    auto* c_info = cmd_cache->add_subcommand("info");
    c_info->add_option("--cache-dir", cache_dir);

    std::vector<const char*> argv;
    argv.push_back("supercb");
    for (const std::string& a : args) argv.push_back(a.c_str());
    try {
        app.parse((int)argv.size(), argv.data());
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err);
    }

    try {
        if (cmd_can->parsed())
            return cmd_canonical(m, n, matrix_text, upto, format, cache_dir, jobs, out, err);

        if (v_g21->parsed()) return report_all({check_golden_gl21(a_max)}, out);
        if (v_g22->parsed()) return report_all({check_golden_gl22(g22_a, f_max)}, out);
        if (v_pbw->parsed()) return report_all({check_pbw(Shape{m, n}, entry_max)}, out);
        if (v_serre->parsed()) {
            std::vector<CheckResult> rs{check_serre(Shape{m, n}, norm_bound)};
            if (r_max >= 0) rs.push_back(check_qs3(Shape{m, n}, r_max));
            return report_all(rs, out);
        }
        if (v_54->parsed() || s_54->parsed())
            return report_all({check_thm54(Shape{m, n}, r)}, out);
        if (v_stab->parsed() || s_stab->parsed())
            return report_all({check_stabilization()}, out);

        if (s_mult->parsed()) {
            const Shape sh{m, n};
            UplusContext up(sh);
            SchurContext sc(up, r);
            Mat D = parse_matrix(matrix_text, sh);
            SchurElement x = sc.basis(D);
            SchurElement y = gen == "E" ? sc.left_mult_E(h, p, x) : sc.left_mult_F(h, p, x);
            out << schur_to_json(y).dump(1) << "\n";
            return 0;
        }
        if (s_xi->parsed()) {
            const Shape sh{m, n};
            UplusContext up(sh);
            SchurContext sc(up, r);
            Mat D = parse_matrix(matrix_text, sh);
            out << schur_to_json(sc.canonical_Xi(D)).dump(1) << "\n";
            return 0;
        }

        if (t_count->parsed()) {
            const Shape sh{m, n};
            Partition pi = parse_comp(shape_text);
            TableauCount c = count_tableaux(pi, sh);
            Json j;
            j["shape"] = pi;
            j["m"] = m;
            j["n"] = n;
            j["total"] = c.total;
            Json by = Json::array();
            for (const auto& [mu, k] : c.by_content) by.push_back(Json{{"mu", mu}, {"count", k}});
            j["by_content"] = std::move(by);
            out << j.dump(1) << "\n";
            return 0;
        }

        if (c_clear->parsed()) {
            if (cache_dir.empty()) {
                err << "no cache directory given\n";
                return 2;
            }
            long removed = 0;
            if (fs::exists(cache_dir))
                for (const auto& entry : fs::directory_iterator(cache_dir))
                    if (entry.path().extension() == ".json") {
                        fs::remove(entry.path());
                        ++removed;
                    }
            out << "removed " << removed << " cached records\n";
            return 0;
        }
        if (c_info->parsed()) {
            if (cache_dir.empty()) {
                err << "no cache directory given\n";
                return 2;
            }
            long files = 0;
            unsigned long long bytes = 0;
            if (fs::exists(cache_dir))
                for (const auto& entry : fs::directory_iterator(cache_dir)) {
                    if (entry.path().extension() != ".json") continue;
                    ++files;
                    bytes += entry.file_size();
                    std::ifstream f(entry.path());
                    std::string content((std::istreambuf_iterator<char>(f)),
                                        std::istreambuf_iterator<char>());
                    try {
                        record_from_json(Json::parse(content));
                    } catch (const std::exception& e) {
                        err << "corrupt cache file " << entry.path().string() << ": " << e.what()
                            << "\n";
                        return 1;
                    }
                }
            out << files << " records, " << bytes << " bytes\n";
            return 0;
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    err << "no command executed\n";
    return 2;
}

} // namespace supercb
