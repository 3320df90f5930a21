// dirac-screen: command-line front end for the E7(7) Dirac series toolkit.

#include <CLI11.hpp>

#include <iostream>
#include <memory>
#include <sstream>

#include "dirac/dataset.hpp"
#include "dirac/json_io.hpp"
#include "dirac/parallel.hpp"

using namespace dirac;

namespace {

constexpr int kOk = 0;
constexpr int kInternal = 1;
constexpr int kValidation = 2;
constexpr int kInconclusive = 3;

struct Usage : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

std::vector<std::string> split(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(item);
    return out;
}

std::string strip_brackets(std::string s) {
    if (!s.empty() && s.front() == '[') s.erase(s.begin());
    if (!s.empty() && s.back() == ']') s.pop_back();
    return s;
}

Labels parse_labels(const std::string& s, const char* what) {
    auto parts = split(strip_brackets(s));
    if (parts.size() != 7) throw Usage(std::string(what) + " needs 7 comma-separated integers");
    Labels l{};
    for (int i = 0; i < 7; ++i) {
        Rational r = Rational::parse(parts[i]);
        if (!r.is_integer()) throw Usage(std::string(what) + " entries must be integers");
        l[i] = r.num();
    }
    return l;
}

InfChar parse_inf_char(const std::string& s) {
    auto parts = split(strip_brackets(s));
    if (parts.size() != 7) throw Usage("--inf-char needs 7 comma-separated rationals");
    InfChar v;
    for (const auto& p : parts) v.push_back(Rational::parse(p));
    return v;
}

Labels parse_ktype(const std::string& s) {
    Labels l = parse_labels(s, "--ktype");
    if (!is_dominant(l)) throw Usage("--ktype must be dominant (non-negative labels)");
    if (!is_K_type(l)) throw Usage("--ktype violates the K-type parity rule (a+c+e+g even)");
    return l;
}

struct Globals {
    std::string format = "json";
    unsigned threads = 0;
};

struct InvolutionSource {
    std::string path;
    bool derived = false;
    std::string boundary = "strict";

    void add(CLI::App* sub) {
        sub->add_option("--involutions", path, "involution file (JSON array of {matrix, tag})");
        sub->add_flag("--derived-involutions", derived, "use the fully supported involutions of W(g)");
        sub->add_option("--boundary", boundary, "nu bound at 157/2: strict or inclusive")
            ->check(CLI::IsMember({"strict", "inclusive"}));
    }
    std::unique_ptr<InvolutionSet> load() const {
        if (!path.empty() && derived) throw Usage("--involutions and --derived-involutions are exclusive");
        if (!path.empty()) return std::make_unique<InvolutionSet>(load_involutions(path));
        if (derived) return std::make_unique<InvolutionSet>(fully_supported_involutions());
        return nullptr;
    }
    Json mode() const { return path.empty() ? (derived ? "derived" : "all-involutions") : "file:" + path; }
    NuBoundary nu_boundary() const { return boundary == "inclusive" ? NuBoundary::Inclusive : NuBoundary::Strict; }
};

void emit(const Json& doc, const Globals& g) { std::cout << render(doc, parse_format(g.format)); }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Dirac series screening for E7(7)"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals g;
    app.add_option("--format", g.format, "output format")->check(CLI::IsMember({"json", "csv", "plain"}));
    app.add_option("--threads", g.threads, "worker threads (0: DIRAC_SCREEN_THREADS or all cores)");

    int rc = kOk;

    auto* chambers_cmd = app.add_subcommand("chambers", "the 72 chambers W(g,t_f)^1");
    bool census = false;
    chambers_cmd->add_flag("--census", census, "recompute the W(g)-orbit of rho and report its size");
    chambers_cmd->callback([&] {
        if (census) {
            OrbitCensus c = orbit_census();
            emit({{"orbit_size", c.orbit_size}, {"k_dominant", c.k_dominant}, {"layers", c.layer_sizes.size()}}, g);
            return;
        }
        Json a = Json::array();
        for (const auto& c : chambers()) a.push_back(chamber_json(c));
        emit(a, g);
    });

    auto* norm_cmd = app.add_subcommand("norm", "spin norm, lambda norm and u-smallness of a K-type");
    std::string ktype;
    norm_cmd->add_option("--ktype", ktype, "varpi labels a,b,c,d,e,f,g")->required();
    norm_cmd->callback([&] { emit(norm_report_json(norm_report(parse_ktype(ktype))), g); });

    auto* usmall_cmd = app.add_subcommand("usmall", "u-small membership or census");
    bool count = false, list = false;
    std::string us_ktype;
    usmall_cmd->add_option("--ktype", us_ktype, "test a single K-type");
    usmall_cmd->add_flag("--count", count, "count all u-small K-types");
    usmall_cmd->add_flag("--list", list, "list all u-small K-types");
    usmall_cmd->callback([&] {
        if (!us_ktype.empty()) {
            Labels mu = parse_ktype(us_ktype);
            Json j = {{"ktype", to_json(mu)}, {"usmall", is_usmall(mu)}};
            if (auto w = usmall_witness(mu)) j["coefficients"] = to_json(*w);
            emit(j, g);
            return;
        }
        if (!count && !list) throw Usage("usmall needs --ktype, --count or --list");
        auto all = enumerate_usmall_ktypes(g.threads);
        if (list) {
            Json a = Json::array();
            for (const auto& mu : all) a.push_back({{"ktype", to_json(mu)}});
            emit(a, g);
        } else {
            emit({{"usmall_ktypes", all.size()}}, g);
        }
    });

    auto* screen_cmd = app.add_subcommand("screen", "Helgason-Johnson filter, pencil and Dirac inequality");
    std::string sc_inf, sc_ktype;
    int pencil_cap = 50;
    InvolutionSource sc_inv;
    screen_cmd->add_option("--inf-char", sc_inf, "zeta coordinates of Lambda")->required();
    screen_cmd->add_option("--ktype", sc_ktype, "K-type")->required();
    screen_cmd->add_option("--pencil-cap", pencil_cap, "largest n scanned along the pencil")
        ->check(CLI::PositiveNumber);
    sc_inv.add(screen_cmd);
    screen_cmd->callback([&] {
        auto inv = sc_inv.load();
        InfChar lam = parse_inf_char(sc_inf);
        Labels mu = parse_ktype(sc_ktype);
        ScreenVerdict v = screen(mu, lam, inv.get(), pencil_cap, sc_inv.nu_boundary());
        Json j = verdict_json(v);
        j["inf_char_norm_sq"] = to_json(nu_norm_sq(lam));
        j["spin_norm_sq"] = to_json(spin_norm_sq(mu).value);
        j["involutions"] = sc_inv.mode();
        emit(j, g);
        if (v.status == ScreenStatus::Inconclusive) rc = kInconclusive;
    });

    auto* pencil_cmd = app.add_subcommand("pencil", "spin norms along mu + n beta");
    std::string pe_inf, pe_ktype;
    int cap = 50;
    pencil_cmd->add_option("--inf-char", pe_inf, "zeta coordinates of Lambda")->required();
    pencil_cmd->add_option("--ktype", pe_ktype, "starting K-type")->required();
    pencil_cmd->add_option("--cap", cap, "largest n scanned")->check(CLI::PositiveNumber);
    pencil_cmd->callback([&] {
        PencilResult p = pencil_min_spin(parse_ktype(pe_ktype), parse_inf_char(pe_inf), cap);
        emit(pencil_json(p), g);
        if (!p.conclusive) rc = kInconclusive;
    });

    auto* phi_cmd = app.add_subcommand("enumerate-phi", "candidate integral infinitesimal characters");
    int max_coord = 1;
    bool counts = false;
    InvolutionSource phi_inv;
    phi_cmd->add_option("--max-coord", max_coord, "largest coordinate")->required()->check(CLI::PositiveNumber);
    phi_cmd->add_flag("--counts", counts, "report #Phi_i for i = 1..max-coord instead of the vectors");
    phi_inv.add(phi_cmd);
    phi_cmd->callback([&] {
        auto inv = phi_inv.load();
        if (counts) {
            auto c = phi_counts(max_coord, inv.get(), phi_inv.nu_boundary());
            std::size_t total = 0;
            for (auto x : c) total += x;
            emit({{"counts", c}, {"total", total}, {"involutions", phi_inv.mode()}, {"boundary", phi_inv.boundary}},
                 g);
            return;
        }
        Json a = Json::array();
        for (const auto& v : enumerate_inf_chars(max_coord, inv.get(), phi_inv.nu_boundary()))
            a.push_back({{"inf_char", Json(std::vector<std::int64_t>(v.begin(), v.end()))}});
        emit(a, g);
    });

    auto* inv_cmd = app.add_subcommand("involutions", "export Weyl group involutions as an involution file");
    bool all_inv = false;
    inv_cmd->add_flag("--all", all_inv, "every involution count instead of the fully supported list");
    inv_cmd->callback([&] {
        if (all_inv)
            emit({{"involutions", weyl_involution_count()}}, g);
        else
            std::cout << involutions_json(fully_supported_involutions()).dump() << "\n";
    });

    auto* certs_cmd = app.add_subcommand("certs", "u-small K-types with spin^2 - lambda^2 >= 157/2");
    certs_cmd->callback([&] {
        Json a = Json::array();
        for (const auto& m : certs_census(g.threads))
            a.push_back({{"ktype", to_json(m.mu)},
                         {"spin_norm_sq", to_json(m.spin_norm_sq)},
                         {"lambda_norm_sq", to_json(m.lambda_norm_sq)}});
        emit(a, g);
    });

    auto* cand_cmd = app.add_subcommand("dirac-candidates", "K-types gamma with gamma + rho_c in W(g) Lambda");
    std::string dc_inf, dc_gamma;
    cand_cmd->add_option("--inf-char", dc_inf, "zeta coordinates of a dominant Lambda")->required();
    cand_cmd->add_option("--gamma", dc_gamma, "keep only this K-type gamma");
    cand_cmd->callback([&] {
        std::optional<Labels> only;
        if (!dc_gamma.empty()) only = parse_labels(dc_gamma, "--gamma");
        Json a = Json::array();
        for (const auto& d : dirac_candidate_ktypes(parse_inf_char(dc_inf)))
            if (!only || d.gamma == *only)
                a.push_back({{"gamma", to_json(d.gamma)},
                         {"chamber", d.chamber},
                         {"parity", d.parity},
                         {"chambers", d.chambers}});
        emit(a, g);
    });

    auto* tensor_cmd = app.add_subcommand("tensor", "E_small (x) E_mu by the Klimyk rule");
    std::string small, mu_s;
    std::int64_t klimyk_cap = 100000;
    tensor_cmd->add_option("--small", small, "highest weight of the smaller factor")->required();
    tensor_cmd->add_option("--mu,--other", mu_s, "highest weight of the other factor")->required();
    tensor_cmd->add_option("--klimyk-cap", klimyk_cap, "refuse when dim E_small exceeds this")
        ->check(CLI::PositiveNumber);
    tensor_cmd->callback([&] {
        Labels a = parse_labels(small, "--small"), b = parse_labels(mu_s, "--mu");
        IrrepDecomposition d = klimyk_tensor(a, b, klimyk_cap);
        Json terms = Json::array();
        for (const auto& [l, c] : d.terms)
            terms.push_back({{"highest", to_json(l)}, {"multiplicity", c}, {"dim", to_json(weyl_dim(l))}});
        emit({{"terms", terms}, {"dimension", to_json(d.dimension())}, {"prv", to_json(prv_component(a, b))}}, g);
    });

    auto* verify_cmd = app.add_subcommand("verify", "check the bundled appendix dataset");
    std::string dataset_path = default_dataset_path(), only;
    verify_cmd->add_option("--dataset", dataset_path, "dataset JSON");
    verify_cmd->add_option("--only", only, "restrict to one check")
        ->check(CLI::IsMember({"entry", "stats", "cancellation"}));
    verify_cmd->callback([&] {
        Dataset d = load_dataset(dataset_path);
        Json j = {{"dataset", d.version}, {"entries", d.entries.size()}};
        bool ok = true;
        if (only.empty() || only == "entry") {
            Report r = verify_entries(d.entries, d.stats, g.threads);
            ok &= r.ok();
            j["entry"] = report_json(r);
        }
        if (only.empty() || only == "stats") {
            Report r = verify_statistics(d.entries, d.stats);
            ok &= r.ok();
            j["stats"] = report_json(r);
        }
        if (only.empty() || only == "cancellation") {
            Report r = verify_cancellations(d.entries, d.stats);
            ok &= r.ok();
            j["cancellation"] = report_json(r);
        }
        j["ok"] = ok;
        emit(j, g);
        if (!ok) rc = kValidation;
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kValidation;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kValidation;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kInternal;
    }
    return rc;
}
