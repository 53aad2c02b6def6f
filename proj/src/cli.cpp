#include <collatz/cli.hpp>

#include <collatz/slots.hpp>

#include "CLI11.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <iostream>
#include <map>
#include <random>
#include <sstream>

namespace collatz::cli {

using nlohmann::json;

namespace {

constexpr const char* kCacheEnv = "COLLATZ_SLOTS_CACHE_DIR";
constexpr std::size_t kRandomIdentitySamples = 10000;
constexpr std::uint64_t kRandomIdentityMax = 1000000000;
constexpr std::size_t kGapAgreementNu = 25;

std::string_view to_string(Subcommand s) {
    switch (s) {
        case Subcommand::levels: return "levels";
        case Subcommand::sigma: return "sigma";
        case Subcommand::sigma0: return "sigma0";
        case Subcommand::slots: return "slots";
        case Subcommand::clusters: return "clusters";
        case Subcommand::verify: return "verify";
    }
    return "?";
}

template <class Fn>
auto as_usage(const char* flag, Fn&& fn) {
    try {
        return fn();
    } catch (const InvalidInput& e) {
        throw UsageError(std::string(flag) + ": " + e.what());
    }
}

json exact_json(const ExactRatio& r) {
    json j = ratio_to_json(r);
    j["approx"] = r.to_double();
    return j;
}

json steadiness_json(const SteadinessValue& v) {
    return {{"mode", to_string(v.mode)}, {"exact", exact_json(v.exact)}, {"log2_approx", v.log2_approx}};
}

json identity_json(const IdentityVerdict& v) {
    return {{"holds", v.holds}, {"lhs", v.lhs.str()}, {"rhs", v.rhs.str()}};
}

std::optional<std::filesystem::path> cache_dir() {
    const char* dir = std::getenv(kCacheEnv);
    if (!dir || !*dir) return std::nullopt;
    return std::filesystem::path(dir);
}

std::filesystem::path cache_file(const std::filesystem::path& dir, std::size_t nu) {
    return dir / ("L" + std::to_string(nu) + ".levelset");
}

/// L_nu, read from the cache directory when present and written back when not.
LevelSet obtain_level(std::size_t nu) {
    const auto dir = cache_dir();
    if (!dir) return level(nu);
    if (std::filesystem::exists(cache_file(*dir, nu))) {
        LevelSet cached = read_levelset(cache_file(*dir, nu));
        if (cached.nu != nu) throw IntegrityError("cache file for level " + std::to_string(nu) + " holds another level");
        return cached;
    }
    std::filesystem::create_directories(*dir);
    LevelSet out;
    generate_levels(nu, [&](const LevelSet& l) {
        if (!std::filesystem::exists(cache_file(*dir, l.nu))) write_levelset(l, cache_file(*dir, l.nu));
        if (l.nu == nu) out = l;
    });
    return out;
}

const char* discrepancy_notice() {
    return "literal steadiness (product over the whole orbit set) does not satisfy "
           "n = 2^nu / 6^kappa * sigma(n); only the telescoping product over odd-step images does. "
           "Elements = 4 mod 6 entered by halving (including the cycle element 4) are the difference.";
}

// ---------------------------------------------------------------------------

CommandResult run_levels(const CommandRequest& req) {
    CommandResult res;
    const std::size_t nu = *req.nu;
    const auto dir = cache_dir();
    LevelSet target;
    const LevelSummary summary = generate_levels(nu, [&](const LevelSet& l) {
        if (dir) {
            std::filesystem::create_directories(*dir);
            if (!std::filesystem::exists(cache_file(*dir, l.nu))) write_levelset(l, cache_file(*dir, l.nu));
        }
        if (l.nu == nu) target = l;
    });

    json& r = res.report.results;
    r["nu"] = nu;
    r["cardinalities"] = summary.cardinalities;
    r["count"] = target.elements.size();
    r["min"] = target.elements.front().str();
    r["max"] = target.elements.back().str();
    if (req.stats) {
        const LevelStats stats = level_stats(target, req.cap);
        json hist = json::object();
        for (const auto& [kappa, count] : stats.kappa_histogram) hist[std::to_string(kappa)] = count;
        r["kappa_histogram"] = hist;
    }
    if (req.out) {
        write_levelset(target, *req.out);
        r["levelset_file"] = req.out->string();
    }
    if (req.format == OutputFormat::csv) {
        std::string csv = "nu,n\n";
        for (const BigNat& n : target.elements) csv += std::to_string(nu) + "," + n.str() + "\n";
        res.csv = std::move(csv);
    }
    return res;
}

CommandResult run_sigma(const CommandRequest& req) {
    CommandResult res;
    const OrbitRecord rec = trajectory(*req.n, req.cap);
    json& r = res.report.results;
    r["n"] = rec.n.str();
    r["nu"] = rec.nu;
    r["kappa"] = rec.kappa;
    const auto modes = modes_of(req.mode);
    json values = json::object();
    for (SteadinessMode m : modes) {
        json v = steadiness_json(sigma(rec, m));
        v["log2_streamed_approx"] = sigma_log2(rec, m);
        values[std::string(to_string(m))] = v;
    }
    r["steadiness"] = values;

    const IdentityVerdict tele = verify_level_identity(rec);
    r["identity_telescoping"] = identity_json(tele);
    if (req.mode != ModeSelection::telescoping) {
        const IdentityVerdict lit = verify_literal_chain(rec);
        r["identity_literal"] = identity_json(lit);
        if (!lit.holds) res.report.warnings.emplace_back(discrepancy_notice());
    }
    if (!tele.holds) res.exit_code = kExitVerificationFailed;
    return res;
}

CommandResult run_sigma0(const CommandRequest& req) {
    CommandResult res;
    ScanRequest scan;
    if (req.nu)
        scan.domain = {DomainKind::levels, 0, *req.nu};
    else
        scan.domain = {DomainKind::integers, 1, *req.n->to_u64()};
    scan.modes = req.mode;
    scan.cap = req.cap;
    scan.workers = req.workers;
    if (req.checkpoint) scan.on_progress = [&](const ScanCheckpoint& cp) { write_checkpoint(cp, *req.checkpoint); };

    std::optional<ScanCheckpoint> resume;
    if (req.resume) resume = read_checkpoint(*req.checkpoint);
    const ScanCheckpoint cp = scan_min_sigma(scan, resume);
    if (req.checkpoint) write_checkpoint(cp, *req.checkpoint);

    json& r = res.report.results;
    r["domain"] = {{"kind", cp.domain.kind == DomainKind::integers ? "integers" : "levels"},
                   {"lo", std::to_string(cp.domain.lo)},
                   {"hi", std::to_string(cp.domain.hi)}};
    r["resumed"] = resume.has_value();
    json minima = json::array();
    for (const ScanMinimum& m : cp.minima) {
        json j = steadiness_json(m.value);
        j["argmin"] = m.argmin.str();
        minima.push_back(j);
    }
    r["minima"] = minima;
    r["processed_count"] = cp.processed_count;
    json skipped = json::array();
    for (const BigNat& n : cp.skipped_cap_exceeded) skipped.push_back(n.str());
    r["skipped_cap_exceeded"] = skipped;
    r["checkpoint"] = checkpoint_to_json(cp);

    if (!cp.skipped_cap_exceeded.empty())
        res.report.warnings.push_back(std::to_string(cp.skipped_cap_exceeded.size()) +
                                      " inputs exceeded the orbit cap and were excluded");
    if (cp.minima.size() == 2 && cp.minima[0].value.exact != cp.minima[1].value.exact)
        res.report.warnings.emplace_back(
            "literal and telescoping minima differ; the two products are not the same function. " +
            std::string(discrepancy_notice()));
    return res;
}

/// Minimum literal steadiness over L_0..L_nu.
ExactRatio scanned_sigma0(std::size_t nu, std::size_t cap, unsigned workers) {
    ScanRequest scan;
    scan.domain = {DomainKind::levels, 0, nu};
    scan.modes = ModeSelection::literal;
    scan.cap = cap;
    scan.workers = workers;
    return scan_min_sigma(scan).minima.at(0).value.exact;
}

CommandResult run_slots(const CommandRequest& req) {
    CommandResult res;
    const std::size_t nu = *req.nu;
    const bool given = req.sigma0.has_value();
    const ExactRatio sigma0 = given ? *req.sigma0 : scanned_sigma0(nu, req.cap, req.workers);
    const LevelSet lvl = obtain_level(nu);
    const SlotAssignment sa = assign_and_verify(lvl, sigma0, req.cap);
    const SlotConditions cond = check_slot_conditions(sigma0);

    json& r = res.report.results;
    r["nu"] = nu;
    r["sigma0"] = exact_json(sigma0);
    r["sigma0_source"] = given ? "given" : "scanned literal minimum over levels 0..nu";
    r["contained"] = sa.contained;
    r["upper_bound_holds"] = sa.upper_bound_holds;
    auto opt = [](const std::optional<bool>& b) { return b ? json(*b) : json(nullptr); };
    r["conditions"] = {{"disjoint", cond.disjoint},
                       {"separated", cond.separated},
                       {"disjoint_grid_verified", opt(cond.disjoint_grid_verified)},
                       {"separation_grid_verified", opt(cond.separation_grid_verified)},
                       {"grid_nu", kSlotGridNu}};

    std::map<std::size_t, std::vector<const SlotEntry*>, std::greater<>> by_kappa;
    for (const SlotEntry& e : sa.entries) by_kappa[e.kappa].push_back(&e);
    json slots = json::array();
    json plot = json::array();
    json outside = json::array();
    for (const auto& [kappa, entries] : by_kappa) {
        const Slot s = slot_bounds(nu, kappa, sigma0);
        slots.push_back({{"kappa", kappa},
                         {"lower", exact_json(s.lower)},
                         {"upper", exact_json(s.upper)},
                         {"count", entries.size()},
                         {"min", entries.front()->n.str()},
                         {"max", entries.back()->n.str()}});
        plot.push_back({kappa, {{"lower", exact_json(s.lower)}, {"upper", exact_json(s.upper)}}});
        for (const SlotEntry* e : entries)
            if (!e->in_slot) outside.push_back({{"n", e->n.str()}, {"kappa", kappa}, {"ratio", exact_json(e->ratio)}});
    }
    r["slots"] = slots;
    r["outside"] = outside;
    if (req.emit_plot_data) r["plot_data"] = {{"kappa_slot", plot}};

    if (!sa.contained || !sa.upper_bound_holds) res.exit_code = kExitVerificationFailed;
    if (cond.disjoint_grid_verified == false || cond.separation_grid_verified == false)
        res.exit_code = kExitVerificationFailed;
    return res;
}

json partition_json(const ClusterPartition& p) {
    json clusters = json::array();
    for (std::size_t i = 0; i < p.clusters.size(); ++i) {
        json c = {{"size", p.clusters[i].size()},
                  {"min", p.clusters[i].front().str()},
                  {"max", p.clusters[i].back().str()}};
        if (p.method == ClusterMethod::by_kappa) c["kappa"] = p.kappas[i];
        clusters.push_back(c);
    }
    json j = {{"method", to_string(p.method)}, {"sizes", p.sizes()}, {"clusters", clusters}};
    if (p.gap_factor) j["gap_factor"] = ratio_to_json(*p.gap_factor);
    if (p.method == ClusterMethod::by_kappa) j["interleaved"] = p.interleaved;
    return j;
}

CommandResult run_clusters(const CommandRequest& req) {
    CommandResult res;
    const LevelSet lvl = obtain_level(*req.nu);
    const ClusterPartition kap = clusters_by_kappa(lvl, req.cap);
    const ClusterPartition gap = clusters_by_gap(lvl, req.gap_factor);
    const PartitionComparison cmp = compare_partitions(kap, gap);

    json& r = res.report.results;
    r["nu"] = lvl.nu;
    r["count"] = lvl.elements.size();
    r["by_kappa"] = partition_json(kap);
    r["by_gap"] = partition_json(gap);
    r["partitions_equal"] = cmp.equal;
    r["first_difference"] = cmp.first_difference ? json(*cmp.first_difference) : json(nullptr);
    if (req.emit_plot_data) {
        json rows = json::array();
        for (std::size_t i = 0; i < gap.clusters.size(); ++i)
            for (const BigNat& n : gap.clusters[i]) rows.push_back({n.str(), i});
        r["plot_data"] = {{"element_cluster", rows}};
    }
    if (!cmp.equal) res.report.warnings.emplace_back("gap and kappa clusterings disagree");
    if (kap.interleaved) {
        res.report.warnings.emplace_back("kappa groups interleave: the cluster pattern dissolves at this level");
        res.exit_code = kExitVerificationFailed;
    }
    return res;
}

CommandResult run_verify(const CommandRequest& req) {
    CommandResult res;
    const std::size_t nu_max = req.nu.value_or(25);
    json suites = json::object();
    bool all_ok = true;
    auto record = [&](const char* name, bool ok, json details) {
        details["pass"] = ok;
        suites[name] = std::move(details);
        all_ok = all_ok && ok;
    };

    std::vector<LevelSet> levels;
    generate_levels(nu_max, [&](const LevelSet& l) { levels.push_back(l); });

    std::size_t recurrence_failures = 0;
    for (std::size_t v = 0; v + 1 < levels.size(); ++v)
        if (levels[v + 1].elements.size() != levels[v].elements.size() + spawning_count(levels[v]))
            ++recurrence_failures;
    record("recurrence", recurrence_failures == 0, {{"failures", recurrence_failures}});

    std::size_t elements = 0, level_failures = 0, identity_failures = 0, order_failures = 0;
    std::optional<ScanMinimum> lit_min;
    for (const LevelSet& l : levels) {
        for (const BigNat& n : l.elements) {
            ++elements;
            const OrbitRecord rec = trajectory(n, req.cap);
            if (rec.nu != l.nu) ++level_failures;
            if (!verify_level_identity(rec).holds) ++identity_failures;
            const SteadinessValue lit = sigma_literal(rec);
            const SteadinessValue tel = sigma_telescoping(rec);
            if (!(lit.exact <= tel.exact && tel.exact <= ExactRatio::one() && lit.exact <= ExactRatio(3, 4)))
                ++order_failures;
            if (!lit_min || lit.exact < lit_min->value.exact) lit_min = ScanMinimum{lit, n};
        }
    }
    record("level_consistency", level_failures == 0, {{"elements", elements}, {"failures", level_failures}});
    record("identity_levels", identity_failures == 0, {{"elements", elements}, {"failures", identity_failures}});
    record("domination_ceiling", order_failures == 0, {{"elements", elements}, {"failures", order_failures}});

    std::mt19937_64 rng(req.seed);
    std::uniform_int_distribution<std::uint64_t> dist(1, kRandomIdentityMax);
    std::size_t sampled = 0, random_failures = 0, random_skipped = 0;
    while (sampled < kRandomIdentitySamples) {
        const std::uint64_t n = dist(rng);
        try {
            const OrbitRecord rec = trajectory(BigNat(n), req.cap);
            ++sampled;
            if (!verify_level_identity(rec).holds) ++random_failures;
        } catch (const OrbitCapExceeded&) {
            ++random_skipped;
            if (random_skipped > kRandomIdentitySamples) break;
        }
    }
    record("identity_random", random_failures == 0 && sampled == kRandomIdentitySamples,
           {{"seed", req.seed}, {"samples", sampled}, {"max", kRandomIdentityMax},
            {"failures", random_failures}, {"skipped_cap_exceeded", random_skipped}});

    const ExactRatio sigma0 = lit_min->value.exact;
    std::size_t containment_failures = 0, equality_failures = 0;
    for (const LevelSet& l : levels) {
        const SlotAssignment sa = assign_and_verify(l, sigma0, req.cap);
        if (!sa.contained || !sa.upper_bound_holds) ++containment_failures;
        const BigNat top = BigNat::pow2(l.nu);
        for (const SlotEntry& e : sa.entries)
            if ((e.ratio == ExactRatio::one()) != (e.n == top)) ++equality_failures;
    }
    record("containment", containment_failures == 0 && equality_failures == 0,
           {{"sigma0", exact_json(sigma0)}, {"sigma0_argmin", lit_min->argmin.str()},
            {"level_failures", containment_failures}, {"equality_failures", equality_failures}});

    const SlotConditions cond = check_slot_conditions(sigma0);
    record("slot_conditions",
           cond.disjoint_grid_verified.value_or(true) && cond.separation_grid_verified.value_or(true),
           {{"disjoint", cond.disjoint}, {"separated", cond.separated}});

    std::size_t gap_disagreements = 0, late_disagreements = 0;
    for (const LevelSet& l : levels) {
        const bool same = compare_partitions(clusters_by_kappa(l, req.cap), clusters_by_gap(l, req.gap_factor)).equal;
        if (!same) ++(l.nu <= kGapAgreementNu ? gap_disagreements : late_disagreements);
    }
    record("clusters_agree", gap_disagreements == 0,
           {{"gap_factor", ratio_to_json(req.gap_factor)}, {"disagreements_up_to_25", gap_disagreements},
            {"disagreements_above_25", late_disagreements}});
    if (late_disagreements > 0)
        res.report.warnings.push_back("gap and kappa clusterings disagree on " + std::to_string(late_disagreements) +
                                      " levels above 25");

    res.report.results = {{"nu_max", nu_max}, {"suites", suites}, {"all_pass", all_ok}};
    if (!all_ok) res.exit_code = kExitVerificationFailed;
    return res;
}

}  // namespace

std::optional<CommandRequest> parse_command(const std::vector<std::string>& args, std::ostream& help_out) {
    CLI::App app{"Collatz level sets, orbit steadiness and slot/cluster verification", "collatz-slots"};
    app.require_subcommand(1);

    std::optional<std::size_t> nu;
    std::string n_text, mode_text = "both", sigma0_text, gap_text = "5/2", format_text = "report";
    std::size_t cap = kDefaultCap;
    std::string checkpoint, out;
    bool resume = false, plot = false, stats = false;
    unsigned workers = 1;
    std::uint64_t seed = 20201220;

    auto add_nu = [&](CLI::App* s, bool required) {
        auto* o = s->add_option("--nu", nu, "level index");
        if (required) o->required();
    };
    auto add_cap = [&](CLI::App* s) {
        s->add_option("--cap", cap, "maximum Collatz steps per orbit")->check(CLI::PositiveNumber);
    };
    auto add_workers = [&](CLI::App* s) {
        s->add_option("--workers", workers, "worker threads")->check(CLI::PositiveNumber);
    };
    auto add_mode = [&](CLI::App* s) {
        s->add_option("--mode", mode_text, "literal|telescoping|both")
            ->check(CLI::IsMember({"literal", "telescoping", "both"}));
    };

    auto* levels = app.add_subcommand("levels", "generate L_0..L_nu");
    add_nu(levels, true);
    levels->add_flag("--stats", stats, "include the kappa histogram");
    levels->add_option("--out", out, "write L_nu as a level-set file");
    levels->add_option("--format", format_text, "report|csv")->check(CLI::IsMember({"report", "csv"}));
    add_cap(levels);

    auto* sig = app.add_subcommand("sigma", "steadiness of a single n");
    sig->add_option("--n", n_text, "start value")->required();
    add_mode(sig);
    add_cap(sig);
    sig->add_option("--out", out, "write the report here");

    auto* s0 = app.add_subcommand("sigma0", "scan for the minimum steadiness");
    add_nu(s0, false);
    s0->add_option("--n", n_text, "scan integers 1..n");
    add_mode(s0);
    add_cap(s0);
    add_workers(s0);
    s0->add_option("--checkpoint", checkpoint, "checkpoint file (written after every round)");
    s0->add_flag("--resume", resume, "continue from --checkpoint");
    s0->add_option("--out", out, "write the report here");

    auto* sl = app.add_subcommand("slots", "slot containment and separation");
    add_nu(sl, true);
    sl->add_option("--sigma0", sigma0_text, "num/den; default is the scanned literal minimum");
    sl->add_flag("--emit-plot-data", plot, "add (kappa, slot bounds) records");
    add_cap(sl);
    add_workers(sl);
    sl->add_option("--out", out, "write the report here");

    auto* cl = app.add_subcommand("clusters", "cluster detection by kappa and by gap");
    add_nu(cl, true);
    cl->add_option("--gap-factor", gap_text, "num/den > 1");
    cl->add_flag("--emit-plot-data", plot, "add (element, cluster index) records");
    add_cap(cl);
    cl->add_option("--out", out, "write the report here");

    auto* ver = app.add_subcommand("verify", "run the invariant suites up to --nu");
    add_nu(ver, false);
    add_cap(ver);
    ver->add_option("--gap-factor", gap_text, "num/den > 1");
    ver->add_option("--seed", seed, "seed for the random identity samples");
    ver->add_option("--out", out, "write the report here");

    std::vector<std::string> rev(args.size() > 1 ? args.begin() + 1 : args.end(), args.end());
    std::reverse(rev.begin(), rev.end());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        help_out << app.help();
        return std::nullopt;
    } catch (const CLI::CallForAllHelp&) {
        help_out << app.help("", CLI::AppFormatMode::All);
        return std::nullopt;
    } catch (const CLI::ParseError& e) {
        throw UsageError(e.what());
    }

    CommandRequest req;
    CLI::App* chosen = app.get_subcommands().front();
    const std::string name = chosen->get_name();
    if (name == "levels") req.subcommand = Subcommand::levels;
    else if (name == "sigma") req.subcommand = Subcommand::sigma;
    else if (name == "sigma0") req.subcommand = Subcommand::sigma0;
    else if (name == "slots") req.subcommand = Subcommand::slots;
    else if (name == "clusters") req.subcommand = Subcommand::clusters;
    else req.subcommand = Subcommand::verify;

    req.nu = nu;
    if (!n_text.empty()) {
        req.n = as_usage("--n", [&] { return BigNat::parse(n_text); });
        if (req.n->is_zero()) throw UsageError("--n: must be >= 1");
    }
    req.mode = parse_mode_selection(mode_text);
    if (!sigma0_text.empty()) {
        req.sigma0 = as_usage("--sigma0", [&] { return ExactRatio::parse(sigma0_text); });
        if (req.sigma0->is_zero() || *req.sigma0 > ExactRatio::one())
            throw UsageError("--sigma0: must lie in (0, 1]");
    }
    req.gap_factor = as_usage("--gap-factor", [&] { return ExactRatio::parse(gap_text); });
    if (!(req.gap_factor > ExactRatio::one())) throw UsageError("--gap-factor: must exceed 1");
    req.cap = cap;
    if (!checkpoint.empty()) req.checkpoint = checkpoint;
    req.resume = resume;
    if (!out.empty()) req.out = out;
    req.format = format_text == "csv" ? OutputFormat::csv : OutputFormat::report;
    req.emit_plot_data = plot;
    req.workers = workers;
    req.stats = stats;
    req.seed = seed;

    if (req.subcommand == Subcommand::sigma0) {
        if (req.nu.has_value() == req.n.has_value()) throw UsageError("sigma0: give exactly one of --nu or --n");
        if (req.n && !req.n->fits_u64()) throw UsageError("--n: integer scans are limited to 64-bit bounds");
        if (req.resume && !req.checkpoint) throw UsageError("--resume requires --checkpoint");
    }

    json echo = {{"subcommand", name}};
    for (const CLI::Option* o : chosen->get_options()) {
        if (o->count() == 0 || o->get_name() == "--help") continue;
        const auto results = o->results();
        echo[o->get_name()] = o->get_expected_min() == 0 ? json(true) : json(results.back());
    }
    req.echo = std::move(echo);
    return req;
}

CommandResult run_command(const CommandRequest& req) {
    const auto start = std::chrono::steady_clock::now();
    CommandResult res;
    switch (req.subcommand) {
        case Subcommand::levels: res = run_levels(req); break;
        case Subcommand::sigma: res = run_sigma(req); break;
        case Subcommand::sigma0: res = run_sigma0(req); break;
        case Subcommand::slots: res = run_slots(req); break;
        case Subcommand::clusters: res = run_clusters(req); break;
        case Subcommand::verify: res = run_verify(req); break;
    }
    res.report.command = req.echo.empty() ? json{{"subcommand", to_string(req.subcommand)}} : req.echo;
    res.report.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return res;
}

int main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    try {
        const auto req = parse_command(args, out);
        if (!req) return kExitOk;
        CommandResult res = run_command(*req);
        if (res.csv) {
            out << *res.csv;
        } else if (req->out && req->subcommand != Subcommand::levels) {
            write_text_file(*req->out, format_report(res.report));
        } else {
            out << format_report(res.report);
        }
        return res.exit_code;
    } catch (const OrbitCapExceeded& e) {
        err << "error: orbit-cap-exceeded: " << e.what() << "\n";
        return kExitCapExceeded;
    } catch (const UsageError& e) {
        err << "error: usage: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ParseError& e) {
        err << "error: parse-error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const IntegrityError& e) {
        err << "error: integrity-error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const CheckpointError& e) {
        err << "error: checkpoint-error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const EmptyDomain& e) {
        err << "error: empty-domain: " << e.what() << "\n";
        return kExitUsage;
    } catch (const InvalidInput& e) {
        err << "error: invalid-input: " << e.what() << "\n";
        return kExitUsage;
    }
}

}  // namespace collatz::cli
