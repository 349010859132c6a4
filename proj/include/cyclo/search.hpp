#ifndef CYCLO_SEARCH_HPP
#define CYCLO_SEARCH_HPP

#include <algorithm>
#include <array>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include <json.hpp>

#include "bounds.hpp"
#include "ntheory.hpp"
#include "ternary_height.hpp"

namespace cyclo {

// ---------------------------------------------------------------------------
// Residue classes of r modulo pq. A(pqr) depends only on r up to sign
// modulo pq (for prime r > q), so each pair {rho, pq - rho} is one task.
// ---------------------------------------------------------------------------

/// Canonical residues rho in [1, pq/2] coprime to pq, ascending.
inline std::vector<i64> enumerate_classes(i64 p, i64 q)
{
    if (!is_odd_prime(p) || !is_odd_prime(q) || p >= q)
        throw InvalidArgument("enumerate_classes: expected odd primes p < q");
    const i64 pq = checked_mul(p, q);
    std::vector<i64> out;
    out.reserve(static_cast<std::size_t>((p - 1) * (q - 1) / 2));
    for (i64 rho = 1; rho <= pq / 2; ++rho)
        if (rho % p != 0 && rho % q != 0)
            out.push_back(rho);
    return out;
}

/// Smallest prime r > q with r = +-rho (mod pq).
inline i64 pick_representative(i64 p, i64 q, i64 rho, i64 cap = default_prime_search_cap)
{
    const i64 pq = checked_mul(p, q);
    if (rho < 1 || rho > pq - rho || std::gcd(rho, pq) != 1)
        throw InvalidArgument("residue " + std::to_string(rho) + " is not a canonical class modulo "
                              + std::to_string(pq));
    std::optional<i64> best;
    std::optional<BudgetExhausted> failure;
    for (i64 cls : {rho, pq - rho}) {
        try {
            const i64 s = smallest_prime_in_class(cls, pq, q, cap);
            if (!best || s < *best)
                best = s;
        } catch (const BudgetExhausted& e) {
            failure = e;
        }
    }
    if (!best)
        throw *failure;
    return *best;
}

enum class TaskStatus { pending, pruned, computed, exhausted };

inline constexpr std::string_view status_name(TaskStatus s) noexcept
{
    switch (s) {
    case TaskStatus::pending: return "pending";
    case TaskStatus::pruned: return "pruned";
    case TaskStatus::computed: return "computed";
    case TaskStatus::exhausted: return "exhausted";
    }
    return "?";
}

struct SearchTask {
    i64 p = 0;
    i64 q = 0;
    i64 rho = 0;
    std::optional<i64> r;
    TaskStatus status = TaskStatus::pending;
    // computed: the height; pruned: the pruning bound; otherwise unused.
    i64 value = 0;
    // Best certificate bound and its rule, present whenever r is resolved.
    std::optional<i64> bound;
    std::optional<BoundRule> rule;

    friend bool operator==(const SearchTask&, const SearchTask&) = default;
};

using Triple = std::array<i64, 3>;

struct SearchReport {
    i64 p = 0;
    i64 q_max = 0;
    std::vector<SearchTask> records; // ordered by (q, rho)
    i64 max_height = 0;
    std::vector<Triple> witnesses;
    std::vector<Triple> beiter_violations;
    std::vector<Triple> corrected_violations;
    bool complete = true;

    friend bool operator==(const SearchReport&, const SearchReport&) = default;
};

struct SearchOptions {
    i64 cap = default_prime_search_cap;
    bool prune = true;
    int workers = 1;
    std::string checkpoint_path; // empty: no checkpointing
    // Stop after this many newly finished tasks (simulated interruption);
    // negative means no limit.
    i64 task_limit = -1;
    std::ostream* log = nullptr; // warnings
};

struct Verdict {
    i64 p = 0;
    i64 beiter_ref = 0;
    i64 corrected_ref = 0;
    std::vector<std::pair<Triple, i64>> beiter_violations;
    std::vector<std::pair<Triple, i64>> corrected_violations;
};

/// Computed triples whose height exceeds (p + 1) / 2, resp. floor(2p / 3).
inline Verdict verify_conjectures(const SearchReport& report)
{
    Verdict v;
    v.p = report.p;
    v.beiter_ref = beiter_line(report.p);
    v.corrected_ref = corrected_line(report.p);
    for (const auto& t : report.records) {
        if (t.status != TaskStatus::computed)
            continue;
        const Triple tr{t.p, t.q, *t.r};
        if (t.value > v.beiter_ref)
            v.beiter_violations.emplace_back(tr, t.value);
        if (t.value > v.corrected_ref)
            v.corrected_violations.emplace_back(tr, t.value);
    }
    return v;
}

// ---------------------------------------------------------------------------
// Checkpoint: one JSON object per line,
//   {"p":7,"q":11,"rho":3,"r":29,"status":"computed","value":3,"bound_rule":"bzdega"}
// "r", "value" and "bound_rule" are null for exhausted tasks. Lines are
// appended as tasks finish, in completion order.
// ---------------------------------------------------------------------------

inline nlohmann::json task_to_json(const SearchTask& t)
{
    nlohmann::json j;
    j["p"] = t.p;
    j["q"] = t.q;
    j["rho"] = t.rho;
    j["r"] = t.r ? nlohmann::json(*t.r) : nlohmann::json(nullptr);
    j["status"] = std::string(status_name(t.status));
    j["value"] = t.status == TaskStatus::exhausted ? nlohmann::json(nullptr) : nlohmann::json(t.value);
    j["bound_rule"] = t.rule ? nlohmann::json(std::string(rule_name(*t.rule))) : nlohmann::json(nullptr);
    return j;
}

inline std::string checkpoint_line(const SearchTask& t) { return task_to_json(t).dump() + "\n"; }

/// Parses one checkpoint record. The certificate bound is not stored; it is
/// recomputed from the triple.
inline SearchTask task_from_json(const nlohmann::json& j)
{
    SearchTask t;
    t.p = j.at("p").get<i64>();
    t.q = j.at("q").get<i64>();
    t.rho = j.at("rho").get<i64>();
    const auto status = j.at("status").get<std::string>();
    if (status == "computed")
        t.status = TaskStatus::computed;
    else if (status == "pruned")
        t.status = TaskStatus::pruned;
    else if (status == "exhausted")
        t.status = TaskStatus::exhausted;
    else
        throw InvalidArgument("unknown status '" + status + "'");
    if (t.status == TaskStatus::exhausted)
        return t;
    t.r = j.at("r").get<i64>();
    t.value = j.at("value").get<i64>();
    const auto rule = parse_rule(j.at("bound_rule").get<std::string>());
    if (!rule)
        throw InvalidArgument("unknown bound rule");
    const auto cert = bound_certificate(make_triple(t.p, t.q, *t.r));
    if (cert.best_rule != *rule)
        throw InvalidArgument("bound rule does not match the triple's certificate");
    t.bound = cert.best;
    t.rule = rule;
    return t;
}

struct CheckpointState {
    std::vector<SearchTask> records;
    std::vector<std::string> warnings;
};

/// Reads a checkpoint. A missing or empty file is a fresh start. An
/// unterminated final line is an interrupted write: it is dropped with a
/// warning and, when `repair` is set, truncated from the file so appends
/// resume on a line boundary. Any other bad line is a CheckpointError
/// naming the line.
inline CheckpointState load_checkpoint(const std::string& path, bool repair = true)
{
    CheckpointState state;
    std::error_code ec;
    if (!std::filesystem::exists(path, ec))
        return state;
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw CheckpointError("cannot open checkpoint '" + path + "' for reading");
    std::stringstream buf;
    buf << in.rdbuf();
    const std::string text = buf.str();
    in.close();

    std::size_t pos = 0;
    std::size_t line_no = 0;
    while (pos < text.size()) {
        ++line_no;
        const std::size_t nl = text.find('\n', pos);
        if (nl == std::string::npos) {
            state.warnings.push_back(path + ":" + std::to_string(line_no)
                                     + ": ignoring partial trailing line (interrupted write)");
            if (repair) {
                std::filesystem::resize_file(path, pos, ec);
                if (ec)
                    throw CheckpointError("cannot truncate checkpoint '" + path + "': " + ec.message());
            }
            break;
        }
        const std::string line = text.substr(pos, nl - pos);
        pos = nl + 1;
        if (line.find_first_not_of(" \t\r") == std::string::npos)
            continue;
        try {
            state.records.push_back(task_from_json(nlohmann::json::parse(line)));
        } catch (const std::exception& e) {
            throw CheckpointError(path + ":" + std::to_string(line_no) + ": corrupt checkpoint record: " + e.what());
        }
    }
    return state;
}

class CheckpointWriter {
public:
    explicit CheckpointWriter(const std::string& path) : path_(path)
    {
        if (path_.empty())
            return;
        out_.open(path_, std::ios::binary | std::ios::app);
        if (!out_)
            throw CheckpointError("cannot open checkpoint '" + path_ + "' for appending");
    }

    void append(const SearchTask& t)
    {
        if (path_.empty())
            return;
        const std::string line = checkpoint_line(t);
        std::lock_guard lock(mu_);
        out_.write(line.data(), static_cast<std::streamsize>(line.size()));
        out_.flush();
        if (!out_)
            throw CheckpointError("write to checkpoint '" + path_ + "' failed");
    }

private:
    std::string path_;
    std::ofstream out_;
    std::mutex mu_;
};

// ---------------------------------------------------------------------------
// Sweep
// ---------------------------------------------------------------------------

/// Resolves one class: representative, certificate, then either prunes
/// (certificate bound <= an already-achieved height) or computes the height.
inline SearchTask run_task(i64 p, i64 q, i64 rho, i64 cap, std::optional<i64> prune_at)
{
    SearchTask t;
    t.p = p;
    t.q = q;
    t.rho = rho;
    try {
        t.r = pick_representative(p, q, rho, cap);
    } catch (const BudgetExhausted&) {
        t.status = TaskStatus::exhausted;
        return t;
    }
    const TripleParams triple = make_triple(p, q, *t.r);
    const BoundCertificate cert = bound_certificate(triple);
    t.bound = cert.best;
    t.rule = cert.best_rule;
    if (prune_at && cert.best <= *prune_at) {
        t.status = TaskStatus::pruned;
        t.value = cert.best;
    } else {
        t.status = TaskStatus::computed;
        t.value = height_fast(triple);
    }
    return t;
}

/// Fills max_height, witnesses and violation lists from the records.
inline void finalize_report(SearchReport& rep)
{
    std::sort(rep.records.begin(), rep.records.end(),
              [](const SearchTask& a, const SearchTask& b) { return std::pair(a.q, a.rho) < std::pair(b.q, b.rho); });
    rep.max_height = 0;
    rep.witnesses.clear();
    for (const auto& t : rep.records)
        if (t.status == TaskStatus::computed)
            rep.max_height = std::max(rep.max_height, t.value);
    for (const auto& t : rep.records)
        if (t.status == TaskStatus::computed && t.value == rep.max_height)
            rep.witnesses.push_back({t.p, t.q, *t.r});
    const Verdict v = verify_conjectures(rep);
    rep.beiter_violations.clear();
    rep.corrected_violations.clear();
    for (const auto& [tr, h] : v.beiter_violations)
        rep.beiter_violations.push_back(tr);
    for (const auto& [tr, h] : v.corrected_violations)
        rep.corrected_violations.push_back(tr);
}

/// Sweeps every prime q in (p, q_max] and every class of r modulo pq.
///
/// Work proceeds one q at a time. Within a q the classes run in parallel,
/// and pruning compares against the largest height computed for smaller q.
/// That threshold only depends on earlier, fully finished batches, so the
/// report is the same for any worker count, completion order, or
/// interruption point.
inline SearchReport search_mp(i64 p, i64 q_max, const SearchOptions& opts = {})
{
    if (!is_odd_prime(p))
        throw InvalidArgument("search_mp: p must be an odd prime, got " + std::to_string(p));
    if (q_max <= p)
        throw InvalidArgument("search_mp: q_max must exceed p");

    SearchReport rep;
    rep.p = p;
    rep.q_max = q_max;

    std::map<std::pair<i64, i64>, SearchTask> done;
    if (!opts.checkpoint_path.empty()) {
        auto state = load_checkpoint(opts.checkpoint_path);
        if (opts.log)
            for (const auto& w : state.warnings)
                *opts.log << "warning: " << w << '\n';
        for (auto& t : state.records) {
            if (t.p != p)
                throw CheckpointError("checkpoint '" + opts.checkpoint_path + "' holds records for p = "
                                      + std::to_string(t.p) + ", not " + std::to_string(p));
            done.emplace(std::pair(t.q, t.rho), std::move(t));
        }
    }
    CheckpointWriter writer(opts.checkpoint_path);

    std::atomic<i64> finished{0};
    std::atomic<bool> stopped{false};
    i64 running_max = 0;
    const int workers = std::max(1, opts.workers);

    for (i64 q = p + 2; q <= q_max && !stopped; q += 2) {
        if (!is_prime(static_cast<u64>(q)))
            continue;
        const auto classes = enumerate_classes(p, q);
        std::vector<std::optional<SearchTask>> batch(classes.size());
        std::vector<std::size_t> todo;
        for (std::size_t k = 0; k < classes.size(); ++k) {
            if (auto it = done.find({q, classes[k]}); it != done.end())
                batch[k] = it->second;
            else
                todo.push_back(k);
        }

        const std::optional<i64> prune_at =
            opts.prune && running_max > 0 ? std::optional<i64>(running_max) : std::nullopt;
        std::atomic<std::size_t> next{0};
        std::exception_ptr failure;
        std::mutex failure_mu;
        auto work = [&] {
            for (;;) {
                if (stopped)
                    return;
                const std::size_t idx = next++;
                if (idx >= todo.size())
                    return;
                if (opts.task_limit >= 0 && finished.fetch_add(1) >= opts.task_limit) {
                    stopped = true;
                    return;
                }
                try {
                    SearchTask t = run_task(p, q, classes[todo[idx]], opts.cap, prune_at);
                    writer.append(t);
                    batch[todo[idx]] = std::move(t);
                } catch (...) {
                    std::lock_guard lock(failure_mu);
                    if (!failure)
                        failure = std::current_exception();
                    stopped = true;
                    return;
                }
            }
        };
        if (workers == 1 || todo.size() < 2) {
            work();
        } else {
            std::vector<std::jthread> pool;
            for (int w = 0; w < workers; ++w)
                pool.emplace_back(work);
        }
        if (failure)
            std::rethrow_exception(failure);

        for (auto& t : batch) {
            if (!t)
                continue;
            if (t->status == TaskStatus::computed)
                running_max = std::max(running_max, t->value);
            rep.records.push_back(std::move(*t));
        }
    }
    rep.complete = !stopped;
    finalize_report(rep);
    return rep;
}

// ---------------------------------------------------------------------------
// Report export
// ---------------------------------------------------------------------------

inline std::string report_csv(const SearchReport& rep)
{
    std::ostringstream os;
    os << "p,q,rho,r,height,bound,rule\n";
    for (const auto& t : rep.records) {
        os << t.p << ',' << t.q << ',' << t.rho << ',';
        if (t.r)
            os << *t.r;
        os << ',';
        if (t.status == TaskStatus::computed)
            os << t.value;
        os << ',';
        if (t.bound)
            os << *t.bound;
        os << ',';
        if (t.rule)
            os << rule_name(*t.rule);
        os << '\n';
    }
    return os.str();
}

inline nlohmann::json report_json(const SearchReport& rep)
{
    nlohmann::json j;
    j["p"] = rep.p;
    j["q_max"] = rep.q_max;
    j["complete"] = rep.complete;
    j["max_height"] = rep.max_height;
    j["witnesses"] = rep.witnesses;
    j["beiter_violations"] = rep.beiter_violations;
    j["corrected_violations"] = rep.corrected_violations;
    auto& recs = j["records"] = nlohmann::json::array();
    for (const auto& t : rep.records) {
        auto r = task_to_json(t);
        r["bound"] = t.bound ? nlohmann::json(*t.bound) : nlohmann::json(nullptr);
        recs.push_back(std::move(r));
    }
    return j;
}

inline std::string report_text(const SearchReport& rep)
{
    std::size_t computed = 0, pruned = 0, exhausted = 0;
    for (const auto& t : rep.records) {
        computed += t.status == TaskStatus::computed;
        pruned += t.status == TaskStatus::pruned;
        exhausted += t.status == TaskStatus::exhausted;
    }
    std::ostringstream os;
    os << "p " << rep.p << "\n";
    os << "q_max " << rep.q_max << "\n";
    os << "classes " << rep.records.size() << " computed " << computed << " pruned " << pruned << " exhausted "
       << exhausted << "\n";
    if (!rep.complete)
        os << "incomplete (task limit reached)\n";
    os << "max_height " << rep.max_height << "\n";
    for (const auto& w : rep.witnesses)
        os << "witness " << w[0] << ' ' << w[1] << ' ' << w[2] << "\n";
    return os.str();
}

} // namespace cyclo

#endif
