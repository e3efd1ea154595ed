#pragma once

#include <chrono>
#include <map>
#include <optional>

#include "cycles.hpp"
#include "maxflow.hpp"
#include "random.hpp"

namespace faspcut {

/// Thrown when a solve exceeds its configured wall-clock deadline.
class TimeoutError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct SolverConfig {
    int relax_sample_size = 3;    // n: arcs deleted per probe
    int relax_sample_count = 20;  // N: probes per stall
    std::uint64_t rng_seed = 0;
    int max_iterations = 0;       // 0 = |E|
    std::optional<std::chrono::steady_clock::time_point> deadline;

    void validate() const {
        if (relax_sample_size < 0) throw std::domain_error("relax_sample_size must be >= 0");
        if (relax_sample_count < 1) throw std::domain_error("relax_sample_count must be >= 1");
    }
};

enum class StepKind { Iso, Vote, Guess };

struct TraceStep {
    StepKind kind;
    ArcId arc;
};

struct FeedbackResult {
    std::vector<ArcId> feedback_arcs;  // ascending
    double total_weight = 0;
    double optimal_sub_weight = 0;  // weight of the provably optimal (iso) part
    double guess_weight = 0;        // Omega(delta), the guessed part
    std::vector<TraceStep> trace;
};

struct IsoCutResult {
    MultiDigraph residual;
    std::vector<ArcId> eps;  // in cut order; bundles appended ascending
};

namespace detail {

inline void check_deadline(const SolverConfig& cfg) {
    if (cfg.deadline && std::chrono::steady_clock::now() > *cfg.deadline)
        throw TimeoutError("solver deadline exceeded");
}

/// One ISO-CUT sweep over a mutable graph. Returns the arcs cut (in cut
/// order). With `first_cut_only` the sweep stops after the first qualifying
/// bundle, which is all the voting probes of the relaxed solver need.
inline std::vector<ArcId> iso_cut_sweep(MultiDigraph& g, const ArcWeights& w,
                                        bool first_cut_only, const SolverConfig* cfg = nullptr) {
    std::vector<ArcId> eps;
    bool progressed = true;
    while (progressed && !is_acyclic(g)) {
        progressed = false;
        SccLabels labels = scc_labels(g);
        for (ArcId e = 0; e < g.arc_capacity(); ++e) {
            if (!g.arc_alive(e)) continue;
            const bool loop = g.is_loop(e);
            if (!loop && !labels.same(g.head(e), g.tail(e))) continue;  // not on a cycle

            std::vector<ArcId> bundle;
            if (loop) {
                bundle = parallel_bundle(g, e);  // loops always qualify
            } else {
                ArcSubgraph iso = isolated_subgraph(g, e);
                if (iso.empty()) continue;
                CutResult cut = min_st_cut_on(g, w, g.head(e), g.tail(e), iso.arcs);
                bundle = parallel_bundle(g, e);
                if (w.total(bundle) > cut.value + kWeightTol) continue;
            }
            for (ArcId f : bundle) {
                g.remove_arc(f);
                eps.push_back(f);
            }
            progressed = true;
            if (first_cut_only) return eps;
            if (cfg) check_deadline(*cfg);
            labels = scc_labels(g);  // the cut may have split components
        }
    }
    return eps;
}

/// Arcs of the current graph lying on some cycle (loops included), ascending.
inline std::vector<ArcId> cyclic_arcs(const MultiDigraph& g) {
    SccLabels labels = scc_labels(g);
    std::vector<ArcId> res;
    for (ArcId e = 0; e < g.arc_capacity(); ++e)
        if (g.arc_alive(e) && (g.is_loop(e) || labels.same(g.head(e), g.tail(e))))
            res.push_back(e);
    return res;
}

}  // namespace detail

/// ISO-CUT: repeatedly cuts bundles whose weight is at most the min-cut of
/// their isolated subgraph. The returned eps is an optimal partial solution;
/// if the residual is acyclic it is a minimum feedback arc set.
inline IsoCutResult iso_cut(const MultiDigraph& g, const ArcWeights& w) {
    IsoCutResult res{g, {}};
    res.eps = detail::iso_cut_sweep(res.residual, w, false);
    return res;
}

/// GOOD-GUESS: among the arcs of c whose cycle cover strictly contains c,
/// pick the one maximizing (min-cut of the cover) - (bundle weight). Falls
/// back to all arcs of c when the strict-containment filter is empty.
inline ArcId good_guess(const MultiDigraph& g, const ArcWeights& w, const ElementaryCycle& c) {
    if (c.arcs.empty()) throw std::domain_error("good_guess: empty cycle");
    if (c.arcs.size() == 1 && g.is_loop(c.arcs[0])) return c.arcs[0];

    std::vector<ArcId> cycle_set = cycle_arc_set(c);
    std::vector<std::pair<ArcId, ArcSubgraph>> covers;
    covers.reserve(c.arcs.size());
    for (ArcId e : c.arcs) covers.emplace_back(e, cycle_cover(g, e));

    std::vector<ArcId> candidates;
    for (const auto& [e, cov] : covers) {
        if (cov.arcs.size() <= cycle_set.size()) continue;
        if (std::includes(cov.arcs.begin(), cov.arcs.end(), cycle_set.begin(), cycle_set.end()))
            candidates.push_back(e);
    }
    if (candidates.empty()) candidates = c.arcs;

    ArcId best = kNoArc;
    double best_score = -std::numeric_limits<double>::infinity();
    std::sort(candidates.begin(), candidates.end());
    for (ArcId e : candidates) {
        const ArcSubgraph* cov = nullptr;
        for (const auto& [a, s] : covers)
            if (a == e) { cov = &s; break; }
        CutResult cut = min_st_cut_on(g, w, g.head(e), g.tail(e), cov->arcs);
        double score = cut.value - w.total(parallel_bundle(g, e));
        if (score > best_score + kWeightTol) {
            best_score = score;
            best = e;
        }
    }
    return best;
}

/// Marks G \ eps acyclic?
inline bool verify_feedback(const MultiDigraph& g, const std::vector<ArcId>& eps) {
    MultiDigraph h = g;
    for (ArcId e : eps) h.remove_arc(e);  // throws on unknown arcs
    return is_acyclic(h);
}

namespace detail {

inline FeedbackResult finish_result(const ArcWeights& w, std::vector<TraceStep> trace) {
    FeedbackResult res;
    res.trace = std::move(trace);
    for (const TraceStep& s : res.trace) {
        res.feedback_arcs.push_back(s.arc);
        res.total_weight += w[s.arc];
        if (s.kind == StepKind::Iso) res.optimal_sub_weight += w[s.arc];
        if (s.kind == StepKind::Guess) res.guess_weight += w[s.arc];
    }
    std::sort(res.feedback_arcs.begin(), res.feedback_arcs.end());
    return res;
}

}  // namespace detail

/// TIGHT-CUT: alternate ISO-CUT with single GOOD-GUESS removals until acyclic.
inline FeedbackResult tight_cut(const MultiDigraph& g, const ArcWeights& w,
                                const SolverConfig& cfg = {}) {
    MultiDigraph cur = g;
    std::vector<TraceStep> trace;
    const int max_iter = cfg.max_iterations > 0 ? cfg.max_iterations : std::max(1, g.num_arcs());
    for (int i = 0; i < max_iter; ++i) {
        detail::check_deadline(cfg);
        for (ArcId e : detail::iso_cut_sweep(cur, w, false, &cfg))
            trace.push_back({StepKind::Iso, e});
        if (is_acyclic(cur)) break;
        auto c = find_elementary_cycle(cur);
        ArcId h = good_guess(cur, w, *c);
        trace.push_back({StepKind::Guess, h});
        cur.remove_arc(h);
    }
    return detail::finish_result(w, std::move(trace));
}

/// TIGHT-CUT*: like TIGHT-CUT, but a stalled ISO-CUT triggers N randomized
/// probes G \ mu_i (|mu_i| = n, sampled from the cyclic part); the arcs first
/// cut inside the probes vote for the arc to remove. GOOD-GUESS is the
/// fallback when no probe cuts anything. Fully deterministic given the seed.
inline FeedbackResult tight_cut_star(const MultiDigraph& g, const ArcWeights& w,
                                     const SolverConfig& cfg = {}) {
    cfg.validate();
    MultiDigraph cur = g;
    Rng rng(cfg.rng_seed);
    std::vector<TraceStep> trace;
    const int max_iter = cfg.max_iterations > 0 ? cfg.max_iterations : std::max(1, g.num_arcs());
    for (int i = 0; i < max_iter; ++i) {
        detail::check_deadline(cfg);
        for (ArcId e : detail::iso_cut_sweep(cur, w, false, &cfg))
            trace.push_back({StepKind::Iso, e});
        if (is_acyclic(cur)) break;

        // voting probes over the cyclic part only; deleting arcs outside the
        // nontrivial SCCs cannot create isolated cycles
        std::map<ArcId, int> votes;
        if (cfg.relax_sample_size > 0) {
            std::vector<ArcId> pool = detail::cyclic_arcs(cur);
            const std::size_t n = std::min<std::size_t>(cfg.relax_sample_size, pool.size());
            for (int p = 0; p < cfg.relax_sample_count; ++p) {
                detail::check_deadline(cfg);
                std::vector<ArcId> mu = rng.sample(pool, n);
                MultiDigraph probe = cur;
                for (ArcId e : mu) probe.remove_arc(e);
                std::vector<ArcId> first = detail::iso_cut_sweep(probe, w, true);
                if (!first.empty()) ++votes[first.front()];
            }
        }
        if (!votes.empty()) {
            ArcId f = kNoArc;
            int best = 0;
            for (const auto& [arc, count] : votes)  // map order: ascending arc id
                if (count > best) { best = count; f = arc; }
            trace.push_back({StepKind::Vote, f});
            cur.remove_arc(f);
        } else {
            auto c = find_elementary_cycle(cur);
            ArcId h = good_guess(cur, w, *c);
            trace.push_back({StepKind::Guess, h});
            cur.remove_arc(h);
        }
    }
    return detail::finish_result(w, std::move(trace));
}

}  // namespace faspcut
