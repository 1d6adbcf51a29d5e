#include "raag/invariants.hpp"

#include <limits>

#include <omp.h>

namespace raag {

Hyperplane act(const GroupElement& g, const Hyperplane& h) {
    require_same_graph(g, h.base());
    return Hyperplane(h.label(), g * h.base());
}

HyperplaneSeq act(const GroupElement& g, const HyperplaneSeq& seq) {
    HyperplaneSeq out;
    out.reserve(seq.size());
    for (const auto& h : seq) out.push_back(act(g, h));
    return out;
}

HyperplanePeriodicSeq act(const GroupElement& g, const HyperplanePeriodicSeq& seq) {
    return HyperplanePeriodicSeq(act(g, seq.preperiod), act(g, seq.period));
}

namespace {

// Right translate C u of a coset whose generators commute with supp(u); the
// result is again a coset of the same subgroup.
StandardCoset right_translate(const StandardCoset& C, const GroupElement& u) {
    const DefiningGraph& g = u.graph();
    for (VertexId v : C.generators().members()) {
        if (!u.support().subset_of(g.link(v))) {
            throw std::logic_error("nested gate domain does not commute with the accumulated translation");
        }
    }
    return StandardCoset(C.base() * u, C.generators());
}

} // namespace

ClassifyingInvariant classifying_invariant(const HyperplaneSeq& seq) {
    if (seq.empty()) throw DomainError("classifying invariant needs a nonempty sequence");
    const std::size_t k = seq.size();
    for (const auto& h : seq) require_same_graph(h.base(), seq.front().base());

    std::vector<StandardCoset> H;
    std::vector<VertexId> labels;
    for (const auto& h : seq) {
        H.push_back(carrier_coset(h));
        labels.push_back(h.label());
    }
    if (k == 1) return ClassifyingInvariant{labels, {}, {}, H.front()};

    // A_n = rho_{H_n}^{H_{n+1}}, B_n = rho_{H_{n+1}}^{H_n}, psi_n(x) = x s_n.
    std::vector<GatePair> P;
    std::vector<GroupElement> s;
    for (std::size_t n = 0; n + 1 < k; ++n) {
        P.push_back(gate_pair(H[n], H[n + 1]));
        s.push_back(P.back().translation);
    }

    std::vector<GroupElement> t;
    StandardCoset C = P[0].rhoA;
    StandardCoset D = P[0].rhoB;
    GroupElement u = s[0];  // s_1 t_2 s_2 ... t_n s_n
    for (std::size_t n = 1; n + 1 < k; ++n) {
        GatePair inner = gate_pair(D, P[n].rhoA);
        t.push_back(inner.translation);
        C = right_translate(inner.rhoA, u.inverse());
        D = right_translate(inner.rhoB, s[n]);
        u = u * inner.translation * s[n];
    }
    return ClassifyingInvariant{labels, s, t, C};
}

std::optional<GroupElement> decide_orbit_equiv(const HyperplaneSeq& seq1, const HyperplaneSeq& seq2) {
    if (seq1.size() != seq2.size()) throw DomainError("orbit equivalence needs sequences of equal length");
    ClassifyingInvariant f1 = classifying_invariant(seq1);
    ClassifyingInvariant f2 = classifying_invariant(seq2);
    if (!f1.same_orbit_data(f2)) return std::nullopt;
    GroupElement g = f2.terminal.base() * f1.terminal.base().inverse();
    if (act(g, seq1) != seq2) {
        throw std::logic_error("equal classifying invariants but the candidate element fails");
    }
    return g;
}

namespace {

PeriodicSeq<VertexId> label_seq(const HyperplanePeriodicSeq& s) {
    std::vector<VertexId> pre;
    std::vector<VertexId> per;
    for (const auto& h : s.preperiod) pre.push_back(h.label());
    for (const auto& h : s.period) per.push_back(h.label());
    return PeriodicSeq<VertexId>(std::move(pre), std::move(per));
}

bool labels_obstruct(const std::vector<HyperplanePeriodicSeq>& alpha,
                     const std::vector<HyperplanePeriodicSeq>& beta) {
    for (std::size_t i = 0; i < alpha.size(); ++i) {
        if (!tail_equivalent(label_seq(alpha[i]), label_seq(beta[i]))) return true;
    }
    return false;
}

bool maps_tails(const GroupElement& g, const std::vector<HyperplanePeriodicSeq>& alpha,
                const std::vector<HyperplanePeriodicSeq>& beta) {
    for (std::size_t i = 0; i < alpha.size(); ++i) {
        if (!tail_equivalent(act(g, alpha[i]), beta[i])) return false;
    }
    return true;
}

GroupElement ambient_identity(const std::vector<HyperplanePeriodicSeq>& alpha) {
    const auto& first = alpha.front();
    const Hyperplane& h = first.preperiod.empty() ? first.period.front() : first.preperiod.front();
    return GroupElement(h.graph_ptr());
}

template <class Search>
FnVerdict run_Fn(const std::vector<HyperplanePeriodicSeq>& alpha,
                 const std::vector<HyperplanePeriodicSeq>& beta, std::size_t radius, Search search) {
    if (alpha.size() != beta.size()) throw DomainError("F_n needs tuples of equal arity");
    FnVerdict verdict;
    verdict.radius = radius;
    if (alpha.empty()) {
        verdict.kind = FnVerdict::Kind::Witness;
        return verdict;
    }
    if (labels_obstruct(alpha, beta)) {
        verdict.label_obstruction = true;
        return verdict;
    }
    std::vector<GroupElement> candidates = ball(ambient_identity(alpha), radius);
    std::size_t hit = search(candidates);
    if (hit < candidates.size()) {
        verdict.kind = FnVerdict::Kind::Witness;
        verdict.witness = candidates[hit];
    }
    return verdict;
}

} // namespace

FnVerdict decide_Fn_serial(const std::vector<HyperplanePeriodicSeq>& alpha,
                           const std::vector<HyperplanePeriodicSeq>& beta, std::size_t radius) {
    return run_Fn(alpha, beta, radius, [&](const std::vector<GroupElement>& cand) {
        for (std::size_t j = 0; j < cand.size(); ++j) {
            if (maps_tails(cand[j], alpha, beta)) return j;
        }
        return cand.size();
    });
}

FnVerdict decide_Fn(const std::vector<HyperplanePeriodicSeq>& alpha,
                    const std::vector<HyperplanePeriodicSeq>& beta, std::size_t radius) {
    return run_Fn(alpha, beta, radius, [&](const std::vector<GroupElement>& cand) {
        const auto n = static_cast<std::ptrdiff_t>(cand.size());
        std::ptrdiff_t best = n;
#pragma omp parallel for schedule(dynamic, 16) reduction(min : best)
        for (std::ptrdiff_t j = 0; j < n; ++j) {
            if (j < best && maps_tails(cand[static_cast<std::size_t>(j)], alpha, beta)) best = j;
        }
        return static_cast<std::size_t>(best);
    });
}

} // namespace raag
