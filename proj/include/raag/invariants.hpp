#pragma once

#include <cstddef>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

#include "raag/cube.hpp"
#include "raag/errors.hpp"
#include "raag/gates.hpp"

namespace raag {

using HyperplaneSeq = std::vector<Hyperplane>;

// Orbit invariant of a finite hyperplane sequence h_1..h_k.
struct ClassifyingInvariant {
    std::vector<VertexId> labels;     // v_1..v_k
    std::vector<GroupElement> s;      // s_1..s_{k-1}
    std::vector<GroupElement> t;      // t_2..t_{k-1}
    StandardCoset terminal;           // innermost nested domain, never empty

    // Equality of the orbit-invariant part (labels, s, t); the terminal
    // coset moves with the action.
    bool same_orbit_data(const ClassifyingInvariant& o) const {
        return labels == o.labels && s == o.s && t == o.t;
    }
};

Hyperplane act(const GroupElement& g, const Hyperplane& h);
HyperplaneSeq act(const GroupElement& g, const HyperplaneSeq& seq);

ClassifyingInvariant classifying_invariant(const HyperplaneSeq& seq);

// Some g with g seq1 = seq2 (always verified), or nullopt if none exists.
// DomainError on length mismatch or empty sequences.
std::optional<GroupElement> decide_orbit_equiv(const HyperplaneSeq& seq1, const HyperplaneSeq& seq2);

// Eventually periodic sequence: preperiod followed by period repeated.
template <class T>
struct PeriodicSeq {
    std::vector<T> preperiod;
    std::vector<T> period;

    PeriodicSeq(std::vector<T> pre, std::vector<T> per) : preperiod(std::move(pre)), period(std::move(per)) {
        if (period.empty()) throw DomainError("eventually periodic sequence needs a nonempty period");
    }

    const T& at(std::size_t i) const {
        if (i < preperiod.size()) return preperiod[i];
        return period[(i - preperiod.size()) % period.size()];
    }
};

// Least (n, m) in lexicographic order with u[n+i] = w[m+i] for all i, or
// nullopt.
template <class T>
std::optional<std::pair<std::size_t, std::size_t>> tail_equivalent(const PeriodicSeq<T>& u,
                                                                   const PeriodicSeq<T>& w) {
    // A witness with n >= |pre|+|per| can be shifted back by one period of u
    // (same for m), so the least witness lies below these bounds.
    const std::size_t n_max = u.preperiod.size() + u.period.size();
    const std::size_t m_max = w.preperiod.size() + w.period.size();
    const std::size_t cycle = std::lcm(u.period.size(), w.period.size());
    for (std::size_t n = 0; n < n_max; ++n) {
        for (std::size_t m = 0; m < m_max; ++m) {
            // Past both preperiods the pair sequence repeats with period
            // lcm(|per_u|, |per_w|).
            std::size_t lead = std::max(u.preperiod.size() > n ? u.preperiod.size() - n : 0,
                                        w.preperiod.size() > m ? w.preperiod.size() - m : 0);
            bool ok = true;
            for (std::size_t i = 0; i < lead + cycle && ok; ++i) ok = u.at(n + i) == w.at(m + i);
            if (ok) return std::pair{n, m};
        }
    }
    return std::nullopt;
}

using HyperplanePeriodicSeq = PeriodicSeq<Hyperplane>;

HyperplanePeriodicSeq act(const GroupElement& g, const HyperplanePeriodicSeq& seq);

struct FnVerdict {
    enum class Kind { Witness, NoneWithinRadius };
    Kind kind = Kind::NoneWithinRadius;
    std::optional<GroupElement> witness;
    std::size_t radius = 0;
    bool label_obstruction = false;  // labels alone rule out every g
};

// Searches g with |g| <= radius and g alpha_i tail-equivalent to beta_i for
// every i.  The first witness in ball order is returned.
FnVerdict decide_Fn(const std::vector<HyperplanePeriodicSeq>& alpha,
                    const std::vector<HyperplanePeriodicSeq>& beta, std::size_t radius);
// Serial reference for the OpenMP search above.
FnVerdict decide_Fn_serial(const std::vector<HyperplanePeriodicSeq>& alpha,
                           const std::vector<HyperplanePeriodicSeq>& beta, std::size_t radius);

} // namespace raag
