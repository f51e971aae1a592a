#include "chromatica/tableaux.hpp"

#include "chromatica/errors.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace chromatica {

int PTableau::row_of(int value) const {
    for (size_t r = 0; r < rows.size(); ++r)
        for (int v : rows[r])
            if (v == value)
                return static_cast<int>(r);
    return -1;
}

std::string PTableau::to_string() const {
    std::string s = "[";
    for (size_t r = 0; r < rows.size(); ++r) {
        if (r)
            s += " | ";
        for (size_t c = 0; c < rows[r].size(); ++c) {
            if (c)
                s += ',';
            s += std::to_string(rows[r][c]);
        }
    }
    return s + "]";
}

bool PTableau::operator<(const PTableau& o) const {
    std::vector<int> a, b;
    for (const auto& r : rows)
        a.insert(a.end(), r.begin(), r.end());
    for (const auto& r : o.rows)
        b.insert(b.end(), r.begin(), r.end());
    return a < b;
}

bool is_valid_ptableau(const PTableau& t) {
    int n = t.seq.n();
    if (t.shape.sum() != n || static_cast<int>(t.rows.size()) != t.shape.length())
        return false;
    std::vector<char> seen(static_cast<size_t>(n) + 1, 0);
    for (int r = 0; r < t.shape.length(); ++r) {
        if (static_cast<int>(t.rows[static_cast<size_t>(r)].size()) != t.shape.part(r))
            return false;
        for (int v : t.rows[static_cast<size_t>(r)]) {
            if (v < 1 || v > n || seen[static_cast<size_t>(v)])
                return false;
            seen[static_cast<size_t>(v)] = 1;
        }
    }
    for (int r = 0; r < t.shape.length(); ++r) {
        const auto& row = t.rows[static_cast<size_t>(r)];
        for (size_t c = 1; c < row.size(); ++c)
            if (!t.seq.less_p(row[c - 1], row[c]))
                return false; // rows must be strict chains
        if (r > 0) {
            const auto& above = t.rows[static_cast<size_t>(r) - 1];
            for (size_t c = 0; c < row.size(); ++c)
                if (t.seq.less_p(row[c], above[c]))
                    return false; // column must not strictly decrease downward
        }
    }
    return true;
}

int inv_weight(const PTableau& t) {
    int n = t.seq.n();
    std::vector<int> row_of(static_cast<size_t>(n) + 1, -1);
    for (size_t r = 0; r < t.rows.size(); ++r)
        for (int v : t.rows[r])
            row_of[static_cast<size_t>(v)] = static_cast<int>(r);
    int inv = 0;
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b)
            if (t.seq.incomparable(a, b) &&
                row_of[static_cast<size_t>(b)] < row_of[static_cast<size_t>(a)])
                ++inv;
    return inv;
}

namespace {

void check_cap(const IntervalSeq& seq, const TableauxCaps& caps, const char* who) {
    if (seq.n() > caps.max_n)
        throw unsupported_size_error(std::string(who) + ": ground set has " +
                                     std::to_string(seq.n()) + " elements, cap is " +
                                     std::to_string(caps.max_n));
}

// Row-major backtracking fill. fn returns false to stop the enumeration.
void enumerate_impl(const IntervalSeq& seq, const Partition& shape,
                    const std::function<bool(const PTableau&)>& fn) {
    int n = seq.n();
    if (shape.sum() != n)
        throw std::invalid_argument("enumerate_tableaux: shape must sum to n");
    std::vector<std::vector<int>> rows(static_cast<size_t>(shape.length()));
    for (int r = 0; r < shape.length(); ++r)
        rows[static_cast<size_t>(r)].assign(static_cast<size_t>(shape.part(r)), 0);
    std::uint64_t used = 0;
    bool keep_going = true;
    std::function<void(int, int)> fill = [&](int r, int c) {
        if (!keep_going)
            return;
        if (r == shape.length()) {
            PTableau t{seq, shape, rows};
            if (!fn(t))
                keep_going = false;
            return;
        }
        int nr = r, nc = c + 1;
        if (nc == shape.part(r)) {
            nr = r + 1;
            nc = 0;
        }
        bool more_in_row = c + 1 < shape.part(r);
        for (int x = 1; x <= n && keep_going; ++x) {
            if ((used >> x) & 1u)
                continue;
            if (c > 0) {
                int left = rows[static_cast<size_t>(r)][static_cast<size_t>(c) - 1];
                if (!seq.less_p(left, x))
                    continue;
            }
            if (r > 0) {
                int above = rows[static_cast<size_t>(r) - 1][static_cast<size_t>(c)];
                if (seq.less_p(x, above))
                    continue;
            }
            if (more_in_row) {
                // the row chain must still be extendable by an unused element
                std::uint64_t beyond = x > 63 ? 0 : ~((2ull << seq.m(x)) - 1);
                std::uint64_t candidates = ~used & beyond & ((2ull << n) - 1);
                if (!candidates)
                    continue;
            }
            used |= 1ull << x;
            rows[static_cast<size_t>(r)][static_cast<size_t>(c)] = x;
            fill(nr, nc);
            rows[static_cast<size_t>(r)][static_cast<size_t>(c)] = 0;
            used &= ~(1ull << x);
        }
    };
    fill(0, 0);
}

} // namespace

std::vector<PTableau> enumerate_tableaux(const IntervalSeq& seq, const Partition& shape,
                                         const TableauxCaps& caps) {
    check_cap(seq, caps, "enumerate_tableaux");
    std::vector<PTableau> out;
    enumerate_impl(seq, shape, [&](const PTableau& t) {
        out.push_back(t);
        return true;
    });
    return out;
}

std::vector<Partition> allowed_shapes(const IntervalSeq& seq, const TableauxCaps& caps) {
    check_cap(seq, caps, "allowed_shapes");
    std::vector<Partition> out;
    for (const auto& shape : partitions_of(seq.n())) {
        bool any = false;
        enumerate_impl(seq, shape, [&](const PTableau&) {
            any = true;
            return false;
        });
        if (any)
            out.push_back(shape);
    }
    return out;
}

SymFunc qcsf_tableaux(const IntervalSeq& seq, const TableauxCaps& caps) {
    check_cap(seq, caps, "qcsf_tableaux");
    SymFunc out(Basis::S, seq.n());
    int top = seq.edge_pair_count();
    for (const auto& shape : partitions_of(seq.n())) {
        std::vector<Integer> counts(static_cast<size_t>(top) + 1, Integer(0));
        bool any = false;
        enumerate_impl(seq, shape, [&](const PTableau& t) {
            counts[static_cast<size_t>(inv_weight(t))] += 1;
            any = true;
            return true;
        });
        if (!any)
            continue;
        std::vector<Rational> coeffs;
        coeffs.reserve(counts.size());
        for (const auto& k : counts)
            coeffs.emplace_back(k);
        out.add_term(shape, TPoly(std::move(coeffs)));
    }
    return out;
}

std::map<Partition, TPoly, DescLex> e_coefficients(const IntervalSeq& seq,
                                                   const TableauxCaps& caps) {
    SymFunc e_form = qcsf_tableaux(seq, caps).convert(Basis::E);
    std::map<Partition, TPoly, DescLex> out;
    for (const auto& [lam, c] : e_form.terms())
        out.emplace(lam, c);
    return out;
}

bool palindromic(const IntervalSeq& seq, const TableauxCaps& caps) {
    SymFunc s = qcsf_tableaux(seq, caps);
    int edges = seq.edge_pair_count();
    for (const auto& [lam, c] : s.terms())
        if (!c.palindromic_about(edges))
            return false;
    return true;
}

bool unimodal(const IntervalSeq& seq, const TableauxCaps& caps) {
    SymFunc s = qcsf_tableaux(seq, caps);
    int edges = seq.edge_pair_count();
    int limit = edges >= 1 ? (edges - 1) / 2 : -1;
    for (const auto& [lam, c] : s.terms())
        if (!c.nondecreasing_up_to(limit))
            return false;
    return true;
}

// ---------------------------------------------------------------------------
// Injections

namespace {

bool is_horseshoe_crab_seq(const IntervalSeq& seq) {
    int n = seq.n();
    if (n < 4 || seq.m(1) != 2)
        return false;
    for (int i = 4; i < n; ++i)
        if (seq.m(i) != n)
            return false;
    return true;
}

void require_crab(const PTableau& t, const char* who) {
    if (!is_horseshoe_crab_seq(t.seq))
        throw std::invalid_argument(std::string(who) +
                                    ": tableau is not over a horseshoe crab sequence");
}

} // namespace

Partition eta_source_shape(int n) {
    std::vector<int> parts = {3, 2};
    for (int i = 0; i < n - 5; ++i)
        parts.push_back(1);
    return Partition(std::move(parts));
}

Partition eta_target_shape(int n) {
    std::vector<int> parts = {3};
    for (int i = 0; i < n - 3; ++i)
        parts.push_back(1);
    return Partition(std::move(parts));
}

Partition psi_target_shape(int n) {
    std::vector<int> parts = {2, 2, 2};
    for (int i = 0; i < n - 6; ++i)
        parts.push_back(1);
    return Partition(std::move(parts));
}

Partition xi_target_shape(int n) {
    std::vector<int> parts = {2, 2};
    for (int i = 0; i < n - 4; ++i)
        parts.push_back(1);
    return Partition(std::move(parts));
}

Partition xi_source_a_shape(int n) { return psi_target_shape(n); }
Partition xi_source_b_shape(int n) { return eta_target_shape(n); }

PTableau injection_eta(const PTableau& t) {
    require_crab(t, "injection_eta");
    int n = t.seq.n();
    if (n < 5 || t.shape != eta_source_shape(n))
        throw std::invalid_argument("injection_eta: source must have shape (3,2,1^{n-5})");
    // (1,3,a13),(2,a22),rest -> (1,3,a13),(2),(a22),rest
    std::vector<std::vector<int>> rows;
    rows.push_back(t.rows[0]);
    rows.push_back({t.rows[1][0]});
    rows.push_back({t.rows[1][1]});
    for (size_t r = 2; r < t.rows.size(); ++r)
        rows.push_back(t.rows[r]);
    return PTableau{t.seq, eta_target_shape(n), std::move(rows)};
}

PTableau injection_psi(const PTableau& t) {
    require_crab(t, "injection_psi");
    int n = t.seq.n();
    if (n < 6 || t.shape != eta_source_shape(n))
        throw std::invalid_argument(
            "injection_psi: source must have shape (3,2,1^{n-5}) with n >= 6");
    // (1,3,a13),(2,a22),(a31),rest -> (3,a13),(2,a22),(1,a31),rest
    std::vector<std::vector<int>> rows;
    rows.push_back({t.rows[0][1], t.rows[0][2]});
    rows.push_back(t.rows[1]);
    rows.push_back({t.rows[0][0], t.rows[2][0]});
    for (size_t r = 3; r < t.rows.size(); ++r)
        rows.push_back(t.rows[r]);
    return PTableau{t.seq, psi_target_shape(n), std::move(rows)};
}

std::string xi_branch(const PTableau& t) {
    int n = t.seq.n();
    if (t.shape == xi_source_a_shape(n))
        return "A";
    if (t.shape != xi_source_b_shape(n))
        throw std::invalid_argument("xi_branch: not a xi source shape");
    int a21 = t.rows[1][0];
    if (a21 == 2)
        return "B4";
    if (t.rows.size() > 2 && t.rows[2][0] == 2)
        return "B3";
    // 3 <_P a21 iff m_3 < a21
    return t.seq.less_p(3, a21) ? "B2" : "B1";
}

PTableau injection_xi(const PTableau& t) {
    require_crab(t, "injection_xi");
    int n = t.seq.n();
    // connectivity (2 and 3 incomparable with their successors) underpins
    // the case analysis
    if (t.seq.m(2) < 3 || t.seq.m(3) < 4)
        throw std::invalid_argument("injection_xi: graph must be connected (m2 >= 3, m3 >= 4)");
    std::string branch = xi_branch(t);
    std::vector<std::vector<int>> rows;
    if (branch == "A") {
        // move a_{3,2} to its own row directly above a_{4,1}
        rows.push_back(t.rows[0]);
        rows.push_back(t.rows[1]);
        rows.push_back({t.rows[2][0]});
        rows.push_back({t.rows[2][1]});
        for (size_t r = 3; r < t.rows.size(); ++r)
            rows.push_back(t.rows[r]);
        return PTableau{t.seq, xi_target_shape(n), std::move(rows)};
    }
    int a13 = t.rows[0][2];
    int a21 = t.rows[1][0];
    if (branch == "B4") {
        // (1,3,a13),(2),rest -> (2,a13),(1,3),rest
        rows.push_back({2, a13});
        rows.push_back({t.rows[0][0], t.rows[0][1]});
        for (size_t r = 2; r < t.rows.size(); ++r)
            rows.push_back(t.rows[r]);
    } else if (branch == "B3") {
        // (1,3,a13),(a21),(2),rest -> (1,3),(2,a13),(a21),rest
        rows.push_back({t.rows[0][0], t.rows[0][1]});
        rows.push_back({2, a13});
        rows.push_back({a21});
        for (size_t r = 3; r < t.rows.size(); ++r)
            rows.push_back(t.rows[r]);
    } else if (branch == "B1") {
        // 3 incomparable with a21: (1,3,a13),(a21),rest -> (1,a21),(3,a13),rest
        rows.push_back({t.rows[0][0], a21});
        rows.push_back({t.rows[0][1], a13});
        for (size_t r = 2; r < t.rows.size(); ++r)
            rows.push_back(t.rows[r]);
    } else if (branch == "B2") {
        // 3 <_P a21: (1,3,a13),(a21),rest -> (1,a13),(3,a21),rest
        rows.push_back({t.rows[0][0], a13});
        rows.push_back({t.rows[0][1], a21});
        for (size_t r = 2; r < t.rows.size(); ++r)
            rows.push_back(t.rows[r]);
    } else {
        throw incomplete_case_error("injection_xi: no case matched tableau " + t.to_string());
    }
    return PTableau{t.seq, xi_target_shape(n), std::move(rows)};
}

// ---------------------------------------------------------------------------
// Verification

namespace {

std::map<int, int> weight_histogram(const std::vector<PTableau>& ts) {
    std::map<int, int> h;
    for (const auto& t : ts)
        ++h[inv_weight(t)];
    return h;
}

} // namespace

InjectionReport verify_injection(const IntervalSeq& seq, const std::string& map_name,
                                 const TableauxCaps& caps) {
    check_cap(seq, caps, "verify_injection");
    if (!is_horseshoe_crab_seq(seq))
        throw std::invalid_argument("verify_injection: sequence is not a horseshoe crab");
    int n = seq.n();
    InjectionReport report(map_name, seq);

    std::vector<std::pair<PTableau, std::string>> sources; // tableau, branch tag
    std::function<PTableau(const PTableau&)> apply;
    Partition target_shape = xi_target_shape(n);
    if ((map_name == "eta" && n < 5) || (map_name == "psi" && n < 6) ||
        (map_name == "xi" && n < 4))
        throw std::invalid_argument("verify_injection: ground set too small for map '" +
                                    map_name + "'");
    if (map_name == "eta") {
        report.expected_shift = 0;
        target_shape = eta_target_shape(n);
        for (auto& t : enumerate_tableaux(seq, eta_source_shape(n), caps))
            sources.emplace_back(std::move(t), "");
        apply = injection_eta;
    } else if (map_name == "psi") {
        report.expected_shift = 1;
        target_shape = psi_target_shape(n);
        for (auto& t : enumerate_tableaux(seq, eta_source_shape(n), caps))
            sources.emplace_back(std::move(t), "");
        apply = injection_psi;
    } else if (map_name == "xi") {
        report.expected_shift = 0;
        target_shape = xi_target_shape(n);
        if (n >= 6)
            for (auto& t : enumerate_tableaux(seq, xi_source_a_shape(n), caps))
                sources.emplace_back(std::move(t), "A");
        for (auto& t : enumerate_tableaux(seq, xi_source_b_shape(n), caps)) {
            std::string b = xi_branch(t);
            sources.emplace_back(std::move(t), b);
        }
        apply = injection_xi;
    } else {
        throw std::invalid_argument("verify_injection: unknown map '" + map_name + "'");
    }

    report.source_count = static_cast<int>(sources.size());
    std::map<std::string, std::pair<std::string, std::string>> images; // key -> (src, branch)
    std::map<int, int> image_weights;
    constexpr size_t kMaxListed = 5;
    for (const auto& [src, branch] : sources) {
        PTableau img{seq, Partition(), {}};
        try {
            img = apply(src);
        } catch (const std::exception& e) {
            report.total = false;
            if (report.validity_violations.size() < kMaxListed)
                report.validity_violations.push_back(src.to_string() + " raised: " + e.what());
            continue;
        }
        if (img.shape != target_shape || !is_valid_ptableau(img)) {
            report.targets_valid = false;
            if (report.validity_violations.size() < kMaxListed)
                report.validity_violations.push_back(src.to_string() + " -> " +
                                                     img.to_string() + " (invalid target)");
        }
        int ws = inv_weight(src), wi = inv_weight(img);
        if (wi - ws != report.expected_shift) {
            report.weight_ok = false;
            if (report.weight_violations.size() < kMaxListed)
                report.weight_violations.push_back(
                    {src.to_string(), img.to_string(), ws, wi});
        }
        std::string key = img.to_string();
        auto [it, inserted] = images.emplace(key, std::make_pair(src.to_string(), branch));
        if (!inserted) {
            report.injective = false;
            if (it->second.second != branch)
                report.branch_disjoint = false;
            if (report.collision_pairs.size() < kMaxListed)
                report.collision_pairs.push_back(it->second.first + " and " +
                                                 src.to_string() + " -> " + key);
        }
        ++image_weights[wi];
    }

    // Counting consequence: sources at weight w fit inside targets at w+shift.
    auto targets = enumerate_tableaux(seq, target_shape, caps);
    auto target_hist = weight_histogram(targets);
    std::map<int, int> source_hist;
    for (const auto& [src, branch] : sources)
        ++source_hist[inv_weight(src)];
    for (const auto& [w, cnt] : source_hist) {
        auto it = target_hist.find(w + report.expected_shift);
        int have = it == target_hist.end() ? 0 : it->second;
        if (cnt > have) {
            report.counting_ok = false;
            report.detail += "weight " + std::to_string(w) + ": " + std::to_string(cnt) +
                             " sources vs " + std::to_string(have) + " targets at weight " +
                             std::to_string(w + report.expected_shift) + "; ";
        }
    }
    return report;
}

InjectionReport verify_counting_dominance(const IntervalSeq& seq, const TableauxCaps& caps) {
    check_cap(seq, caps, "verify_counting_dominance");
    if (!is_horseshoe_crab_seq(seq))
        throw std::invalid_argument(
            "verify_counting_dominance: sequence is not a horseshoe crab");
    int n = seq.n();
    InjectionReport report("counting", seq);
    struct Case {
        std::vector<Partition> sources;
        Partition target;
        const char* label;
    };
    std::vector<Case> cases;
    if (n >= 6)
        cases.push_back({{xi_source_a_shape(n), xi_source_b_shape(n)},
                         xi_target_shape(n),
                         "S(2^2,1*) >= S(2^3,1*) + S(3,1*)"});
    if (n >= 5)
        cases.push_back({{eta_source_shape(n)}, eta_target_shape(n),
                         "S(3,1*) >= S(3,2,1*)"});
    if (n >= 6)
        cases.push_back({{eta_source_shape(n)}, psi_target_shape(n),
                         "S(2^3,1*) >= S(3,2,1*)"});
    for (const auto& c : cases) {
        std::map<int, int> src_hist;
        for (const auto& shape : c.sources) {
            auto ts = enumerate_tableaux(seq, shape, caps);
            for (const auto& t : ts)
                ++src_hist[inv_weight(t)];
            report.source_count += static_cast<int>(ts.size());
        }
        auto tgt_hist = weight_histogram(enumerate_tableaux(seq, c.target, caps));
        for (const auto& [w, cnt] : src_hist) {
            auto it = tgt_hist.find(w);
            int have = it == tgt_hist.end() ? 0 : it->second;
            if (cnt > have) {
                report.counting_ok = false;
                report.detail += std::string(c.label) + " fails at weight " +
                                 std::to_string(w) + " (" + std::to_string(cnt) + " vs " +
                                 std::to_string(have) + "); ";
            }
        }
    }
    return report;
}

} // namespace chromatica
