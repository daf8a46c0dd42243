#include "lathom/poset.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace lathom {

int Poset::index_of(const std::string& label) const {
    auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
    if (it == labels_.end() || *it != label) return -1;
    return static_cast<int>(it - labels_.begin());
}

Poset Poset::from_leq(std::vector<std::string> labels, std::vector<Bitset> leq) {
    const int n = static_cast<int>(labels.size());
    if (static_cast<int>(leq.size()) != n)
        throw PosetError("from_leq: relation size does not match label count");
    for (const auto& row : leq)
        if (static_cast<int>(row.size()) != n)
            throw PosetError("from_leq: ragged relation");

    // Sort labels, remap the relation accordingly.
    std::vector<int> perm(n);  // perm[new] = old
    std::iota(perm.begin(), perm.end(), 0);
    std::sort(perm.begin(), perm.end(),
              [&](int a, int b) { return labels[a] < labels[b]; });
    Poset p;
    p.labels_.resize(n);
    for (int i = 0; i < n; ++i) p.labels_[i] = labels[perm[i]];
    for (int i = 0; i + 1 < n; ++i)
        if (p.labels_[i] == p.labels_[i + 1])
            throw PosetError("from_leq: duplicate label '" + p.labels_[i] + "'");
    p.leq_.assign(n, Bitset(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (leq[perm[i]][perm[j]]) p.leq_[i][j] = true;
    p.finalize();
    return p;
}

Poset Poset::from_covers(std::vector<std::string> labels,
                         const std::vector<std::pair<int, int>>& covers) {
    const int n = static_cast<int>(labels.size());
    std::vector<Bitset> leq(n, Bitset(n));
    for (int i = 0; i < n; ++i) leq[i][i] = true;
    for (auto [a, b] : covers) {
        if (a < 0 || b < 0 || a >= n || b >= n || a == b)
            throw PosetError("from_covers: bad cover pair");
        leq[a][b] = true;
    }
    // Reflexive-transitive closure (repeated squaring is overkill here).
    bool changed = true;
    while (changed) {
        changed = false;
        for (int i = 0; i < n; ++i) {
            Bitset acc = leq[i];
            for (int j = 0; j < n; ++j)
                if (leq[i][j]) acc |= leq[j];
            if (acc != leq[i]) {
                leq[i] = std::move(acc);
                changed = true;
            }
        }
    }
    return from_leq(std::move(labels), std::move(leq));
}

Poset Poset::antichain(std::vector<std::string> labels) {
    const int n = static_cast<int>(labels.size());
    std::vector<Bitset> leq(n, Bitset(n));
    for (int i = 0; i < n; ++i) leq[i][i] = true;
    return from_leq(std::move(labels), std::move(leq));
}

Poset Poset::chain(int k) {
    std::vector<std::string> labels;
    std::vector<Bitset> leq(k, Bitset(k));
    for (int i = 0; i < k; ++i) {
        labels.push_back("c" + std::to_string(i + 1));
        for (int j = i; j < k; ++j) leq[i][j] = true;
    }
    if (k > 9)
        throw PosetError("chain: label scheme only sorts correctly up to 9");
    return from_leq(std::move(labels), std::move(leq));
}

Poset Poset::boolean_lattice(int m) {
    const int n = 1 << m;
    std::vector<std::string> labels(n);
    for (int mask = 0; mask < n; ++mask) {
        std::string s = "{";
        for (int b = 0; b < m; ++b)
            if (mask & (1 << b)) {
                if (s.size() > 1) s += ",";
                s += std::to_string(b + 1);
            }
        s += "}";
        labels[mask] = s;
    }
    std::vector<Bitset> leq(n, Bitset(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if ((a & b) == a) leq[a][b] = true;
    return from_leq(std::move(labels), std::move(leq));
}

void Poset::finalize() {
    const int n = size();
    // Axioms.
    for (int i = 0; i < n; ++i)
        if (!leq_[i][i]) throw PosetError("order not reflexive");
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i != j && leq_[i][j] && leq_[j][i])
                throw PosetError("order not antisymmetric");
            if (leq_[i][j] && !leq_[j].is_subset_of(leq_[i]))
                throw PosetError("order not transitive");
        }

    // Covers: i < j with nothing strictly between.
    Bitset empty(n);
    std::vector<Bitset> geq(n, Bitset(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (leq_[i][j]) geq[j][i] = true;
    covers_.clear();
    up_.assign(n, {});
    down_.assign(n, {});
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (!less(i, j)) continue;
            Bitset between = leq_[i] & geq[j];
            between[i] = false;
            between[j] = false;
            if (between.none()) {
                covers_.push_back({i, j});
                up_[i].push_back(j);
                down_[j].push_back(i);
            }
        }
    }

    // Heights along a linear extension (sort by number of elements below:
    // i < j implies strictly fewer elements below i).
    topo_.resize(n);
    std::iota(topo_.begin(), topo_.end(), 0);
    std::vector<int> below(n);
    for (int j = 0; j < n; ++j) below[j] = static_cast<int>(geq[j].count()) - 1;
    std::sort(topo_.begin(), topo_.end(), [&](int a, int b) {
        if (below[a] != below[b]) return below[a] < below[b];
        return a < b;
    });
    height_.assign(n, 0);
    for (int x : topo_)
        for (int d : down_[x]) height_[x] = std::max(height_[x], height_[d] + 1);
    graded_ = true;
    for (auto [a, b] : covers_)
        if (height_[b] != height_[a] + 1) graded_ = false;
}

std::vector<int> Poset::minimal_elements() const {
    std::vector<int> out;
    for (int i = 0; i < size(); ++i)
        if (down_[i].empty()) out.push_back(i);
    return out;
}

std::vector<int> Poset::maximal_elements() const {
    std::vector<int> out;
    for (int i = 0; i < size(); ++i)
        if (up_[i].empty()) out.push_back(i);
    return out;
}

Poset Poset::induced(std::vector<int> members) const {
    std::sort(members.begin(), members.end());
    if (std::adjacent_find(members.begin(), members.end()) != members.end())
        throw PosetError("induced: duplicate member");
    const int m = static_cast<int>(members.size());
    std::vector<std::string> labels(m);
    std::vector<Bitset> leq(m, Bitset(m));
    for (int i = 0; i < m; ++i) {
        if (members[i] < 0 || members[i] >= size())
            throw PosetError("induced: member out of range");
        labels[i] = labels_[members[i]];
        for (int j = 0; j < m; ++j)
            if (leq_[members[i]][members[j]]) leq[i][j] = true;
    }
    return from_leq(std::move(labels), std::move(leq));
}

std::vector<PosetChain> Poset::maximal_chains() const {
    std::vector<PosetChain> out;
    std::vector<int> cur;
    auto dfs = [&](auto&& self, int x) -> void {
        cur.push_back(x);
        if (up_[x].empty()) {
            out.push_back(PosetChain{cur});
        } else {
            for (int y : up_[x]) self(self, y);
        }
        cur.pop_back();
    };
    for (int m : minimal_elements()) dfs(dfs, m);
    return out;  // minimals and covers are ascending, so output is lex-sorted
}

BoundedPoset BoundedPoset::wrap(Poset p) {
    auto mins = p.minimal_elements();
    auto maxs = p.maximal_elements();
    if (p.size() == 0 || mins.size() != 1 || maxs.size() != 1)
        throw PosetError("wrap: poset does not have unique bounds");
    BoundedPoset b;
    b.bottom_ = mins[0];
    b.top_ = maxs[0];
    const int n = p.size();
    b.mu0_.assign(n, 0);
    b.mu0_[b.bottom_] = 1;
    for (int x : p.topo_order()) {
        if (x == b.bottom_) continue;
        Int acc = 0;
        for (int z = 0; z < n; ++z)
            if (z != x && p.leq(z, x)) acc += b.mu0_[z];
        b.mu0_[x] = -acc;
    }
    b.p_ = std::move(p);
    return b;
}

BoundedPoset adjoin_bounds(const Poset& p) {
    const int n = p.size();
    std::vector<std::string> labels = p.labels();
    labels.push_back("!bot");
    labels.push_back("~top");
    for (int i = 0; i < n; ++i)
        if (p.labels()[i] == "!bot" || p.labels()[i] == "~top")
            throw PosetError("adjoin_bounds: reserved label in use");
    std::vector<Bitset> leq(n + 2, Bitset(n + 2));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (p.leq(i, j)) leq[i][j] = true;
    const int bot = n, top = n + 1;
    for (int i = 0; i < n + 2; ++i) {
        leq[i][i] = true;
        leq[bot][i] = true;
        leq[i][top] = true;
    }
    return BoundedPoset::wrap(Poset::from_leq(std::move(labels), std::move(leq)));
}

Poset proper_part(const BoundedPoset& p) {
    if (p.bottom() == p.top())
        throw PosetError("proper_part: bottom equals top");
    std::vector<int> members;
    for (int i = 0; i < p.poset().size(); ++i)
        if (i != p.bottom() && i != p.top()) members.push_back(i);
    return p.poset().induced(members);
}

Int moebius(const BoundedPoset& p, int x, int y) {
    const Poset& q = p.poset();
    if (x < 0 || y < 0 || x >= q.size() || y >= q.size() || !q.leq(x, y))
        throw PosetError("moebius: x <= y required");
    if (x == p.bottom()) return p.moebius_from_bottom(y);
    std::vector<Int> mu(q.size(), 0);
    mu[x] = 1;
    for (int z : q.topo_order()) {
        if (z == x || !(q.leq(x, z) && q.leq(z, y))) continue;
        Int acc = 0;
        for (int w = 0; w < q.size(); ++w)
            if (w != z && q.leq(x, w) && q.leq(w, z)) acc += mu[w];
        mu[z] = -acc;
    }
    return mu[y];
}

Poset closed_interval(const Poset& p, int x, int y) {
    if (x < 0 || y < 0 || x >= p.size() || y >= p.size() || !p.leq(x, y))
        throw PosetError("closed_interval: x <= y required");
    std::vector<int> members;
    for (int z = 0; z < p.size(); ++z)
        if (p.leq(x, z) && p.leq(z, y)) members.push_back(z);
    return p.induced(members);
}

namespace {

// Iterated refinement: colour elements by (height, up-degree, down-degree),
// then repeatedly by the multisets of neighbour colours, until stable.
std::vector<int> refine_colors(const Poset& p) {
    const int n = p.size();
    std::vector<int> color(n);
    {
        std::map<std::tuple<int, int, int>, int> cls;
        for (int i = 0; i < n; ++i) {
            auto key = std::make_tuple(p.heights()[i],
                                       static_cast<int>(p.upper_covers(i).size()),
                                       static_cast<int>(p.lower_covers(i).size()));
            auto [it, _] = cls.emplace(key, static_cast<int>(cls.size()));
            color[i] = it->second;
        }
    }
    // Each round refines the partition (the previous colour is part of the
    // key); once the class count stops growing the partition is stable.
    std::size_t num_classes = 0;
    for (int c : color) num_classes = std::max<std::size_t>(num_classes, c + 1);
    for (;;) {
        std::map<std::vector<int>, int> cls;
        std::vector<int> next(n);
        for (int i = 0; i < n; ++i) {
            std::vector<int> key;
            key.push_back(color[i]);
            std::vector<int> ups, downs;
            for (int j : p.upper_covers(i)) ups.push_back(color[j]);
            for (int j : p.lower_covers(i)) downs.push_back(color[j]);
            std::sort(ups.begin(), ups.end());
            std::sort(downs.begin(), downs.end());
            key.push_back(-1);
            key.insert(key.end(), ups.begin(), ups.end());
            key.push_back(-2);
            key.insert(key.end(), downs.begin(), downs.end());
            auto [it, _] = cls.emplace(std::move(key), static_cast<int>(cls.size()));
            next[i] = it->second;
        }
        color = std::move(next);
        if (cls.size() == num_classes) break;
        num_classes = cls.size();
    }
    return color;
}

bool extend_isomorphism(const Poset& p, const Poset& q,
                        const std::vector<int>& cp, const std::vector<int>& cq,
                        const std::vector<int>& order, std::size_t pos,
                        std::vector<int>& map, std::vector<char>& used) {
    if (pos == order.size()) return true;
    int i = order[pos];
    for (int j = 0; j < q.size(); ++j) {
        if (used[j] || cq[j] != cp[i]) continue;
        bool ok = true;
        for (std::size_t k = 0; k < pos && ok; ++k) {
            int a = order[k];
            ok = (p.leq(i, a) == q.leq(j, map[a])) &&
                 (p.leq(a, i) == q.leq(map[a], j));
        }
        if (!ok) continue;
        map[i] = j;
        used[j] = 1;
        if (extend_isomorphism(p, q, cp, cq, order, pos + 1, map, used)) return true;
        used[j] = 0;
    }
    return false;
}

}  // namespace

std::optional<std::vector<int>> poset_isomorphism(const Poset& p, const Poset& q) {
    if (p.size() != q.size()) return std::nullopt;
    const int n = p.size();
    if (n == 0) return std::vector<int>{};

    // Colour both posets with a shared palette so classes are comparable.
    std::vector<int> cp = refine_colors(p), cq = refine_colors(q);
    // Re-key both colorings by canonical class signatures (class size +
    // representative invariants) so identical structure gets identical ids.
    auto signature = [](const Poset& r, const std::vector<int>& c) {
        std::map<int, std::vector<int>> members;
        for (int i = 0; i < r.size(); ++i) members[c[i]].push_back(i);
        // key per class: (size, height, updeg, downdeg) of representatives
        std::map<std::tuple<int, int, int, int>, std::vector<int>> classes;
        for (auto& [cid, mem] : members) {
            int i = mem[0];
            classes[{static_cast<int>(mem.size()), r.heights()[i],
                     static_cast<int>(r.upper_covers(i).size()),
                     static_cast<int>(r.lower_covers(i).size())}]
                .push_back(cid);
        }
        return classes;
    };
    auto sp = signature(p, cp), sq = signature(q, cq);
    if (sp.size() != sq.size()) return std::nullopt;
    std::map<int, int> relabel_p, relabel_q;
    {
        auto it1 = sp.begin();
        auto it2 = sq.begin();
        int next = 0;
        for (; it1 != sp.end(); ++it1, ++it2) {
            if (it1->first != it2->first ||
                it1->second.size() != it2->second.size())
                return std::nullopt;
            // Classes matching on coarse invariants are merged onto one id;
            // the backtracking below resolves any remaining ambiguity.
            for (int cid : it1->second) relabel_p[cid] = next;
            for (int cid : it2->second) relabel_q[cid] = next;
            ++next;
        }
        if (it2 != sq.end()) return std::nullopt;
    }
    for (int& c : cp) c = relabel_p[c];
    for (int& c : cq) c = relabel_q[c];

    // Most-constrained-first: rare colours first.
    std::map<int, int> freq;
    for (int c : cp) freq[c]++;
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (freq[cp[a]] != freq[cp[b]]) return freq[cp[a]] < freq[cp[b]];
        return a < b;
    });

    std::vector<int> map(n, -1);
    std::vector<char> used(n, 0);
    if (extend_isomorphism(p, q, cp, cq, order, 0, map, used)) return map;
    return std::nullopt;
}

}  // namespace lathom
