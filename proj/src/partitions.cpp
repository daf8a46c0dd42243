#include "lathom/partitions.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "lathom/errors.hpp"

namespace lathom {

std::string family_name(Family f) {
    switch (f) {
        case Family::A: return "A";
        case Family::B: return "B";
        case Family::D: return "D";
        case Family::DB: return "DB";
        case Family::AT: return "AT";
    }
    throw ParameterError("unknown family");
}

Family family_from_name(const std::string& name) {
    if (name == "A") return Family::A;
    if (name == "B") return Family::B;
    if (name == "D") return Family::D;
    if (name == "DB") return Family::DB;
    if (name == "AT") return Family::AT;
    throw ParameterError("unknown family '" + name + "'");
}

SetPartition SetPartition::singletons(int n) {
    SetPartition p;
    for (int v = 1; v <= n; ++v) p.blocks.push_back({v});
    return p;
}

SetPartition SetPartition::from_blocks(std::vector<std::vector<int>> blocks) {
    for (auto& b : blocks) {
        if (b.empty()) throw ParameterError("empty block");
        std::sort(b.begin(), b.end());
    }
    std::sort(blocks.begin(), blocks.end(),
              [](const auto& a, const auto& b) { return a[0] < b[0]; });
    SetPartition p{std::move(blocks)};
    // Validate: the blocks partition {1..n}.
    std::vector<int> seen;
    for (const auto& b : p.blocks) seen.insert(seen.end(), b.begin(), b.end());
    std::sort(seen.begin(), seen.end());
    for (int i = 0; i < static_cast<int>(seen.size()); ++i)
        if (seen[i] != i + 1)
            throw ParameterError("blocks do not partition {1..n}");
    return p;
}

SetPartition SetPartition::from_string(const std::string& text) {
    std::vector<std::vector<int>> blocks;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, '|')) {
        std::vector<int> block;
        std::stringstream ps(part);
        int v;
        while (ps >> v) block.push_back(v);
        if (!block.empty()) blocks.push_back(std::move(block));
    }
    return from_blocks(std::move(blocks));
}

int SetPartition::n() const {
    int total = 0;
    for (const auto& b : blocks) total += static_cast<int>(b.size());
    return total;
}

std::string SetPartition::to_string() const {
    std::string s;
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        if (i) s += " | ";
        for (std::size_t j = 0; j < blocks[i].size(); ++j) {
            if (j) s += " ";
            s += std::to_string(blocks[i][j]);
        }
    }
    return s;
}

SetPartition SetPartition::relabeled(const std::vector<int>& sigma) const {
    std::vector<std::vector<int>> out;
    for (const auto& b : blocks) {
        std::vector<int> nb;
        for (int v : b) nb.push_back(sigma[v - 1]);
        out.push_back(std::move(nb));
    }
    return from_blocks(std::move(out));
}

bool refines(const SetPartition& a, const SetPartition& b) {
    std::map<int, int> owner;
    for (std::size_t i = 0; i < b.blocks.size(); ++i)
        for (int v : b.blocks[i]) owner[v] = static_cast<int>(i);
    for (const auto& block : a.blocks) {
        int o = owner.at(block[0]);
        for (int v : block)
            if (owner.at(v) != o) return false;
    }
    return true;
}

std::vector<SetPartition> all_partitions(int n) {
    // Restricted growth strings.
    std::vector<SetPartition> out;
    std::vector<int> rgs(n, 0);
    auto emit = [&]() {
        int k = 0;
        for (int v : rgs) k = std::max(k, v + 1);
        std::vector<std::vector<int>> blocks(k);
        for (int i = 0; i < n; ++i) blocks[rgs[i]].push_back(i + 1);
        out.push_back(SetPartition::from_blocks(std::move(blocks)));
    };
    auto rec = [&](auto&& self, int i, int maxv) -> void {
        if (i == n) {
            emit();
            return;
        }
        for (int v = 0; v <= maxv + 1; ++v) {
            rgs[i] = v;
            self(self, i + 1, std::max(maxv, v));
        }
    };
    if (n == 0) return {SetPartition{}};
    rec(rec, 0, -1);
    return out;
}

SignedBlock bar_block(SignedBlock b) {
    for (auto& e : b) e.sign = -e.sign;
    return b;
}

SignedBlock unbar_block(SignedBlock b) {
    for (auto& e : b) e.sign = 1;
    return b;
}

SignedBlock canonicalize_block(SignedBlock b) {
    if (b.empty()) throw ParameterError("empty signed block");
    std::sort(b.begin(), b.end(),
              [](const SignedElement& x, const SignedElement& y) {
                  return x.value < y.value;
              });
    for (std::size_t i = 1; i < b.size(); ++i)
        if (b[i].value == b[i - 1].value)
            throw ParameterError("repeated value in signed block");
    if (b[0].sign < 0) b = bar_block(std::move(b));
    return b;
}

SignedPartition SignedPartition::all_zero(int n) {
    SignedPartition p;
    for (int v = 0; v <= n; ++v) p.zero_block.push_back(v);
    return p;
}

SignedPartition SignedPartition::discrete(int n) {
    SignedPartition p;
    p.zero_block = {0};
    for (int v = 1; v <= n; ++v) p.signed_blocks.push_back({SignedElement{v, 1}});
    return p;
}

int SignedPartition::n() const {
    int total = static_cast<int>(zero_block.size()) - 1;
    for (const auto& b : signed_blocks) total += static_cast<int>(b.size());
    return total;
}

std::string SignedPartition::to_string() const {
    std::string s;
    for (std::size_t j = 0; j < zero_block.size(); ++j) {
        if (j) s += " ";
        s += std::to_string(zero_block[j]);
    }
    for (const auto& b : signed_blocks) {
        s += " | ";
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (j) s += " ";
            s += std::to_string(b[j].value);
            if (b[j].sign < 0) s += "'";
        }
    }
    return s;
}

SignedPartition SignedPartition::from_string(const std::string& text) {
    SignedPartition p;
    std::stringstream ss(text);
    std::string part;
    bool saw_zero = false;
    while (std::getline(ss, part, '|')) {
        std::vector<SignedElement> items;
        std::stringstream ps(part);
        std::string tok;
        bool has_zero = false;
        while (ps >> tok) {
            int sign = 1;
            if (!tok.empty() && tok.back() == '\'') {
                sign = -1;
                tok.pop_back();
            }
            std::size_t pos = 0;
            int value = std::stoi(tok, &pos);
            if (pos != tok.size() || value < 0)
                throw ParameterError("malformed signed partition token '" + tok + "'");
            if (value == 0) {
                if (sign < 0) throw ParameterError("0 cannot be barred");
                has_zero = true;
            }
            items.push_back(SignedElement{value, sign});
        }
        if (items.empty()) continue;
        if (has_zero) {
            if (saw_zero) throw ParameterError("two zero blocks");
            saw_zero = true;
            for (const auto& e : items) {
                if (e.sign < 0)
                    throw ParameterError("barred value in zero block");
                p.zero_block.push_back(e.value);
            }
            std::sort(p.zero_block.begin(), p.zero_block.end());
        } else {
            p.signed_blocks.push_back(canonicalize_block(items));
        }
    }
    if (!saw_zero) throw ParameterError("missing zero block");
    std::sort(p.signed_blocks.begin(), p.signed_blocks.end(),
              [](const SignedBlock& a, const SignedBlock& b) {
                  return a[0].value < b[0].value;
              });
    // Validate ground set.
    std::vector<int> seen(p.zero_block.begin(), p.zero_block.end());
    for (const auto& b : p.signed_blocks)
        for (const auto& e : b) seen.push_back(e.value);
    std::sort(seen.begin(), seen.end());
    for (int i = 0; i < static_cast<int>(seen.size()); ++i)
        if (seen[i] != i)
            throw ParameterError("tokens do not partition {0..n}");
    return p;
}

SignedPartition SignedPartition::relabeled(const std::vector<int>& sigma) const {
    SignedPartition out;
    out.zero_block.push_back(0);
    for (int v : zero_block)
        if (v != 0) out.zero_block.push_back(sigma[v - 1]);
    std::sort(out.zero_block.begin(), out.zero_block.end());
    for (const auto& b : signed_blocks) {
        SignedBlock nb;
        for (const auto& e : b) nb.push_back(SignedElement{sigma[e.value - 1], e.sign});
        out.signed_blocks.push_back(canonicalize_block(std::move(nb)));
    }
    std::sort(out.signed_blocks.begin(), out.signed_blocks.end(),
              [](const SignedBlock& a, const SignedBlock& b) {
                  return a[0].value < b[0].value;
              });
    return out;
}

namespace {

// Is a contained in b, elementwise with signs?
bool signed_subset(const SignedBlock& a, const SignedBlock& b) {
    std::size_t i = 0;
    for (const auto& e : a) {
        while (i < b.size() && b[i].value < e.value) ++i;
        if (i == b.size() || b[i].value != e.value || b[i].sign != e.sign)
            return false;
    }
    return true;
}

bool subset_ints(const std::vector<int>& a, const std::vector<int>& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace

bool leq_signed(const SignedPartition& pi, const SignedPartition& tau) {
    if (!subset_ints(pi.zero_block, tau.zero_block)) return false;
    std::vector<int> tau_zero_values = tau.zero_block;
    for (const auto& b : pi.signed_blocks) {
        bool placed = false;
        for (const auto& c : tau.signed_blocks) {
            if (signed_subset(b, c) || signed_subset(bar_block(b), c)) {
                placed = true;
                break;
            }
        }
        if (!placed) {
            std::vector<int> values;
            for (const auto& e : b) values.push_back(e.value);
            placed = subset_ints(values, tau_zero_values);
        }
        if (!placed) return false;
    }
    return true;
}

std::vector<SignedPartition> all_signed_partitions(int n) {
    // Partition {0..n} into blocks, then put bars on the non-minimal
    // elements of each nonzero block in all ways (the least element of a
    // canonical signed block is plain).
    std::vector<SignedPartition> out;
    std::vector<int> rgs(n + 1, 0);  // over values 0..n, block of 0 is block 0
    auto emit = [&]() {
        int k = 0;
        for (int v : rgs) k = std::max(k, v + 1);
        std::vector<std::vector<int>> blocks(k);
        for (int v = 0; v <= n; ++v) blocks[rgs[v]].push_back(v);
        // blocks[0] contains 0; the rest are signed blocks.
        std::vector<int> sizes;
        for (std::size_t i = 1; i < blocks.size(); ++i)
            sizes.push_back(static_cast<int>(blocks[i].size()));
        std::vector<unsigned> pattern(sizes.size(), 0);
        for (;;) {
            SignedPartition p;
            p.zero_block = blocks[0];
            for (std::size_t i = 1; i < blocks.size(); ++i) {
                SignedBlock sb;
                for (std::size_t j = 0; j < blocks[i].size(); ++j) {
                    int sign = 1;
                    if (j > 0 && (pattern[i - 1] & (1u << (j - 1)))) sign = -1;
                    sb.push_back(SignedElement{blocks[i][j], sign});
                }
                p.signed_blocks.push_back(std::move(sb));  // already canonical
            }
            out.push_back(std::move(p));
            // Odometer over bar patterns.
            std::size_t i = 0;
            while (i < pattern.size()) {
                if (++pattern[i] < (1u << (sizes[i] - 1))) break;
                pattern[i] = 0;
                ++i;
            }
            if (i == pattern.size()) break;
        }
    };
    auto rec = [&](auto&& self, int v, int maxv) -> void {
        if (v == n + 1) {
            emit();
            return;
        }
        for (int b = 0; b <= maxv + 1; ++b) {
            rgs[v] = b;
            self(self, v + 1, std::max(maxv, b));
        }
    };
    rgs[0] = 0;
    rec(rec, 1, 0);
    return out;
}

namespace {

BoundedPoset poset_from_partitions(const std::vector<SetPartition>& parts) {
    std::vector<std::string> labels;
    labels.reserve(parts.size());
    for (const auto& p : parts) labels.push_back(p.to_string());
    const int n = static_cast<int>(parts.size());
    std::vector<Bitset> leq(n, Bitset(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (refines(parts[i], parts[j])) leq[i][j] = true;
    return BoundedPoset::wrap(Poset::from_leq(std::move(labels), std::move(leq)));
}

BoundedPoset poset_from_signed(const std::vector<SignedPartition>& parts) {
    std::vector<std::string> labels;
    labels.reserve(parts.size());
    for (const auto& p : parts) labels.push_back(p.to_string());
    const int n = static_cast<int>(parts.size());
    std::vector<Bitset> leq(n, Bitset(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (leq_signed(parts[i], parts[j])) leq[i][j] = true;
    return BoundedPoset::wrap(Poset::from_leq(std::move(labels), std::move(leq)));
}

// Unique least upper bounds and greatest lower bounds for every pair.
void check_lattice(const Poset& p, const std::string& what) {
    const int n = p.size();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            for (int dir = 0; dir < 2; ++dir) {
                std::vector<int> bounds;
                for (int k = 0; k < n; ++k) {
                    bool ok = dir == 0 ? (p.leq(i, k) && p.leq(j, k))
                                       : (p.leq(k, i) && p.leq(k, j));
                    if (ok) bounds.push_back(k);
                }
                int extreme = -1;
                for (int u : bounds) {
                    bool best = true;
                    for (int u2 : bounds)
                        if (dir == 0 ? !p.leq(u, u2) : !p.leq(u2, u)) best = false;
                    if (best) {
                        extreme = u;
                        break;
                    }
                }
                if (extreme < 0)
                    throw PosetError(what + ": pair without unique meet/join");
            }
        }
}

}  // namespace

BoundedPoset build_Pi(int n) {
    if (n < 1) throw ParameterError("build_Pi: n >= 1 required");
    return poset_from_partitions(all_partitions(n));
}

BoundedPoset build_PiB(int n) {
    if (n < 1) throw ParameterError("build_PiB: n >= 1 required");
    BoundedPoset b = poset_from_signed(all_signed_partitions(n));
    if (n <= 4) check_lattice(b.poset(), "PiB(" + std::to_string(n) + ")");
    return b;
}

BoundedPoset build_PiD(int n) {
    if (n < 2) throw ParameterError("build_PiD: n >= 2 required");
    std::vector<SignedPartition> kept;
    for (auto& p : all_signed_partitions(n))
        if (p.zero_block.size() != 2) kept.push_back(std::move(p));
    return poset_from_signed(kept);
}

BoundedPoset build_PiDB(int n, const std::set<int>& T) {
    if (n < 2) throw ParameterError("build_PiDB: n >= 2 required");
    for (int t : T)
        if (t < 1 || t > n) throw ParameterError("build_PiDB: T must lie in {1..n}");
    std::vector<SignedPartition> kept;
    for (auto& p : all_signed_partitions(n)) {
        if (p.zero_block.size() == 2 && !T.count(p.zero_block[1])) continue;
        kept.push_back(std::move(p));
    }
    return poset_from_signed(kept);
}

BoundedPoset build_PiAT(int n, const std::set<int>& T) {
    if (n < 2) throw ParameterError("build_PiAT: n >= 2 required");
    if (T.empty()) throw ParameterError("build_PiAT: T must be nonempty");
    for (int t : T)
        if (t < 1 || t >= n)
            throw ParameterError("build_PiAT: T must lie in {1..n-1}");
    std::vector<SetPartition> kept;
    for (auto& p : all_partitions(n)) {
        const std::vector<int>* home = nullptr;
        for (const auto& b : p.blocks)
            if (std::find(b.begin(), b.end(), n) != b.end()) home = &b;
        bool ok = home->size() == 1;
        if (!ok)
            for (int v : *home)
                if (T.count(v)) ok = true;
        if (ok) kept.push_back(std::move(p));
    }
    return poset_from_partitions(kept);
}

FlatSubspace partition_to_subspace(const SetPartition& p, int n, Family f) {
    if (f != Family::A && f != Family::AT)
        throw ParameterError("partition_to_subspace: plain partitions are type A/AT");
    RatMatrix eqs(0, n);
    {
        // Ambient sum-zero hyperplane.
        std::vector<Rat> row(n, Rat(1));
        eqs.append_row(row);
    }
    for (const auto& b : p.blocks)
        for (std::size_t j = 1; j < b.size(); ++j) {
            std::vector<Rat> row(n, Rat(0));
            row[b[0] - 1] = 1;
            row[b[j] - 1] = -1;
            eqs.append_row(row);
        }
    return flat_from_equations(n, eqs);
}

BoundedPoset build_family_lattice(Family f, int n, const std::set<int>& T) {
    if (!T.empty() && f != Family::DB && f != Family::AT)
        throw ParameterError("T applies only to DB and AT");
    switch (f) {
        case Family::A: return build_Pi(n);
        case Family::B: return build_PiB(n);
        case Family::D: return build_PiD(n);
        case Family::DB: return build_PiDB(n, T);
        case Family::AT: return build_PiAT(n, T);
    }
    throw ParameterError("unknown family");
}

FlatSubspace partition_to_subspace(const SignedPartition& p, Family f) {
    if (f != Family::B && f != Family::D && f != Family::DB)
        throw ParameterError("partition_to_subspace: signed partitions are type B/D/DB");
    const int n = p.n();
    RatMatrix eqs(0, n);
    bool any = false;
    for (int v : p.zero_block) {
        if (v == 0) continue;
        std::vector<Rat> row(n, Rat(0));
        row[v - 1] = 1;
        eqs.append_row(row);
        any = true;
    }
    for (const auto& b : p.signed_blocks)
        for (std::size_t j = 1; j < b.size(); ++j) {
            std::vector<Rat> row(n, Rat(0));
            // s_0 x_{v_0} = s_j x_{v_j}
            row[b[0].value - 1] = Rat(b[0].sign);
            row[b[j].value - 1] = Rat(-b[j].sign);
            eqs.append_row(row);
            any = true;
        }
    if (!any) eqs = RatMatrix(0, n);
    return flat_from_equations(n, eqs);
}

}  // namespace lathom
