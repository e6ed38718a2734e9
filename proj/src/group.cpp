#include "gspin/group.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

#include "gspin/errors.hpp"

namespace gspin {

namespace {

std::string triple_str(Elem a, Elem b, Elem c) {
    return "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
}

} // namespace

FiniteGroup FiniteGroup::from_table(std::vector<std::vector<Elem>> table,
                                    std::vector<std::string> names) {
    const int n = static_cast<int>(table.size());
    if (n == 0) throw ValidationError("group table is empty");
    for (int a = 0; a < n; ++a) {
        if (static_cast<int>(table[a].size()) != n) {
            throw ValidationError("group table row " + std::to_string(a) + " has " +
                                  std::to_string(table[a].size()) + " entries, expected " +
                                  std::to_string(n));
        }
        for (int b = 0; b < n; ++b) {
            if (table[a][b] < 0 || table[a][b] >= n) {
                throw ValidationError("closure axiom fails: entry at (" + std::to_string(a) +
                                      "," + std::to_string(b) + ") is out of range");
            }
        }
    }

    Elem identity = -1;
    for (int e = 0; e < n && identity < 0; ++e) {
        bool ok = true;
        for (int a = 0; a < n && ok; ++a) ok = table[e][a] == a && table[a][e] == a;
        if (ok) identity = e;
    }
    if (identity < 0) throw ValidationError("identity axiom fails: no two-sided identity element");

    std::vector<Elem> inverse(n, -1);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            if (table[a][b] == identity && table[b][a] == identity) {
                inverse[a] = b;
                break;
            }
        }
        if (inverse[a] < 0) {
            throw ValidationError("inverse axiom fails: element " + std::to_string(a) +
                                  " has no two-sided inverse");
        }
    }

    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            for (int c = 0; c < n; ++c) {
                if (table[table[a][b]][c] != table[a][table[b][c]]) {
                    throw ValidationError("associativity axiom fails at triple " +
                                          triple_str(a, b, c));
                }
            }
        }
    }

    if (names.empty()) {
        names.resize(n);
        for (int a = 0; a < n; ++a) names[a] = std::to_string(a);
    } else if (static_cast<int>(names.size()) != n) {
        throw ValidationError("expected " + std::to_string(n) + " element names, got " +
                              std::to_string(names.size()));
    }

    FiniteGroup G;
    G.order_ = n;
    G.identity_ = identity;
    G.cayley_.resize(static_cast<std::size_t>(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) G.cayley_[static_cast<std::size_t>(a) * n + b] = table[a][b];
    G.inverse_ = std::move(inverse);
    G.names_ = std::move(names);
    return G;
}

bool FiniteGroup::is_abelian() const {
    for (int a = 0; a < order_; ++a)
        for (int b = a + 1; b < order_; ++b)
            if (mul(a, b) != mul(b, a)) return false;
    return true;
}

FiniteGroup cyclic_group(int n) {
    if (n < 1) throw ConfigError("cyclic group order must be positive");
    std::vector<std::vector<Elem>> table(n, std::vector<Elem>(n));
    std::vector<std::string> names(n);
    for (int a = 0; a < n; ++a) {
        names[a] = std::to_string(a);
        for (int b = 0; b < n; ++b) table[a][b] = (a + b) % n;
    }
    return FiniteGroup::from_table(std::move(table), std::move(names));
}

FiniteGroup dihedral_group(int n) {
    if (n < 1) throw ConfigError("dihedral group parameter must be positive");
    const int N = 2 * n;
    auto enc = [n](int flip, int rot) { return flip * n + ((rot % n + n) % n); };
    std::vector<std::vector<Elem>> table(N, std::vector<Elem>(N));
    for (int f1 = 0; f1 < 2; ++f1)
        for (int a1 = 0; a1 < n; ++a1)
            for (int f2 = 0; f2 < 2; ++f2)
                for (int a2 = 0; a2 < n; ++a2) {
                    // s^f r^a with s r s = r^{-1}: r^{a1} s = s r^{-a1}
                    const int rot = f2 ? (a2 - a1) : (a2 + a1);
                    table[enc(f1, a1)][enc(f2, a2)] = enc(f1 ^ f2, rot);
                }
    std::vector<std::string> names(N);
    for (int f = 0; f < 2; ++f)
        for (int a = 0; a < n; ++a) {
            std::string rot = a == 0 ? "" : (a == 1 ? "r" : "r" + std::to_string(a));
            std::string s = f ? "s" + rot : rot;
            names[enc(f, a)] = s.empty() ? "e" : s;
        }
    return FiniteGroup::from_table(std::move(table), std::move(names));
}

namespace {

using Perm = std::vector<int>; // one-line notation, images of 0..n-1

Perm perm_compose(const Perm& s, const Perm& t) { // right factor applied first
    Perm out(s.size());
    for (std::size_t x = 0; x < s.size(); ++x) out[x] = s[t[x]];
    return out;
}

std::string cycle_name(const Perm& p) {
    std::string out;
    std::vector<char> seen(p.size(), 0);
    for (std::size_t x = 0; x < p.size(); ++x) {
        if (seen[x] || p[x] == static_cast<int>(x)) continue;
        out += "(";
        std::size_t y = x;
        while (!seen[y]) {
            seen[y] = 1;
            out += std::to_string(y + 1);
            y = static_cast<std::size_t>(p[y]);
        }
        out += ")";
    }
    return out.empty() ? "e" : out;
}

std::vector<Perm> symmetric_elements(int n) {
    if (n == 3) {
        // fixed ordering: identity, the three transpositions, then the 3-cycles
        return {{0, 1, 2}, {1, 0, 2}, {2, 1, 0}, {0, 2, 1}, {1, 2, 0}, {2, 0, 1}};
    }
    Perm p(n);
    std::iota(p.begin(), p.end(), 0);
    std::vector<Perm> out;
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

} // namespace

FiniteGroup symmetric_group(int n) {
    if (n < 1) throw ConfigError("symmetric group parameter must be positive");
    const auto elems = symmetric_elements(n);
    const int N = static_cast<int>(elems.size());
    std::map<Perm, int> index;
    for (int i = 0; i < N; ++i) index[elems[i]] = i;
    std::vector<std::vector<Elem>> table(N, std::vector<Elem>(N));
    std::vector<std::string> names(N);
    for (int i = 0; i < N; ++i) {
        names[i] = cycle_name(elems[i]);
        for (int j = 0; j < N; ++j) table[i][j] = index.at(perm_compose(elems[i], elems[j]));
    }
    return FiniteGroup::from_table(std::move(table), std::move(names));
}

FiniteGroup quaternion_group() {
    // index = 2*axis + (negative ? 1 : 0), axes 0:1, 1:i, 2:j, 3:k
    auto axis_mul = [](int a, int b) -> std::pair<int, bool> {
        if (a == 0) return {b, false};
        if (b == 0) return {a, false};
        if (a == b) return {0, true};
        // i j = k, j k = i, k i = j and the reversed products pick up a sign
        static const int next[4] = {0, 2, 3, 1};
        if (next[a] == b) return {6 - a - b, false};
        return {6 - a - b, true};
    };
    std::vector<std::vector<Elem>> table(8, std::vector<Elem>(8));
    for (int x = 0; x < 8; ++x)
        for (int y = 0; y < 8; ++y) {
            auto [axis, neg] = axis_mul(x / 2, y / 2);
            bool sign = (x % 2) ^ (y % 2) ^ neg;
            table[x][y] = 2 * axis + (sign ? 1 : 0);
        }
    std::vector<std::string> names = {"1", "-1", "i", "-i", "j", "-j", "k", "-k"};
    return FiniteGroup::from_table(std::move(table), std::move(names));
}

FiniteGroup read_cayley_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open group table file: " + path);
    std::string line;
    auto next_line = [&](std::string& out) {
        while (std::getline(in, line)) {
            if (line.find_first_not_of(" \t\r\n") != std::string::npos) {
                out = line;
                return true;
            }
        }
        return false;
    };

    std::string first;
    if (!next_line(first)) throw ConfigError("group table file is empty: " + path);
    int n = 0;
    {
        std::istringstream ss(first);
        if (!(ss >> n) || n <= 0) throw ConfigError("bad order line in " + path);
        std::string extra;
        if (ss >> extra) throw ConfigError("trailing tokens on order line in " + path);
    }

    std::vector<std::vector<Elem>> table(n, std::vector<Elem>(n));
    for (int a = 0; a < n; ++a) {
        std::string row;
        if (!next_line(row)) throw ConfigError("table row " + std::to_string(a) + " missing in " + path);
        std::istringstream ss(row);
        for (int b = 0; b < n; ++b) {
            if (!(ss >> table[a][b])) {
                throw ConfigError("table row " + std::to_string(a) + " is malformed in " + path);
            }
        }
        std::string extra;
        if (ss >> extra) throw ConfigError("table row " + std::to_string(a) + " has trailing tokens in " + path);
    }

    std::vector<std::string> names;
    std::string tail;
    if (next_line(tail)) {
        std::istringstream ss(tail);
        std::string tok;
        while (ss >> tok) names.push_back(tok);
        if (static_cast<int>(names.size()) != n) {
            throw ConfigError("names line has " + std::to_string(names.size()) +
                              " tokens, expected " + std::to_string(n) + " in " + path);
        }
        if (next_line(tail)) throw ConfigError("unexpected extra content in " + path);
    }
    return FiniteGroup::from_table(std::move(table), std::move(names));
}

FiniteGroup parse_group_spec(const std::string& spec, int max_order) {
    auto colon = spec.find(':');
    std::string head = spec.substr(0, colon);
    std::string arg = colon == std::string::npos ? "" : spec.substr(colon + 1);

    auto arg_int = [&]() {
        if (arg.empty() || arg.find_first_not_of("0123456789") != std::string::npos) {
            throw ConfigError("group spec '" + spec + "' needs a numeric parameter");
        }
        return std::stoi(arg);
    };

    FiniteGroup G = [&]() {
        if (head == "cyclic") return cyclic_group(arg_int());
        if (head == "dihedral") return dihedral_group(arg_int());
        if (head == "symmetric") return symmetric_group(arg_int());
        if (head == "quaternion") {
            if (!arg.empty() && arg != "8") throw ConfigError("quaternion group has order 8");
            return quaternion_group();
        }
        if (head == "file") {
            if (arg.empty()) throw ConfigError("group spec 'file:' needs a path");
            return read_cayley_file(arg);
        }
        throw ConfigError("unknown group spec '" + spec +
                          "' (expected cyclic:N, dihedral:N, symmetric:N, quaternion, file:PATH)");
    }();

    if (G.order() > max_order) {
        throw ResourceCapError("group '" + spec + "' has order " + std::to_string(G.order()) +
                               ", above the cap " + std::to_string(max_order) +
                               " (set GSPIN_MAX_GROUP_ORDER to raise it)");
    }
    return G;
}

Subgroup::Subgroup(const FiniteGroup& parent, const std::vector<Elem>& generators) {
    const int n = parent.order();
    parent_order_ = n;
    for (Elem g : generators) {
        if (g < 0 || g >= n) {
            throw ConfigError("subgroup generator index " + std::to_string(g) + " out of range");
        }
    }

    std::set<Elem> closure = {parent.identity()};
    std::queue<Elem> frontier;
    frontier.push(parent.identity());
    for (Elem g : generators) {
        if (closure.insert(g).second) frontier.push(g);
    }
    while (!frontier.empty()) {
        Elem a = frontier.front();
        frontier.pop();
        for (Elem b : closure) {
            for (Elem p : {parent.mul(a, b), parent.mul(b, a)}) {
                if (closure.insert(p).second) frontier.push(p);
            }
        }
        if (closure.insert(parent.inv(a)).second) frontier.push(parent.inv(a));
    }

    members_.assign(closure.begin(), closure.end());
    member_index_.assign(n, -1);
    for (std::size_t i = 0; i < members_.size(); ++i) member_index_[members_[i]] = static_cast<int>(i);

    normal_ = true;
    for (Elem g = 0; g < n && normal_; ++g) {
        for (Elem h : members_) {
            if (member_index_[parent.conj(g, h)] < 0) {
                normal_ = false;
                witness_ = {g, h};
                break;
            }
        }
    }
}

Subgroup Subgroup::whole(const FiniteGroup& parent) {
    std::vector<Elem> gens(parent.order());
    std::iota(gens.begin(), gens.end(), 0);
    return Subgroup(parent, gens);
}

Subgroup Subgroup::trivial(const FiniteGroup& parent) { return Subgroup(parent, {}); }

Subgroup parse_subgroup_spec(const FiniteGroup& G, const std::string& spec) {
    if (spec.empty() || spec == "e" || spec == "trivial") return Subgroup::trivial(G);
    if (spec == "all") return Subgroup::whole(G);
    std::vector<Elem> gens;
    std::stringstream ss(spec);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos) {
            throw ConfigError("bad subgroup spec '" + spec + "': expected comma-separated indices, 'all' or 'e'");
        }
        gens.push_back(std::stoi(tok));
    }
    return Subgroup(G, gens);
}

} // namespace gspin
