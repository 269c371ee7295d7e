#include "adnil/rootsys.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

namespace adnil {

namespace {

int max_rank_for_capacity(Family f) {
    switch (f) {
        case Family::A: return 15;  // 120 roots
        case Family::B:
        case Family::C: return 11;  // 121 roots
        case Family::D: return 11;  // 110 roots
        default: return 8;
    }
}

std::vector<int> exponents_of(LieType lt) {
    const int n = lt.rank;
    std::vector<int> e;
    switch (lt.family) {
        case Family::A:
            for (int i = 1; i <= n; ++i) e.push_back(i);
            break;
        case Family::B:
        case Family::C:
            for (int i = 1; i <= n; ++i) e.push_back(2 * i - 1);
            break;
        case Family::D:
            for (int i = 1; i <= n - 1; ++i) e.push_back(2 * i - 1);
            e.push_back(n - 1);
            std::sort(e.begin(), e.end());
            break;
        case Family::E:
            if (n == 6) e = {1, 4, 5, 7, 8, 11};
            if (n == 7) e = {1, 5, 7, 9, 11, 13, 17};
            if (n == 8) e = {1, 7, 11, 13, 17, 19, 23, 29};
            break;
        case Family::F: e = {1, 5, 7, 11}; break;
        case Family::G: e = {1, 5}; break;
    }
    return e;
}

Root unit_sum(int rank, int from, int to, int weight = 1) {
    Root r(rank, 0);
    for (int k = from; k <= to; ++k) r[k - 1] += weight;
    return r;
}

Root add(Root a, const Root& b) {
    for (std::size_t k = 0; k < a.size(); ++k) a[k] += b[k];
    return a;
}

// Root held by cell (i, j) of the staircase / shifted staircase labelling.
Root classical_cell_root(LieType lt, int i, int j) {
    const int n = lt.rank;
    switch (lt.family) {
        case Family::A:
            return unit_sum(n, i, n - j + 1);
        case Family::C:
            if (j <= n - 1) return add(add(unit_sum(n, i, j - 1), unit_sum(n, j, n - 1, 2)), unit_sum(n, n, n));
            return unit_sum(n, i, 2 * n - j);
        case Family::B:
            if (j <= n - 1) return add(unit_sum(n, i, j), unit_sum(n, j + 1, n, 2));
            return unit_sum(n, i, 2 * n - j);
        case Family::D: {
            if (j <= n - 2) {
                Root r = add(unit_sum(n, i, j), unit_sum(n, j + 1, n - 2, 2));
                r[n - 2] += 1;
                r[n - 1] += 1;
                return r;
            }
            if (j == n - 1) {
                Root r = unit_sum(n, i, n - 2);
                r[n - 1] += 1;
                return r;
            }
            return unit_sum(n, i, 2 * n - j - 1);
        }
        default:
            throw std::logic_error("classical_cell_root: not a classical type");
    }
}

}  // namespace

void LieType::validate() const {
    bool ok = false;
    switch (family) {
        case Family::A: ok = rank >= 1; break;
        case Family::B:
        case Family::C:
        case Family::D: ok = rank >= 2; break;
        case Family::E: ok = rank >= 6 && rank <= 8; break;
        case Family::F: ok = rank == 4; break;
        case Family::G: ok = rank == 2; break;
    }
    if (!ok) throw std::invalid_argument("invalid rank " + std::to_string(rank) + " for family " + std::string(1, static_cast<char>(family)));
    if (rank > max_rank_for_capacity(family))
        throw std::invalid_argument("rank " + std::to_string(rank) + " exceeds the 128-root capacity for family " +
                                    std::string(1, static_cast<char>(family)));
}

std::string LieType::name() const { return std::string(1, static_cast<char>(family)) + std::to_string(rank); }

LieType parse_lie_type(std::string_view text, std::optional<int> rank) {
    if (text.empty()) throw std::invalid_argument("empty Lie type");
    const char f = static_cast<char>(std::toupper(static_cast<unsigned char>(text[0])));
    if (std::string_view("ABCDEFG").find(f) == std::string_view::npos)
        throw std::invalid_argument("unknown Lie family '" + std::string(text) + "'");
    LieType lt{static_cast<Family>(f), 0};
    if (text.size() > 1) {
        const std::string digits(text.substr(1));
        if (!std::all_of(digits.begin(), digits.end(), [](unsigned char c) { return std::isdigit(c); }))
            throw std::invalid_argument("malformed Lie type '" + std::string(text) + "'");
        lt.rank = std::stoi(digits);
        if (rank && *rank != lt.rank) throw std::invalid_argument("rank given twice with different values");
    } else if (rank) {
        lt.rank = *rank;
    } else {
        throw std::invalid_argument("rank missing for family " + std::string(1, f));
    }
    lt.validate();
    return lt;
}

std::string format_root(const Root& r) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < r.size(); ++k) {
        if (r[k] == 0) continue;
        if (!first) os << '+';
        if (r[k] != 1) os << r[k];
        os << 'a' << (k + 1);
        first = false;
    }
    if (first) os << '0';
    return os.str();
}

std::vector<std::vector<int>> cartan_matrix(LieType lt) {
    const int n = lt.rank;
    std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i) a[i][i] = 2;
    auto link = [&](int i, int j, int aij = -1, int aji = -1) {
        a[i - 1][j - 1] = aij;
        a[j - 1][i - 1] = aji;
    };
    switch (lt.family) {
        case Family::A:
            for (int i = 1; i < n; ++i) link(i, i + 1);
            break;
        case Family::B:
            for (int i = 1; i < n - 1; ++i) link(i, i + 1);
            link(n - 1, n, -1, -2);
            break;
        case Family::C:
            for (int i = 1; i < n - 1; ++i) link(i, i + 1);
            link(n - 1, n, -2, -1);
            break;
        case Family::D:
            for (int i = 1; i + 1 <= n - 1; ++i) link(i, i + 1);
            if (n >= 3) link(n - 2, n);
            break;
        case Family::E:
            link(1, 3);
            link(3, 4);
            link(2, 4);
            for (int i = 4; i < n; ++i) link(i, i + 1);
            break;
        case Family::F:
            link(1, 2);
            link(2, 3, -1, -2);
            link(3, 4);
            break;
        case Family::G:
            link(1, 2, -3, -1);
            break;
    }
    return a;
}

RootSystem::RootSystem(LieType lt) : type_(lt) {
    type_.validate();
    cartan_ = cartan_matrix(type_);
    build_by_reflection();
    order_and_label();
    build_tables();
    exponents_ = exponents_of(type_);
    coxeter_ = 2 * size() / rank();
    if (exponents_.back() + 1 != coxeter_)
        throw std::logic_error("Coxeter number and largest exponent disagree for " + type_.name());
}

void RootSystem::build_by_reflection() {
    const int n = rank();
    std::set<Root> known;
    std::vector<Root> level;
    for (int i = 0; i < n; ++i) {
        Root r(n, 0);
        r[i] = 1;
        level.push_back(r);
        known.insert(r);
    }
    std::vector<Root> all = level;
    while (!level.empty()) {
        std::set<Root> next;
        for (const Root& beta : level) {
            for (int i = 0; i < n; ++i) {
                // pairing <beta, alpha_i^vee>
                int pairing = 0;
                for (int j = 0; j < n; ++j) pairing += beta[j] * cartan_[i][j];
                int p = 0;
                Root down = beta;
                while (true) {
                    down[i] -= 1;
                    if (!known.count(down)) break;
                    ++p;
                }
                if (p - pairing > 0) {
                    Root up = beta;
                    up[i] += 1;
                    if (!known.count(up)) next.insert(up);
                }
            }
        }
        level.assign(next.begin(), next.end());
        for (const Root& r : level) {
            known.insert(r);
            all.push_back(r);
        }
    }
    positive_ = std::move(all);
    if (static_cast<int>(positive_.size()) > RootMask::kCapacity)
        throw std::invalid_argument("root system too large for the root mask");
}

void RootSystem::order_and_label() {
    const int n = rank();
    if (type_.classical()) {
        std::set<Root> built(positive_.begin(), positive_.end());
        std::vector<Root> ordered;
        std::vector<Cell> cells;
        for (int row = 1; row <= diagram_rows(); ++row) {
            const int first = type_.family == Family::A ? 1 : row;
            for (int col = first; col < first + diagram_row_length(row); ++col) {
                Root r = classical_cell_root(type_, row, col);
                if (!built.count(r))
                    throw std::logic_error("cell labelling produced a non-root " + format_root(r) + " in " + type_.name());
                ordered.push_back(std::move(r));
                cells.push_back({row, col});
            }
        }
        std::set<Root> labelled(ordered.begin(), ordered.end());
        if (labelled.size() != ordered.size() || labelled != built)
            throw std::logic_error("cell labelling is not a bijection onto the positive roots of " + type_.name());
        positive_ = std::move(ordered);
        cells_ = std::move(cells);
    } else {
        auto height = [](const Root& r) {
            int h = 0;
            for (int c : r) h += c;
            return h;
        };
        std::sort(positive_.begin(), positive_.end(), [&](const Root& a, const Root& b) {
            const int ha = height(a), hb = height(b);
            if (ha != hb) return ha > hb;
            return a > b;
        });
    }
    heights_.clear();
    for (const Root& r : positive_) {
        int h = 0;
        for (int c : r) h += c;
        heights_.push_back(h);
    }
    (void)n;
}

void RootSystem::build_tables() {
    const int m = size();
    std::map<Root, int> index;
    for (int i = 0; i < m; ++i) index[positive_[i]] = i;

    sums_.assign(static_cast<std::size_t>(m) * m, kNoSum);
    partners_.assign(m, {});
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) {
            auto it = index.find(add(positive_[i], positive_[j]));
            if (it == index.end()) continue;
            sums_[static_cast<std::size_t>(i) * m + j] = static_cast<std::int8_t>(it->second);
            partners_[i].push_back({static_cast<std::int8_t>(j), static_cast<std::int8_t>(it->second)});
        }
    }

    up_.assign(m, RootMask{});
    down_.assign(m, RootMask{});
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            if (root_leq(positive_[i], positive_[j])) {
                up_[i].set(j);
                down_[j].set(i);
            }

    highest_.reset();
    for (int i = 0; i < m; ++i)
        if (up_[i].count() == 1 && down_[i].count() == m) highest_ = i;
}

std::optional<int> RootSystem::index_of(const Root& r) const {
    for (int i = 0; i < size(); ++i)
        if (positive_[i] == r) return i;
    return std::nullopt;
}

int RootSystem::diagram_rows() const {
    switch (type_.family) {
        case Family::A:
        case Family::B:
        case Family::C: return rank();
        case Family::D: return rank() - 1;
        default: return 0;
    }
}

int RootSystem::diagram_row_length(int row) const {
    const int n = rank();
    switch (type_.family) {
        case Family::A: return n - row + 1;
        case Family::B:
        case Family::C: return 2 * n - 2 * row + 1;
        case Family::D: return 2 * n - 2 * row;
        default: return 0;
    }
}

std::optional<int> RootSystem::root_at(Cell c) const {
    if (!has_cells() || c.row < 1 || c.row > diagram_rows()) return std::nullopt;
    const int first = type_.family == Family::A ? 1 : c.row;
    if (c.col < first || c.col >= first + diagram_row_length(c.row)) return std::nullopt;
    int offset = 0;
    for (int r = 1; r < c.row; ++r) offset += diagram_row_length(r);
    return offset + (c.col - first);
}

RootSystem build_root_system(LieType lt) { return RootSystem(lt); }

bool root_leq(const Root& a, const Root& b) {
    for (std::size_t k = 0; k < a.size(); ++k)
        if (b[k] < a[k]) return false;
    return true;
}

BigInt total_count_formula(const RootSystem& rs) {
    BigRational product = 1;
    const int h = rs.coxeter_number();
    for (int e : rs.exponents()) {
        BigRational factor(h + e + 1, e + 1);
        factor.canonicalize();
        product *= factor;
    }
    if (product.get_den() != 1)
        throw std::domain_error("product formula is not an integer for " + rs.lie_type().name());
    return product.get_num();
}

}  // namespace adnil
