#include "sphaera/avc_engine.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "sphaera/errors.hpp"

namespace sphaera {

int degree(const VertexType& v) { return v[0] + v[1] + v[2] + v[3] + v[4]; }

bool VertexTypeLess::operator()(const VertexType& x, const VertexType& y) const {
    int dx = degree(x), dy = degree(y);
    if (dx != dy) return dx < dy;
    return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
}

AngleSystem make_system(int f, Rational alpha, Rational beta, Rational gamma) {
    AngleSystem s;
    s.f = f;
    Rational total = Rational(3) + Rational(4, f);
    s.angle[0] = {alpha, 0};
    s.angle[1] = {beta, 0};
    s.angle[2] = {gamma, 0};
    s.angle[3] = {0, 1};
    s.angle[4] = {total - alpha - beta - gamma, -1};
    return s;
}

AngleSystem make_rational_system(int f, const std::array<Rational, 5>& angles) {
    AngleSystem s;
    s.f = f;
    for (int i = 0; i < 5; ++i) s.angle[i] = {angles[i], 0};
    return s;
}

AngleSystem table3_system(int f) {
    Rational x = Rational(1) - Rational(4, f);
    auto s = make_system(f, x, x, Rational(8, f));
    s.tau_range = std::make_pair(0.0, 2.0);
    return s;
}

AngleSystem f16_system() { return make_system(16, Rational(1, 2), Rational(3, 4), Rational(1, 2)); }

AngleSystem symmetric_system(int f) {
    Rational x(1, f);
    return make_rational_system(f, {8 * x, 1 - 4 * x, 1 - 4 * x, Rational(1, 2) + 2 * x, Rational(1, 2) + 2 * x});
}

bool angle_sum_ok(const AngleSystem& sys) {
    Rational r = 0, s = 0;
    for (const auto& a : sys.angle) {
        r += a.r;
        s += a.s;
    }
    return r == Rational(3) + Rational(4, sys.f) && s == Rational(0);
}

AffineAngle vertex_sum(const AngleSystem& sys, const VertexType& v) {
    AffineAngle out;
    for (int i = 0; i < 5; ++i) {
        out.r += v[i] * sys.angle[i].r;
        out.s += v[i] * sys.angle[i].s;
    }
    return out;
}

bool is_vertex(const AngleSystem& sys, const VertexType& v) {
    if (degree(v) < 3 || (v[3] + v[4]) % 2 != 0) return false;
    AffineAngle s = vertex_sum(sys, v);
    return s.r == Rational(2) && s.s == Rational(0);
}

int default_max_degree(const AngleSystem& sys) {
    std::optional<Rational> min_r;
    for (const auto& a : sys.angle) {
        if (a.s != Rational(0)) continue;
        if (a.r <= Rational(0)) throw DomainError("unbounded enumeration: a fixed angle is not positive");
        if (!min_r || a.r < *min_r) min_r = a.r;
    }
    int cap = std::max(24, sys.f / 2);
    if (!min_r) return cap;
    Rational q = Rational(2) / *min_r;
    long long c = q.numerator() / q.denominator() + (q.numerator() % q.denominator() != 0 ? 1 : 0);
    return static_cast<int>(std::min<long long>(std::max<long long>(c, 3), cap));
}

std::vector<VertexType> enumerate_vertices(const AngleSystem& sys, int max_degree) {
    for (const auto& a : sys.angle)
        if (a.s == Rational(0) && a.r <= Rational(0)) throw DomainError("unbounded enumeration: a fixed angle is not positive");
    const int D = max_degree > 0 ? max_degree : default_max_degree(sys);
    std::vector<VertexType> out;
    VertexType n{};
    // lattice box scan over degree <= D with exact filtering
    for (n[0] = 0; n[0] <= D; ++n[0])
        for (n[1] = 0; n[0] + n[1] <= D; ++n[1])
            for (n[2] = 0; n[0] + n[1] + n[2] <= D; ++n[2])
                for (n[3] = 0; n[0] + n[1] + n[2] + n[3] <= D; ++n[3])
                    for (n[4] = 0; degree(n) <= D; ++n[4])
                        if (is_vertex(sys, n)) out.push_back(n);
    std::sort(out.begin(), out.end(), VertexTypeLess{});
    return out;
}

Rational det5(const std::array<std::array<Rational, 5>, 5>& rows) {
    auto m = rows;
    Rational det = 1;
    for (int c = 0; c < 5; ++c) {
        int piv = -1;
        for (int r = c; r < 5; ++r)
            if (m[r][c] != Rational(0)) {
                piv = r;
                break;
            }
        if (piv < 0) return 0;
        if (piv != c) {
            std::swap(m[piv], m[c]);
            det = -det;
        }
        det *= m[c][c];
        for (int r = c + 1; r < 5; ++r) {
            Rational k = m[r][c] / m[c][c];
            if (k == Rational(0)) continue;
            for (int j = c; j < 5; ++j) m[r][j] -= k * m[c][j];
        }
    }
    return det;
}

Rational irrational_det(const VertexType& k, const VertexType& l, const VertexType& m, const VertexType& n) {
    std::array<std::array<Rational, 5>, 5> rows;
    for (int j = 0; j < 5; ++j) {
        rows[0][j] = 1;
        rows[1][j] = k[j];
        rows[2][j] = l[j];
        rows[3][j] = m[j];
        rows[4][j] = n[j];
    }
    return det5(rows);
}

std::vector<std::array<Rational, 5>> linear_relations(const std::vector<VertexType>& known) {
    // null space of the matrix with rows u, known...
    std::vector<std::array<Rational, 5>> m;
    m.push_back({1, 1, 1, 1, 1});
    for (const auto& v : known) m.push_back({v[0], v[1], v[2], v[3], v[4]});
    const int rows = static_cast<int>(m.size());
    std::vector<int> pivcol;
    int r = 0;
    for (int c = 0; c < 5 && r < rows; ++c) {
        int piv = -1;
        for (int i = r; i < rows; ++i)
            if (m[i][c] != Rational(0)) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        std::swap(m[piv], m[r]);
        Rational inv = 1 / m[r][c];
        for (auto& x : m[r]) x *= inv;
        for (int i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == Rational(0)) continue;
            Rational k = m[i][c];
            for (int j = 0; j < 5; ++j) m[i][j] -= k * m[r][j];
        }
        pivcol.push_back(c);
        ++r;
    }
    std::vector<std::array<Rational, 5>> out;
    for (int free = 0; free < 5; ++free) {
        if (std::find(pivcol.begin(), pivcol.end(), free) != pivcol.end()) continue;
        std::array<Rational, 5> v{};
        v[free] = 1;
        for (size_t i = 0; i < pivcol.size(); ++i) v[pivcol[i]] = -m[i][free];
        // scale to coprime integers
        long long l = 1;
        for (auto& x : v) l = std::lcm(l, x.denominator());
        long long g = 0;
        for (auto& x : v) {
            x *= l;
            g = std::gcd(g, std::abs(x.numerator()));
        }
        if (g > 1)
            for (auto& x : v) x /= g;
        out.push_back(v);
    }
    return out;
}

namespace {

// exact phase-1 simplex: is {x >= 0 : A x = b} nonempty
bool feasible(std::vector<std::vector<Rational>> A, std::vector<Rational> b) {
    const int m = static_cast<int>(A.size());
    const int n = m ? static_cast<int>(A[0].size()) : 0;
    for (int i = 0; i < m; ++i)
        if (b[i] < Rational(0)) {
            for (auto& x : A[i]) x = -x;
            b[i] = -b[i];
        }
    // tableau columns: n originals, m artificials, rhs
    const int W = n + m + 1;
    std::vector<std::vector<Rational>> T(m + 1, std::vector<Rational>(W, 0));
    std::vector<int> basis(m);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < n; ++j) T[i][j] = A[i][j];
        T[i][n + i] = 1;
        T[i][W - 1] = b[i];
        basis[i] = n + i;
    }
    // objective row: minimize sum of artificials, expressed in nonbasic terms
    for (int j = 0; j < W; ++j) {
        Rational s = 0;
        for (int i = 0; i < m; ++i) s += T[i][j];
        T[m][j] = (j >= n && j < n + m) ? Rational(0) : s;
    }
    for (int iter = 0; iter < 10000; ++iter) {
        int enter = -1;
        for (int j = 0; j < n + m; ++j)
            if (T[m][j] > Rational(0)) {
                enter = j;
                break;
            }
        if (enter < 0) break;
        int leave = -1;
        Rational best = 0;
        for (int i = 0; i < m; ++i) {
            if (T[i][enter] <= Rational(0)) continue;
            Rational ratio = T[i][W - 1] / T[i][enter];
            if (leave < 0 || ratio < best || (ratio == best && basis[i] < basis[leave])) {
                leave = i;
                best = ratio;
            }
        }
        if (leave < 0) break;
        Rational p = T[leave][enter];
        for (auto& x : T[leave]) x /= p;
        for (int i = 0; i <= m; ++i) {
            if (i == leave || T[i][enter] == Rational(0)) continue;
            Rational k = T[i][enter];
            for (int j = 0; j < W; ++j) T[i][j] -= k * T[leave][j];
        }
        basis[leave] = enter;
    }
    return T[m][W - 1] == Rational(0);
}

}  // namespace

BalanceReport balance_admissible(const std::vector<VertexType>& avc) {
    BalanceReport rep;
    bool has_d2 = false, has_e2 = false;
    for (const auto& v : avc) {
        if (v[3] >= 2) has_d2 = true;
        if (v[4] >= 2) has_e2 = true;
    }
    if (!has_d2 && !has_e2) {
        for (const auto& v : avc)
            if (v[3] + v[4] > 0 && !(v[3] == 1 && v[4] == 1)) {
                rep.ok = false;
                rep.note = "balance: " + vertex_name(v) + " has delta/epsilon but is not of the form δε···";
                return rep;
            }
    } else {
        rep.note = "balance hypothesis not met (δ² or ε² present)";
    }
    // counts c_v >= 1 with every angle appearing the same number of times
    const int V = static_cast<int>(avc.size());
    std::vector<std::vector<Rational>> A(5, std::vector<Rational>(V + 1, 0));
    std::vector<Rational> b(5, 0);
    for (int i = 0; i < 5; ++i) {
        for (int v = 0; v < V; ++v) {
            A[i][v] = avc[v][i];
            b[i] -= avc[v][i];
        }
        A[i][V] = -1;
    }
    if (V == 0 || !feasible(A, b)) {
        rep.ok = false;
        rep.note = "global balance: no positive vertex counts give every angle the same total";
    }
    return rep;
}

CountingResult counting_identities(const std::map<int, int>& hist) {
    int f = 12, v3 = 20;
    for (auto [k, n] : hist) {
        if (k < 3) throw DomainError("vertex of degree < 3");
        if (k == 3) continue;
        f += 2 * (k - 3) * n;
        v3 += (3 * k - 10) * n;
    }
    return {f, v3};
}

namespace {

const char* kGreek[5] = {"α", "β", "γ", "δ", "ε"};
const char* kSup[10] = {"⁰", "¹", "²", "³", "⁴", "⁵", "⁶", "⁷", "⁸", "⁹"};

}  // namespace

std::string vertex_name(const VertexType& v) {
    std::string s;
    for (int i = 0; i < 5; ++i) {
        if (v[i] == 0) continue;
        s += kGreek[i];
        if (v[i] > 1)
            for (char d : std::to_string(v[i])) s += kSup[d - '0'];
    }
    return s;
}

std::string census_string(const Census& c) {
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (auto it = c.begin(); it != c.end(); ++it) {
        if (!first) os << ", ";
        first = false;
        os << vertex_name(it->first) << ":" << it->second;
    }
    os << "}";
    return os.str();
}

namespace {

// next token: angle index or -1; advances pos
int read_letter(const std::string& s, size_t& pos) {
    char c = s[pos];
    if (c >= 'a' && c <= 'e') {
        ++pos;
        return c - 'a';
    }
    for (int i = 0; i < 5; ++i) {
        std::string g = kGreek[i];
        if (s.compare(pos, g.size(), g) == 0) {
            pos += g.size();
            return i;
        }
    }
    return -1;
}

int read_exponent(const std::string& s, size_t& pos) {
    if (pos < s.size() && s[pos] == '^') ++pos;
    std::string digits;
    while (pos < s.size()) {
        if (std::isdigit(static_cast<unsigned char>(s[pos]))) {
            digits += s[pos++];
            continue;
        }
        bool matched = false;
        for (int d = 0; d < 10; ++d) {
            std::string g = kSup[d];
            if (s.compare(pos, g.size(), g) == 0) {
                digits += static_cast<char>('0' + d);
                pos += g.size();
                matched = true;
                break;
            }
        }
        if (!matched) break;
    }
    return digits.empty() ? 1 : std::stoi(digits);
}

}  // namespace

VertexType parse_vertex(const std::string& s) {
    VertexType v{};
    size_t pos = 0;
    while (pos < s.size()) {
        if (std::isspace(static_cast<unsigned char>(s[pos]))) {
            ++pos;
            continue;
        }
        int k = read_letter(s, pos);
        if (k < 0) throw ParameterError("cannot parse vertex type: " + s);
        v[k] += read_exponent(s, pos);
    }
    if (degree(v) == 0) throw ParameterError("empty vertex type");
    return v;
}

Census parse_census(const std::string& text) {
    Census c;
    std::string s;
    for (char ch : text)
        if (ch != '{' && ch != '}' && ch != '(' && ch != ')') s += ch;
    if (s.rfind("T", 0) == 0) s = s.substr(1);
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto b = item.find_first_not_of(" \t");
        if (b == std::string::npos) continue;
        item = item.substr(b, item.find_last_not_of(" \t") - b + 1);
        int count = 1;
        std::string name = item;
        auto colon = item.find(':');
        if (colon != std::string::npos) {
            name = item.substr(0, colon);
            count = std::stoi(item.substr(colon + 1));
        } else {
            size_t p = 0;
            while (p < item.size() && std::isdigit(static_cast<unsigned char>(item[p]))) ++p;
            if (p > 0) {
                count = std::stoi(item.substr(0, p));
                name = item.substr(p);
            }
        }
        c[parse_vertex(name)] += count;
    }
    return c;
}

}  // namespace sphaera
