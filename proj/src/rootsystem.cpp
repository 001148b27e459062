#include "fanopoly/rootsystem.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace fanopoly {

namespace {

constexpr size_t kWeylCap = 1000000;  // closure fails loudly past this

struct Factor {
    int rank;              // coordinates contributed
    Mat gram;              // rank x rank block
    std::vector<Vec> simple;  // simple roots in factor coordinates
    long expected_positive;   // |Phi+| of the factor
    long expected_weyl;       // |W| of the factor
};

long factorial_l(int n) {
    long f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

Mat cartan_A(int r) {
    Mat c(r, zero_vec(r));
    for (int i = 0; i < r; ++i) {
        c[i][i] = 2;
        if (i + 1 < r) c[i][i + 1] = c[i + 1][i] = -1;
    }
    return c;
}

// Chain types with one double bond at the end; `last_short` picks B vs C.
Factor classical_factor(char family, int r) {
    Factor f;
    f.rank = r;
    std::vector<Rational> d(r, Rational(1));
    Mat c;
    switch (family) {
        case 'A':
            if (r < 1) throw input_error("A_r requires r >= 1");
            c = cartan_A(r);
            f.expected_positive = static_cast<long>(r) * (r + 1) / 2;
            f.expected_weyl = factorial_l(r + 1);
            break;
        case 'B':
            if (r < 2) throw input_error("B_r requires r >= 2");
            c = cartan_A(r);
            c[r - 1][r - 2] = -2;  // alpha_r short
            for (int i = 0; i < r - 1; ++i) d[i] = 2;
            f.expected_positive = static_cast<long>(r) * r;
            f.expected_weyl = factorial_l(r) << r;
            break;
        case 'C':
            if (r < 2) throw input_error("C_r requires r >= 2");
            c = cartan_A(r);
            c[r - 2][r - 1] = -2;  // alpha_r long
            d[r - 1] = 2;
            f.expected_positive = static_cast<long>(r) * r;
            f.expected_weyl = factorial_l(r) << r;
            break;
        case 'D':
            if (r < 3) throw input_error("D_r requires r >= 3");
            c = cartan_A(r);
            c[r - 1][r - 2] = c[r - 2][r - 1] = 0;
            c[r - 1][r - 3] = c[r - 3][r - 1] = -1;  // fork at node r-3
            f.expected_positive = static_cast<long>(r) * (r - 1);
            f.expected_weyl = factorial_l(r) << (r - 1);
            break;
        default:
            throw internal_error("classical_factor: bad family");
    }
    // gram(i,j) = d_i * C_ij, symmetric by construction of d
    f.gram = Mat(r, zero_vec(r));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) f.gram[i][j] = d[i] * c[i][j];
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
            if (f.gram[i][j] != f.gram[j][i]) throw internal_error("asymmetric Gram block");
    for (int i = 0; i < r; ++i) {
        Vec e = zero_vec(r);
        e[i] = 1;
        f.simple.push_back(e);
    }
    return f;
}

Factor g2_factor() {
    Factor f;
    f.rank = 2;
    // alpha_1 long (d=3), alpha_2 short (d=1); C = [[2,-1],[-3,2]]
    f.gram = {{Rational(6), Rational(-3)}, {Rational(-3), Rational(2)}};
    f.simple = {{Rational(1), Rational(0)}, {Rational(0), Rational(1)}};
    f.expected_positive = 6;
    f.expected_weyl = 12;
    return f;
}

Factor torus_factor(int k) {
    if (k < 1) throw input_error("T_k requires k >= 1");
    Factor f;
    f.rank = k;
    f.gram = identity_mat(k);
    f.expected_positive = 0;
    f.expected_weyl = 1;
    return f;
}

// The Z^2 realization fixed for SO4(C): alpha = (1,1), (1,-1), gram = I.
Factor so4_factor() {
    Factor f;
    f.rank = 2;
    f.gram = identity_mat(2);
    f.simple = {{Rational(1), Rational(1)}, {Rational(1), Rational(-1)}};
    f.expected_positive = 2;
    f.expected_weyl = 4;
    return f;
}

Factor parse_factor(const std::string& tok) {
    if (tok.empty()) throw input_error("empty factor in type label");
    char head = static_cast<char>(std::toupper(static_cast<unsigned char>(tok[0])));
    std::string num = tok.substr(1);
    for (char ch : num)
        if (!std::isdigit(static_cast<unsigned char>(ch)))
            throw input_error("unknown type label factor '" + tok + "'");
    if (num.empty()) throw input_error("unknown type label factor '" + tok + "'");
    int r = std::stoi(num);
    if (r == 0) throw input_error("rank 0 factor '" + tok + "'");
    switch (head) {
        case 'A':
        case 'B':
        case 'C':
        case 'D':
            if (r > 9) throw input_error("rank too large in '" + tok + "'");
            return classical_factor(head, r);
        case 'G':
            if (r != 2) throw input_error("unknown type label factor '" + tok + "'");
            return g2_factor();
        case 'T':
            if (r > 4) throw input_error("torus rank too large in '" + tok + "'");
            return torus_factor(r);
        default:
            throw input_error("unknown type label factor '" + tok + "'");
    }
}

std::string vec_key(const Vec& v) {
    std::string k;
    for (const auto& x : v) {
        k += x.get_str();
        k += ',';
    }
    return k;
}

std::string mat_key(const Mat& m) {
    std::string k;
    for (const auto& row : m) k += vec_key(row);
    return k;
}

// Closure of the generator set under multiplication (breadth-first).
std::vector<Mat> group_closure(const std::vector<Mat>& gens, int n) {
    std::vector<Mat> elems{identity_mat(n)};
    std::set<std::string> seen{mat_key(elems[0])};
    size_t head = 0;
    while (head < elems.size()) {
        Mat cur = elems[head++];
        for (const auto& g : gens) {
            Mat next = mat_mul(g, cur);
            if (seen.insert(mat_key(next)).second) {
                elems.push_back(std::move(next));
                if (elems.size() > kWeylCap) throw internal_error("Weyl closure exceeds cap");
            }
        }
    }
    return elems;
}

std::vector<Vec> orbit_under(const std::vector<Mat>& group, const Vec& v) {
    std::set<std::string> seen;
    std::vector<Vec> out;
    for (const auto& w : group) {
        Vec img = mat_vec(w, v);
        if (seen.insert(vec_key(img)).second) out.push_back(std::move(img));
    }
    std::sort(out.begin(), out.end(), lex_less);
    return out;
}

std::string canonical_label(const std::string& raw) {
    std::string s;
    for (char c : raw)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    std::string lower;
    for (char c : s) lower += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (lower == "so4" || lower == "so(4)" || lower == "a1xa1") return "so4";
    // normalize: upper family letters, lowercase separators
    std::string out;
    for (char c : s) {
        if (c == 'x' || c == 'X')
            out += 'x';
        else
            out += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    }
    return out;
}

}  // namespace

RootSystem build_root_system(const std::string& type_label) {
    std::string label = canonical_label(type_label);
    if (label.empty()) throw input_error("empty type label");

    std::vector<Factor> factors;
    if (label == "so4") {
        factors.push_back(so4_factor());
    } else {
        size_t start = 0;
        for (size_t i = 0; i <= label.size(); ++i) {
            if (i == label.size() || label[i] == 'x') {
                factors.push_back(parse_factor(label.substr(start, i - start)));
                start = i + 1;
            }
        }
        if (factors.empty()) throw input_error("empty type label");
    }

    RootSystem rs;
    rs.label = label;
    for (const auto& f : factors) rs.rank += f.rank;
    if (rs.rank == 0) throw input_error("rank 0 root system");

    rs.gram = Mat(rs.rank, zero_vec(rs.rank));
    int off = 0;
    long expected_positive = 0, expected_weyl = 1;
    for (const auto& f : factors) {
        for (int i = 0; i < f.rank; ++i)
            for (int j = 0; j < f.rank; ++j) rs.gram[off + i][off + j] = f.gram[i][j];
        for (const auto& a : f.simple) {
            Vec padded = zero_vec(rs.rank);
            for (int i = 0; i < f.rank; ++i) padded[off + i] = a[i];
            rs.simple_roots.push_back(std::move(padded));
        }
        expected_positive += f.expected_positive;
        expected_weyl *= f.expected_weyl;
        off += f.rank;
    }
    rs.ss_rank = static_cast<int>(rs.simple_roots.size());

    // simple reflections: s_i(v) = v - 2<v,a_i>/|a_i|^2 a_i
    std::vector<Mat> gens;
    for (int i = 0; i < rs.ss_rank; ++i) {
        const Vec& a = rs.simple_roots[i];
        Vec ga = mat_vec(rs.gram, a);
        Rational n2 = dot(a, ga);
        if (n2 <= 0) throw internal_error("non-positive root norm");
        Mat s = identity_mat(rs.rank);
        for (int j = 0; j < rs.rank; ++j)
            for (int k = 0; k < rs.rank; ++k) s[j][k] -= Rational(2) / n2 * a[j] * ga[k];
        gens.push_back(std::move(s));
    }
    rs.weyl = group_closure(gens, rs.rank);
    std::sort(rs.weyl.begin(), rs.weyl.end(),
              [](const Mat& a, const Mat& b) { return mat_key(a) < mat_key(b); });
    if (static_cast<long>(rs.weyl.size()) != expected_weyl)
        throw internal_error("Weyl group order mismatch for " + label);
    for (const auto& w : rs.weyl) {
        auto inv = inverse(w);
        if (!inv) throw internal_error("singular Weyl element");
        rs.weyl_dual.push_back(mat_transpose(*inv));
    }

    // roots = orbit of the simple roots; positive = nonneg combinations
    {
        std::set<std::string> seen;
        std::vector<Vec> all;
        for (const auto& a : rs.simple_roots)
            for (const auto& img : orbit_under(rs.weyl, a))
                if (seen.insert(vec_key(img)).second) all.push_back(img);
        // coefficients in the simple-root basis via the Gram normal equations
        Mat a_gram(rs.ss_rank, zero_vec(rs.ss_rank));
        for (int i = 0; i < rs.ss_rank; ++i)
            for (int j = 0; j < rs.ss_rank; ++j)
                a_gram[i][j] = rs.inner(rs.simple_roots[i], rs.simple_roots[j]);
        for (const auto& root : all) {
            Vec rhs(rs.ss_rank);
            for (int i = 0; i < rs.ss_rank; ++i) rhs[i] = rs.inner(rs.simple_roots[i], root);
            auto coeff = solve(a_gram, rhs);
            if (!coeff) throw internal_error("dependent simple roots");
            bool nonneg = true, integral = true;
            for (const auto& c : *coeff) {
                if (c < 0) nonneg = false;
                if (c.get_den() != 1) integral = false;
            }
            if (!integral) throw internal_error("root with non-integer simple coefficients");
            if (nonneg) rs.positive_roots.push_back(root);
        }
        std::sort(rs.positive_roots.begin(), rs.positive_roots.end(), lex_less);
        if (static_cast<long>(rs.positive_roots.size()) != expected_positive)
            throw internal_error("positive root count mismatch for " + label);
    }

    rs.two_rho = zero_vec(rs.rank);
    for (const auto& a : rs.positive_roots) rs.two_rho = vec_add(rs.two_rho, a);

    // fundamental weights: <a_i, w_j> = delta_ij |a_j|^2 / 2, w_j in the root span
    if (rs.ss_rank > 0) {
        Mat a_gram(rs.ss_rank, zero_vec(rs.ss_rank));
        for (int i = 0; i < rs.ss_rank; ++i)
            for (int j = 0; j < rs.ss_rank; ++j)
                a_gram[i][j] = rs.inner(rs.simple_roots[i], rs.simple_roots[j]);
        for (int j = 0; j < rs.ss_rank; ++j) {
            Vec rhs = zero_vec(rs.ss_rank);
            rhs[j] = rs.root_norm2(j) / 2;
            auto coeff = solve(a_gram, rhs);
            if (!coeff) throw internal_error("dependent simple roots");
            Vec w = zero_vec(rs.rank);
            for (int i = 0; i < rs.ss_rank; ++i)
                w = vec_add(w, vec_scale((*coeff)[i], rs.simple_roots[i]));
            rs.fundamental_weights.push_back(std::move(w));
        }
    }

    // Cartan matrix from the realization
    rs.cartan = Mat(rs.ss_rank, zero_vec(rs.ss_rank));
    for (int i = 0; i < rs.ss_rank; ++i)
        for (int j = 0; j < rs.ss_rank; ++j) {
            Rational c = Rational(2) * rs.inner(rs.simple_roots[i], rs.simple_roots[j]) /
                         rs.root_norm2(i);
            if (c.get_den() != 1) throw internal_error("non-integer Cartan entry");
            rs.cartan[i][j] = c;
        }

    // duality check: <a_i, w_j> = delta_ij |a_j|^2/2
    for (int i = 0; i < rs.ss_rank; ++i)
        for (int j = 0; j < rs.ss_rank; ++j) {
            Rational want = (i == j) ? rs.root_norm2(j) / 2 : Rational(0);
            if (rs.inner(rs.simple_roots[i], rs.fundamental_weights[j]) != want)
                throw internal_error("fundamental weight duality failed");
        }
    return rs;
}

Mat inverse_cartan(const RootSystem& rs) {
    auto inv = inverse(rs.cartan);
    if (!inv) throw input_error("singular Cartan matrix (corrupted root system)");
    for (const auto& row : *inv)
        for (const auto& x : row)
            if (x < 0) throw internal_error("negative inverse-Cartan entry");
    return *inv;
}

Rational rho_pairing(const RootSystem& rs, const Vec& u) {
    if (static_cast<int>(u.size()) != rs.rank) throw input_error("rho_pairing: wrong dimension");
    Rational s(0);
    for (const auto& a : rs.positive_roots) s += abs(RootSystem::pair(u, a));
    return s / 2;
}

std::vector<Vec> weyl_orbit(const RootSystem& rs, const Vec& v) {
    if (static_cast<int>(v.size()) != rs.rank) throw input_error("weyl_orbit: wrong dimension");
    return orbit_under(rs.weyl, v);
}

std::vector<Vec> weyl_orbit_dual(const RootSystem& rs, const Vec& u) {
    if (static_cast<int>(u.size()) != rs.rank)
        throw input_error("weyl_orbit_dual: wrong dimension");
    return orbit_under(rs.weyl_dual, u);
}

namespace {

ChamberPosition classify_signs(const std::vector<Rational>& vals) {
    bool has_zero = false;
    for (const auto& s : vals) {
        if (s < 0) return ChamberPosition::outside;
        if (s == 0) has_zero = true;
    }
    return has_zero ? ChamberPosition::wall : ChamberPosition::interior;
}

}  // namespace

ChamberPosition chamber_position(const RootSystem& rs, const Vec& v) {
    std::vector<Rational> vals;
    for (int i = 0; i < rs.ss_rank; ++i) vals.push_back(rs.inner(rs.simple_roots[i], v));
    return classify_signs(vals);
}

ChamberPosition chamber_position_dual(const RootSystem& rs, const Vec& u) {
    std::vector<Rational> vals;
    for (int i = 0; i < rs.ss_rank; ++i) vals.push_back(RootSystem::pair(u, rs.simple_roots[i]));
    return classify_signs(vals);
}

RootSystem with_gram_scaled(const RootSystem& rs, const Rational& s) {
    if (s <= 0) throw input_error("gram scale must be positive");
    RootSystem out = rs;
    out.gram = mat_scale(s, rs.gram);
    return out;
}

}  // namespace fanopoly
