#include "toric/face_ring.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace toric {

int Monomial::degree() const {
    int d = 0;
    for (int e : exponents) d += e;
    return d;
}

std::string Monomial::to_string(const SimplePolytope& base) const {
    std::ostringstream os;
    bool first = true;
    for (size_t f = 0; f < exponents.size(); ++f) {
        if (exponents[f] == 0) continue;
        if (!first) os << "*";
        first = false;
        os << "x[" << base.facets[f] << "]";
        if (exponents[f] > 1) os << "^" << exponents[f];
    }
    if (first) os << "1";
    return os.str();
}

bool GradedClass::is_zero() const {
    return std::all_of(coeffs.begin(), coeffs.end(), [](const Rational& c) { return c == 0; });
}

GradedPresentation presentation(const CharacteristicPair& pair) {
    ValidationReport rep = validate(pair);
    if (!rep.ok) throw Error("invalid-pair", "presentation needs a valid pair", rep.problems.front());
    const SimplePolytope& p = pair.base();
    int m = p.facet_count(), n = p.dim;

    FaceLattice lat = face_lattice(p);
    std::set<std::vector<int>> faces;
    for (const auto& f : lat.faces) faces.insert(f.facet_set);

    // Minimal non-faces have at most n+1 elements: dropping any element of a
    // minimal one leaves a face, which has at most n facets.
    std::vector<std::vector<int>> gens;
    std::vector<int> subset;
    auto minimal_nonface = [&](const std::vector<int>& s) {
        if (faces.count(s)) return false;
        std::vector<int> sub;
        for (size_t drop = 0; drop < s.size(); ++drop) {
            sub.clear();
            for (size_t t = 0; t < s.size(); ++t)
                if (t != drop) sub.push_back(s[t]);
            if (!faces.count(sub)) return false;
        }
        return true;
    };
    std::function<void(int, int)> enumerate = [&](int start, int want) {
        if (want == 0) {
            if (minimal_nonface(subset)) gens.push_back(subset);
            return;
        }
        for (int f = start; f <= m - want; ++f) {
            subset.push_back(f);
            enumerate(f + 1, want - 1);
            subset.pop_back();
        }
    };
    for (int size = 2; size <= std::min(m, n + 1); ++size) enumerate(0, size);

    return GradedPresentation{p, std::move(gens), pair.dichar.columns};
}

namespace {

bool monomial_greater(const std::vector<int>& a, const std::vector<int>& b) {
    return a > b;  // same degree: plain lex on exponent vectors
}

// Degree-d workspace: the face-supported monomials of that degree (the basis
// of the quotient by the monomial ideal) and the echelon form of the linear
// relations pushed into the degree.
struct DegreeContext {
    std::vector<std::vector<int>> basis;             // exponent vectors, decreasing order
    std::map<std::vector<int>, int> column_of;
    std::vector<std::vector<Rational>> echelon;      // rows with distinct pivots, pivot coeff 1
    std::vector<int> pivot_of_row;
    std::set<int> pivot_columns;

    int reduce(std::vector<Rational>& vec) const {  // returns pivot column or -1
        for (size_t r = 0; r < echelon.size(); ++r) {
            int pc = pivot_of_row[r];
            if (vec[static_cast<size_t>(pc)] == 0) continue;
            Rational factor = vec[static_cast<size_t>(pc)];
            for (size_t c = static_cast<size_t>(pc); c < vec.size(); ++c)
                vec[c] -= factor * echelon[r][c];
        }
        for (size_t c = 0; c < vec.size(); ++c)
            if (vec[c] != 0) return static_cast<int>(c);
        return -1;
    }

    void insert(std::vector<Rational> vec) {
        int pc = reduce(vec);
        if (pc < 0) return;
        Rational lead = vec[static_cast<size_t>(pc)];
        for (auto& c : vec) c /= lead;
        // Keep earlier rows reduced against the new pivot.
        for (size_t r = 0; r < echelon.size(); ++r) {
            Rational f = echelon[r][static_cast<size_t>(pc)];
            if (f == 0) continue;
            for (size_t c = 0; c < vec.size(); ++c) echelon[r][c] -= f * vec[c];
        }
        pivot_of_row.push_back(pc);
        pivot_columns.insert(pc);
        echelon.push_back(std::move(vec));
    }
};

std::vector<std::vector<int>> face_monomials(const SimplePolytope& base,
                                             const std::set<std::vector<int>>& faces, int degree) {
    std::vector<std::vector<int>> out;
    int m = base.facet_count();
    if (degree == 0) {
        out.emplace_back(static_cast<size_t>(m), 0);
        return out;
    }
    std::vector<int> expo(static_cast<size_t>(m), 0);
    for (const auto& support : faces) {
        int k = static_cast<int>(support.size());
        if (k == 0 || k > degree) continue;
        // Positive compositions of `degree` into k parts over this support.
        std::function<void(int, int)> place = [&](int idx, int left) {
            if (idx == k - 1) {
                expo[static_cast<size_t>(support[static_cast<size_t>(idx)])] = left;
                out.push_back(expo);
                expo[static_cast<size_t>(support[static_cast<size_t>(idx)])] = 0;
                return;
            }
            for (int e = 1; e <= left - (k - 1 - idx); ++e) {
                expo[static_cast<size_t>(support[static_cast<size_t>(idx)])] = e;
                place(idx + 1, left - e);
                expo[static_cast<size_t>(support[static_cast<size_t>(idx)])] = 0;
            }
        };
        place(0, degree);
    }
    std::sort(out.begin(), out.end(), monomial_greater);
    return out;
}

DegreeContext build_degree(const GradedPresentation& pres, int degree,
                           const std::set<std::vector<int>>& faces) {
    DegreeContext ctx;
    ctx.basis = face_monomials(pres.base, faces, degree);
    for (size_t i = 0; i < ctx.basis.size(); ++i) ctx.column_of[ctx.basis[i]] = static_cast<int>(i);
    if (degree == 0) return ctx;

    int m = pres.base.facet_count();
    int n = pres.base.dim;
    std::vector<std::vector<int>> lower = face_monomials(pres.base, faces, degree - 1);
    for (const auto& u : lower) {
        for (int i = 0; i < n; ++i) {
            std::vector<Rational> row(ctx.basis.size(), 0);
            bool nonzero = false;
            for (int f = 0; f < m; ++f) {
                Int coeff = pres.linear_forms.at(i, f);
                if (coeff == 0) continue;
                std::vector<int> prod = u;
                ++prod[static_cast<size_t>(f)];
                auto it = ctx.column_of.find(prod);
                if (it == ctx.column_of.end()) continue;  // non-face support: zero in the quotient
                row[static_cast<size_t>(it->second)] += coeff;
                nonzero = true;
            }
            if (nonzero) ctx.insert(std::move(row));
        }
    }
    return ctx;
}

std::set<std::vector<int>> face_set(const SimplePolytope& base) {
    std::set<std::vector<int>> faces;
    for (const auto& f : face_lattice(base).faces) faces.insert(f.facet_set);
    return faces;
}

GradedClass reduce_to_class(int degree, const DegreeContext& ctx, std::vector<Rational> vec) {
    ctx.reduce(vec);
    GradedClass cls;
    cls.degree = degree;
    for (size_t c = 0; c < ctx.basis.size(); ++c) {
        if (ctx.pivot_columns.count(static_cast<int>(c))) continue;
        cls.basis.push_back(Monomial{ctx.basis[c]});
        cls.coeffs.push_back(vec[c]);
    }
    return cls;
}

GradedClass chern_class(const CharacteristicPair& pair, int degree, int negated_facet) {
    if (degree < 0) throw Error("bad-spec", "degree must be nonnegative");
    GradedPresentation pres = presentation(pair);
    auto faces = face_set(pres.base);
    DegreeContext ctx = build_degree(pres, degree, faces);
    std::vector<Rational> vec(ctx.basis.size(), 0);
    // Degree-d part of prod_F (1 + x_F): one squarefree term per d-subset;
    // non-face subsets are zero in the quotient already.
    for (const auto& support : faces) {
        if (static_cast<int>(support.size()) != degree) continue;
        std::vector<int> expo(static_cast<size_t>(pres.base.facet_count()), 0);
        for (int f : support) expo[static_cast<size_t>(f)] = 1;
        int sign = (negated_facet >= 0 &&
                    std::binary_search(support.begin(), support.end(), negated_facet))
                       ? -1
                       : 1;
        vec[static_cast<size_t>(ctx.column_of.at(expo))] += sign;
    }
    return reduce_to_class(degree, ctx, std::move(vec));
}

}  // namespace

long graded_rank(const GradedPresentation& pres, int degree) {
    if (degree < 0) return 0;
    auto faces = face_set(pres.base);
    DegreeContext ctx = build_degree(pres, degree, faces);
    return static_cast<long>(ctx.basis.size()) - static_cast<long>(ctx.echelon.size());
}

GradedClass total_chern(const CharacteristicPair& pair, int degree) {
    return chern_class(pair, degree, -1);
}

GradedClass total_chern_with_sign(const CharacteristicPair& pair, int degree,
                                  const std::string& negated_facet) {
    return chern_class(pair, degree, pair.base().facet_index(negated_facet));
}

BettiReport betti_check(const CharacteristicPair& pair) {
    BettiReport rep;
    ValidationReport v = validate(pair);
    if (!v.ok) {
        rep.ok = false;
        rep.problems = v.problems;
        return rep;
    }
    GradedPresentation pres = presentation(pair);
    CountVectors cv = count_vectors(pair.base());
    rep.h = cv.h;
    rep.vertex_count = pair.base().vertex_count();
    int n = pair.base().dim;
    long total = 0;
    for (int d = 0; d <= n; ++d) {
        long r = graded_rank(pres, d);
        rep.ranks.push_back(r);
        total += r;
        if (r != static_cast<long>(cv.h[static_cast<size_t>(d)])) {
            rep.ok = false;
            rep.problems.push_back("degree " + std::to_string(d) + ": rank " + std::to_string(r) +
                                   " != h_" + std::to_string(d) + " = " +
                                   std::to_string(cv.h[static_cast<size_t>(d)]));
        }
    }
    if (total != static_cast<long>(rep.vertex_count)) {
        rep.ok = false;
        rep.problems.push_back("total rank " + std::to_string(total) + " != vertex count " +
                               std::to_string(rep.vertex_count));
    }
    return rep;
}

}  // namespace toric
