#include "toric/families.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace toric {

std::string FamilySpec::to_string() const {
    std::ostringstream os;
    switch (kind) {
        case Kind::CPn:
            os << "cpn(" << n << "," << (variant_lprime ? "lprime" : "l") << ")";
            break;
        case Kind::Bn:
            os << "bn(" << n << ")";
            break;
        case Kind::Bij:
            os << "bij(" << i << "," << j << ")";
            break;
        case Kind::Product:
            os << "product(";
            for (size_t k = 0; k < factors.size(); ++k) os << (k ? "," : "") << factors[k].to_string();
            os << ")";
            break;
    }
    return os.str();
}

namespace {

struct Parser {
    const std::string& s;
    size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!eat(c)) throw Error("bad-spec", std::string("expected '") + c + "' in family spec '" + s + "'");
    }
    std::string word() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_')) ++pos;
        return s.substr(start, pos - start);
    }
    int number() {
        std::string w = word();
        if (w.empty() || !std::all_of(w.begin(), w.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
            throw Error("bad-spec", "expected a number in family spec '" + s + "'");
        return std::stoi(w);
    }

    FamilySpec spec() {
        std::string head = word();
        FamilySpec f;
        if (head == "cpn") {
            f.kind = FamilySpec::Kind::CPn;
            expect('(');
            f.n = number();
            expect(',');
            std::string variant = word();
            if (variant == "l")
                f.variant_lprime = false;
            else if (variant == "lprime")
                f.variant_lprime = true;
            else
                throw Error("bad-spec", "cpn variant must be 'l' or 'lprime'");
            expect(')');
        } else if (head == "bn") {
            f.kind = FamilySpec::Kind::Bn;
            expect('(');
            f.n = number();
            expect(')');
        } else if (head == "bij") {
            f.kind = FamilySpec::Kind::Bij;
            expect('(');
            f.i = number();
            expect(',');
            f.j = number();
            expect(')');
        } else if (head == "product") {
            f.kind = FamilySpec::Kind::Product;
            expect('(');
            f.factors.push_back(spec());
            while (eat(',')) f.factors.push_back(spec());
            expect(')');
        } else {
            throw Error("bad-spec", "unknown family '" + head + "' in spec '" + s + "'");
        }
        return f;
    }
};

CharacteristicPair build_cpn(int n, bool lprime) {
    if (n < 1) throw Error("bad-spec", "cpn needs n >= 1");
    SimplePolytope base = make_simplex(n);
    IntMat cols(n, n + 1);
    for (int r = 0; r < n; ++r) cols.at(r, r) = 1;
    for (int r = 0; r < n; ++r) cols.at(r, n) = lprime ? 1 : -1;
    return CharacteristicPair{make_dicharacteristic(std::move(base), std::move(cols)), true};
}

CharacteristicPair build_bn(int n) {
    if (n < 1) throw Error("bad-spec", "bn needs n >= 1");
    SimplePolytope base = make_cube(n);
    IntMat cols(n, 2 * n);
    for (int r = 0; r < n; ++r) {
        cols.at(r, 2 * r) = -1;                      // C_{r+1}^0
        for (int s = 0; s <= r; ++s) cols.at(s, 2 * r + 1) = -1;  // C_{r+1}^1
    }
    return CharacteristicPair{make_dicharacteristic(std::move(base), std::move(cols)), true};
}

CharacteristicPair build_bij(int i, int j) {
    if (i < 0 || j < i || j < 1) throw Error("bad-spec", "bij needs 0 <= i <= j, j >= 1");
    if (i == 0) return build_cpn(j - 1, /*lprime=*/false);  // degenerate cube factor
    if (i == 1 && j == 1) return build_bn(1);               // degenerate simplex factor
    int n = i + j - 1;
    SimplePolytope raw = product(make_cube(i), make_simplex(j - 1));
    std::vector<std::string> names;
    for (int r = 1; r <= i; ++r) {
        names.push_back("E_" + std::to_string(r) + "^0");
        names.push_back("E_" + std::to_string(r) + "^1");
    }
    for (int s = 1; s <= j; ++s) names.push_back("E_" + std::to_string(s));
    SimplePolytope base = rename_facets(raw, names);

    IntMat cols(n, base.facet_count());
    auto simplex_col = [&](int s) {  // 1-based
        std::vector<Int> c(static_cast<size_t>(n), 0);
        if (s <= j - 1)
            c[static_cast<size_t>(i + s - 1)] = 1;
        else
            for (int t = i; t < i + j - 1; ++t) c[static_cast<size_t>(t)] = -1;
        return c;
    };
    for (int s = 1; s <= j; ++s) cols.set_col(2 * i + s - 1, simplex_col(s));
    for (int r = 1; r <= i; ++r) {
        std::vector<Int> c0 = simplex_col(r);
        c0[static_cast<size_t>(r - 1)] = checked_sub(c0[static_cast<size_t>(r - 1)], 1);
        cols.set_col(2 * (r - 1), c0);
        std::vector<Int> c1(static_cast<size_t>(n), 0);
        for (int t = 0; t < r; ++t) c1[static_cast<size_t>(t)] = -1;
        for (int t = i; t < i + r - 1; ++t) c1[static_cast<size_t>(t)] = 1;
        cols.set_col(2 * (r - 1) + 1, c1);
    }
    return CharacteristicPair{make_dicharacteristic(std::move(base), std::move(cols)), true};
}

}  // namespace

FamilySpec parse_family_spec(const std::string& text) {
    Parser parser{text};
    FamilySpec f = parser.spec();
    parser.skip_ws();
    if (parser.pos != text.size())
        throw Error("bad-spec", "trailing characters in family spec '" + text + "'");
    return f;
}

CharacteristicPair pair_product(const CharacteristicPair& a, const CharacteristicPair& b) {
    SimplePolytope base = product(a.base(), b.base());
    int na = a.base().dim, nb = b.base().dim;
    int ma = a.base().facet_count(), mb = b.base().facet_count();
    IntMat cols(na + nb, ma + mb);
    for (int f = 0; f < ma; ++f)
        for (int r = 0; r < na; ++r) cols.at(r, f) = a.dichar.columns.at(r, f);
    for (int f = 0; f < mb; ++f)
        for (int r = 0; r < nb; ++r) cols.at(na + r, ma + f) = b.dichar.columns.at(r, f);
    return CharacteristicPair{make_dicharacteristic(std::move(base), std::move(cols)),
                              a.directed && b.directed};
}

CharacteristicPair build(const FamilySpec& spec) {
    switch (spec.kind) {
        case FamilySpec::Kind::CPn:
            return build_cpn(spec.n, spec.variant_lprime);
        case FamilySpec::Kind::Bn:
            return build_bn(spec.n);
        case FamilySpec::Kind::Bij:
            return build_bij(spec.i, spec.j);
        case FamilySpec::Kind::Product: {
            if (spec.factors.empty()) throw Error("bad-spec", "product needs at least one factor");
            CharacteristicPair acc = build(spec.factors[0]);
            for (size_t k = 1; k < spec.factors.size(); ++k)
                acc = pair_product(acc, build(spec.factors[k]));
            return acc;
        }
    }
    throw Error("internal", "unreachable family kind");
}

CharacteristicPair representative(const std::vector<ConnSummand>& summands) {
    if (summands.empty()) throw Error("bad-spec", "representative needs at least one summand");
    std::vector<CharacteristicPair> built;
    built.reserve(summands.size());
    for (const auto& s : summands) built.push_back(build(s.spec));
    int n = built[0].base().dim;
    for (const auto& p : built)
        if (p.base().dim != n)
            throw Error("dimension-mismatch", "summands must share one dimension",
                        std::to_string(p.base().dim) + " vs " + std::to_string(n));
    if (summands.size() == 1) return built[0];
    if (n < 2)
        throw Error("degenerate-dim-1",
                    "connected-sum representatives need dimension at least 2");
    CharacteristicPair acc = built[0];
    for (size_t k = 1; k < summands.size(); ++k) {
        SumSide left_side = (k == 1) ? summands[0].side : SumSide{};
        acc = dichar_connected_sum(acc, left_side, built[k], summands[k].side);
    }
    return acc;
}

}  // namespace toric
