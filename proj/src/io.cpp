#include "toric/io.hpp"

#include <sstream>

namespace toric {

namespace {

void require(bool cond, const std::string& what) {
    if (!cond) throw Error("bad-document", what);
}

}  // namespace

Json to_json(const SimplePolytope& p) {
    Json doc;
    doc["type"] = "polytope";
    doc["dim"] = p.dim;
    doc["facets"] = p.facets;
    doc["vertices"] = p.vertices;
    return doc;
}

SimplePolytope polytope_from_json(const Json& doc) {
    require(doc.is_object(), "polytope document must be a JSON object");
    require(!doc.contains("type") || doc["type"] == "polytope", "document type is not 'polytope'");
    require(doc.contains("dim") && doc["dim"].is_number_integer(), "missing integer 'dim'");
    require(doc.contains("facets") && doc["facets"].is_array(), "missing 'facets' array");
    require(doc.contains("vertices") && doc["vertices"].is_array(), "missing 'vertices' array");
    std::vector<std::string> facets;
    for (const auto& f : doc["facets"]) {
        require(f.is_string(), "facet names must be strings");
        facets.push_back(f.get<std::string>());
    }
    std::vector<std::vector<int>> vertices;
    for (const auto& v : doc["vertices"]) {
        require(v.is_array(), "each vertex must be an array of facet indices");
        std::vector<int> idx;
        for (const auto& e : v) {
            require(e.is_number_integer(), "facet indices must be integers");
            idx.push_back(e.get<int>());
        }
        vertices.push_back(std::move(idx));
    }
    return make_polytope(doc["dim"].get<int>(), std::move(facets), std::move(vertices));
}

Json to_json(const CharacteristicPair& pair) {
    Json doc;
    doc["type"] = "pair";
    doc["polytope"] = to_json(pair.base());
    Json cols = Json::object();
    for (int f = 0; f < pair.base().facet_count(); ++f)
        cols[pair.base().facets[static_cast<size_t>(f)]] = pair.dichar.columns.col(f);
    doc["columns"] = cols;
    doc["directed"] = pair.directed;
    return doc;
}

CharacteristicPair pair_from_json(const Json& doc) {
    require(doc.is_object(), "pair document must be a JSON object");
    require(!doc.contains("type") || doc["type"] == "pair", "document type is not 'pair'");
    require(doc.contains("polytope"), "missing 'polytope'");
    require(doc.contains("columns") && doc["columns"].is_object(), "missing 'columns' object");
    SimplePolytope base = polytope_from_json(doc["polytope"]);
    IntMat cols(base.dim, base.facet_count());
    int assigned = 0;
    for (const auto& [name, value] : doc["columns"].items()) {
        int f = base.facet_index(name);
        require(value.is_array() && static_cast<int>(value.size()) == base.dim,
                "column of '" + name + "' must list dim integers");
        std::vector<Int> col;
        for (const auto& e : value) {
            require(e.is_number_integer(), "column entries must be integers");
            col.push_back(e.get<Int>());
        }
        cols.set_col(f, col);
        ++assigned;
    }
    require(assigned == base.facet_count(), "columns must cover every facet exactly once");
    bool directed = !doc.contains("directed") || doc["directed"].get<bool>();
    return CharacteristicPair{make_dicharacteristic(std::move(base), std::move(cols)), directed};
}

bool is_pair_document(const Json& doc) {
    return doc.is_object() && doc.contains("type") && doc["type"] == "pair";
}

Json to_json(const ValidationReport& rep) {
    Json doc;
    doc["valid"] = rep.ok;
    doc["problems"] = rep.problems;
    return doc;
}

Json to_json(const KernelBasis& k) {
    Json rows = Json::array();
    for (int i = 0; i < k.rows.rows(); ++i) rows.push_back(k.rows.row(i));
    Json doc;
    doc["kernel"] = rows;
    doc["rank"] = k.rows.rows();
    return doc;
}

std::string rational_string(const Rational& r) {
    std::ostringstream os;
    os << numerator(r);
    if (denominator(r) != 1) os << "/" << denominator(r);
    return os.str();
}

Json to_json(const GradedClass& cls, const SimplePolytope& base) {
    Json doc;
    doc["degree"] = cls.degree;
    doc["cohomological_degree"] = 2 * cls.degree;
    Json terms = Json::array();
    for (size_t i = 0; i < cls.basis.size(); ++i) {
        Json term;
        term["monomial"] = cls.basis[i].to_string(base);
        term["exponents"] = cls.basis[i].exponents;
        term["coefficient"] = rational_string(cls.coeffs[i]);
        terms.push_back(term);
    }
    doc["basis"] = terms;
    doc["zero"] = cls.is_zero();
    return doc;
}

Json to_json(const BettiReport& rep) {
    Json doc;
    doc["ok"] = rep.ok;
    doc["ranks"] = rep.ranks;
    doc["h"] = rep.h;
    doc["vertices"] = rep.vertex_count;
    doc["problems"] = rep.problems;
    return doc;
}

std::string face_lattice_dot(const SimplePolytope& p) {
    FaceLattice lat = face_lattice(p);
    std::ostringstream os;
    os << "digraph face_lattice {\n";
    os << "  rankdir=TB;\n";
    for (int i = 0; i < lat.size(); ++i) {
        os << "  f" << i << " [label=\"{";
        const auto& s = lat.faces[static_cast<size_t>(i)].facet_set;
        for (size_t k = 0; k < s.size(); ++k)
            os << (k ? "," : "") << p.facets[static_cast<size_t>(s[k])];
        os << "}\"];\n";
    }
    for (const auto& [a, b] : lat.covering_edges()) os << "  f" << a << " -> f" << b << ";\n";
    os << "}\n";
    return os.str();
}

}  // namespace toric
