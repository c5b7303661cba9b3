#include "mudom/json_io.hpp"

#include <ostream>

namespace mudom {

json complex_to_json(Complex z) { return json::array({z.real(), z.imag()}); }

Complex json_to_complex(const json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        throw std::invalid_argument("complex values must be [re, im]");
    return {j[0].get<double>(), j[1].get<double>()};
}

json point_to_json(const CPoint& x) {
    json a = json::array();
    for (const auto& z : x) a.push_back(complex_to_json(z));
    return a;
}

CPoint json_to_point(const json& j) {
    if (!j.is_array()) throw std::invalid_argument("point must be an array");
    CPoint x;
    x.reserve(j.size());
    for (const auto& e : j) x.push_back(json_to_complex(e));
    return x;
}

json matrix_to_json(const CMatrix& A) {
    json rows = json::array();
    for (int r = 0; r < A.n; ++r) {
        json row = json::array();
        for (int c = 0; c < A.n; ++c)
            row.push_back(complex_to_json(A.entries[(size_t)(r * A.n + c)]));
        rows.push_back(std::move(row));
    }
    return rows;
}

CMatrix json_to_matrix(const json& j) {
    if (!j.is_array() || j.empty())
        throw std::invalid_argument("matrix must be a nonempty array of rows");
    int n = (int)j.size();
    CMatrix A(n);
    for (int r = 0; r < n; ++r) {
        if (!j[(size_t)r].is_array() || (int)j[(size_t)r].size() != n)
            throw std::invalid_argument("matrix must be square");
        for (int c = 0; c < n; ++c)
            A.at(r, c) = json_to_complex(j[(size_t)r][(size_t)c]);
    }
    return A;
}

const char* membership_name(Membership m) {
    switch (m) {
        case Membership::Inside: return "Inside";
        case Membership::Outside: return "Outside";
        case Membership::Boundary: return "Boundary";
        default: return "Undetermined";
    }
}

Membership membership_from_name(const std::string& name) {
    if (name == "Inside") return Membership::Inside;
    if (name == "Outside") return Membership::Outside;
    if (name == "Boundary") return Membership::Boundary;
    if (name == "Undetermined") return Membership::Undetermined;
    throw std::invalid_argument("unknown membership name: " + name);
}

const char* method_name(MemberMethod m) {
    switch (m) {
        case MemberMethod::Roots: return "Roots";
        case MemberMethod::PsiRecursive: return "PsiRecursive";
        default: return "CertifiedGrid";
    }
}

json membership_to_json(const MembershipResult& r) {
    json j;
    j["status"] = membership_name(r.status);
    j["method"] = method_name(r.method);
    j["margin"] = r.margin;
    if (r.witness) j["witness"] = point_to_json(*r.witness);
    return j;
}

json mu_interval_to_json(const MuInterval& iv) {
    return json{{"lo", iv.lo}, {"hi", iv.hi}, {"exact", iv.exact}};
}

json table_to_json(const MultiIndexTable& t) {
    json j;
    j["blocks"] = t.blocks;
    j["s"] = t.s;
    j["n"] = t.n;
    j["N"] = t.N;
    j["alphas"] = t.alphas;
    j["degrees"] = t.degrees;
    return j;
}

json embedding_to_json(const EmbeddingResult& e) {
    return json{{"m_weights", e.m_weights},
                {"M", e.M},
                {"x_tilde", point_to_json(e.x_tilde)}};
}

json functional_to_json(const AffineFunctional& f) {
    return json{{"c0", complex_to_json(f.c0)},
                {"coeffs", point_to_json(f.coeffs)}};
}

json section_to_json(const SectionMap& map) {
    json j;
    j["basepoint"] = point_to_json(map.basepoint);
    j["direction"] = point_to_json(map.direction);
    j["window"] = {map.window.re_lo, map.window.re_hi, map.window.im_lo,
                   map.window.im_hi};
    j["resolution"] = map.resolution;
    j["components"] = map.components;
    j["holes"] = map.holes;
    j["undetermined_cells"] = map.undetermined_cells;
    long long inside = 0;
    for (auto v : map.grid) inside += v;
    j["inside_cells"] = inside;
    return j;
}

json report_envelope(const std::string& subcommand, json inputs, json result) {
    json j;
    j["schema_version"] = kSchemaVersion;
    j["tool"] = "mudom";
    j["subcommand"] = subcommand;
    j["inputs"] = std::move(inputs);
    j["result"] = std::move(result);
    return j;
}

void write_section_csv(const SectionMap& map, std::ostream& os) {
    os << "lambda_re,lambda_im,status\n";
    const double dre = (map.window.re_hi - map.window.re_lo) / map.resolution;
    const double dim = (map.window.im_hi - map.window.im_lo) / map.resolution;
    for (int r = 0; r < map.resolution; ++r) {
        double im = map.window.im_lo + (r + 0.5) * dim;
        for (int c = 0; c < map.resolution; ++c) {
            double re = map.window.re_lo + (c + 0.5) * dre;
            os << re << ',' << im << ','
               << (int)map.grid[(size_t)(r * map.resolution + c)] << '\n';
        }
    }
}

}  // namespace mudom
