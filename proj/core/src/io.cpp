#include "augss/io.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <sstream>

namespace augss {

PGroup parse_group(const json& spec, Scalar p) {
    if (!spec.is_object() || !spec.contains("kind"))
        throw SchemaError("group: expected an object with a kind");
    std::string kind = spec.at("kind").get<std::string>();
    if (kind == "trivial") return trivial_group(p);
    if (kind == "cyclic") return cyclic_group(spec.at("order").get<std::size_t>());
    if (kind == "elementary_abelian")
        return elementary_abelian_group(p, spec.at("rank").get<std::size_t>());
    if (kind == "product") {
        const auto& factors = spec.at("factors");
        if (!factors.is_array() || factors.empty()) throw SchemaError("product: need factors");
        PGroup g = parse_group(factors[0], p);
        for (std::size_t i = 1; i < factors.size(); ++i)
            g = product_group(g, parse_group(factors[i], p));
        return g;
    }
    if (kind == "metacyclic")
        return metacyclic_group(spec.at("n").get<std::size_t>(), spec.at("m").get<std::size_t>(),
                                spec.at("s").get<std::size_t>(), spec.at("k").get<std::size_t>());
    if (kind == "heisenberg") return heisenberg_group(p);
    if (kind == "table") {
        auto table = spec.at("table").get<std::vector<std::vector<std::size_t>>>();
        return table_group(p, std::move(table));
    }
    throw SchemaError("group: unknown kind '" + kind + "'");
}

json group_to_json(const PGroup& g, Scalar p) {
    json out;
    out["kind"] = "table";
    out["p"] = p;
    out["table"] = g.mul;
    out["name"] = g.name;
    return out;
}

AlgebraElement parse_algebra_element(const AlgebraPtr& A, const json& spec, bool structured) {
    if (!spec.is_array()) throw SchemaError("algebra element: expected a list of terms");
    AlgebraElement out = AlgebraElement::zero(A);
    for (const auto& term : spec) {
        if (!term.is_array() || term.size() != 2)
            throw SchemaError("algebra element: each term is [coeff, monomial]");
        Scalar c = term[0].get<Scalar>() % A->p();
        std::size_t g;
        if (structured) {
            auto exps = term[1].get<std::vector<Scalar>>();
            if (exps.size() != A->jennings().basis.size())
                throw SchemaError("algebra element: wrong monomial arity");
            g = A->element_from_exponents(exps);
        } else {
            g = term[1].get<std::size_t>();
            if (g >= A->size()) throw SchemaError("algebra element: element index out of range");
        }
        out = out + AlgebraElement::group_element(A, g).scaled(c);
    }
    return out;
}

json algebra_element_to_json(const AlgebraElement& u, bool structured) {
    json out = json::array();
    const AlgebraPtr& A = u.algebra();
    for (std::size_t g = 0; g < A->size(); ++g) {
        if (!u[g]) continue;
        json mono;
        if (structured)
            mono = A->jennings().normal_form[g];
        else
            mono = g;
        out.push_back(json::array({u[g], mono}));
    }
    return out;
}

FreeComplex parse_complex(const AlgebraPtr& A, const json& spec, bool structured) {
    if (!spec.is_object()) throw SchemaError("complex: expected an object");
    std::string kind = spec.value("kind", "cochain");
    if (kind != "cochain" && kind != "chain") throw SchemaError("complex: bad kind");
    Direction dir = kind == "chain" ? Direction::chain : Direction::cochain;
    int min_deg = spec.value("min_degree", 0);
    auto ranks = spec.at("ranks").get<std::vector<std::size_t>>();
    const auto& ds = spec.at("differentials");
    if (!ds.is_array() || ds.size() + 1 != ranks.size())
        throw SchemaError("complex: need one differential per adjacent degree pair");
    std::vector<AlgMatrix> diffs;
    for (std::size_t i = 0; i < ds.size(); ++i) {
        std::size_t rows = dir == Direction::chain ? ranks[i] : ranks[i + 1];
        std::size_t cols = dir == Direction::chain ? ranks[i + 1] : ranks[i];
        AlgMatrix m(A, rows, cols);
        const auto& dj = ds[i];
        if (!dj.is_array() || dj.size() != rows) throw SchemaError("complex: bad differential rows");
        for (std::size_t r = 0; r < rows; ++r) {
            if (!dj[r].is_array() || dj[r].size() != cols)
                throw SchemaError("complex: bad differential columns");
            for (std::size_t c = 0; c < cols; ++c)
                m.at(r, c) = parse_algebra_element(A, dj[r][c], structured);
        }
        diffs.push_back(std::move(m));
    }
    try {
        return FreeComplex(A, dir, min_deg, std::move(ranks), std::move(diffs));
    } catch (const std::invalid_argument& e) {
        throw std::domain_error(e.what());  // d^2 != 0 and shape errors: exit 3
    }
}

json complex_to_json(const FreeComplex& c, bool structured) {
    json out;
    out["kind"] = c.direction() == Direction::chain ? "chain" : "cochain";
    out["min_degree"] = c.min_degree();
    out["ranks"] = c.ranks();
    json ds = json::array();
    for (std::size_t i = 0; i < c.diff_count(); ++i) {
        const AlgMatrix& m = c.diff_at(i);
        json rows = json::array();
        for (std::size_t r = 0; r < m.rows; ++r) {
            json row = json::array();
            for (std::size_t s = 0; s < m.cols; ++s)
                row.push_back(algebra_element_to_json(m.at(r, s), structured));
            rows.push_back(std::move(row));
        }
        ds.push_back(std::move(rows));
    }
    out["differentials"] = std::move(ds);
    return out;
}

KoszulCycle parse_cycle(const KoszulComplex& K, const json& spec) {
    if (!spec.is_object() || !spec.contains("r")) throw SchemaError("cycle: expected {r, mu}");
    std::size_t r = spec.at("r").get<std::size_t>();
    if (r > K.a) throw SchemaError("cycle: degree exceeds the rank");
    std::vector<Scalar> mu(K.subsets[r].size(), 0);
    if (spec.contains("mu")) {
        const auto& m = spec.at("mu");
        if (!m.is_object()) throw SchemaError("cycle: mu must map subsets to coefficients");
        for (auto it = m.begin(); it != m.end(); ++it) {
            std::vector<std::size_t> subset;
            std::stringstream ss(it.key());
            std::string piece;
            while (std::getline(ss, piece, ','))
                if (!piece.empty()) subset.push_back(std::stoul(piece));
            std::sort(subset.begin(), subset.end());
            if (subset.size() != r) throw SchemaError("cycle: subset '" + it.key() + "' has size != r");
            for (std::size_t x : subset)
                if (x < 1 || x > K.a) throw SchemaError("cycle: subset entry out of range");
            mu.at(K.subset_index(subset)) = it.value().get<Scalar>() % K.A->p();
        }
    }
    return cycle_from_mu(K, r, std::move(mu));
}

json cycle_to_json(const KoszulComplex& K, const KoszulCycle& w) {
    json mu = json::object();
    for (std::size_t s = 0; s < w.mu.size(); ++s) {
        if (!w.mu[s]) continue;
        std::string key;
        for (std::size_t x : K.subsets[w.r][s]) {
            if (!key.empty()) key += ",";
            key += std::to_string(x);
        }
        mu[key] = w.mu[s];
    }
    return json{{"r", w.r}, {"mu", std::move(mu)}};
}

ParsedInput parse_input(const json& doc) {
    if (!doc.is_object() || !doc.contains("p")) throw SchemaError("input: missing prime p");
    ParsedInput in;
    in.p = doc.at("p").get<Scalar>();
    if (!is_prime(in.p)) throw SchemaError("input: p is not prime");
    if (!doc.contains("group")) throw SchemaError("input: missing group");
    in.structured = doc.at("group").value("kind", "") != "table";
    in.algebra = GroupAlgebra::make(parse_group(doc.at("group"), in.p));
    if (doc.contains("complex"))
        in.complex = parse_complex(in.algebra, doc.at("complex"), in.structured);
    if (doc.contains("cycle")) in.cycle = doc.at("cycle");
    return in;
}

json page_to_json(const PageTable& pt) {
    json cells = json::array();
    for (std::size_t k = 0; k <= pt.L; ++k)
        for (int q = pt.min_q; q <= pt.max_q; ++q) {
            const PageCell& c = pt.cell(k, q);
            json cell{{"k", k}, {"q", q}, {"dim", c.dim}};
            if (c.d.rows()) cell["d_rank"] = rank(c.d);
            cells.push_back(std::move(cell));
        }
    return json{{"page", pt.r}, {"L", pt.L}, {"cells", std::move(cells)}};
}

std::string page_to_ascii(const PageTable& pt) {
    std::ostringstream os;
    auto pad = [&](const std::string& s, std::size_t w) {
        return std::string(s.size() >= w ? 0 : w - s.size(), ' ') + s;
    };
    os << "E_" << pt.r << " page\n";
    os << pad("q \\ k", 6) << " |";
    for (std::size_t k = 0; k <= pt.L; ++k) os << pad(std::to_string(k), 5);
    os << "\n" << std::string(7, '-') << "+" << std::string(5 * (pt.L + 1), '-') << "\n";
    for (int q = pt.max_q + 1; q >= pt.min_q; --q) {
        os << pad(std::to_string(q), 6) << " |";
        for (std::size_t k = 0; k <= pt.L; ++k)
            os << pad(std::to_string(q > pt.max_q ? 0 : pt.dim(k, q)), 5);
        os << "\n";
    }
    os << "arrows d_" << pt.r << ": E^{k,q} -> E^{k-" << pt.r << ",q+1}\n";
    bool any = false;
    for (int q = pt.min_q; q <= pt.max_q; ++q)
        for (std::size_t k = 0; k <= pt.L; ++k) {
            const PageCell& c = pt.cell(k, q);
            if (!c.d.rows()) continue;
            std::size_t rk = rank(c.d);
            if (!rk) continue;
            os << "  (" << k << "," << q << ") -> (" << k - pt.r << "," << q + 1 << ")  rank "
               << rk << "\n";
            any = true;
        }
    if (!any) os << "  (none)\n";
    return os.str();
}

std::string page_to_csv(const PageTable& pt) {
    std::ostringstream os;
    os << "page,k,q,dim,d_rank\n";
    for (std::size_t k = 0; k <= pt.L; ++k)
        for (int q = pt.min_q; q <= pt.max_q; ++q) {
            const PageCell& c = pt.cell(k, q);
            os << pt.r << "," << k << "," << q << "," << c.dim << ","
               << (c.d.rows() ? rank(c.d) : 0) << "\n";
        }
    return os.str();
}

json witness_to_json(const ObstructionWitness& w) {
    json subset = json::array();
    for (std::size_t x : w.subset) subset.push_back(x);
    return json{{"p", w.p},
                {"a", w.a},
                {"r", w.r},
                {"subset", std::move(subset)},
                {"mu", w.mu},
                {"page", w.page},
                {"product_class", w.product_class},
                {"factor_classes", w.factor_classes},
                {"d_image", w.d_image},
                {"target_class", w.target_class},
                {"unit", w.unit},
                {"verdict", w.verdict}};
}

json annihilator_to_json(const AnnihilatorIdeal& ideal) {
    json gens = json::array();
    for (const auto& [deg, coeffs] : ideal.generators)
        gens.push_back(json{{"degree", deg},
                            {"coefficients", coeffs},
                            {"polynomial", polynomial_string(ideal, deg, coeffs)}});
    json dims = json::array();
    for (const auto& basis : ideal.degree_basis) dims.push_back(basis.size());
    return json{{"unit_ideal", ideal.unit_ideal},
                {"top_degree", ideal.top_degree},
                {"degree_dims", std::move(dims)},
                {"generators", std::move(gens)}};
}

json realization_to_json(const RealizationResult& r, bool emit_model) {
    json out;
    switch (r.verdict) {
        case Verdict::Realized: out["verdict"] = "realized"; break;
        case Verdict::NotRealizable: out["verdict"] = "not_realizable"; break;
        case Verdict::EmptySpace: out["verdict"] = "empty_space"; break;
    }
    out["model"] = r.model_name;
    out["cone_homology"] = r.cone_homology;
    out["cone_minimal_profile"] = r.cone_minimal_profile;
    if (r.model) {
        out["model_homology"] = r.model_homology;
        out["model_minimal_profile"] = r.model_minimal_profile;
        out["certificate"] = r.certificate ? "verified chain isomorphism" : "none";
        if (emit_model) out["model_complex"] = complex_to_json(*r.model, true);
    }
    if (r.witness) out["witness"] = witness_to_json(*r.witness);
    return out;
}

}  // namespace augss
