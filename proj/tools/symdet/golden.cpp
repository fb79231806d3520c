#include "golden.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace symdet::cli {

namespace {

using nlohmann::json;

constexpr int kSupportedVersion = 1;

IntPoly linear_product(const json& factors) {
    IntPoly p(1L);
    for (const auto& f : factors) {
        if (!f.is_array() || f.size() != 2) throw std::runtime_error("golden: linear factor must be [a, b]");
        p *= IntPoly::linear(BigInt(f[0].get<long>()), BigInt(f[1].get<long>()));
    }
    return p;
}

IntPoly coefficient_poly(const json& coeffs) {
    std::vector<BigRat> c;
    for (const auto& x : coeffs) c.emplace_back(x.get<long>());
    return IntPoly(std::move(c));
}

Partition shape_of(const json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_string()) throw std::runtime_error(std::string("golden: missing ") + key);
    const auto text = j[key].get<std::string>();
    if (text == "()") return Partition();  // trivial constituent
    return parse_partition(text);
}

}  // namespace

std::map<BigInt, std::set<unsigned>> pairs_from_bases(const std::vector<std::pair<BigInt, std::vector<unsigned>>>& bases) {
    std::map<BigInt, std::set<unsigned>> out;
    for (const auto& [base, ks] : bases) {
        if (base <= 0) throw std::runtime_error("golden: base must be positive");
        for (const auto& [p, e] : factor_integer(base)) {
            if (e % 2 == 0) continue;
            auto& set = out[p];
            for (unsigned k : ks)
                if (!set.erase(k)) set.insert(k);
        }
    }
    std::erase_if(out, [](const auto& kv) { return kv.second.empty(); });
    return out;
}

GoldenTables parse_golden(const std::string& text) {
    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::runtime_error(std::string("golden: ") + e.what());
    }
    try {
        if (root.value("schema", "") != "symdet-golden") throw std::runtime_error("golden: unknown schema");
        GoldenTables g;
        g.version = root.at("version").get<int>();
        if (g.version != kSupportedVersion) throw std::runtime_error("golden: unsupported version");

        for (const auto& row : root.at("sym")) {
            GoldenSymRow r;
            r.shape = shape_of(row, "shape");
            const auto& d = row.at("dimension");
            r.display = d.at("display").get<std::string>();
            r.dimension = linear_product(d.at("factors"));
            r.dimension *= BigRat(1, d.at("denominator").get<long>());
            std::vector<std::pair<BigInt, std::vector<unsigned>>> bases;
            for (const auto& c : row.at("c")) bases.emplace_back(BigInt(c.at("base").get<long>()), c.at("k").get<std::vector<unsigned>>());
            r.c = pairs_from_bases(bases);
            g.sym.push_back(std::move(r));
        }
        for (const auto& row : root.at("refined")) {
            GoldenRefinedRow r;
            r.shape = shape_of(row, "shape");
            r.gamma = shape_of(row, "gamma");
            r.multiplicity = row.at("multiplicity").get<int>();
            r.c = linear_product(row.at("factors"));
            r.c *= BigRat(row.at("content").get<long>());
            r.display = row.at("display").get<std::string>();
            g.refined.push_back(std::move(r));
        }
        for (const auto& row : root.at("blocks")) {
            GoldenBlock b;
            b.shape = shape_of(row, "shape");
            b.pattern = Composition(row.at("pattern").get<std::vector<int>>());
            for (const auto& mrow : row.at("matrix")) {
                b.matrix.emplace_back();
                for (const auto& x : mrow) b.matrix.back().emplace_back(x.get<long>());
            }
            g.blocks.push_back(std::move(b));
        }
        for (const auto& row : root.at("refined_matrices")) {
            GoldenRefinedMatrix m;
            m.shape = shape_of(row, "shape");
            m.gamma = shape_of(row, "gamma");
            const BigRat scale(row.at("scale").get<long>());
            for (const auto& mrow : row.at("entries")) {
                m.entries.emplace_back();
                for (const auto& x : mrow) m.entries.back().push_back(coefficient_poly(x) * IntPoly(scale));
            }
            const auto& det = row.at("determinant");
            m.determinant = linear_product(det.at("factors")) * IntPoly(BigRat(det.at("content").get<long>()));
            g.refined_matrices.push_back(std::move(m));
        }
        return g;
    } catch (const json::exception& e) {
        throw std::runtime_error(std::string("golden: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw std::runtime_error(std::string("golden: ") + e.what());
    }
}

GoldenTables load_golden_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("golden: cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_golden(ss.str());
}

const GoldenTables& embedded_golden() {
    static const GoldenTables tables = parse_golden(std::string(embedded_golden_text()));
    return tables;
}

}  // namespace symdet::cli
