#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "gctqft/cellular.hpp"
#include "gctqft/corpus.hpp"
#include "gctqft/groupcat.hpp"
#include "gctqft/tqft.hpp"

namespace gctqft {
namespace io {

using nlohmann::json;

inline constexpr const char* kFormatTag = "gctqft/1";

/// Thrown for structurally invalid input documents (exit code 2 territory).
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline void check_format(const json& j)
{
    if (j.contains("format") && j.at("format") != kFormatTag)
        throw InputError("unsupported format tag: " + j.at("format").get<std::string>());
}

// --- ring elements ---------------------------------------------------------

inline json to_json(const RingElement& e)
{
    return json{{"level", e.level()}, {"coeffs", e.coeffs()}};
}

inline RingElement ring_element_from_json(const json& j)
{
    if (!j.contains("level") || !j.contains("coeffs")) throw InputError("ring element needs level and coeffs");
    Int level = j.at("level").get<Int>();
    auto coeffs = j.at("coeffs").get<std::vector<Int>>();
    if (level < 1) throw InputError("ring element level must be positive");
    if (static_cast<Int>(coeffs.size()) != euler_phi(level))
        throw InputError("ring element coefficient count must be phi(level)");
    return RingElement(level, std::move(coeffs));
}

// --- groups ----------------------------------------------------------------

inline json to_json(const FiniteAbelianGroup& g) { return json{{"orders", g.orders()}}; }

inline FiniteAbelianGroup group_from_json(const json& j)
{
    if (!j.contains("orders")) throw InputError("group needs orders");
    return FiniteAbelianGroup(j.at("orders").get<std::vector<Int>>());
}

inline json to_json(const GroupElement& e) { return json{{"exps", e.exps()}}; }

// --- presentations ----------------------------------------------------------

inline json to_json(const CategoryPresentation& p)
{
    json off = json::object();
    for (const auto& [key, val] : p.sigma_off_map()) {
        std::string k = std::to_string(key.first + 1) + "," + std::to_string(key.second + 1);
        off[k] = to_json(val);
    }
    json diag = json::array();
    for (const auto& s : p.sigma_diag()) diag.push_back(to_json(s));
    return json{{"format", kFormatTag},
                {"orders", p.group().orders()},
                {"level", p.level()},
                {"sigma_diag", diag},
                {"sigma_off", off}};
}

inline CategoryPresentation presentation_from_json(const json& j)
{
    check_format(j);
    if (!j.contains("orders") || !j.contains("level") || !j.contains("sigma_diag"))
        throw InputError("presentation needs orders, level, sigma_diag");
    FiniteAbelianGroup g(j.at("orders").get<std::vector<Int>>());
    Int level = j.at("level").get<Int>();
    std::vector<RingElement> diag;
    for (const auto& s : j.at("sigma_diag")) diag.push_back(ring_element_from_json(s));
    std::map<std::pair<std::size_t, std::size_t>, RingElement> off;
    if (j.contains("sigma_off")) {
        for (const auto& [key, val] : j.at("sigma_off").items()) {
            auto comma = key.find(',');
            if (comma == std::string::npos) throw InputError("sigma_off keys look like \"i,j\"");
            std::size_t i = static_cast<std::size_t>(std::stoll(key.substr(0, comma)));
            std::size_t jj = static_cast<std::size_t>(std::stoll(key.substr(comma + 1)));
            if (i < 1 || jj < 1 || i <= jj) throw InputError("sigma_off indices must satisfy i > j >= 1");
            off.emplace(std::make_pair(i - 1, jj - 1), ring_element_from_json(val));
        }
    }
    return CategoryPresentation(std::move(g), level, std::move(diag), std::move(off));
}

// --- complexes ---------------------------------------------------------------

inline json to_json(const CWComplex& x)
{
    json cells = json::object();
    json boundary = json::object();
    for (Int d = 0; d <= x.top_dimension(); ++d) {
        cells[std::to_string(d)] = x.cells(d);
        if (d >= 1) {
            json mat = json::array();
            for (Int i = 0; i < x.cell_count(d - 1); ++i) {
                json row = json::array();
                for (Int j = 0; j < x.cell_count(d); ++j) row.push_back(x.boundary(d).at(i, j));
                mat.push_back(row);
            }
            boundary[std::to_string(d)] = mat;
        }
    }
    json subs = json::object();
    for (const auto& [name, cell_list] : x.subcomplex_table()) {
        json per_dim = json::object();
        for (const auto& cname : cell_list) {
            auto [d, i] = x.locate(cname);
            per_dim[std::to_string(d)].push_back(cname);
        }
        subs[name] = per_dim;
    }
    return json{{"format", kFormatTag}, {"name", x.name()}, {"cells", cells}, {"boundary", boundary},
                {"subcomplexes", subs}};
}

inline CWComplex complex_from_json(const json& j)
{
    check_format(j);
    if (!j.contains("cells")) throw InputError("complex needs cells");
    std::string name = j.value("name", "complex");
    Int top = -1;
    for (const auto& [key, val] : j.at("cells").items()) top = std::max(top, static_cast<Int>(std::stoll(key)));
    std::vector<std::vector<std::string>> cells(static_cast<std::size_t>(top + 1));
    for (const auto& [key, val] : j.at("cells").items())
        cells[static_cast<std::size_t>(std::stoll(key))] = val.get<std::vector<std::string>>();
    std::vector<IntegerMatrix> boundary(static_cast<std::size_t>(top + 1));
    for (Int d = 0; d <= top; ++d) {
        Int rows = d == 0 ? 0 : static_cast<Int>(cells[static_cast<std::size_t>(d - 1)].size());
        Int cols = static_cast<Int>(cells[static_cast<std::size_t>(d)].size());
        IntegerMatrix m(rows, cols);
        if (d >= 1) {
            std::string key = std::to_string(d);
            if (!j.at("boundary").contains(key)) {
                if (cols != 0 && rows != 0) throw InputError("complex missing boundary matrix for dimension " + key);
            } else {
                auto mat = j.at("boundary").at(key);
                if (static_cast<Int>(mat.size()) != rows) throw InputError("boundary row count mismatch at dim " + key);
                for (Int i = 0; i < rows; ++i) {
                    auto row = mat[static_cast<std::size_t>(i)].get<std::vector<Int>>();
                    if (static_cast<Int>(row.size()) != cols)
                        throw InputError("boundary column count mismatch at dim " + key);
                    for (Int c = 0; c < cols; ++c) m.at(i, c) = row[static_cast<std::size_t>(c)];
                }
            }
        }
        boundary[static_cast<std::size_t>(d)] = std::move(m);
    }
    CWComplex out(name, std::move(cells), std::move(boundary));
    if (j.contains("subcomplexes"))
        for (const auto& [sname, slist] : j.at("subcomplexes").items()) {
            std::vector<std::string> cell_list;
            if (slist.is_array()) {
                cell_list = slist.get<std::vector<std::string>>();
            } else {
                for (const auto& [dim, names] : slist.items())
                    for (const auto& cname : names) cell_list.push_back(cname.get<std::string>());
            }
            // validate now so bad input files fail at load time
            Subcomplex check(out, cell_list);
            out.add_subcomplex(sname, cell_list);
        }
    return out;
}

// --- gluings -----------------------------------------------------------------

inline json to_json(const corpus::GluingCorpusEntry& e)
{
    return json{{"format", kFormatTag}, {"kind", "gluing"},       {"name", e.name},     {"unglued", to_json(e.unglued)},
                {"w1", e.w1},           {"w2", e.w2},             {"v", e.v},           {"glued", to_json(e.glued)},
                {"quotient", e.quotient}, {"dim", e.dim}};
}

inline corpus::GluingCorpusEntry gluing_from_json(const json& j)
{
    check_format(j);
    corpus::GluingCorpusEntry e{j.value("name", "gluing"),
                                complex_from_json(j.at("unglued")),
                                j.at("w1").get<std::string>(),
                                j.at("w2").get<std::string>(),
                                j.at("v").get<std::string>(),
                                complex_from_json(j.at("glued")),
                                j.at("quotient").get<std::map<std::string, std::string>>(),
                                j.value("dim", Int{1})};
    return e;
}

// --- matrices ----------------------------------------------------------------

inline json to_json(const InducedMap& m)
{
    json rows = json::array();
    for (Int i = 0; i < m.target().rank(); ++i) {
        json row = json::array();
        for (Int j = 0; j < m.source().rank(); ++j) row.push_back(to_json(m.entry(i, j)));
        rows.push_back(row);
    }
    return json{{"source_rank", m.source().rank()}, {"target_rank", m.target().rank()}, {"entries", rows}};
}

// --- files -------------------------------------------------------------------

inline json load_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw InputError("malformed JSON in " + path + ": " + e.what());
    }
}

inline void write_file(const std::string& path, const json& j)
{
    std::ofstream out(path);
    if (!out) throw InputError("cannot write " + path);
    out << j.dump(2) << "\n";
}

} // namespace io
} // namespace gctqft
