#pragma once

#include <algorithm>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <string>

#include "e8/verify/suites_freudenthal.hpp"
#include "e8/verify/suites_wedge.hpp"

namespace e8::io {

/// `#key=value` lines at the top of every file.
struct Header {
    std::map<std::string, std::string> fields;

    const std::string& get(const std::string& key) const
    {
        auto it = fields.find(key);
        if (it == fields.end()) throw ParseError("missing header field: " + key);
        return it->second;
    }

    std::size_t get_size(const std::string& key) const
    {
        const std::string& v = get(key);
        try {
            std::size_t pos = 0;
            const unsigned long long n = std::stoull(v, &pos);
            if (pos != v.size()) throw ParseError("");
            return static_cast<std::size_t>(n);
        } catch (const std::exception&) {
            throw ParseError("header field " + key + " is not a count: " + v);
        }
    }
};

/// Reads header lines; leaves the stream at the first body line. Returns the number of lines read.
inline std::size_t read_header(std::istream& in, Header& h)
{
    std::size_t lines = 0;
    while (in.peek() == '#') {
        std::string line;
        std::getline(in, line);
        ++lines;
        const auto eq = line.find('=');
        if (eq == std::string::npos) throw ParseError("bad header line: " + line);
        h.fields[line.substr(1, eq - 1)] = line.substr(eq + 1);
    }
    return lines;
}

inline std::vector<std::string> split_tabs(const std::string& line)
{
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        const auto t = line.find('\t', start);
        out.push_back(line.substr(start, t == std::string::npos ? std::string::npos : t - start));
        if (t == std::string::npos) break;
        start = t + 1;
    }
    return out;
}

inline std::size_t parse_index(const std::string& s, std::size_t dim, std::size_t line)
{
    if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; }))
        throw ParseError("line " + std::to_string(line) + ": bad index " + s);
    const unsigned long long v = std::stoull(s);
    if (v >= dim) throw ParseError("line " + std::to_string(line) + ": index " + s + " out of range");
    return static_cast<std::size_t>(v);
}

inline const char* basis_version_of(const std::string& model)
{
    if (model == "wedge") return wedge_model::kBasisVersion;
    if (model == "freudenthal") return freudenthal::kBasisVersion;
    throw verify::UsageError("unknown model: " + model);
}

// ---- structure constants ----

/// Header then "i TAB j TAB k TAB literal" for i < j, nonzero entries only.
template <Field S>
void write_structure_constants(std::ostream& out, const std::string& model, const StructureTable<S>& t)
{
    out << "#model=" << model << "\n";
    out << "#basis-version=" << basis_version_of(model) << "\n";
    out << "#field=" << scalar_traits<S>::name << "\n";
    out << "#dimension=" << t.dim() << "\n";
    for (std::size_t i = 0; i < t.dim(); ++i)
        for (std::size_t j = i + 1; j < t.dim(); ++j)
            for (const auto& [k, c] : t(i, j)) out << i << '\t' << j << '\t' << k << '\t' << literal(c) << '\n';
}

template <Field S>
struct LoadedTable {
    Header header;
    StructureTable<S> table;
};

/// Parses a structure-constant file; the field named in the header must be S. The (j, i) entries
/// are filled in by antisymmetry.
template <Field S>
LoadedTable<S> read_structure_constants(std::istream& in)
{
    LoadedTable<S> r;
    std::size_t line_no = read_header(in, r.header);
    if (r.header.get("field") != scalar_traits<S>::name)
        throw ParseError("file holds field " + r.header.get("field") + ", expected " + scalar_traits<S>::name);
    const std::size_t dim = r.header.get_size("dimension");
    const std::string& model = r.header.get("model");
    if (r.header.get("basis-version") != basis_version_of(model))
        throw ParseError("basis version " + r.header.get("basis-version") + " does not match " + basis_version_of(model));
    r.table = StructureTable<S>(dim);
    std::string line;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        const auto f = split_tabs(line);
        if (f.size() != 4) throw ParseError("line " + std::to_string(line_no) + ": expected 4 tab-separated fields");
        const std::size_t i = parse_index(f[0], dim, line_no), j = parse_index(f[1], dim, line_no), k = parse_index(f[2], dim, line_no);
        if (i >= j) throw ParseError("line " + std::to_string(line_no) + ": needs i < j");
        S c;
        try {
            c = parse_literal<S>(f[3]);
        } catch (const Error& e) {
            throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
        }
        if (is_zero(c)) throw ParseError("line " + std::to_string(line_no) + ": zero entry");
        auto& v = r.table.at(i, j);
        for (const auto& [kk, cc] : v)
            if (kk == k) throw ParseError("line " + std::to_string(line_no) + ": duplicate entry");
        v.emplace_back(static_cast<std::uint32_t>(k), c);
    }
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = i + 1; j < dim; ++j) {
            auto& v = r.table.at(i, j);
            std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
            SparseVec<S> neg;
            for (const auto& [k, c] : v) neg.emplace_back(k, -c);
            r.table.at(j, i) = std::move(neg);
        }
    return r;
}

template <Field S>
const StructureTable<S>& model_table(const std::string& model)
{
    if (model == "wedge") return wedge_model::table<S>();
    if (model == "freudenthal") return freudenthal::table<S>();
    throw verify::UsageError("unknown model: " + model);
}

// ---- fixed-subalgebra bases ----

struct BasisFile {
    Header header;
    std::vector<Coords<Gaussian>> vectors;
};

/// Basis of the subalgebra of the compact form fixed by `automorphism`, as complex coordinates.
inline BasisFile compute_fixed(const std::string& model, const std::string& automorphism)
{
    BasisFile b;
    b.header.fields["model"] = model;
    b.header.fields["basis-version"] = basis_version_of(model);
    b.header.fields["field"] = "qi";
    b.header.fields["auto"] = automorphism;
    b.header.fields["dimension"] = "248";
    if (model == "wedge") {
        std::function<wedge_model::Element<Gaussian>(const wedge_model::Element<Gaussian>&)> alpha;
        if (automorphism == "w4")
            alpha = [](const auto& r) { return wedge_model::w4_apply(r); };
        else if (automorphism == "w4-squared")
            alpha = [](const auto& r) { return wedge_model::w4_apply(wedge_model::w4_apply(r)); };
        else if (automorphism == "id")
            alpha = [](const auto& r) { return r; };
        else
            throw verify::UsageError("unknown wedge-model automorphism: " + automorphism);
        for (const auto& r : wedge_model::fixed_subalgebra(alpha)) b.vectors.push_back(wedge_model::coords(r));
    } else if (model == "freudenthal") {
        b.vectors = freudenthal::fixed_subalgebra(verify::freudenthal_suites::named_map<Gaussian>(automorphism));
    } else {
        throw verify::UsageError("unknown model: " + model);
    }
    b.header.fields["count"] = std::to_string(b.vectors.size());
    return b;
}

inline void write_basis(std::ostream& out, const BasisFile& b)
{
    for (const auto& key : {"model", "basis-version", "field", "auto", "dimension", "count"})
        out << "#" << key << "=" << b.header.get(key) << "\n";
    for (const auto& v : b.vectors) {
        for (std::size_t k = 0; k < v.size(); ++k) out << (k ? "\t" : "") << literal(v[k]);
        out << "\n";
    }
}

/// Index of the first vector that is not fixed by both the compact involution and the automorphism,
/// or vectors.size() if all are.
inline std::size_t first_unfixed(const BasisFile& b)
{
    const std::string& model = b.header.get("model");
    const std::string& a = b.header.get("auto");
    if (model == "wedge") {
        for (std::size_t k = 0; k < b.vectors.size(); ++k) {
            const auto r = wedge_model::element(b.vectors[k]);
            auto image = r;
            if (a == "w4") image = wedge_model::w4_apply(r);
            else if (a == "w4-squared") image = wedge_model::w4_apply(wedge_model::w4_apply(r));
            else if (a != "id") throw verify::UsageError("unknown wedge-model automorphism: " + a);
            if (!(image == r) || !wedge_model::in_compact_form(r)) return k;
        }
        return b.vectors.size();
    }
    const auto alpha = verify::freudenthal_suites::named_map<Gaussian>(a);
    const auto& sigma = freudenthal::sigma_map();
    for (std::size_t k = 0; k < b.vectors.size(); ++k)
        if (!(alpha(b.vectors[k]) == b.vectors[k]) || !(sigma(b.vectors[k]) == b.vectors[k])) return k;
    return b.vectors.size();
}

/// Parses a basis file and re-checks that every vector is fixed; throws DomainError otherwise.
inline BasisFile read_basis(std::istream& in)
{
    BasisFile b;
    std::size_t line_no = read_header(in, b.header);
    if (b.header.get("field") != "qi") throw ParseError("basis files hold Gaussian rationals");
    const std::size_t dim = b.header.get_size("dimension");
    if (b.header.get("basis-version") != basis_version_of(b.header.get("model"))) throw ParseError("basis version mismatch");
    std::string line;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        const auto f = split_tabs(line);
        if (f.size() != dim) throw ParseError("line " + std::to_string(line_no) + ": expected " + std::to_string(dim) + " coordinates");
        Coords<Gaussian> v;
        v.reserve(dim);
        for (const auto& s : f) v.push_back(Gaussian::parse(s));
        b.vectors.push_back(std::move(v));
    }
    if (b.vectors.size() != b.header.get_size("count")) throw ParseError("vector count does not match the header");
    if (const auto k = first_unfixed(b); k != b.vectors.size())
        throw DomainError("vector " + std::to_string(k) + " is not fixed by " + b.header.get("auto"));
    return b;
}

}  // namespace e8::io
