#include "flataffine/algfile.hpp"

#include <fstream>
#include <sstream>
#include <vector>

namespace flataffine {

namespace {

std::vector<std::string> tokenize(const std::string& line)
{
    std::vector<std::string> out;
    std::istringstream is(line);
    std::string tok;
    while (is >> tok) {
        if (tok[0] == '#')
            break;
        out.push_back(tok);
    }
    return out;
}

std::size_t parse_index(const std::string& tok, std::size_t dim, std::size_t line,
                        const char* what)
{
    std::size_t pos = 0;
    unsigned long v = 0;
    try {
        v = std::stoul(tok, &pos);
    } catch (const std::exception&) {
        throw AlgebraFileError(line, std::string("bad ") + what + " index '" + tok + "'");
    }
    if (pos != tok.size() || v >= dim)
        throw AlgebraFileError(line, std::string(what) + " index '" + tok +
                                         "' out of range for dim " +
                                         std::to_string(dim));
    return static_cast<std::size_t>(v);
}

Rational parse_coeff(const std::string& tok, std::size_t line)
{
    try {
        return parse_rational(tok);
    } catch (const std::exception&) {
        throw AlgebraFileError(line, "bad rational '" + tok + "'");
    }
}

// Consumes `dim` matrix rows starting after a form/bivector header.
RatMat read_matrix(std::istream& in, std::size_t dim, std::size_t& line_no)
{
    RatMat m(dim, dim);
    std::size_t got = 0;
    std::string line;
    while (got < dim && std::getline(in, line)) {
        ++line_no;
        auto toks = tokenize(line);
        if (toks.empty())
            continue;
        if (toks.size() != dim)
            throw AlgebraFileError(line_no, "matrix row needs " + std::to_string(dim) +
                                                " entries, got " +
                                                std::to_string(toks.size()));
        for (std::size_t j = 0; j < dim; ++j)
            m(got, j) = parse_coeff(toks[j], line_no);
        ++got;
    }
    if (got < dim)
        throw AlgebraFileError(line_no, "unexpected end of file inside matrix block");
    return m;
}

} // namespace

catalog::Entry parse_algebra_file(std::istream& in)
{
    catalog::Entry entry;
    entry.name = "unnamed";

    bool have_name = false, have_dim = false, have_basis = false;
    std::size_t dim = 0;
    std::vector<std::string> labels;
    std::vector<std::tuple<std::size_t, std::size_t, std::size_t, Rational>> brackets;
    std::vector<std::tuple<std::size_t, std::size_t, std::size_t, Rational>> products;
    bool have_product = false;

    std::size_t line_no = 0;
    std::string line;
    while (std::getline(in, line)) {
        ++line_no;
        auto toks = tokenize(line);
        if (toks.empty())
            continue;
        const std::string& key = toks[0];

        if (key == "name") {
            if (have_name)
                throw AlgebraFileError(line_no, "duplicate 'name'");
            if (toks.size() != 2)
                throw AlgebraFileError(line_no, "'name' takes one token");
            entry.name = toks[1];
            have_name = true;
        } else if (key == "dim") {
            if (have_dim)
                throw AlgebraFileError(line_no, "duplicate 'dim'");
            if (toks.size() != 2)
                throw AlgebraFileError(line_no, "'dim' takes one integer");
            try {
                dim = std::stoul(toks[1]);
            } catch (const std::exception&) {
                throw AlgebraFileError(line_no, "bad dimension '" + toks[1] + "'");
            }
            if (dim == 0)
                throw AlgebraFileError(line_no, "dimension must be positive");
            have_dim = true;
        } else if (key == "basis") {
            if (have_basis)
                throw AlgebraFileError(line_no, "duplicate 'basis'");
            if (!have_dim)
                throw AlgebraFileError(line_no, "'basis' requires 'dim' first");
            if (toks.size() != dim + 1)
                throw AlgebraFileError(line_no, "'basis' needs exactly " +
                                                    std::to_string(dim) + " labels");
            labels.assign(toks.begin() + 1, toks.end());
            have_basis = true;
        } else if (key == "bracket" || key == "product") {
            if (!have_dim || !have_basis)
                throw AlgebraFileError(line_no,
                                       "'" + key + "' requires 'dim' and 'basis' first");
            if (toks.size() != 5)
                throw AlgebraFileError(line_no, "'" + key + "' needs i j k coeff");
            std::size_t i = parse_index(toks[1], dim, line_no, key.c_str());
            std::size_t j = parse_index(toks[2], dim, line_no, key.c_str());
            std::size_t k = parse_index(toks[3], dim, line_no, key.c_str());
            Rational c = parse_coeff(toks[4], line_no);
            if (key == "bracket") {
                if (i >= j)
                    throw AlgebraFileError(line_no,
                                           "bracket entries must satisfy i < j");
                for (const auto& [pi, pj, pk, pc] : brackets)
                    if (pi == i && pj == j && pk == k)
                        throw AlgebraFileError(line_no, "duplicate bracket entry");
                brackets.emplace_back(i, j, k, c);
            } else {
                for (const auto& [pi, pj, pk, pc] : products)
                    if (pi == i && pj == j && pk == k)
                        throw AlgebraFileError(line_no, "duplicate product entry");
                products.emplace_back(i, j, k, c);
                have_product = true;
            }
        } else if (key == "form") {
            if (!have_dim || !have_basis)
                throw AlgebraFileError(line_no, "'form' requires 'dim' and 'basis' first");
            if (toks.size() != 3)
                throw AlgebraFileError(line_no, "'form' needs a name and a kind");
            FormKind kind;
            if (toks[2] == "symmetric")
                kind = FormKind::Symmetric;
            else if (toks[2] == "antisymmetric")
                kind = FormKind::Antisymmetric;
            else if (toks[2] == "general")
                kind = FormKind::General;
            else
                throw AlgebraFileError(line_no, "unknown form kind '" + toks[2] + "'");
            const std::size_t header = line_no;
            RatMat m = read_matrix(in, dim, line_no);
            BilinearForm form(kind, std::move(m));
            if (!form.symmetry_ok())
                throw AlgebraFileError(header, "form '" + toks[1] +
                                                   "' violates declared symmetry");
            entry.forms.emplace_back(toks[1], std::move(form));
        } else if (key == "bivector") {
            if (!have_dim || !have_basis)
                throw AlgebraFileError(line_no,
                                       "'bivector' requires 'dim' and 'basis' first");
            if (toks.size() != 1)
                throw AlgebraFileError(line_no, "'bivector' takes no arguments");
            if (entry.bivector)
                throw AlgebraFileError(line_no, "duplicate 'bivector' block");
            const std::size_t header = line_no;
            RatMat m = read_matrix(in, dim, line_no);
            StructureConstants g(dim, labels);
            for (const auto& [i, j, k, c] : brackets)
                g.set(i, j, k, c);
            try {
                entry.bivector = Bivector(std::move(g), std::move(m));
            } catch (const std::exception& e) {
                throw AlgebraFileError(header, e.what());
            }
        } else {
            throw AlgebraFileError(line_no, "unknown key '" + key + "'");
        }
    }

    if (!have_dim)
        throw AlgebraFileError(line_no, "missing 'dim'");
    if (!have_basis)
        throw AlgebraFileError(line_no, "missing 'basis'");

    entry.algebra = StructureConstants(dim, labels);
    for (const auto& [i, j, k, c] : brackets)
        entry.algebra.set(i, j, k, c);
    if (have_product) {
        ProductTable p(dim, labels);
        for (const auto& [i, j, k, c] : products)
            p.set(i, j, k, c);
        entry.product = std::move(p);
    }
    // The bivector block may appear before later bracket lines; rebuild its
    // algebra so it always reflects the complete table.
    if (entry.bivector)
        entry.bivector = Bivector(entry.algebra, entry.bivector->r);
    return entry;
}

catalog::Entry parse_algebra_file_text(const std::string& text)
{
    std::istringstream is(text);
    return parse_algebra_file(is);
}

catalog::Entry load_algebra_file(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        throw AlgebraFileError(0, "cannot open '" + path.string() + "'");
    auto entry = parse_algebra_file(in);
    if (entry.name == "unnamed")
        entry.name = path.stem().string();
    return entry;
}

std::string write_algebra_file(const catalog::Entry& entry)
{
    std::ostringstream os;
    os << "name " << entry.name << "\n";
    os << "dim " << entry.algebra.dim() << "\n";
    os << "basis";
    for (const auto& l : entry.algebra.labels())
        os << ' ' << l;
    os << "\n";
    for (const auto& [i, j, k, c] : entry.algebra.entries())
        os << "bracket " << i << ' ' << j << ' ' << k << ' ' << to_string(c) << "\n";
    if (entry.product) {
        const auto pe = entry.product->entries();
        if (pe.empty()) // keep an explicit marker so the table survives reparsing
            os << "product 0 0 0 0\n";
        for (const auto& [i, j, k, c] : pe)
            os << "product " << i << ' ' << j << ' ' << k << ' ' << to_string(c) << "\n";
    }
    const std::size_t dim = entry.algebra.dim();
    for (const auto& [name, form] : entry.forms) {
        os << "form " << name << ' ';
        switch (form.kind) {
        case FormKind::Symmetric: os << "symmetric"; break;
        case FormKind::Antisymmetric: os << "antisymmetric"; break;
        case FormKind::General: os << "general"; break;
        }
        os << "\n";
        for (std::size_t i = 0; i < dim; ++i) {
            for (std::size_t j = 0; j < dim; ++j)
                os << (j ? " " : "") << to_string(form.m(i, j));
            os << "\n";
        }
    }
    if (entry.bivector) {
        os << "bivector\n";
        for (std::size_t i = 0; i < dim; ++i) {
            for (std::size_t j = 0; j < dim; ++j)
                os << (j ? " " : "") << to_string(entry.bivector->r(i, j));
            os << "\n";
        }
    }
    return os.str();
}

void save_algebra_file(const catalog::Entry& entry, const std::filesystem::path& path)
{
    std::ofstream out(path);
    if (!out)
        throw AlgebraFileError(0, "cannot open '" + path.string() + "' for writing");
    out << write_algebra_file(entry);
}

} // namespace flataffine
