#include "condgrad/matrix_market.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace condgrad {

namespace {

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

} // namespace

CsrMatrix read_matrix_market(std::istream& in) {
    std::string banner;
    if (!std::getline(in, banner))
        throw std::runtime_error("matrix market: empty stream");

    std::istringstream hdr(banner);
    std::string tag, object, format, field, symmetry;
    hdr >> tag >> object >> format >> field >> symmetry;
    if (tag != "%%MatrixMarket" || lower(object) != "matrix" ||
        lower(format) != "coordinate")
        throw std::runtime_error("matrix market: unsupported banner: " + banner);
    const std::string f = lower(field);
    if (f != "real" && f != "integer")
        throw std::runtime_error("matrix market: only real coordinate data supported");
    if (lower(symmetry) != "general")
        throw std::runtime_error("matrix market: only general symmetry supported");

    std::string line;
    std::size_t rows = 0, cols = 0, nnz = 0;
    bool have_size = false;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '%') continue;
        std::istringstream sz(line);
        if (!(sz >> rows >> cols >> nnz))
            throw std::runtime_error("matrix market: bad size line: " + line);
        have_size = true;
        break;
    }
    if (!have_size) throw std::runtime_error("matrix market: missing size line");

    std::vector<Triplet> entries;
    entries.reserve(nnz);
    while (entries.size() < nnz && std::getline(in, line)) {
        if (line.empty() || line[0] == '%') continue;
        std::istringstream es(line);
        long long i = 0, j = 0;
        double v = 0.0;
        if (!(es >> i >> j >> v))
            throw std::runtime_error("matrix market: bad entry line: " + line);
        if (i < 1 || j < 1 || static_cast<std::size_t>(i) > rows ||
            static_cast<std::size_t>(j) > cols)
            throw std::runtime_error("matrix market: entry index out of range: " + line);
        entries.push_back({static_cast<std::size_t>(i - 1),
                           static_cast<std::size_t>(j - 1), v});
    }
    if (entries.size() < nnz)
        throw std::runtime_error("matrix market: truncated entry list");
    return CsrMatrix::from_triplets(entries, rows, cols);
}

CsrMatrix read_matrix_market_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open matrix file: " + path);
    return read_matrix_market(in);
}

void write_matrix_market(std::ostream& out, const CsrMatrix& A) {
    out << "%%MatrixMarket matrix coordinate real general\n";
    out << A.n_rows() << ' ' << A.n_cols() << ' ' << A.nnz() << '\n';
    char buf[64];
    for (const Triplet& t : A.entries()) {
        std::snprintf(buf, sizeof(buf), "%.17g", t.value);
        out << (t.row + 1) << ' ' << (t.col + 1) << ' ' << buf << '\n';
    }
}

void write_matrix_market_file(const std::string& path, const CsrMatrix& A) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    write_matrix_market(out, A);
    if (!out) throw std::runtime_error("write failed: " + path);
}

} // namespace condgrad
